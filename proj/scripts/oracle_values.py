#!/usr/bin/env python3
"""Independent oracle: recompute the expected values frozen into the C++ test
suite, using sympy exact integration / series expansion / brute force only.
Run it whenever a frozen constant in tests/ needs to be re-derived.
"""

import math
from fractions import Fraction

import sympy as sp

x, t = sp.symbols("x t", positive=True)


def moment_by_integration(n, c, a, b):
    """M_n(c,a,b) = int_c^{c+4} x^n (x-c)^{a-1} (4+c-x)^{b-1} / (4^{a+b-1} B(a,b))."""
    y = sp.symbols("y")
    dens = (y - c) ** (a - sp.Rational(1)) * (4 + c - y) ** (b - 1)
    norm = 4 ** (a + b - 1) * sp.beta(a, b)
    v = sp.integrate(y**n * dens / norm, (y, c, c + 4))
    return sp.nsimplify(sp.simplify(v))


def main():
    R = sp.Rational

    print("== moments by direct exact integration (Eq-independent route) ==")
    for (n, c, a, b) in [(2, 0, R(1, 2), R(1, 2)),
                         (3, 0, R(1, 2), R(3, 2)),
                         (4, -1, R(3, 2), R(3, 2)),
                         (2, -1, R(1, 2), R(1, 2)),
                         (3, -2, R(1, 2), R(3, 2)),
                         (2, 1, R(1, 2), R(1, 2)),
                         (5, -2, R(3, 2), R(5, 2)),
                         (1, 0, R(1, 2), R(7, 2))]:
        print(f"M_{n}({c},{a},{b}) =", moment_by_integration(n, c, a, b))

    print("== series sqrt(1-4x), coefficients 0..6 ==")
    s = sp.series(sp.sqrt(1 - 4 * x), x, 0, 7).removeO()
    print([sp.Poly(s, x).coeff_monomial(x**k) for k in range(7)])

    print("== binomial transform of Catalan prefix ==")
    cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    bt = [sum(math.comb(n, j) * cat[j] for j in range(n + 1)) for n in range(7)]
    print(bt)

    print("== central-binomial tail T(m,J) = sum_{j>=J} binom(2j,j)/(4^j (j+m)) ==")
    def cb(j):
        return Fraction(math.comb(2 * j, j), 4**j)
    def T_brute(m, J, upto=2000000):
        # float partial sum: enough digits to sanity-check the closed values
        s, term = 0.0, float(cb(J))
        for j in range(J, upto):
            s += term / (j + m)
            term *= (2 * j + 1) / (2 * j + 2)
        return s
    for (m, J, claim) in [(1, 3, Fraction(2) * cb(3)),
                          (2, 2, Fraction(2, 3)),
                          (3, 4, Fraction(77, 160))]:
        print(f"T({m},{J}) claimed {claim} = {float(claim):.9f}, brute~{T_brute(m, J):.9f}")

    print("== d_n from egf sqrt((1-x)/(1+x)) ==")
    g = sp.series(sp.sqrt((1 - x) / (1 + x)), x, 0, 11).removeO()
    dn = [sp.factorial(k) * sp.Poly(g, x).coeff_monomial(x**k) for k in range(11)]
    print(dn)

    print("== c0-iii partial check n=2 -> 2 ==")
    def t_iii(n, i):
        return Fraction(math.factorial(2 * n + 2 * i),
                        4**i * math.factorial(i + n) * math.factorial(n + i + 2))
    sm, term = 0.0, float(t_iii(2, 0))
    for i in range(2000000):
        sm += term
        term *= (2 * 2 + 2 * i + 1) / (2.0 * (2 + i + 3))
    print("3/2 * sum ~", 1.5 * sm)

    print("== c0-vi n=1: 1/3! ... lhs n!n!/(2n+1)! ==")
    lhs = Fraction(1, 6)
    sm, term = 0.0, float(Fraction(math.factorial(1) * math.factorial(3), math.factorial(6)))
    for j in range(2000000):
        sm += term
        term *= (1 + j + 1) / (1 + j + 2.5)
    print("lhs", float(lhs), "rhs~", 4 * sm)

    print("== t2-vii main, n=0 and n=1 ==")
    catn = [1]
    for m in range(1, 200):
        catn.append(catn[-1] * 2 * (2 * m - 1) // (m + 1))
    def A(j, K=4000000):
        s, term = 0.0, float(catn[j])
        for k in range(K):
            s += term
            term *= (k + 0.5) * (k + j + 0.5) / ((k + 1) * (k + j + 2))
        return s
    print("n=0: pi/4 * sum ~", A(0) * math.pi / 4, "(expect 1)")
    print("n=1: -pi/8 * sum ~", -A(1) * math.pi / 8, "(expect S_1(1,2) = -2/3)")

    print("== S_n(3/2,5/2) prefix by integration ==")
    print([moment_by_integration(n, -2, R(3, 2), R(5, 2)) for n in range(7)])

    print("== demo nonintegral prefix ==")
    def m_mj(n, a, b):
        num = sp.prod([a + k for k in range(n)])
        den = sp.prod([a + b + k for k in range(n)])
        return sp.Rational(sp.nsimplify(num / den))
    for n in range(1, 6):
        nu3 = 0
        q = 3
        while q <= n:
            nu3 += n // q
            q *= 3
        v = 6 * sp.Integer(3) ** (n + nu3) * 2 ** (n // 2) * m_mj(n, R(1, 3), R(17, 3))
        print(n, sp.nsimplify(v))


if __name__ == "__main__":
    main()
