// Python bindings for the exact Beta-moment engine. Rationals cross the
// boundary as fractions.Fraction, integers as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betamom/catalog.hpp"
#include "betamom/combinatorics.hpp"
#include "betamom/hankel.hpp"
#include "betamom/identities.hpp"
#include "betamom/integrality.hpp"
#include "betamom/moments.hpp"
#include "betamom/oeis.hpp"
#include "betamom/series.hpp"
#include "betamom/transforms.hpp"

namespace py = pybind11;
using namespace betamom;
namespace idn = betamom::identities;

namespace {

py::object fraction_type() {
  static py::object type = py::module_::import("fractions").attr("Fraction");
  return type;
}

py::object py_int(const Int& z) {
  static py::object int_type = py::module_::import("builtins").attr("int");
  return int_type(z.get_str());
}

py::object to_py(const Rational& r) {
  if (r.is_integer()) return py_int(r.num());
  return fraction_type()(py_int(r.num()), py_int(r.den()));
}

py::object to_py(const Int& z) { return py_int(z); }

Rational from_py(py::handle h) {
  if (py::isinstance<py::int_>(h))
    return Rational(Int(py::cast<std::string>(py::str(h)), 10));
  if (py::isinstance<py::str>(h)) {
    const auto r = Rational::parse(py::cast<std::string>(h));
    if (!r) throw py::value_error("expected an exact rational like '3/2'");
    return *r;
  }
  if (py::isinstance(h, fraction_type())) {
    const Int num(py::cast<std::string>(py::str(h.attr("numerator"))), 10);
    const Int den(py::cast<std::string>(py::str(h.attr("denominator"))), 10);
    return Rational(num, den);
  }
  throw py::type_error("expected int, Fraction, or 'p/q' string");
}

py::list seq_to_py(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

std::vector<Rational> seq_from_py(const py::sequence& seq) {
  std::vector<Rational> out;
  out.reserve(py::len(seq));
  for (py::handle h : seq) out.push_back(from_py(h));
  return out;
}

MomentSpec make_spec(py::handle c, py::handle a, py::handle b) {
  return MomentSpec(from_py(c), from_py(a), from_py(b));
}

py::dict result_to_py(const idn::IdentityResult& r) {
  py::dict d;
  d["id"] = r.id;
  d["n"] = r.n;
  d["lhs"] = to_py(r.lhs);
  d["rhs_lo"] = to_py(r.rhs_lo);
  d["rhs_hi"] = to_py(r.rhs_hi);
  d["exact"] = r.rhs_exact;
  d["status"] = r.status == idn::IdentityStatus::exact_match
                    ? "ExactMatch"
                    : r.status == idn::IdentityStatus::enclosure_contains
                          ? "EnclosureContains"
                          : "Fail";
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "exact moment sequences of modified Beta distributions";

  mod.def(
      "moment",
      [](py::handle c, py::handle a, py::handle b, unsigned long n) {
        return to_py(M(n, make_spec(c, a, b)));
      },
      py::arg("c"), py::arg("alpha"), py::arg("beta"), py::arg("n"));

  mod.def(
      "moments",
      [](py::handle c, py::handle a, py::handle b, std::size_t count) {
        return seq_to_py(M_sequence(make_spec(c, a, b), count));
      },
      py::arg("c"), py::arg("alpha"), py::arg("beta"), py::arg("count"));

  mod.def(
      "raw_moments",
      [](py::handle a, py::handle b, std::size_t count) {
        return seq_to_py(m_sequence(BetaParams(from_py(a), from_py(b)), count));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("count"));

  mod.def(
      "symmetric_moments",
      [](py::handle g, py::handle d, std::size_t count) {
        return seq_to_py(S_sequence(from_py(g), from_py(d), count));
      },
      py::arg("gamma"), py::arg("delta"), py::arg("count"));

  mod.def("catalan",
          [](unsigned long n) { return to_py(Rational(catalan(n))); });
  mod.def("central_binomial",
          [](unsigned long n) { return to_py(Rational(central_binomial(n))); });
  mod.def("d_value", [](unsigned long n) { return to_py(idn::d_value(n)); });
  mod.def(
      "expansion_c",
      [](unsigned long k, py::handle a, py::handle b) {
        return to_py(idn::expansion_c(k, from_py(a), from_py(b)));
      },
      py::arg("k"), py::arg("a"), py::arg("b"));

  mod.def(
      "gf_coefficients",
      [](py::handle c, py::handle a, py::handle b, std::size_t order) {
        return seq_to_py(
            series::gf_of_moments(make_spec(c, a, b), order).coefficients());
      },
      py::arg("c"), py::arg("alpha"), py::arg("beta"), py::arg("order"));

  mod.def(
      "closed_form_gf",
      [](const std::string& id, std::size_t order) {
        return seq_to_py(series::closed_form_gf(id, order).coefficients());
      },
      py::arg("id"), py::arg("order"));
  mod.def("closed_form_ids", &series::closed_form_ids);

  mod.def(
      "hankel_check",
      [](py::handle c, py::handle a, py::handle b, unsigned N) {
        const auto rep = hankel::check_pm(make_spec(c, a, b), N);
        py::dict d;
        d["order"] = rep.order;
        d["determinants"] = seq_to_py(rep.determinants);
        d["shifted_determinants"] = seq_to_py(rep.shifted_determinants);
        d["pm"] = rep.pm_up_to_order;
        d["stieltjes"] = rep.stieltjes_up_to_order;
        d["stieltjes_meaningful"] = rep.stieltjes_meaningful;
        return d;
      },
      py::arg("c"), py::arg("alpha"), py::arg("beta"), py::arg("order") = 8);

  mod.def(
      "hankel_determinants",
      [](const py::sequence& seq, unsigned N, int shift) {
        return seq_to_py(hankel::hankel_determinants(seq_from_py(seq), N, shift));
      },
      py::arg("sequence"), py::arg("order"), py::arg("shift") = 0);

  mod.def("finite_identity_ids", &idn::finite_identity_ids);
  mod.def("infinite_identity_ids", &idn::infinite_identity_ids);
  mod.def(
      "verify_finite",
      [](const std::string& id, unsigned long n_max) {
        py::list out;
        for (const auto& r : idn::verify_finite(id, 0, n_max))
          out.append(result_to_py(r));
        return out;
      },
      py::arg("id"), py::arg("n_max") = 30);
  mod.def(
      "verify_infinite",
      [](const std::string& id, unsigned long n_max, unsigned long J) {
        py::list out;
        for (const auto& r : idn::verify_infinite(id, 0, n_max, J))
          out.append(result_to_py(r));
        return out;
      },
      py::arg("id"), py::arg("n_max") = 10, py::arg("J") = 48);

  mod.def(
      "binomial_transform",
      [](const py::sequence& seq) {
        return seq_to_py(transforms::apply(
            transforms::TransformSpec{{transforms::BinomialTransform{}}},
            seq_from_py(seq)));
      },
      py::arg("sequence"));
  mod.def(
      "inverse_binomial_transform",
      [](const py::sequence& seq) {
        return seq_to_py(transforms::apply(
            transforms::TransformSpec{{transforms::InverseBinomialTransform{}}},
            seq_from_py(seq)));
      },
      py::arg("sequence"));
  mod.def(
      "match",
      [](const py::sequence& a, const py::sequence& b,
         int depth) -> py::object {
        const auto found =
            transforms::match(seq_from_py(a), seq_from_py(b), depth);
        if (!found) return py::none();
        return py::cast(transforms::to_string(*found));
      },
      py::arg("a"), py::arg("b"), py::arg("depth") = 3);

  mod.def(
      "check_integrality",
      [](unsigned long p, unsigned long r, unsigned long N) {
        const auto rep = integrality::check_integrality(p, r, N);
        py::dict d;
        d["p"] = rep.p;
        d["r"] = rep.r;
        d["all_integer"] = rep.all_integer;
        py::list rows;
        for (const auto& row : rep.rows) {
          py::dict rd;
          rd["n"] = row.n;
          rd["multiplier"] = to_py(row.multiplier);
          rd["raw_moment"] = to_py(row.raw_moment);
          rd["product"] = to_py(row.product);
          rd["is_integer"] = row.is_integer;
          rows.append(rd);
        }
        d["rows"] = rows;
        return d;
      },
      py::arg("p"), py::arg("r"), py::arg("N") = 20);
  mod.def(
      "integrality_demo",
      [](unsigned long N) { return seq_to_py(integrality::demo_nonintegral(N)); },
      py::arg("N") = 9);

  mod.def("catalog", [] {
    py::list out;
    for (const auto& e : catalog()) {
      py::dict d;
      d["label"] = e.label;
      d["description"] = e.description;
      d["c"] = to_py(e.spec.c);
      d["alpha"] = to_py(e.spec.params.alpha);
      d["beta"] = to_py(e.spec.params.beta);
      d["scale"] = to_py(e.scale);
      d["transform"] = transforms::to_string(e.transform);
      d["oeis_id"] = e.oeis_id;
      d["reference_prefix"] = seq_to_py(e.reference_prefix);
      out.append(d);
    }
    return out;
  });

  mod.def(
      "verify_catalog_claims",
      [](std::size_t min_terms) {
        oeis::OeisClient client;
        py::list out;
        for (const auto& r : oeis::verify_all_claims(client, min_terms)) {
          py::dict d;
          d["label"] = r.label;
          d["oeis_id"] = r.oeis_id;
          d["status"] = r.status == oeis::ClaimStatus::exact_prefix_match
                            ? "ExactPrefixMatch"
                            : r.status == oeis::ClaimStatus::mismatch
                                  ? "Mismatch"
                                  : "Unresolved";
          d["shift"] = r.shift;
          d["compared"] = r.compared;
          d["note"] = r.note;
          out.append(d);
        }
        return out;
      },
      py::arg("min_terms") = 20);

  mod.attr("__version__") = "0.1.0";
}
