// betamom: command-line front end for the exact Beta-moment engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "betamom/catalog.hpp"
#include "betamom/hankel.hpp"
#include "betamom/identities.hpp"
#include "betamom/integrality.hpp"
#include "betamom/moments.hpp"
#include "betamom/oeis.hpp"
#include "betamom/series.hpp"
#include "betamom/transforms.hpp"

using namespace betamom;
namespace idn = betamom::identities;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kFormatVersion = "1";

struct Output {
  std::string command;
  json parameters = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  json summary = json::object();
};

void render(const Output& out, const std::string& format) {
  if (format == "json") {
    json payload;
    payload["columns"] = out.columns;
    payload["rows"] = out.rows;
    if (!out.summary.empty()) payload["summary"] = out.summary;
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["command"] = out.command;
    doc["parameters"] = out.parameters;
    doc["payload"] = payload;
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto emit = [](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        std::cout << (i ? "," : "") << cells[i];
      std::cout << "\n";
    };
    emit(out.columns);
    for (const auto& row : out.rows) emit(row);
    return;
  }
  // human table
  std::vector<std::size_t> width(out.columns.size());
  for (std::size_t i = 0; i < out.columns.size(); ++i)
    width[i] = out.columns[i].size();
  for (const auto& row : out.rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      std::printf("%s%-*s", i ? "  " : "", static_cast<int>(width[i]),
                  cells[i].c_str());
    std::printf("\n");
  };
  emit(out.columns);
  for (const auto& row : out.rows) emit(row);
  for (const auto& [k, v] : out.summary.items())
    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
              << "\n";
}

Rational parse_rational_or_die(const std::string& s, const std::string& what) {
  const auto r = Rational::parse(s);
  if (!r) throw CLI::ValidationError(what, "expected an exact rational p/q");
  return *r;
}

std::string status_name(idn::IdentityStatus s) {
  switch (s) {
    case idn::IdentityStatus::exact_match: return "ExactMatch";
    case idn::IdentityStatus::enclosure_contains: return "EnclosureContains";
    case idn::IdentityStatus::fail: return "Fail";
  }
  return "?";
}

std::string claim_status_name(oeis::ClaimStatus s) {
  switch (s) {
    case oeis::ClaimStatus::exact_prefix_match: return "ExactPrefixMatch";
    case oeis::ClaimStatus::mismatch: return "Mismatch";
    case oeis::ClaimStatus::unresolved: return "Unresolved";
  }
  return "?";
}

oeis::OeisClient::Options client_options(bool offline,
                                         const std::string& fixtures) {
  auto opts = oeis::OeisClient::Options{};
  opts = oeis::OeisClient::from_environment();
  if (offline) opts.offline = true;
  if (!fixtures.empty()) opts.fixture_dir = fixtures;
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact moment sequences of modified Beta distributions"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  bool offline = false;
  app.add_flag("--offline", offline, "never touch the network");
  std::string fixtures;
  app.add_option("--fixtures", fixtures, "OEIS fixture directory");

  int exit_code = 0;

  // ---- moments ------------------------------------------------------------
  auto* cmd_m = app.add_subcommand("moments", "print M_n(c, alpha, beta)");
  std::string m_c = "0", m_a, m_b, m_scale;
  unsigned long m_count = 10;
  cmd_m->add_option("-c,--c", m_c, "support shift c")->capture_default_str();
  cmd_m->add_option("-a,--alpha", m_a, "alpha > 0")->required();
  cmd_m->add_option("-b,--beta", m_b, "beta > 0")->required();
  cmd_m->add_option("-n,--count", m_count, "number of terms")
      ->capture_default_str();
  cmd_m->add_option("--scale", m_scale, "also print scale^n * M_n");
  cmd_m->callback([&] {
    const Rational c = parse_rational_or_die(m_c, "--c");
    const Rational a = parse_rational_or_die(m_a, "--alpha");
    const Rational b = parse_rational_or_die(m_b, "--beta");
    if (!a.is_positive() || !b.is_positive())
      throw CLI::ValidationError("--alpha/--beta", "must be positive");
    Output out;
    out.command = "moments";
    out.parameters = {{"c", c.to_string()},
                      {"alpha", a.to_string()},
                      {"beta", b.to_string()},
                      {"count", m_count}};
    out.columns = {"n", "M_n"};
    std::optional<Rational> q;
    if (!m_scale.empty()) {
      q = parse_rational_or_die(m_scale, "--scale");
      out.parameters["scale"] = q->to_string();
      out.columns.push_back("scaled");
    }
    const auto terms = M_sequence(MomentSpec(c, a, b), m_count);
    Rational p(1);
    for (unsigned long n = 0; n < m_count; ++n) {
      std::vector<std::string> row{std::to_string(n), terms[n].to_string()};
      if (q) {
        row.push_back((terms[n] * p).to_string());
        p *= *q;
      }
      out.rows.push_back(std::move(row));
    }
    render(out, format);
  });

  // ---- gf -----------------------------------------------------------------
  auto* cmd_g = app.add_subcommand("gf", "generating-function coefficients");
  std::string g_id, g_c = "0", g_a, g_b;
  unsigned long g_order = 30;
  cmd_g->add_option("--id", g_id, "closed-form id (see `gf --list`)");
  cmd_g->add_option("-c,--c", g_c, "support shift c");
  cmd_g->add_option("-a,--alpha", g_a, "alpha > 0");
  cmd_g->add_option("-b,--beta", g_b, "beta > 0");
  cmd_g->add_option("-N,--order", g_order, "truncation order")
      ->capture_default_str();
  bool g_list = false;
  cmd_g->add_flag("--list", g_list, "list closed-form ids");
  cmd_g->callback([&] {
    Output out;
    out.command = "gf";
    if (g_list) {
      out.columns = {"id"};
      for (const auto& id : series::closed_form_ids()) out.rows.push_back({id});
      render(out, format);
      return;
    }
    series::PowerSeries gf = [&] {
      if (!g_id.empty()) {
        out.parameters = {{"id", g_id}, {"order", g_order}};
        return series::closed_form_gf(g_id, g_order);
      }
      if (g_a.empty() || g_b.empty())
        throw CLI::ValidationError("gf", "need --id or --alpha/--beta");
      const Rational c = parse_rational_or_die(g_c, "--c");
      const Rational a = parse_rational_or_die(g_a, "--alpha");
      const Rational b = parse_rational_or_die(g_b, "--beta");
      out.parameters = {{"c", c.to_string()},
                        {"alpha", a.to_string()},
                        {"beta", b.to_string()},
                        {"order", g_order}};
      return series::gf_of_moments(MomentSpec(c, a, b), g_order);
    }();
    out.columns = {"k", "coefficient"};
    for (std::size_t k = 0; k <= gf.order(); ++k)
      out.rows.push_back({std::to_string(k), gf[k].to_string()});
    render(out, format);
  });

  // ---- hankel ---------------------------------------------------------------
  auto* cmd_h = app.add_subcommand("hankel", "moment-sequence positivity");
  std::string h_c = "0", h_a, h_b;
  unsigned h_N = 8;
  cmd_h->add_option("-c,--c", h_c, "support shift c")->capture_default_str();
  cmd_h->add_option("-a,--alpha", h_a, "alpha > 0")->required();
  cmd_h->add_option("-b,--beta", h_b, "beta > 0")->required();
  cmd_h->add_option("-N,--order", h_N, "maximal Hankel order")
      ->capture_default_str();
  cmd_h->callback([&] {
    const Rational c = parse_rational_or_die(h_c, "--c");
    const Rational a = parse_rational_or_die(h_a, "--alpha");
    const Rational b = parse_rational_or_die(h_b, "--beta");
    const auto rep = hankel::check_pm(MomentSpec(c, a, b), h_N);
    Output out;
    out.command = "hankel";
    out.parameters = {{"c", c.to_string()},
                      {"alpha", a.to_string()},
                      {"beta", b.to_string()},
                      {"order", h_N}};
    out.columns = {"n", "det", "shifted_det"};
    for (unsigned n = 0; n <= h_N; ++n)
      out.rows.push_back({std::to_string(n), rep.determinants[n].to_string(),
                          rep.shifted_determinants[n].to_string()});
    out.summary["pm_up_to_order"] = rep.pm_up_to_order;
    out.summary["stieltjes_up_to_order"] = rep.stieltjes_up_to_order;
    out.summary["stieltjes_meaningful"] = rep.stieltjes_meaningful;
    render(out, format);
    if (!rep.pm_up_to_order ||
        (rep.stieltjes_meaningful && !rep.stieltjes_up_to_order))
      exit_code = 1;
  });

  // ---- verify ---------------------------------------------------------------
  auto* cmd_v = app.add_subcommand("verify", "verify sequence identities");
  std::string v_id = "all";
  unsigned long v_nmax = 30, v_J = 48;
  cmd_v->add_option("id", v_id, "identity id or 'all'")->capture_default_str();
  cmd_v->add_option("--n-max", v_nmax, "largest index checked")
      ->capture_default_str();
  cmd_v->add_option("-J,--depth", v_J, "series truncation before the tail")
      ->capture_default_str();
  bool v_list = false;
  cmd_v->add_flag("--list", v_list, "list identity ids");
  cmd_v->callback([&] {
    Output out;
    out.command = "verify";
    if (v_list) {
      out.columns = {"id", "kind"};
      for (const auto& id : idn::finite_identity_ids())
        out.rows.push_back({id, "finite"});
      for (const auto& id : idn::infinite_identity_ids())
        out.rows.push_back({id, "infinite"});
      render(out, format);
      return;
    }
    out.parameters = {{"id", v_id}, {"n_max", v_nmax}, {"J", v_J}};
    out.columns = {"id", "n", "lhs", "rhs_lo", "rhs_hi", "width", "status",
                   "note"};
    std::size_t failures = 0;
    auto add = [&](const std::vector<idn::IdentityResult>& results) {
      for (const auto& r : results) {
        char width[32];
        std::snprintf(width, sizeof width, "%.3g",
                      (r.rhs_hi - r.rhs_lo).to_double());
        out.rows.push_back({r.id, std::to_string(r.n), r.lhs.to_string(),
                            r.rhs_lo.to_string(), r.rhs_hi.to_string(),
                            r.rhs_exact ? "0" : width, status_name(r.status),
                            r.note});
        if (r.status == idn::IdentityStatus::fail) ++failures;
      }
    };
    auto run_one = [&](const std::string& id) {
      try {
        const auto& fins = idn::finite_identity_ids();
        if (std::find(fins.begin(), fins.end(), id) != fins.end()) {
          add(idn::verify_finite(id, 0, v_nmax));
          return;
        }
        unsigned long hi = v_nmax;
        unsigned long J = v_J;
        if (id == "t2-vii") hi = std::min<unsigned long>(hi, 8);
        if (id == "t2-vii-bracket") {
          hi = std::min<unsigned long>(hi, 2);
          J = std::max<unsigned long>(J, 4096);
        }
        if (id == "eq2") hi = std::min<unsigned long>(v_nmax * 2, 60);
        add(idn::verify_infinite(id, 0, hi, J));
      } catch (const idn::CertificationError& e) {
        out.rows.push_back(
            {id, "-", "-", "-", "-", "-", "CertificationFailure", e.what()});
        ++failures;
      }
    };
    if (v_id == "all") {
      for (const auto& id : idn::finite_identity_ids()) run_one(id);
      for (const auto& id : idn::infinite_identity_ids()) run_one(id);
    } else {
      run_one(v_id);
    }
    out.summary["failures"] = failures;
    render(out, format);
    if (failures) exit_code = 1;
  });

  // ---- match ----------------------------------------------------------------
  auto* cmd_x = app.add_subcommand("match", "match sequences against OEIS data");
  std::string x_label, x_oeis, x_c = "0", x_a, x_b, x_scale = "1";
  bool x_all = false;
  cmd_x->add_flag("--all", x_all, "check every catalog claim");
  cmd_x->add_option("--label", x_label, "check one catalog row by label");
  cmd_x->add_option("--oeis", x_oeis, "A-number to match a spec against");
  cmd_x->add_option("-c,--c", x_c, "support shift c");
  cmd_x->add_option("-a,--alpha", x_a, "alpha > 0");
  cmd_x->add_option("-b,--beta", x_b, "beta > 0");
  cmd_x->add_option("--scale", x_scale, "geometric scale q for q^n M_n");
  cmd_x->callback([&] {
    oeis::OeisClient client(client_options(offline, fixtures));
    Output out;
    out.command = "match";
    out.columns = {"label", "oeis", "status", "shift", "compared", "note"};
    std::size_t failures = 0;
    auto add_claim = [&](const oeis::ClaimReport& r) {
      out.rows.push_back({r.label, r.oeis_id, claim_status_name(r.status),
                          std::to_string(r.shift), std::to_string(r.compared),
                          r.note});
      if (r.status != oeis::ClaimStatus::exact_prefix_match) ++failures;
    };
    if (x_all) {
      out.parameters = {{"mode", "all"}};
      for (const auto& r : oeis::verify_all_claims(client)) add_claim(r);
    } else if (!x_label.empty()) {
      out.parameters = {{"label", x_label}};
      bool found = false;
      for (const auto& entry : catalog())
        if (entry.label == x_label) {
          add_claim(oeis::verify_claim(entry, client));
          found = true;
        }
      if (!found) throw CLI::ValidationError("--label", "unknown catalog label");
    } else {
      if (x_a.empty() || x_b.empty() || x_oeis.empty())
        throw CLI::ValidationError("match",
                                   "need --all, --label, or spec + --oeis");
      const Rational c = parse_rational_or_die(x_c, "--c");
      const Rational a = parse_rational_or_die(x_a, "--alpha");
      const Rational b = parse_rational_or_die(x_b, "--beta");
      const Rational q = parse_rational_or_die(x_scale, "--scale");
      out.parameters = {{"c", c.to_string()},
                        {"alpha", a.to_string()},
                        {"beta", b.to_string()},
                        {"scale", q.to_string()},
                        {"oeis", x_oeis}};
      auto computed = M_sequence(MomentSpec(c, a, b), 16);
      Rational p(1);
      for (auto& v : computed) {
        v *= p;
        p *= q;
      }
      const auto entry = client.fetch(x_oeis);
      std::vector<Rational> target;
      for (const auto& t : entry.terms) target.emplace_back(t);
      if (target.size() > 16) target.resize(16);
      const auto found = transforms::match(computed, target);
      out.columns = {"found", "transform"};
      out.rows.push_back({found ? "yes" : "no",
                          found ? transforms::to_string(*found) : "-"});
      if (!found) failures = 1;
    }
    out.summary["failures"] = failures;
    render(out, format);
    if (failures) exit_code = 1;
  });

  // ---- integrality ----------------------------------------------------------
  auto* cmd_i = app.add_subcommand("integrality",
                                   "denominator-clearing multipliers");
  unsigned long i_p = 0, i_r = 0, i_N = 20;
  bool i_demo = false;
  cmd_i->add_flag("--demo", i_demo, "print the non-integral counterexample");
  cmd_i->add_option("-p", i_p, "numerator of alpha = p/r");
  cmd_i->add_option("-r", i_r, "denominator of alpha = p/r");
  cmd_i->add_option("-N,--count", i_N, "largest n")->capture_default_str();
  cmd_i->callback([&] {
    Output out;
    out.command = "integrality";
    if (i_demo) {
      out.parameters = {{"mode", "demo"}, {"N", i_N}};
      out.columns = {"n", "value"};
      const auto vals = integrality::demo_nonintegral(i_N ? i_N : 9);
      for (std::size_t i = 0; i < vals.size(); ++i)
        out.rows.push_back({std::to_string(i + 1), vals[i].to_string()});
      render(out, format);
      return;
    }
    if (i_p == 0 || i_r == 0)
      throw CLI::ValidationError("integrality", "need -p and -r (or --demo)");
    const auto rep = integrality::check_integrality(i_p, i_r, i_N);
    out.parameters = {{"p", i_p}, {"r", i_r}, {"N", i_N}};
    out.columns = {"n", "multiplier", "raw_moment", "product", "integer"};
    for (const auto& row : rep.rows)
      out.rows.push_back({std::to_string(row.n), row.multiplier.get_str(),
                          row.raw_moment.to_string(), row.product.to_string(),
                          row.is_integer ? "yes" : "no"});
    out.summary["all_integer"] = rep.all_integer;
    render(out, format);
    if (!rep.all_integer) exit_code = 1;
  });

  // ---- catalog ---------------------------------------------------------------
  auto* cmd_c = app.add_subcommand("catalog", "list identified moment families");
  cmd_c->callback([&] {
    Output out;
    out.command = "catalog";
    out.columns = {"label", "c", "alpha", "beta", "scale", "transform", "oeis"};
    for (const auto& e : catalog())
      out.rows.push_back({e.label, e.spec.c.to_string(),
                          e.spec.params.alpha.to_string(),
                          e.spec.params.beta.to_string(), e.scale.to_string(),
                          transforms::to_string(e.transform),
                          e.oeis_id.empty() ? "-" : e.oeis_id});
    render(out, format);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
