#include "zagreb/verify.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

#include "zagreb/exact.hpp"
#include "zagreb/oracle.hpp"

namespace zagreb {

namespace {

using nlohmann::json;

// Column order is frozen; pr0 is r-indexed and never a grid column.
const std::vector<std::string> kGridCheckOrder = {"bo1", "bo2",        "bo3",    "bo4",
                                                  "p1",  "pro1",       "in5",    "sc",
                                                  "complement", "oracle", "ratio106"};

const char* csv_status(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "ok";
    case CheckStatus::not_applicable: return "na";
    case CheckStatus::violated: return "FAIL";
  }
  return "?";
}

CheckResult equality_check(const std::string& label, const Int& lhs, const Int& rhs) {
  CheckResult r;
  Comparison c;
  c.label = label;
  c.lhs_display = lhs.str();
  c.rhs_display = rhs.str();
  c.witness = Surd(lhs - rhs);
  c.relation = "==0";
  SignCertificate cert = sign_certificate(c.witness);
  c.sign = cert.sign;
  c.cert_c_sq_k = cert.c_sq_k;
  c.cert_p_sq = cert.p_sq;
  c.ok = c.sign == 0;
  r.parts.push_back(std::move(c));
  r.status = r.parts.front().ok ? CheckStatus::holds : CheckStatus::violated;
  return r;
}

CheckResult check_ratio106(const BoundReport& rep) {
  if (!rep.d_defined || rep.f == 0) {
    CheckResult r;
    r.status = CheckStatus::not_applicable;
    return r;
  }
  const Int& n = rep.n;
  const Int& m = rep.m;
  Int d_num = m * (2 * m + (n - 2) * (n - 1));
  CheckResult r;
  Comparison c;
  c.label = "100*D>106*f";
  c.lhs_display = display6(Int(100 * d_num), Int(n - 1));
  c.rhs_display = display6(Int(106 * rep.f));
  c.witness = Surd(100 * d_num - 106 * rep.f * (n - 1));
  c.relation = ">0";
  SignCertificate cert = sign_certificate(c.witness);
  c.sign = cert.sign;
  c.cert_c_sq_k = cert.c_sq_k;
  c.cert_p_sq = cert.p_sq;
  c.ok = c.sign > 0;
  r.parts.push_back(std::move(c));
  r.status = r.parts.front().ok ? CheckStatus::holds : CheckStatus::violated;
  return r;
}

struct OracleCache {
  int n = -1;
  std::vector<OracleResult> sweep;
};

CheckResult check_oracle_row(const BoundReport& rep, OracleCache& cache) {
  if (rep.n > kOracleDefaultCap) {
    CheckResult r;
    r.status = CheckStatus::not_applicable;
    return r;
  }
  int n = rep.n.convert_to<int>();
  if (cache.n != n) {
    cache.sweep = brute_force_sweep(n);
    cache.n = n;
  }
  const Int& oracle = cache.sweep[rep.m.convert_to<std::size_t>()].max_value;
  return equality_check("oracle==f", oracle, rep.f);
}

CheckResult run_grid_check(const std::string& name, const BoundReport& rep, OracleCache& cache) {
  const Int& n = rep.n;
  const Int& m = rep.m;
  if (name == "bo1") return check_bo1(n, m);
  if (name == "bo2") return check_bo2(n, m);
  if (name == "bo3") return check_bo3(n, m);
  if (name == "bo4") return check_bo4(n, m);
  if (name == "p1") return check_prop2(n, m);
  if (name == "pro1") return check_lemma_pro1(n, m);
  if (name == "in5") return check_lemma_pro3(n, m);
  if (name == "sc")
    return equality_check("S==C(co)+4m(n-1)-n(n-1)^2", rep.S,
                          value_C(n, binom2(n) - m) + 4 * m * (n - 1) - n * (n - 1) * (n - 1));
  if (name == "complement")
    return equality_check("f(co)==f+n(n-1)^2-4(n-1)m", f_exact(n, binom2(n) - m),
                          complement_transfer(n, m, rep.f));
  if (name == "oracle") return check_oracle_row(rep, cache);
  if (name == "ratio106") return check_ratio106(rep);
  throw std::invalid_argument("unknown check: " + name);
}

void collect_violations(const std::string& check, const Int& n, const Int& m,
                        const CheckResult& result, std::vector<ViolationRecord>& out) {
  if (!result.violated()) return;
  for (const Comparison& part : result.parts) {
    if (part.ok) continue;
    ViolationRecord v;
    v.check = check;
    v.n = n;
    v.m = m;
    v.label = part.label;
    v.lhs = part.lhs_display;
    v.rhs = part.rhs_display;
    v.witness = part.witness.to_string();
    v.cert_c_sq_k = part.cert_c_sq_k;
    v.cert_p_sq = part.cert_p_sq;
    out.push_back(std::move(v));
  }
}

json comparison_json(const Comparison& c) {
  return json{{"label", c.label},
              {"lhs", c.lhs_display},
              {"rhs", c.rhs_display},
              {"relation", c.relation},
              {"witness", c.witness.to_string()},
              {"cert", json{{"c_sq_k", c.cert_c_sq_k.str()}, {"p_sq", c.cert_p_sq.str()}}},
              {"sign", c.sign},
              {"ok", c.ok}};
}

json check_json(const CheckResult& r) {
  json j{{"status", to_cstring(r.status)}};
  if (r.status != CheckStatus::not_applicable) {
    json parts = json::array();
    for (const Comparison& c : r.parts) parts.push_back(comparison_json(c));
    j["parts"] = std::move(parts);
  }
  return j;
}

json violation_json(const ViolationRecord& v) {
  return json{{"check", v.check},
              {"n", v.n.str()},
              {"m", v.m.str()},
              {"label", v.label},
              {"lhs", v.lhs},
              {"rhs", v.rhs},
              {"witness", v.witness},
              {"cert", json{{"c_sq_k", v.cert_c_sq_k.str()}, {"p_sq", v.cert_p_sq.str()}}}};
}

std::vector<std::string> ordered_selection(const std::vector<std::string>& checks) {
  std::vector<std::string> out;
  for (const std::string& name : kGridCheckOrder)
    if (std::find(checks.begin(), checks.end(), name) != checks.end()) out.push_back(name);
  return out;
}

}  // namespace

std::vector<std::string> all_check_names() {
  return {"bo1", "bo2", "bo3", "bo4", "p1", "pro1", "in5", "pr0", "sc", "complement", "oracle"};
}

bool is_known_check(const std::string& name) {
  if (name == "ratio106") return true;
  auto names = all_check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string csv_header(const std::vector<std::string>& checks) {
  std::string header = "n,m,C,S,f,winner,D_num,D_den,F_display,th1_lo_display,th1_hi_display,subtle";
  for (const std::string& name : ordered_selection(checks)) {
    header += ',';
    header += name;
  }
  if (std::find(checks.begin(), checks.end(), std::string("ratio106")) != checks.end())
    header += ",ratio_display";
  return header;
}

VerifySummary run_verify(const SweepConfig& cfg, std::ostream& out) {
  VerifySummary summary;
  for (const std::string& name : cfg.checks)
    if (!is_known_check(name)) throw std::invalid_argument("unknown check: " + name);
  std::vector<std::string> grid_checks = ordered_selection(cfg.checks);
  bool want_ratio =
      std::find(cfg.checks.begin(), cfg.checks.end(), std::string("ratio106")) != cfg.checks.end();
  bool want_pr0 =
      std::find(cfg.checks.begin(), cfg.checks.end(), std::string("pr0")) != cfg.checks.end();

  OracleCache oracle_cache;
  json config_json{{"n_min", cfg.n_min.str()},
                   {"n_max", cfg.n_max.str()},
                   {"stride", cfg.stride.str()},
                   {"checks", cfg.checks}};

  if (cfg.json)
    out << "{\n\"config\": " << config_json.dump() << ",\n\"rows\": [\n";
  else
    out << csv_header(cfg.checks) << '\n';

  bool first_row = true;
  for (Int n = cfg.n_min; n <= cfg.n_max; ++n) {
    Int max_m = binom2(n);
    std::vector<Int> ms;
    if (!cfg.m_list.empty()) {
      for (const Int& m : cfg.m_list)
        if (m >= 0 && m <= max_m) ms.push_back(m);
      std::sort(ms.begin(), ms.end());
    } else {
      for (Int m = 0; m <= max_m; m += cfg.stride) ms.push_back(m);
    }
    for (const Int& m : ms) {
      BoundReport rep = make_bound_report(n, m);
      ++summary.rows;
      std::vector<CheckResult> results;
      results.reserve(grid_checks.size());
      for (const std::string& name : grid_checks) {
        results.push_back(run_grid_check(name, rep, oracle_cache));
        collect_violations(name, n, m, results.back(), summary.violations);
      }
      if (cfg.json) {
        json row{{"n", rep.n.str()},
                 {"m", rep.m.str()},
                 {"C", rep.C.str()},
                 {"S", rep.S.str()},
                 {"f", rep.f.str()},
                 {"winner", rep.winner == 't' ? "tie" : std::string(1, rep.winner)},
                 {"subtle", rep.subtle}};
        if (rep.d_defined)
          row["D"] = json{{"num", boost::multiprecision::numerator(rep.D).str()},
                          {"den", boost::multiprecision::denominator(rep.D).str()},
                          {"display", display6(rep.D)}};
        else
          row["D"] = nullptr;
        row["F"] = json{{"surd", rep.F.to_string()},
                        {"display", display6(rep.F)},
                        {"branch", rep.f_branch}};
        row["th1"] = json{{"lower", rep.th1_lower.to_string()},
                          {"upper", rep.th1_upper.to_string()},
                          {"lower_display", display6(rep.th1_lower)},
                          {"upper_display", display6(rep.th1_upper)},
                          {"applies", rep.th1_applies}};
        json checks_json;
        for (std::size_t i = 0; i < grid_checks.size(); ++i)
          checks_json[grid_checks[i]] = check_json(results[i]);
        row["checks"] = std::move(checks_json);
        out << (first_row ? "" : ",\n") << row.dump();
        first_row = false;
      } else {
        out << rep.n << ',' << rep.m << ',' << rep.C << ',' << rep.S << ',' << rep.f << ','
            << (rep.winner == 't' ? "tie" : std::string(1, rep.winner)) << ',';
        if (rep.d_defined)
          out << boost::multiprecision::numerator(rep.D) << ','
              << boost::multiprecision::denominator(rep.D);
        else
          out << "na,na";
        out << ',' << display6(rep.F) << ',' << display6(rep.th1_lower) << ','
            << display6(rep.th1_upper) << ',' << (rep.subtle ? 1 : 0);
        for (const CheckResult& result : results) out << ',' << csv_status(result.status);
        if (want_ratio)
          out << ','
              << (rep.d_defined && rep.f != 0 ? display6(Rational(rep.D / Rational(rep.f)) * 100)
                                              : std::string("na"));
        out << '\n';
      }
    }
  }

  if (want_pr0) {
    summary.pr0_ran = true;
    summary.pr0_r_max = cfg.r_max;
    for (Int r = 3; r <= cfg.r_max; ++r) {
      CheckResult result = check_prop_pr0(r);
      if (result.violated()) {
        ++summary.pr0_violations;
        collect_violations("pr0", r, Int(0), result, summary.violations);
      }
    }
  }

  if (cfg.json) {
    json violations = json::array();
    for (const ViolationRecord& v : summary.violations) violations.push_back(violation_json(v));
    json tail{{"rows", summary.rows}, {"violations", summary.violations.size()}};
    if (summary.pr0_ran)
      tail["pr0"] = json{{"r_min", 3},
                         {"r_max", summary.pr0_r_max.str()},
                         {"violations", summary.pr0_violations}};
    out << "\n],\n\"violations\": " << violations.dump() << ",\n\"summary\": " << tail.dump()
        << "\n}\n";
  }
  return summary;
}

}  // namespace zagreb
