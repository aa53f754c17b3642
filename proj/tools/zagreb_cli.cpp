#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zagreb/bounds.hpp"
#include "zagreb/exact.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/oracle.hpp"
#include "zagreb/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitIo = 3;

using zagreb::Int;

Int parse_int(const std::string& text, const char* what) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw std::domain_error(std::string("invalid ") + what + ": " + text);
  }
}

std::int64_t to_i64(const Int& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::int64_t>::max())
    throw std::domain_error(std::string(what) + " out of supported range");
  return v.convert_to<std::int64_t>();
}

std::string winner_string(char w) { return w == 't' ? "tie" : std::string(1, w); }

int run_exact(const std::string& n_text, const std::string& m_text) {
  Int n = parse_int(n_text, "n");
  Int m = parse_int(m_text, "m");
  zagreb::BoundReport rep = zagreb::make_bound_report(n, m);
  std::cout << "n=" << rep.n << " m=" << rep.m << " r=" << rep.r << " q=" << rep.q
            << " s=" << rep.s << " t=" << rep.t << " C=" << rep.C << " S=" << rep.S
            << " f=" << rep.f << " winner=" << winner_string(rep.winner) << '\n';
  return kExitOk;
}

nlohmann::json report_json(const zagreb::BoundReport& rep) {
  nlohmann::json j{{"n", rep.n.str()},
                   {"m", rep.m.str()},
                   {"r", rep.r.str()},
                   {"q", rep.q.str()},
                   {"s", rep.s.str()},
                   {"t", rep.t.str()},
                   {"C", rep.C.str()},
                   {"S", rep.S.str()},
                   {"f", rep.f.str()},
                   {"winner", winner_string(rep.winner)},
                   {"subtle", rep.subtle}};
  if (rep.d_defined)
    j["D"] = nlohmann::json{{"num", boost::multiprecision::numerator(rep.D).str()},
                            {"den", boost::multiprecision::denominator(rep.D).str()},
                            {"display", zagreb::display6(rep.D)}};
  else
    j["D"] = nullptr;
  j["F"] = nlohmann::json{{"surd", rep.F.to_string()},
                          {"display", zagreb::display6(rep.F)},
                          {"branch", rep.f_branch}};
  j["th1"] = nlohmann::json{{"lower", rep.th1_lower.to_string()},
                            {"upper", rep.th1_upper.to_string()},
                            {"lower_display", zagreb::display6(rep.th1_lower)},
                            {"upper_display", zagreb::display6(rep.th1_upper)},
                            {"applies", rep.th1_applies}};
  j["bo2_range"] = rep.bo2_range;
  j["bo4_range"] = rep.bo4_range;
  return j;
}

int run_bounds(const std::string& n_text, const std::string& m_text, bool as_json) {
  Int n = parse_int(n_text, "n");
  Int m = parse_int(m_text, "m");
  zagreb::BoundReport rep = zagreb::make_bound_report(n, m);
  if (as_json) {
    std::cout << report_json(rep).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "n=" << rep.n << " m=" << rep.m << " r=" << rep.r << " q=" << rep.q
            << " s=" << rep.s << " t=" << rep.t << '\n';
  std::cout << "C=" << rep.C << " S=" << rep.S << " f=" << rep.f
            << " winner=" << winner_string(rep.winner) << " subtle=" << (rep.subtle ? 1 : 0)
            << '\n';
  if (rep.d_defined)
    std::cout << "D_num=" << boost::multiprecision::numerator(rep.D)
              << " D_den=" << boost::multiprecision::denominator(rep.D)
              << " D_display=" << zagreb::display6(rep.D) << '\n';
  else
    std::cout << "D=undefined\n";
  std::cout << "F=" << rep.F.to_string() << " F_display=" << zagreb::display6(rep.F)
            << " F_branch=" << rep.f_branch << '\n';
  std::cout << "th1_lower=" << rep.th1_lower.to_string()
            << " th1_upper=" << rep.th1_upper.to_string()
            << " th1_lower_display=" << zagreb::display6(rep.th1_lower)
            << " th1_upper_display=" << zagreb::display6(rep.th1_upper)
            << " th1_applies=" << (rep.th1_applies ? 1 : 0) << '\n';
  std::cout << "bo2_range=" << (rep.bo2_range ? 1 : 0) << " bo4_range=" << (rep.bo4_range ? 1 : 0)
            << '\n';
  return kExitOk;
}

int run_construct(const std::string& n_text, const std::string& m_text, const std::string& kind,
                  const std::string& out_path) {
  Int n_big = parse_int(n_text, "n");
  Int m_big = parse_int(m_text, "m");
  std::int64_t n = to_i64(n_big, "n");
  std::int64_t m = to_i64(m_big, "m");
  zagreb::Graph g(0);
  Int formula;
  std::string label;
  if (kind == "qc") {
    g = zagreb::quasi_complete(n, m);
    formula = zagreb::value_C(n_big, m_big);
    label = "C";
  } else if (kind == "qs") {
    g = zagreb::quasi_star(n, m);
    formula = zagreb::value_S(n_big, m_big);
    label = "S";
  } else {
    g = zagreb::extremal_graph(n, m);
    formula = zagreb::f_exact(n_big, m_big);
    label = "f";
  }
  Int sumsq = zagreb::sum_sq_degrees(g);
  std::string summary = "sumsq=" + sumsq.str() + " " + label + "=" + formula.str() +
                        (sumsq == formula ? " match" : " MISMATCH");
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return kExitIo;
    }
    out << zagreb::to_edge_list(g);
    if (!out) {
      std::cerr << "error: write failed: " << out_path << '\n';
      return kExitIo;
    }
    std::cout << summary << '\n';
  } else {
    std::cout << zagreb::to_edge_list(g);
    std::cerr << summary << '\n';
  }
  return sumsq == formula ? kExitOk : kExitViolation;
}

int run_oracle(const std::string& n_text, const std::optional<std::string>& m_text,
               bool allow_large) {
  int n = static_cast<int>(to_i64(parse_int(n_text, "n"), "n"));
  bool all_match = true;
  auto report = [&](const zagreb::OracleResult& res) {
    Int f = zagreb::f_exact(Int(res.n), Int(res.m));
    bool match = res.max_value == f;
    all_match = all_match && match;
    std::cout << "n=" << res.n << " m=" << res.m << " oracle=" << res.max_value << " f=" << f
              << (match ? " match" : " MISMATCH") << '\n';
  };
  if (m_text) {
    report(zagreb::brute_force_max(n, to_i64(parse_int(*m_text, "m"), "m"), allow_large));
  } else {
    for (const zagreb::OracleResult& res : zagreb::brute_force_sweep(n, allow_large)) report(res);
  }
  return all_match ? kExitOk : kExitViolation;
}

int run_verify(const std::string& n_min_text, const std::string& n_max_text,
               const std::vector<std::string>& m_texts, const std::string& stride_text,
               const std::string& checks_text, const std::string& r_max_text,
               const std::string& out_path, const std::string& format) {
  zagreb::SweepConfig cfg;
  cfg.n_min = parse_int(n_min_text, "n-min");
  cfg.n_max = parse_int(n_max_text, "n-max");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) {
    std::cerr << "error: need 1 <= n-min <= n-max\n";
    return kExitUsage;
  }
  for (const std::string& t : m_texts) cfg.m_list.push_back(parse_int(t, "m"));
  if (!stride_text.empty()) {
    if (!cfg.m_list.empty()) {
      std::cerr << "error: --m and --stride are mutually exclusive\n";
      return kExitUsage;
    }
    cfg.stride = parse_int(stride_text, "stride");
    if (cfg.stride < 1) {
      std::cerr << "error: stride must be >= 1\n";
      return kExitUsage;
    }
  } else if (cfg.m_list.empty() && cfg.n_max > 300) {
    std::cerr << "error: sweeps with n-max > 300 require --stride or --m\n";
    return kExitUsage;
  }
  cfg.r_max = parse_int(r_max_text, "r-max");
  if (format != "csv" && format != "json") {
    std::cerr << "error: format must be csv or json\n";
    return kExitUsage;
  }
  cfg.json = format == "json";
  std::stringstream checks(checks_text);
  std::string name;
  while (std::getline(checks, name, ',')) {
    if (name.empty()) continue;
    if (name == "all") {
      for (const std::string& c : zagreb::all_check_names()) cfg.checks.push_back(c);
    } else if (zagreb::is_known_check(name)) {
      cfg.checks.push_back(name);
    } else {
      std::cerr << "error: unknown check: " << name << '\n';
      return kExitUsage;
    }
  }
  if (cfg.checks.empty()) {
    std::cerr << "error: no checks selected\n";
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return kExitIo;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  zagreb::VerifySummary summary = zagreb::run_verify(cfg, out);
  out.flush();
  if (!out) {
    std::cerr << "error: write failed\n";
    return kExitIo;
  }
  if (summary.rows == 0) {
    std::cerr << "error: empty grid (no valid (n,m) pairs)\n";
    return kExitUsage;
  }
  std::cerr << "rows=" << summary.rows << " violations=" << summary.violations.size();
  if (summary.pr0_ran)
    std::cerr << " pr0_range=[3," << summary.pr0_r_max << "] pr0_violations="
              << summary.pr0_violations;
  std::cerr << '\n';
  std::size_t shown = 0;
  for (const zagreb::ViolationRecord& v : summary.violations) {
    if (++shown > 10) {
      std::cerr << "  ... " << summary.violations.size() - 10 << " more\n";
      break;
    }
    std::cerr << "  VIOLATION " << v.check << " n=" << v.n << " m=" << v.m << " " << v.label
              << ": lhs=" << v.lhs << " rhs=" << v.rhs << " witness=" << v.witness
              << " cert(c^2k=" << v.cert_c_sq_k << ", p^2=" << v.cert_p_sq << ")\n";
  }
  return summary.violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact extremal values and bounds for the sum of squared degrees"};
  app.require_subcommand(1);

  std::string n_text, m_text;
  auto* exact = app.add_subcommand("exact", "Compute C(n,m), S(n,m), f(n,m)");
  exact->add_option("n", n_text, "vertex count")->required();
  exact->add_option("m", m_text, "edge count")->required();

  bool bounds_json = false;
  auto* bounds = app.add_subcommand("bounds", "Report all bounds for one (n,m)");
  bounds->add_option("n", n_text, "vertex count")->required();
  bounds->add_option("m", m_text, "edge count")->required();
  bounds->add_flag("--json", bounds_json, "emit JSON");

  std::string kind = "extremal", out_path;
  auto* construct = app.add_subcommand("construct", "Emit an extremal graph as an edge list");
  construct->add_option("n", n_text, "vertex count")->required();
  construct->add_option("m", m_text, "edge count")->required();
  construct->add_option("--kind", kind, "qc|qs|extremal")
      ->check(CLI::IsMember({"qc", "qs", "extremal"}));
  construct->add_option("--out", out_path, "output path (default stdout)");

  std::string oracle_m;
  bool allow_large = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force maximum vs f(n,m)");
  oracle->add_option("n", n_text, "vertex count")->required();
  oracle->add_option("--m", oracle_m, "single edge count (default: all m)");
  oracle->add_flag("--allow-large", allow_large, "permit n=8 (2^28 masks)");

  std::string n_min = "1", n_max, stride_text, checks_text = "all", r_max_text = "1000000";
  std::string verify_out, format = "csv";
  std::vector<std::string> m_texts;
  auto* verify = app.add_subcommand("verify", "Sweep-verify the inequality suite over a grid");
  verify->add_option("--n-min", n_min, "smallest n (default 1)");
  verify->add_option("--n-max", n_max, "largest n")->required();
  verify->add_option("--m", m_texts, "explicit edge count (repeatable)");
  verify->add_option("--stride", stride_text, "stride over m (required for n-max > 300)");
  verify->add_option("--checks", checks_text,
                     "comma list of bo1,bo2,bo3,bo4,p1,pro1,in5,pr0,sc,complement,oracle,"
                     "ratio106 or 'all' (default all; ratio106 only when explicit)");
  verify->add_option("--r-max", r_max_text, "upper end of the pr0 side sweep (default 10^6)");
  verify->add_option("--out", verify_out, "output path (default stdout)");
  verify->add_option("--format", format, "csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(exact)) return run_exact(n_text, m_text);
    if (app.got_subcommand(bounds)) return run_bounds(n_text, m_text, bounds_json);
    if (app.got_subcommand(construct)) return run_construct(n_text, m_text, kind, out_path);
    if (app.got_subcommand(oracle))
      return run_oracle(n_text, oracle_m.empty() ? std::nullopt : std::optional(oracle_m),
                        allow_large);
    if (app.got_subcommand(verify))
      return run_verify(n_min, n_max, m_texts, stride_text, checks_text, r_max_text, verify_out,
                        format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
