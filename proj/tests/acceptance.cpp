// Acceptance suite: runs each acceptance criterion and prints one PASS/FAIL
// line per criterion (plus per-clause detail). Exit code 0 iff every criterion
// run here passed. Use --only N to run a single criterion.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zagreb/bounds.hpp"
#include "zagreb/exact.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/oracle.hpp"
#include "zagreb/verify.hpp"

using zagreb::CheckStatus;
using zagreb::Int;

namespace {

struct ClauseTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string first_detail;

  void record(const Int& n, const Int& m, const zagreb::CheckResult& result) {
    if (result.status == CheckStatus::not_applicable) return;
    ++checked;
    if (!result.violated()) return;
    ++violations;
    if (!first_detail.empty()) return;
    for (const auto& part : result.parts) {
      if (part.ok) continue;
      std::ostringstream os;
      os << "first at n=" << n << " m=" << m << " [" << part.label << "] lhs=" << part.lhs_display
         << " rhs=" << part.rhs_display << " witness=" << part.witness.to_string()
         << " cert(c^2k=" << part.cert_c_sq_k << ", p^2=" << part.cert_p_sq << ")";
      first_detail = os.str();
      break;
    }
  }

  bool print(const char* prefix) const {
    bool ok = violations == 0;
    std::cout << "  " << prefix << " " << name << ": " << (ok ? "PASS" : "FAIL") << " ("
              << checked << " applicable pairs, " << violations << " violations";
    if (!ok) std::cout << "; " << first_detail;
    std::cout << ")\n";
    return ok;
  }
};

bool criterion1_oracle_certification() {
  std::uint64_t pairs = 0;
  for (int n = 1; n <= 7; ++n) {
    std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    for (std::int64_t m = 0; m <= max_m; ++m) {
      if (zagreb::brute_force_max(n, m).max_value != zagreb::f_exact(n, m)) {
        std::cout << "  mismatch at n=" << n << " m=" << m << "\n";
        return false;
      }
      ++pairs;
    }
  }
  std::cout << "  " << pairs << " (n,m) pairs, oracle == f everywhere\n";
  return true;
}

bool criterion2_realization() {
  std::uint64_t pairs = 0;
  for (std::int64_t n = 1; n <= 60; ++n) {
    std::int64_t max_m = n * (n - 1) / 2;
    for (std::int64_t m = 0; m <= max_m; ++m) {
      if (zagreb::sum_sq_degrees(zagreb::quasi_complete(n, m)) != zagreb::value_C(n, m) ||
          zagreb::sum_sq_degrees(zagreb::quasi_star(n, m)) != zagreb::value_S(n, m)) {
        std::cout << "  realization mismatch at n=" << n << " m=" << m << "\n";
        return false;
      }
      ++pairs;
    }
  }
  std::cout << "  " << pairs << " (n,m) pairs, quasi-complete == C and quasi-star == S\n";
  return true;
}

bool criterion3_theorem_suites() {
  ClauseTally bo1{"bo1 (4m >= n(n-1))"};
  ClauseTally bo2{"bo2 strict (2m < (n-1)(n-2), m >= 1)"};
  ClauseTally bo3{"bo3 (all n,m)"};
  ClauseTally bo4{"bo4 strict (m^2 > n^3, (binom(n,2)-m)^2 > n^3)"};
  ClauseTally p1{"p1 (m > 0)"};
  ClauseTally pro1{"pro1 (all n,m)"};
  ClauseTally in5{"in5 (4m <= n^2)"};
  for (Int n = 1; n <= 300; ++n) {
    Int max_m = zagreb::binom2(n);
    for (Int m = 0; m <= max_m; ++m) {
      bo1.record(n, m, zagreb::check_bo1(n, m));
      bo2.record(n, m, zagreb::check_bo2(n, m));
      bo3.record(n, m, zagreb::check_bo3(n, m));
      bo4.record(n, m, zagreb::check_bo4(n, m));
      p1.record(n, m, zagreb::check_prop2(n, m));
      pro1.record(n, m, zagreb::check_lemma_pro1(n, m));
      in5.record(n, m, zagreb::check_lemma_pro3(n, m));
    }
  }
  ClauseTally pr0{"pr0 (3 <= r <= 10^6)"};
  for (Int r = 3; r <= 1000000; ++r) pr0.record(r, 0, zagreb::check_prop_pr0(r));

  bool ok = true;
  ok &= bo1.print("clause");
  ok &= bo2.print("clause");
  bool bo3_ok = bo3.print("clause");
  if (!bo3_ok)
    std::cout << "  note: the bo3 lower inequality F-4m <= f is false for small m (the\n"
                 "  violations above carry exact integer certificates); the upper half\n"
                 "  f <= F and every other clause hold with zero violations\n";
  ok &= bo3_ok;
  ok &= bo4.print("clause");
  ok &= p1.print("clause");
  ok &= pro1.print("clause");
  ok &= in5.print("clause");
  ok &= pr0.print("clause");
  return ok;
}

bool criterion4_ratio() {
  Int n = 1000, m = 250000;
  bool exact_ok = zagreb::ratio_D_over_f_exceeds(n, m, 106, 100);
  std::cout << "  exact 100*D > 106*f at (1000, 250000): " << (exact_ok ? "PASS" : "FAIL")
            << "\n";
  zagreb::Rational ratio = zagreb::de_caen_D(n, m) / zagreb::Rational(zagreb::f_exact(n, m));
  std::string display = zagreb::display6(ratio);
  double value = std::strtod(display.c_str(), nullptr);
  bool display_ok = value >= 1.060 && value <= 1.062;
  std::cout << "  display ratio D/f = " << display << " in [1.060, 1.062]: "
            << (display_ok ? "PASS" : "FAIL") << "\n";
  return exact_ok && display_ok;
}

bool criterion5_tightness_anchors() {
  for (Int n = 2; n <= 100; ++n) {
    Int max_m = zagreb::binom2(n);
    Int f_star = zagreb::f_exact(n, n - 1);
    Int f_complete = zagreb::f_exact(n, max_m);
    if (zagreb::de_caen_D(n, n - 1) != zagreb::Rational(f_star) ||
        zagreb::de_caen_D(n, max_m) != zagreb::Rational(f_complete)) {
      std::cout << "  de Caen equality fails at n=" << n << "\n";
      return false;
    }
    if (zagreb::theorem1_bounds(n, max_m).upper != zagreb::Surd(f_complete)) {
      std::cout << "  theorem-1 upper not exact at complete graph, n=" << n << "\n";
      return false;
    }
    if (n <= 7) {
      if (zagreb::brute_force_max(n.convert_to<int>(), (n - 1).convert_to<std::int64_t>())
                  .max_value != f_star ||
          zagreb::brute_force_max(n.convert_to<int>(), max_m.convert_to<std::int64_t>())
                  .max_value != f_complete) {
        std::cout << "  oracle cross-check fails at n=" << n << "\n";
        return false;
      }
    }
  }
  std::cout << "  D(n, n-1) = f and D(n, binom(n,2)) = f exactly for 2 <= n <= 100;\n"
               "  theorem-1 upper bound meets f at m = binom(n,2) (radical is (2n-1)^2)\n";
  return true;
}

bool criterion6_identities() {
  for (Int n = 1; n <= 300; ++n) {
    Int max_m = zagreb::binom2(n);
    Int prev_f = 0;
    for (Int m = 0; m <= max_m; ++m) {
      Int f = zagreb::f_exact(n, m);
      if (zagreb::value_S(n, m) !=
          zagreb::value_C(n, max_m - m) + 4 * m * (n - 1) - n * (n - 1) * (n - 1)) {
        std::cout << "  sc identity fails at n=" << n << " m=" << m << "\n";
        return false;
      }
      if (zagreb::f_exact(n, max_m - m) != zagreb::complement_transfer(n, m, f)) {
        std::cout << "  complement identity fails at n=" << n << " m=" << m << "\n";
        return false;
      }
      if (m > 0 && f < prev_f + 2) {
        std::cout << "  monotonicity fails at n=" << n << " m=" << m << "\n";
        return false;
      }
      prev_f = f;
    }
  }
  std::cout << "  sc, complement (oracle-fixed orientation) and monotonicity hold exactly\n"
               "  for all n <= 300\n";
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_command(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion7_cli_contract() {
  const std::string cli = ZAGREB_CLI_PATH;
  const std::string golden = ZAGREB_GOLDEN_DIR;
  bool ok = true;

  std::string csv_path = "/tmp/zagreb_acceptance_verify.csv";
  int exit_code = run_command(cli + " verify --n-max 100 --checks all --out " + csv_path +
                              " 2>/tmp/zagreb_acceptance_verify.err");
  bool exit_ok = exit_code == 0;
  std::cout << "  verify --n-max 100 --checks all exits 0: " << (exit_ok ? "PASS" : "FAIL")
            << " (exit " << exit_code << ")\n";
  if (!exit_ok)
    std::cout << "  note: exit 2 is the verifier honoring its exit-code contract: the grid\n"
                 "  contains genuine bo3 lower-bound violations (smallest at n=6, m=1,\n"
                 "  certificate 198^2 = 39204 < 39304); see the criterion-3 report\n";
  ok &= exit_ok;

  std::string csv = read_file(csv_path);
  std::string header_golden = read_file(golden + "/csv_header_all.txt");
  std::string first_line = csv.substr(0, csv.find('\n') + 1);
  bool header_ok = !csv.empty() && first_line == header_golden;
  std::cout << "  CSV header golden-file match: " << (header_ok ? "PASS" : "FAIL") << "\n";
  ok &= header_ok;

  std::string edges_path = "/tmp/zagreb_acceptance_star.edges";
  int construct_exit =
      run_command(cli + " construct 5 4 --kind qs --out " + edges_path + " >/dev/null 2>&1");
  bool edges_ok = construct_exit == 0 &&
                  read_file(edges_path) == read_file(golden + "/quasi_star_5_4.edges");
  std::cout << "  edge-list serialization golden-file match: " << (edges_ok ? "PASS" : "FAIL")
            << "\n";
  ok &= edges_ok;
  return ok;
}

struct Criterion {
  int number;
  const char* title;
  bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "oracle certification of f = max{C,S} for n <= 7", criterion1_oracle_certification},
    {2, "construction realization for n <= 60", criterion2_realization},
    {3, "theorem suites over n <= 300 (exact arithmetic)", criterion3_theorem_suites},
    {4, "de Caen ratio claim at n = 1000, m = 250000", criterion4_ratio},
    {5, "tightness anchors for 2 <= n <= 100", criterion5_tightness_anchors},
    {6, "identity suite over n <= 300", criterion6_identities},
    {7, "CLI contract and golden files", criterion7_cli_contract},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  bool all_ok = true;
  for (const Criterion& criterion : kCriteria) {
    if (only != 0 && criterion.number != only) continue;
    std::cout << "criterion " << criterion.number << ": " << criterion.title << "\n";
    bool ok = criterion.run();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.number << "\n";
    all_ok &= ok;
  }
  return all_ok ? 0 : 1;
}
