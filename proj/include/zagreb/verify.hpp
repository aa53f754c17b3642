#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zagreb/bounds.hpp"
#include "zagreb/int_types.hpp"

namespace zagreb {

/// Grid checks indexed by (n,m); "pr0" runs as a side sweep over r, and
/// "ratio106" is only run when selected explicitly.
std::vector<std::string> all_check_names();
bool is_known_check(const std::string& name);

struct SweepConfig {
  Int n_min = 1;
  Int n_max = 1;
  std::vector<Int> m_list;  // explicit edge counts; empty = all m with stride
  Int stride = 1;
  std::vector<std::string> checks;  // validated names
  Int r_max = 1000000;              // pr0 side sweep upper end
  bool json = false;
};

struct ViolationRecord {
  std::string check;
  Int n;  // r for pr0
  Int m;
  std::string label;
  std::string lhs;  // display strings of the failed comparison's sides
  std::string rhs;
  std::string witness;  // decisive surd, exact form
  Int cert_c_sq_k;      // exact integer certificates of the decisive surd
  Int cert_p_sq;
};

struct VerifySummary {
  std::uint64_t rows = 0;
  std::vector<ViolationRecord> violations;
  bool pr0_ran = false;
  Int pr0_r_max;
  std::uint64_t pr0_violations = 0;

  bool clean() const { return violations.empty(); }
};

/// Runs every selected check over the grid, streaming CSV or JSON rows to
/// `out` with deterministic (n,m) ordering. Violations are collected in the
/// summary (and embedded in the document in JSON mode).
VerifySummary run_verify(const SweepConfig& cfg, std::ostream& out);

/// Frozen CSV header for a selection of checks (golden-file tested).
std::string csv_header(const std::vector<std::string>& checks);

}  // namespace zagreb
