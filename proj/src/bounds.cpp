#include "zagreb/bounds.hpp"

#include <stdexcept>
#include <utility>

#include "zagreb/exact.hpp"

namespace zagreb {

const char* to_cstring(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::not_applicable: return "not_applicable";
    case CheckStatus::violated: return "violated";
  }
  return "?";
}

Rational de_caen_D(const Int& n, const Int& m) {
  if (n <= 1) throw std::domain_error("de Caen bound undefined for n <= 1");
  require_valid_nm(n, m);
  return Rational(m * (2 * m + (n - 2) * (n - 1)), n - 1);
}

Surd nikiforov_F(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  if (4 * m >= n * n) return Surd(0, 1, 8 * m * m * m);
  Int w = n * n - 2 * m;
  return Surd(4 * m * n - n * n * n, 1, w * w * w);
}

Theorem1Bounds theorem1_bounds(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  Theorem1Bounds b;
  b.lower = Surd(-3 * m, m, 8 * m + 1);
  b.upper = Surd(-m, m, 8 * m + 1);
  b.applies = 4 * m >= n * (n - 1);
  return b;
}

namespace {

bool relation_satisfied(const std::string& relation, int sign) {
  if (relation == ">=0") return sign >= 0;
  if (relation == ">0") return sign > 0;
  return sign == 0;
}

Comparison make_comparison(std::string label, std::string lhs, std::string rhs, Surd witness,
                           std::string relation) {
  Comparison c;
  c.label = std::move(label);
  c.lhs_display = std::move(lhs);
  c.rhs_display = std::move(rhs);
  c.witness = std::move(witness);
  c.relation = std::move(relation);
  SignCertificate cert = sign_certificate(c.witness);
  c.sign = cert.sign;
  c.cert_c_sq_k = cert.c_sq_k;
  c.cert_p_sq = cert.p_sq;
  c.ok = relation_satisfied(c.relation, c.sign);
  return c;
}

CheckResult finish(std::vector<Comparison> parts) {
  CheckResult r;
  r.parts = std::move(parts);
  r.status = CheckStatus::holds;
  for (const Comparison& c : r.parts)
    if (!c.ok) r.status = CheckStatus::violated;
  return r;
}

CheckResult not_applicable_result() {
  CheckResult r;
  r.status = CheckStatus::not_applicable;
  return r;
}

}  // namespace

CheckResult check_bo1(const Int& n, const Int& m) {
  Theorem1Bounds b = theorem1_bounds(n, m);
  if (!b.applies) return not_applicable_result();
  Int f = f_exact(n, m);
  return finish({
      make_comparison("th1_lower<=f", display6(b.lower), display6(f),
                      Surd(f + 3 * m, -m, 8 * m + 1), ">=0"),
      make_comparison("f<=th1_upper", display6(f), display6(b.upper),
                      Surd(-(f + m), m, 8 * m + 1), ">=0"),
  });
}

CheckResult check_bo2(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  // The strict claim degenerates to 0 < 0 at m = 0 (both sides vanish); the
  // proof divides by m, so m >= 1 is required for applicability.
  if (n < 2 || m < 1 || 2 * m >= (n - 1) * (n - 2)) return not_applicable_result();
  Int d_num = m * (2 * m + (n - 2) * (n - 1));
  Surd upper(-m, m, 8 * m + 1);
  // Scaled by the positive denominator n-1: D*(n-1) - upper*(n-1) > 0.
  return finish({
      make_comparison("th1_upper<D", display6(upper), display6(d_num, n - 1),
                      Surd(d_num + m * (n - 1), -m * (n - 1), 8 * m + 1), ">0"),
  });
}

CheckResult check_bo3(const Int& n, const Int& m) {
  Surd F = nikiforov_F(n, m);
  Int f = f_exact(n, m);
  Surd f_minus_lower(f + 4 * m - F.p(), -F.c(), F.k());
  Surd upper_minus_f(F.p() - f, F.c(), F.k());
  return finish({
      make_comparison("F-4m<=f", display6(Surd(F.p() - 4 * m, F.c(), F.k())), display6(f),
                      f_minus_lower, ">=0"),
      make_comparison("f<=F", display6(f), display6(F), upper_minus_f, ">=0"),
  });
}

CheckResult check_bo4(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  Int cube = n * n * n;
  Int co = binom2(n) - m;
  if (n < 2 || m * m <= cube || co * co <= cube) return not_applicable_result();
  Surd F = nikiforov_F(n, m);
  Int d_num = m * (2 * m + (n - 2) * (n - 1));
  return finish({
      make_comparison("F<D", display6(F), display6(d_num, n - 1),
                      Surd(d_num - (n - 1) * F.p(), -(n - 1) * F.c(), F.k()), ">0"),
  });
}

CheckResult check_prop2(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  if (m < 1) return not_applicable_result();  // vacuous at m = 0
  Int C = value_C(n, m);
  // Both sides of (2m)^{3/2} < m*sqrt(8m+1) are positive for m >= 1, so the
  // strict comparison squares to m^2(8m+1) - 8m^3 = m^2 > 0.
  return finish({
      make_comparison("(2m)^1.5<m*sqrt(8m+1)", display6(Surd(0, 1, 8 * m * m * m)),
                      display6(Surd(0, m, 8 * m + 1)),
                      Surd(m * m * (8 * m + 1) - 8 * m * m * m), ">0"),
      make_comparison("m*sqrt(8m+1)-3m<=C", display6(Surd(-3 * m, m, 8 * m + 1)), display6(C),
                      Surd(C + 3 * m, -m, 8 * m + 1), ">=0"),
  });
}

CheckResult check_lemma_pro1(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  Int C = value_C(n, m);
  return finish({
      make_comparison("C<=m*sqrt(8m+1)-m", display6(C), display6(Surd(-m, m, 8 * m + 1)),
                      Surd(-(C + m), m, 8 * m + 1), ">=0"),
  });
}

CheckResult check_lemma_pro3(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  if (4 * m > n * n) return not_applicable_result();
  Int S = value_S(n, m);
  Int w = n * n - 2 * m;
  Surd rhs(4 * m * n - n * n * n, 1, w * w * w);
  return finish({
      make_comparison("S<=(n^2-2m)^1.5+4mn-n^3", display6(S), display6(rhs),
                      Surd(rhs.p() - S, rhs.c(), rhs.k()), ">=0"),
  });
}

CheckResult check_prop_pr0(const Int& r) {
  if (r < 3) return not_applicable_result();
  Int k = (2 * r - 1) * (2 * r - 1) + 8 * (r - 1);
  Int rhs_num = 2 * r * r + 5 * r - 2;
  // Scaled by the positive denominator r+2.
  return finish({
      make_comparison("sqrt((2r-1)^2+8(r-1))>(2r^2+5r-2)/(r+2)", display6(Surd(0, 1, k)),
                      display6(rhs_num, r + 2), Surd(-rhs_num, r + 2, k), ">0"),
  });
}

bool ratio_D_over_f_exceeds(const Int& n, const Int& m, const Int& threshold_num,
                            const Int& threshold_den) {
  if (n <= 1) throw std::domain_error("de Caen bound undefined for n <= 1");
  require_valid_nm(n, m);
  Int f = f_exact(n, m);
  if (f == 0) throw std::domain_error("ratio undefined");
  // D * den > f * num, cross-multiplied through D's denominator n-1.
  return m * (2 * m + (n - 2) * (n - 1)) * threshold_den > f * threshold_num * (n - 1);
}

BoundReport make_bound_report(const Int& n, const Int& m) {
  require_valid_nm(n, m);
  BoundReport rep;
  rep.n = n;
  rep.m = m;
  TriDecomp td = triangular_decompose(m);
  CoDecomp cd = co_decompose(n, m);
  rep.r = td.r;
  rep.q = td.q;
  rep.s = cd.s;
  rep.t = cd.t;
  rep.C = value_C(n, m);
  rep.S = value_S(n, m);
  rep.f = rep.C >= rep.S ? rep.C : rep.S;
  rep.winner = rep.C == rep.S ? 't' : (rep.C > rep.S ? 'C' : 'S');
  rep.d_defined = n >= 2;
  if (rep.d_defined) rep.D = de_caen_D(n, m);
  rep.F = nikiforov_F(n, m);
  rep.f_branch = 4 * m >= n * n ? 1 : 2;
  Theorem1Bounds th1 = theorem1_bounds(n, m);
  rep.th1_lower = th1.lower;
  rep.th1_upper = th1.upper;
  rep.th1_applies = th1.applies;
  rep.bo2_range = n >= 2 && m >= 1 && 2 * m < (n - 1) * (n - 2);
  Int cube = n * n * n;
  Int co = binom2(n) - m;
  rep.bo4_range = n >= 2 && m * m > cube && co * co > cube;
  Int gap = 4 * m - n * (n - 1);
  rep.subtle = boost::multiprecision::abs(gap) < 2 * n;
  return rep;
}

}  // namespace zagreb
