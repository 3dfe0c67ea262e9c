// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Grids and tolerances are pinned here; the library must meet them as-is.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "czonal/verify.hpp"

namespace {

struct Criterion {
  const char* label;
  czonal::verify::CheckResult result;
  double seconds;
};

}  // namespace

int main() {
  using namespace czonal::verify;
  std::vector<Criterion> rows;

  const auto timed = [&rows](const char* label, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r = fn();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    rows.push_back({label, std::move(r), dt.count()});
  };

  timed("decomposition of unity, 0<=p,q<=20, 2<=n<=10, exact",
        [] { return check_unity_sum(20, 2, 10); });

  timed("published-error regression: 149/10 vs 1 at (2,3,3)",
        [] { return check_published_error_regression(); });

  timed("canonical decomposition vs oracle, monomials p,q<=3 and 50 randoms p,q<=4, n=2..4",
        [] { return check_canonical_decomposition(3, 4, {2, 3, 4}, 50); });

  timed("disc polynomial table form vs Jacobi form, p,q<=10, alpha<=6, tol 1e-12",
        [] { return check_disc_form_equivalence(10, 6, 1e-12); });

  timed("differential vs integral coefficients, profiles deg<=6, p,q<=6, n=2..4, tol 1e-10",
        [] { return check_coefficient_agreement(6, 6, {2, 3, 4}, 1e-10); });

  timed("reproducing identity and orthogonality, p,q<=5, n=2..3, tol 1e-10",
        [] { return check_reproducing_identity(5, {2, 3}, 1e-10); });

  timed("plane-wave expansion at r=2, p+q<=30, n=2..3, 50 points, tol 1e-8",
        [] { return check_plane_wave(2.0, 30, {2, 3}, 50, 1e-8); });

  timed("Poisson-Szego: reconstruction r=0.5 L=40 (1e-6), S(1)=1 (1e-12), exact inner sum",
        [] { return check_poisson_szego(0.5, 40, {2, 3}, 1e-6, 10, 1e-12, 5, 6, 5); });

  timed("Chu-Vandermonde (k,j<=12, a<=8) and Pfaff-Saalschutz (n<=8) identities, exact",
        [] { return check_hypergeometric_identities(12, 8, 8); });

  timed("zonal summation formula: Re-dependence l<=8 n=2..3 (1e-10), exact at w=1",
        [] { return check_summation_formula(8, {2, 3}, 50, 1e-10); });

  int failures = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.result.pass) ++failures;
    std::printf("[%2zu] %-4s %s\n      %s; max_err=%.3g; %.2fs\n", i + 1,
                row.result.pass ? "PASS" : "FAIL", row.label, row.result.detail.c_str(),
                row.result.max_err, row.seconds);
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(rows.size()) - failures,
              rows.size());
  return failures == 0 ? 0 : 1;
}
