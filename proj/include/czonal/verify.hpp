#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace czonal::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  long cases = 0;
  double max_err = 0.0;  // 0 for exact-arithmetic checks
  std::string detail;
};

// Each check runs one identity family over an explicit grid. Defaults are the
// pinned full-suite grids; the CLI scales them down via Options.
CheckResult check_unity_sum(int max_bidegree = 20, int n_min = 2, int n_max = 10);
CheckResult check_published_error_regression();
CheckResult check_canonical_decomposition(int monomial_max = 3, int random_max = 4,
                                          const std::vector<int>& ns = {2, 3, 4},
                                          int randoms_per_bidegree = 50,
                                          std::uint64_t seed = 20100615);
CheckResult check_disc_form_equivalence(int max_bidegree = 10, int max_alpha = 6,
                                        double tol = 1e-12);
CheckResult check_coefficient_agreement(int profile_degree = 6, int max_bidegree = 6,
                                        const std::vector<int>& ns = {2, 3, 4},
                                        double tol = 1e-10);
CheckResult check_reproducing_identity(int max_bidegree = 5, const std::vector<int>& ns = {2, 3},
                                       double tol = 1e-10);
CheckResult check_plane_wave(double r = 2.0, int l_max = 30, const std::vector<int>& ns = {2, 3},
                             int grid_points = 50, double tol = 1e-8);
CheckResult check_poisson_szego(double r = 0.5, int l_max = 40,
                                const std::vector<int>& ns = {2, 3}, double tol_recon = 1e-6,
                                int boundary_max_bidegree = 10, double tol_boundary = 1e-12,
                                int sum_max_bidegree = 5, int sum_max_k = 6, int sum_max_n = 5);
CheckResult check_hypergeometric_identities(int cv_max_index = 12, int cv_max_alpha = 8,
                                            int ps_max_n = 8);
CheckResult check_summation_formula(int l_max = 8, const std::vector<int>& ns = {2, 3},
                                    int mirrored_pairs = 50, double tol = 1e-10,
                                    std::uint64_t seed = 271828);

struct Options {
  int n = 3;
  int max_bidegree = 10;
  std::uint64_t seed = 20100615;
};

// The scaled-down suite behind the `verify` CLI command.
std::vector<CheckResult> run_identity_suite(const Options& opt);

nlohmann::json report_json(const std::vector<CheckResult>& results);

}  // namespace czonal::verify
