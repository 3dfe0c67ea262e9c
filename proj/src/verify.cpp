#include "czonal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "czonal/errors.hpp"
#include "czonal/expansion.hpp"
#include "czonal/polyalg.hpp"
#include "czonal/quadrature.hpp"
#include "czonal/specfun.hpp"
#include "czonal/zonal.hpp"

namespace czonal::verify {

namespace {

using polyalg::BiPoly;
using polyalg::Monomial;

constexpr double kPi = 3.14159265358979323846;

std::string cases_detail(long cases) {
  std::ostringstream os;
  os << cases << " cases";
  return os.str();
}

// Deterministic 100-point grid in the closed disc (10 radii up to the
// boundary, 10 angles with an irrational offset).
std::vector<std::complex<double>> disc_grid_100() {
  std::vector<std::complex<double>> grid;
  for (int i = 1; i <= 10; ++i) {
    const double r = i / 10.0;
    for (int j = 0; j < 10; ++j) {
      const double theta = 2.0 * kPi * (j + 0.37) / 10.0;
      grid.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
  }
  return grid;
}

// Golden-angle spiral of `count` points reaching the boundary.
std::vector<std::complex<double>> disc_spiral(int count) {
  std::vector<std::complex<double>> grid;
  for (int k = 0; k < count; ++k) {
    const double r = static_cast<double>(k) / (count - 1);
    const double theta = 2.39996322972865332 * k;
    grid.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return grid;
}

// All exponent vectors of length n with the given sum.
void compositions_rec(int n, int total, std::vector<int>& cur, int pos,
                      std::vector<std::vector<int>>& out) {
  if (pos == n - 1) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur[pos] = v;
    compositions_rec(n, total - v, cur, pos + 1, out);
  }
}

std::vector<std::vector<int>> compositions(int n, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  compositions_rec(n, total, cur, 0, out);
  return out;
}

std::vector<int> random_exponent(std::mt19937_64& rng, int n, int total) {
  std::vector<int> e(n, 0);
  for (int i = 0; i < total; ++i) ++e[rng() % n];
  return e;
}

CRational random_coefficient(std::mt19937_64& rng) {
  const auto draw = [&rng]() {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = 1 + static_cast<long>(rng() % 4);
    return Rational(num, den);
  };
  return {draw(), draw()};
}

BiPoly random_bihomogeneous(std::mt19937_64& rng, int n, int p, int q) {
  BiPoly P(n);
  const int terms = 4 + static_cast<int>(rng() % 9);
  for (int t = 0; t < terms; ++t) {
    auto a = random_exponent(rng, n, p);
    // Half the draws reuse a for b when p == q: exercises the large
    // zero-difference block of the oracle's linear system.
    auto b = (p == q && (rng() % 2 == 0)) ? a : random_exponent(rng, n, q);
    P.add_term(Monomial{std::move(a), std::move(b)}, random_coefficient(rng));
  }
  if (P.is_zero()) {
    std::vector<int> a(n, 0), b(n, 0);
    a[0] = p;
    b[0] = q;
    P.add_term(Monomial{std::move(a), std::move(b)}, CRational(Rational(1)));
  }
  return P;
}

// Exact checks on one decomposition: reconstruction, harmonicity, component
// bidegrees, and agreement with the oracle.
bool decomposition_checks(const BiPoly& P, std::string& why) {
  const auto canonical = polyalg::canonical_decompose(P);
  const auto oracle = polyalg::brute_force_decompose(P);
  if (canonical != oracle) {
    why = "canonical decomposition disagrees with the linear-solver oracle";
    return false;
  }
  BiPoly recon(P.dimension());
  for (std::size_t k = 0; k < canonical.components.size(); ++k) {
    const auto& h = canonical.components[k];
    if (!polyalg::complex_laplacian(h).is_zero()) {
      why = "component is not harmonic";
      return false;
    }
    if (!h.is_zero()) {
      const auto deg = h.bidegree();
      if (!deg || deg->first != canonical.p - static_cast<int>(k) ||
          deg->second != canonical.q - static_cast<int>(k)) {
        why = "component has wrong bidegree";
        return false;
      }
    }
    BiPoly lifted = h;
    for (std::size_t i = 0; i < k; ++i) lifted = polyalg::rsq_multiply(lifted);
    recon += lifted;
  }
  if (!(recon == P)) {
    why = "reconstruction does not reproduce the input";
    return false;
  }
  return true;
}

}  // namespace

CheckResult check_unity_sum(int max_bidegree, int n_min, int n_max) {
  CheckResult res{"decomposition_of_unity", true, 0, 0.0, ""};
  for (int n = n_min; n <= n_max; ++n) {
    for (int p = 0; p <= max_bidegree; ++p) {
      for (int q = 0; q <= max_bidegree; ++q) {
        Rational sum = 0;
        for (int k = 0; k <= std::min(p, q); ++k)
          sum += zonal::gamma_coefficient(p, q, k, n);
        ++res.cases;
        if (sum != 1) {
          res.pass = false;
          std::ostringstream os;
          os << "sum != 1 at p=" << p << " q=" << q << " n=" << n;
          res.detail = os.str();
          return res;
        }
      }
    }
  }
  res.detail = cases_detail(res.cases) + ", exact";
  return res;
}

CheckResult check_published_error_regression() {
  CheckResult res{"published_error_regression", true, 4, 0.0, ""};
  const Rational expected(149, 10);
  const Rational wrong = zonal::regression::erroneous_unity_sum(2, 3, 3);
  Rational correct = 0;
  for (int k = 0; k <= 2; ++k) correct += zonal::gamma_coefficient(2, 3, k, 3);
  if (wrong != expected) {
    res.pass = false;
    res.detail = "erroneous sum != 149/10: got " + to_string(wrong);
  } else if (wrong == 1) {
    res.pass = false;
    res.detail = "erroneous sum unexpectedly equals 1";
  } else if (zonal::regression::erroneous_unity_term(2, 3, 3, 0) != 12) {
    res.pass = false;
    res.detail = "k=0 term of the erroneous sum != 12";
  } else if (correct != 1) {
    res.pass = false;
    res.detail = "correct gamma sum at (2,3,3) != 1";
  } else {
    res.detail = "14.9 != 1 reproduced exactly; correct sum is 1";
  }
  return res;
}

CheckResult check_canonical_decomposition(int monomial_max, int random_max,
                                          const std::vector<int>& ns,
                                          int randoms_per_bidegree, std::uint64_t seed) {
  CheckResult res{"canonical_decomposition", true, 0, 0.0, ""};
  std::string why;
  for (int n : ns) {
    for (int p = 0; p <= monomial_max; ++p) {
      for (int q = 0; q <= monomial_max; ++q) {
        for (const auto& a : compositions(n, p)) {
          for (const auto& b : compositions(n, q)) {
            const BiPoly P = BiPoly::monomial(n, a, b, CRational(Rational(1)));
            ++res.cases;
            if (!decomposition_checks(P, why)) {
              res.pass = false;
              res.detail = why;
              return res;
            }
          }
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int n : ns) {
    for (int p = 0; p <= random_max; ++p) {
      for (int q = 0; q <= random_max; ++q) {
        for (int t = 0; t < randoms_per_bidegree; ++t) {
          const BiPoly P = random_bihomogeneous(rng, n, p, q);
          ++res.cases;
          if (!decomposition_checks(P, why)) {
            res.pass = false;
            res.detail = why;
            return res;
          }
        }
      }
    }
  }
  res.detail = cases_detail(res.cases) + ", exact";
  return res;
}

CheckResult check_disc_form_equivalence(int max_bidegree, int max_alpha, double tol) {
  CheckResult res{"disc_poly_form_equivalence", true, 0, 0.0, ""};
  const auto grid = disc_grid_100();
  for (int alpha = 0; alpha <= max_alpha; ++alpha) {
    for (int p = 0; p <= max_bidegree; ++p) {
      for (int q = 0; q <= max_bidegree; ++q) {
        const auto& table = zonal::disc_poly_cached(p, q, alpha);
        for (const auto w : grid) {
          const auto a = zonal::disc_poly_eval(table, w);
          const auto b = zonal::disc_poly_via_jacobi(p, q, alpha, w);
          const double err = std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
          res.max_err = std::max(res.max_err, err);
          ++res.cases;
        }
      }
    }
  }
  res.pass = res.max_err <= tol;
  res.detail = cases_detail(res.cases);
  return res;
}

CheckResult check_coefficient_agreement(int profile_degree, int max_bidegree,
                                        const std::vector<int>& ns, double tol) {
  CheckResult res{"coefficient_agreement", true, 0, 0.0, ""};
  for (int n : ns) {
    const auto rule = quadrature::build_disc_rule(
        n - 2, profile_degree + max_bidegree + 2, 2 * (profile_degree + 2 * max_bidegree) + 2);
    for (int a = 0; a <= profile_degree; ++a) {
      for (int b = 0; a + b <= profile_degree; ++b) {
        std::ostringstream spec;
        spec << "monomial(" << a << "," << b << ")";
        const auto profile = expansion::make_builtin_profile(spec.str(), n);
        for (int p = 0; p <= max_bidegree; ++p) {
          for (int q = 0; q <= max_bidegree; ++q) {
            const auto differential = expansion::expansion_coefficient(profile, p, q, n);
            const auto integral =
                quadrature::integral_coefficient(profile.evaluator(), p, q, n, rule);
            res.max_err = std::max(res.max_err, std::abs(differential - integral));
            ++res.cases;
          }
        }
      }
    }
  }
  res.pass = res.max_err <= tol;
  res.detail = cases_detail(res.cases);
  return res;
}

CheckResult check_reproducing_identity(int max_bidegree, const std::vector<int>& ns,
                                       double tol) {
  CheckResult res{"reproducing_identity", true, 0, 0.0, ""};
  for (int n : ns) {
    const auto rule =
        quadrature::build_disc_rule(n - 2, 2 * max_bidegree + 4, 4 * max_bidegree + 4);
    std::vector<std::pair<int, int>> degrees;
    for (int p = 0; p <= max_bidegree; ++p)
      for (int q = 0; q <= max_bidegree; ++q) degrees.push_back({p, q});
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      const auto& ti = zonal::disc_poly_cached(degrees[i].first, degrees[i].second, n - 2);
      for (std::size_t j = i; j < degrees.size(); ++j) {
        const auto& tj = zonal::disc_poly_cached(degrees[j].first, degrees[j].second, n - 2);
        const auto inner = quadrature::disc_integrate(
            [&](std::complex<double> w) {
              return zonal::disc_poly_eval(ti, w) * std::conj(zonal::disc_poly_eval(tj, w));
            },
            rule);
        ++res.cases;
        if (i == j) {
          const double dim =
              to_double(zonal::dim_h(degrees[i].first, degrees[i].second, n));
          res.max_err = std::max(res.max_err, std::abs(dim * inner - 1.0));
        } else {
          res.max_err = std::max(res.max_err, std::abs(inner));
        }
      }
    }
  }
  res.pass = res.max_err <= tol;
  res.detail = cases_detail(res.cases);
  return res;
}

CheckResult check_plane_wave(double r, int l_max, const std::vector<int>& ns, int grid_points,
                             double tol) {
  CheckResult res{"plane_wave_expansion", true, 0, 0.0, ""};
  const auto grid = disc_spiral(grid_points);
  for (int n : ns) {
    const auto table = expansion::plane_wave_table(r, n, l_max);
    for (int p = 0; p <= l_max; ++p) {
      for (int q = 0; p + q <= l_max; ++q) {
        ++res.cases;
        if (expansion::plane_wave_coefficient(r, p, q, n) !=
            expansion::plane_wave_coefficient(r, q, p, n)) {
          res.pass = false;
          res.detail = "coefficients not symmetric under (p,q) swap";
          return res;
        }
      }
    }
    for (const auto w : grid) {
      const auto lhs = std::exp(std::complex<double>(0.0, r * w.real()));
      const auto rhs = expansion::evaluate_expansion(table, w);
      res.max_err = std::max(res.max_err, std::abs(lhs - rhs));
      ++res.cases;
    }
  }
  res.pass = res.max_err <= tol;
  res.detail = cases_detail(res.cases);
  return res;
}

CheckResult check_poisson_szego(double r, int l_max, const std::vector<int>& ns,
                                double tol_recon, int boundary_max_bidegree,
                                double tol_boundary, int sum_max_bidegree, int sum_max_k,
                                int sum_max_n) {
  CheckResult res{"poisson_szego_expansion", true, 0, 0.0, ""};
  using specfun::binomial;
  using specfun::factorial;

  double recon_err = 0.0;
  for (int n : ns) {
    for (const auto w : disc_spiral(20)) {
      const double closed = expansion::poisson_szego_closed_form(r, w, n);
      const double recon = expansion::poisson_szego_reconstruct(r, w, n, l_max);
      recon_err = std::max(recon_err, std::abs(closed - recon));
      ++res.cases;
    }
  }

  double boundary_err = 0.0;
  for (int n : ns) {
    for (int p = 0; p <= boundary_max_bidegree; ++p) {
      for (int q = 0; q <= boundary_max_bidegree; ++q) {
        boundary_err =
            std::max(boundary_err, std::abs(expansion::poisson_szego_coefficient(1.0, p, q, n) - 1.0));
        ++res.cases;
      }
    }
  }

  // The Pfaff-Saalschutz step of the kernel proof, exact in rationals:
  // sum_j (-1)^j C(n,j) (n-1+p+k-j)!(n-1+q+k-j)! / ((n-1+p+q+k-j)!(k-j)!)
  //   = (p+n-1)!(q+n-1)!(p+k-1)!(q+k-1)! / (k!(p-1)!(q-1)!(p+q+n+k-1)!).
  bool inner_ok = true;
  for (int n = 2; n <= sum_max_n && inner_ok; ++n) {
    for (int p = 1; p <= sum_max_bidegree && inner_ok; ++p) {
      for (int q = 1; q <= sum_max_bidegree && inner_ok; ++q) {
        for (int k = 0; k <= sum_max_k && inner_ok; ++k) {
          Rational lhs = 0;
          for (int j = 0; j <= std::min(n, k); ++j) {
            const Rational term = Rational(binomial(n, j)) *
                                  factorial(n - 1 + p + k - j) * factorial(n - 1 + q + k - j) /
                                  (factorial(n - 1 + p + q + k - j) * factorial(k - j));
            lhs += (j % 2 == 0) ? term : -term;
          }
          const Rational rhs =
              Rational(factorial(p + n - 1) * factorial(q + n - 1) * factorial(p + k - 1) *
                       factorial(q + k - 1)) /
              Rational(factorial(k) * factorial(p - 1) * factorial(q - 1) *
                       factorial(p + q + n + k - 1));
          ++res.cases;
          if (lhs != rhs) inner_ok = false;
        }
      }
    }
  }

  res.pass = recon_err <= tol_recon && boundary_err <= tol_boundary && inner_ok;
  res.max_err = std::max(recon_err, boundary_err);
  std::ostringstream os;
  os << cases_detail(res.cases) << "; recon err " << recon_err << ", boundary err "
     << boundary_err << (inner_ok ? ", inner sum exact" : ", INNER SUM MISMATCH");
  res.detail = os.str();
  return res;
}

CheckResult check_hypergeometric_identities(int cv_max_index, int cv_max_alpha, int ps_max_n) {
  CheckResult res{"hypergeometric_identities", true, 0, 0.0, ""};
  using specfun::pochhammer;

  for (int k = 0; k <= cv_max_index; ++k) {
    for (int j = 0; j <= cv_max_index; ++j) {
      for (int alpha = 0; alpha <= cv_max_alpha; ++alpha) {
        const Rational lhs = specfun::hyp2f1_terminating(
            -k, Rational(-j), Rational(-alpha - k - j), Rational(1));
        const Rational rhs = pochhammer(Rational(alpha + 1), k) *
                             pochhammer(Rational(alpha + 1), j) /
                             pochhammer(Rational(alpha + 1), k + j);
        ++res.cases;
        if (lhs != rhs) {
          res.pass = false;
          res.detail = "Chu-Vandermonde mismatch";
          return res;
        }
      }
    }
  }

  const std::vector<Rational> ab_grid{Rational(-6), Rational(-5), Rational(-4), Rational(-3),
                                      Rational(-2), Rational(-1), Rational(1, 2), Rational(1),
                                      Rational(3, 2)};
  const std::vector<Rational> c_grid{Rational(1, 2), Rational(3, 2), Rational(5, 2),
                                     Rational(2),    Rational(3)};
  long skipped = 0;
  for (int n = 0; n <= ps_max_n; ++n) {
    for (const auto& a : ab_grid) {
      for (const auto& b : ab_grid) {
        for (const auto& c : c_grid) {
          try {
            ++res.cases;
            if (!specfun::pfaff_saalschutz_check(n, a, b, c)) {
              res.pass = false;
              res.detail = "Pfaff-Saalschutz mismatch";
              return res;
            }
          } catch (const Error&) {
            --res.cases;
            ++skipped;  // parameter pole; excluded from the grid
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << cases_detail(res.cases) << ", exact (" << skipped << " pole points skipped)";
  res.detail = os.str();
  return res;
}

CheckResult check_summation_formula(int l_max, const std::vector<int>& ns, int mirrored_pairs,
                                    double tol, std::uint64_t seed) {
  CheckResult res{"zonal_summation_formula", true, 0, 0.0, ""};
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  for (int n : ns) {
    for (int l = 0; l <= l_max; ++l) {
      for (int t = 0; t < mirrored_pairs; ++t) {
        const double x = uniform(-0.95, 0.95);
        const double ymax = std::sqrt(1.0 - x * x);
        const std::complex<double> w1{x, uniform(-ymax, ymax)};
        const std::complex<double> w2{x, uniform(-ymax, ymax)};
        const double v1 = zonal::real_zonal_sum(l, n, w1);
        const double v2 = zonal::real_zonal_sum(l, n, w2);
        res.max_err = std::max(res.max_err, std::abs(v1 - v2));
        ++res.cases;
      }
      // Exact boundary value: every disc table sums to 1 at w = 1, so the
      // level sum equals sum of dimensions exactly.
      Rational level = 0;
      BigInt dims = 0;
      for (int p = 0; p <= l; ++p) {
        Rational w1_value = 0;
        for (const auto& c : zonal::disc_poly_cached(p, l - p, n - 2).c) w1_value += c;
        level += Rational(zonal::dim_h(p, l - p, n)) * w1_value;
        dims += zonal::dim_h(p, l - p, n);
      }
      ++res.cases;
      if (level != Rational(dims)) {
        res.pass = false;
        res.detail = "level sum at w=1 is not the dimension sum";
        return res;
      }
    }
  }
  res.pass = res.max_err <= tol;
  res.detail = cases_detail(res.cases);
  return res;
}

std::vector<CheckResult> run_identity_suite(const Options& opt) {
  std::vector<CheckResult> out;
  const std::vector<int> ns{opt.n};
  out.push_back(check_unity_sum(opt.max_bidegree, opt.n, opt.n));
  out.push_back(check_published_error_regression());
  out.push_back(check_canonical_decomposition(std::min(3, opt.max_bidegree),
                                              std::min(4, opt.max_bidegree), ns, 10, opt.seed));
  out.push_back(check_disc_form_equivalence(opt.max_bidegree, 6));
  out.push_back(check_coefficient_agreement(4, std::min(6, opt.max_bidegree), ns));
  out.push_back(check_reproducing_identity(std::min(5, opt.max_bidegree), ns));
  out.push_back(check_plane_wave(2.0, std::max(10, std::min(30, 3 * opt.max_bidegree)), ns, 20));
  out.push_back(check_poisson_szego(0.5, 40, ns));
  out.push_back(check_hypergeometric_identities());
  out.push_back(check_summation_formula(std::min(8, opt.max_bidegree), ns, 20));
  return out;
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  long failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    checks.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"cases", r.cases},
                      {"max_err", r.max_err},
                      {"detail", r.detail}});
  }
  return {{"suite", "identity"}, {"failures", failures}, {"checks", std::move(checks)}};
}

}  // namespace czonal::verify
