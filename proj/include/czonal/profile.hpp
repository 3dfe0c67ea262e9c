#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

namespace czonal::expansion {

// Geometric bound on the Taylor coefficients: |T(j,k)|/(j!k!) <= C rho^(j+k)
// with rho < 1. This is the absolute-convergence certificate on the unit
// circle that the expansion theorem's hypothesis requires; coefficients are
// refused without one unless the profile is exactly polynomial.
struct TailCertificate {
  double C = 0.0;
  double rho = 0.0;
};

// Taylor data of a profile on the disc: T(j,k) = d^j dbar^k phi(0). Backed by
// either a finite table of derivatives (exact for polynomial profiles,
// truncated otherwise) or a closed-form generator of Taylor coefficients
// tau(j,k) = T(j,k)/(j!k!). Generators produce tau rather than T because the
// derivatives themselves overflow binary64 near order 170 while the series
// terms they feed stay small. An evaluator may be attached for quadrature
// cross-checks.
class ProfileTaylor {
 public:
  using Generator = std::function<std::complex<double>(int, int)>;
  using Evaluator = std::function<std::complex<double>(std::complex<double>)>;

  static ProfileTaylor from_table(std::map<std::pair<int, int>, std::complex<double>> table,
                                  bool polynomial = true);
  // gen(j,k) must return tau(j,k) = d^j dbar^k phi(0) / (j! k!).
  static ProfileTaylor from_taylor_generator(Generator gen, TailCertificate tail);

  std::complex<double> derivative(int j, int k) const;
  std::complex<double> taylor_coefficient(int j, int k) const;

  bool has_table() const { return table_.has_value(); }
  // Largest derivative order stored in a finite table (-1 when generator-backed).
  int max_order() const { return max_order_; }
  // True when derivatives beyond the table are exactly zero.
  bool exact_polynomial() const { return table_.has_value() && polynomial_; }
  const std::optional<TailCertificate>& tail() const { return tail_; }

  const Evaluator& evaluator() const { return evaluator_; }
  ProfileTaylor& with_evaluator(Evaluator e) {
    evaluator_ = std::move(e);
    return *this;
  }

  nlohmann::json to_json() const;
  static ProfileTaylor from_json(const nlohmann::json& j);

 private:
  ProfileTaylor() = default;

  std::optional<std::map<std::pair<int, int>, std::complex<double>>> table_;
  bool polynomial_ = false;
  int max_order_ = -1;
  Generator generator_;
  std::optional<TailCertificate> tail_;
  Evaluator evaluator_;
};

// Named builtin profiles, each with closed-form derivatives (and an
// evaluator): "const", "const(c)", "monomial(a,b)", "plane-wave(r)",
// "poisson-szego(r)", "exp-re". The Poisson-Szego profile depends on n.
ProfileTaylor make_builtin_profile(const std::string& spec, int n);

}  // namespace czonal::expansion
