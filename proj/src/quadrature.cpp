#include "czonal/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "czonal/errors.hpp"
#include "czonal/specfun.hpp"
#include "czonal/zonal.hpp"

namespace czonal::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;

// One root of P^(alpha,0)_deg inside (lo, hi): Newton on the Jacobi recurrence
// with bisection whenever a step leaves the bracket. 1e-15 tolerance,
// 100-iteration cap.
double root_in_bracket(int alpha, int deg, double lo, double hi) {
  double flo = specfun::jacobi_p(alpha, 0.0, deg, lo);
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double f = specfun::jacobi_p(alpha, 0.0, deg, t);
    if ((f > 0) == (flo > 0))
      lo = t;
    else
      hi = t;
    const double df = specfun::jacobi_p_derivative(alpha, 0.0, deg, t);
    double next = t - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t))) return next;
    t = next;
  }
  return t;
}

// All roots of P^(alpha,0)_N, ascending, by degree-by-degree interlacing:
// the roots of P_(k-1) together with the interval ends bracket those of P_k.
std::vector<double> jacobi_roots(int alpha, int N) {
  std::vector<double> roots{1.0 - 2.0 * (alpha + 1.0) / (alpha + 2.0)};  // P_1 root
  for (int deg = 2; deg <= N; ++deg) {
    std::vector<double> next;
    next.reserve(deg);
    double lo = -1.0;
    for (double r : roots) {
      next.push_back(root_in_bracket(alpha, deg, lo, r));
      lo = r;
    }
    next.push_back(root_in_bracket(alpha, deg, lo, 1.0));
    roots = std::move(next);
  }
  return roots;
}

}  // namespace

DiscRule build_disc_rule(int alpha, int radial_points, int angular_points) {
  if (alpha < 0) throw Error("build_disc_rule: alpha must be non-negative");
  if (radial_points < 1 || angular_points < 1)
    throw Error("build_disc_rule: node counts must be positive");

  DiscRule rule{alpha, {}, angular_points};
  rule.radial.reserve(radial_points);
  // Gauss-Jacobi for weight (1-t)^alpha on [-1,1], mapped by s = (1+t)/2 onto
  // \int_0^1 g(s)(1-s)^alpha ds; the (a,0) weight formula collapses to
  // u_i = 1 / ((1-t_i^2) P'_N(t_i)^2) after absorbing the 2^(alpha+1) map factor.
  for (double t : jacobi_roots(alpha, radial_points)) {
    const double dp = specfun::jacobi_p_derivative(alpha, 0.0, radial_points, t);
    rule.radial.push_back({0.5 * (1.0 + t), 1.0 / ((1.0 - t * t) * dp * dp)});
  }

  // Pin the zeroth moment: analytically sum u_i = 1/(alpha+1), and the rule
  // contract is that the constant 1 integrates to 1.
  specfun::NeumaierSum total;
  for (const auto& rn : rule.radial) total.add(rn.u);
  const double correction = 1.0 / ((alpha + 1.0) * total.value());
  if (std::abs(correction - 1.0) > 1e-12)
    throw Error("build_disc_rule: weights failed the normalization check");
  for (auto& rn : rule.radial) rn.u *= correction;
  return rule;
}

std::complex<double> disc_integrate(const Profile& phi, const DiscRule& rule) {
  const int M = rule.angular_points;
  specfun::NeumaierComplexSum sum;
  for (const auto& rn : rule.radial) {
    const double r = std::sqrt(rn.s);
    specfun::NeumaierComplexSum ring;
    for (int m = 0; m < M; ++m) {
      const double theta = 2.0 * kPi * m / M;
      ring.add(phi({r * std::cos(theta), r * std::sin(theta)}));
    }
    sum.add(ring.value() * (rn.u / M));
  }
  return sum.value() * (rule.alpha + 1.0);
}

std::complex<double> integral_coefficient(const Profile& phi, int p, int q, int n,
                                          const DiscRule& rule) {
  if (rule.alpha != n - 2) throw Error("integral_coefficient: rule alpha must equal n-2");
  const auto& table = zonal::disc_poly_cached(q, p, n - 2);
  return disc_integrate(
      [&](std::complex<double> w) { return phi(w) * zonal::disc_poly_eval(table, w); }, rule);
}

nlohmann::json DiscRule::to_json() const {
  nlohmann::json radial_json = nlohmann::json::array();
  for (const auto& rn : radial) radial_json.push_back({{"s", rn.s}, {"u", rn.u}});
  return {{"alpha", alpha}, {"radial", std::move(radial_json)}, {"angular_points", angular_points}};
}

DiscRule DiscRule::from_json(const nlohmann::json& j) {
  DiscRule rule;
  rule.alpha = j.at("alpha").get<int>();
  rule.angular_points = j.at("angular_points").get<int>();
  for (const auto& rn : j.at("radial"))
    rule.radial.push_back({rn.at("s").get<double>(), rn.at("u").get<double>()});
  return rule;
}

SphereRule build_sphere_rule(int n, int radial_points, int angular_points) {
  if (n < 1) throw DimensionError("build_sphere_rule: n must be positive");
  SphereRule rule;
  rule.n = n;
  rule.circle_points = angular_points;

  // Base circle: uniform average over angular_points nodes.
  std::vector<SphereRule::Node> nodes;
  for (int m = 0; m < angular_points; ++m) {
    const double theta = 2.0 * kPi * m / angular_points;
    nodes.push_back({{std::complex<double>(std::cos(theta), std::sin(theta))},
                     1.0 / angular_points});
  }

  // Wrap one disc level per dimension 2..n: xi = (w, sqrt(1-|w|^2) rho).
  for (int dim = 2; dim <= n; ++dim) {
    const DiscRule disc = build_disc_rule(dim - 2, radial_points, angular_points);
    std::vector<SphereRule::Node> next;
    next.reserve(disc.radial.size() * angular_points * nodes.size());
    for (const auto& rn : disc.radial) {
      const double r = std::sqrt(rn.s);
      const double shrink = std::sqrt(std::max(0.0, 1.0 - rn.s));
      for (int m = 0; m < angular_points; ++m) {
        const double theta = 2.0 * kPi * m / angular_points;
        const std::complex<double> w{r * std::cos(theta), r * std::sin(theta)};
        const double factor = (dim - 1.0) * rn.u / angular_points;
        for (const auto& sub : nodes) {
          SphereRule::Node node;
          node.xi.reserve(dim);
          node.xi.push_back(w);
          for (const auto& z : sub.xi) node.xi.push_back(shrink * z);
          node.weight = factor * sub.weight;
          next.push_back(std::move(node));
        }
      }
    }
    rule.levels.push_back(disc);
    nodes = std::move(next);
  }

  rule.nodes = std::move(nodes);
  return rule;
}

std::complex<double> sphere_integrate(const SphereFunction& f, int n, const SphereRule& rule) {
  if (n != rule.n) throw Error("sphere_integrate: rule dimension mismatch");
  specfun::NeumaierComplexSum sum;
  for (const auto& node : rule.nodes) sum.add(node.weight * f(node.xi));
  return sum.value();
}

}  // namespace czonal::quadrature
