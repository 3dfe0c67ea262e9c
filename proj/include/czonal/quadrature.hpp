#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "json.hpp"

namespace czonal::quadrature {

struct RadialNode {
  double s;  // node in s = |w|^2
  double u;  // weight for \int_0^1 g(s) (1-s)^alpha ds
};

// Quadrature for the normalized disc measure
//   (alpha+1)/pi * \int_D phi(w) (1-|w|^2)^alpha dlambda(w),
// realized as a Gauss rule in s = |w|^2 against the weight (1-s)^alpha tensored
// with equispaced angles. Radial part exact for s-polynomials of degree
// <= 2*radial_points - 1; angles exact for trigonometric degree < angular_points.
struct DiscRule {
  int alpha = 0;
  std::vector<RadialNode> radial;
  int angular_points = 0;

  nlohmann::json to_json() const;
  static DiscRule from_json(const nlohmann::json& j);
};

DiscRule build_disc_rule(int alpha, int radial_points, int angular_points);

using Profile = std::function<std::complex<double>(std::complex<double>)>;

// Weighted node sum over the rule in fixed order, compensated summation.
std::complex<double> disc_integrate(const Profile& phi, const DiscRule& rule);

// d_(p,q)(phi) as a disc integral: the profile is paired against the kernel
// profile in the (xi|eta) variable, which is W_(q,p)(w) = conj(W_(p,q)(w));
// for real profiles the two orientations are the (p,q) <-> (q,p) swap.
// Requires rule.alpha == n-2.
std::complex<double> integral_coefficient(const Profile& phi, int p, int q, int n,
                                          const DiscRule& rule);

// Nested rule on the unit sphere in complex n-space, built by recursive
// application of the measure factorization
//   \int_S f dsigma = (n-1)/pi \int_D (1-|w|^2)^(n-2) dlambda(w)
//                      \int_(S^(2n-3)) f(w eta + sqrt(1-|w|^2) rho) dsigma(rho)
// down to uniform sampling of the base circle. Nodes are materialized with
// their weights; integration sums them in fixed order (sequential,
// compensated).
struct SphereRule {
  struct Node {
    std::vector<std::complex<double>> xi;
    double weight;
  };

  int n = 0;
  std::vector<DiscRule> levels;  // disc rule per recursion level, dims n..2
  int circle_points = 0;
  std::vector<Node> nodes;
};

SphereRule build_sphere_rule(int n, int radial_points, int angular_points);

using SphereFunction = std::function<std::complex<double>(std::span<const std::complex<double>>)>;

std::complex<double> sphere_integrate(const SphereFunction& f, int n, const SphereRule& rule);

}  // namespace czonal::quadrature
