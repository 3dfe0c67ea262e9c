#include <cmath>
#include <complex>

#include "doctest.h"

#include "czonal/errors.hpp"
#include "czonal/polyalg.hpp"
#include "czonal/quadrature.hpp"
#include "czonal/specfun.hpp"
#include "czonal/zonal.hpp"

using namespace czonal;
using namespace czonal::quadrature;

namespace {

std::complex<double> monomial_value(std::complex<double> w, int a, int b) {
  std::complex<double> v = 1.0;
  for (int e = 0; e < a; ++e) v *= w;
  for (int e = 0; e < b; ++e) v *= std::conj(w);
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("disc rule construction") {
  CHECK_THROWS_AS(build_disc_rule(-1, 4, 8), Error);
  CHECK_THROWS_AS(build_disc_rule(0, 0, 8), Error);
  CHECK_THROWS_AS(build_disc_rule(0, 4, 0), Error);
  for (int alpha = 0; alpha <= 8; ++alpha) {
    const auto rule = build_disc_rule(alpha, 12, 16);
    double total = 0.0;
    for (const auto& rn : rule.radial) total += rn.u;
    CHECK(std::abs((alpha + 1.0) * total - 1.0) < 1e-14);
    const auto one = disc_integrate([](std::complex<double>) { return 1.0; }, rule);
    CHECK(std::abs(one - 1.0) < 1e-14);
  }
}

TEST_CASE("polynomial exactness against Beta-function rationals") {
  // (alpha+1)/pi * int w^a conj(w)^b (1-|w|^2)^alpha dlambda
  //   = delta_(ab) a! (alpha+1)! / (a+alpha+1)!
  using specfun::factorial;
  for (int n = 2; n <= 4; ++n) {
    const int alpha = n - 2;
    const auto rule = build_disc_rule(alpha, 14, 26);
    for (int a = 0; a <= 12; ++a) {
      for (int b = 0; b <= 12; ++b) {
        const auto got =
            disc_integrate([&](std::complex<double> w) { return monomial_value(w, a, b); }, rule);
        double expected = 0.0;
        if (a == b)
          expected = to_double(Rational(factorial(a) * factorial(alpha + 1)) /
                               Rational(factorial(a + alpha + 1)));
        CHECK(std::abs(got - expected) < 1e-13);
      }
    }
  }
}

TEST_CASE("disc integrals of disc polynomials") {
  for (int n = 2; n <= 3; ++n) {
    const auto rule = build_disc_rule(n - 2, 14, 24);
    // orthogonality to constants
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) {
        if (p == 0 && q == 0) continue;
        const auto& t = zonal::disc_poly_cached(p, q, n - 2);
        const auto v = disc_integrate(
            [&](std::complex<double> w) { return zonal::disc_poly_eval(t, w); }, rule);
        CHECK(std::abs(v) < 1e-12);
      }
    // squared norm 1/dim
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) {
        const auto& t = zonal::disc_poly_cached(p, q, n - 2);
        const auto v = disc_integrate(
            [&](std::complex<double> w) {
              return std::norm(zonal::disc_poly_eval(t, w));
            },
            rule);
        CHECK(std::abs(v - 1.0 / to_double(zonal::dim_h(p, q, n))) < 1e-12);
      }
  }
}

TEST_CASE("integral coefficients of simple profiles") {
  for (int n = 2; n <= 4; ++n) {
    const auto rule = build_disc_rule(n - 2, 10, 16);
    // constant profile: orthogonality
    const auto c01 = integral_coefficient([](std::complex<double>) { return 1.0; }, 0, 1, n, rule);
    CHECK(std::abs(c01) < 1e-13);
    // phi = w pairs with (1,0) as 1/n
    const auto c10 =
        integral_coefficient([](std::complex<double> w) { return w; }, 1, 0, n, rule);
    CHECK(std::abs(c10 - 1.0 / n) < 1e-13);
    // phi = |w|^2: d_(1,1) = 1/(n(n+1))
    const auto c11 = integral_coefficient(
        [](std::complex<double> w) { return std::complex<double>(std::norm(w)); }, 1, 1, n, rule);
    CHECK(std::abs(c11 - 1.0 / (n * (n + 1.0))) < 1e-13);
  }
  const auto rule = build_disc_rule(0, 6, 8);
  CHECK_THROWS_AS(integral_coefficient([](std::complex<double>) { return 1.0; }, 0, 0, 3, rule),
                  Error);
}

TEST_CASE("sphere rule basics") {
  for (int n = 2; n <= 3; ++n) {
    const auto rule = build_sphere_rule(n, 6, 12);
    const auto one = sphere_integrate(
        [](std::span<const std::complex<double>>) { return 1.0; }, n, rule);
    CHECK(std::abs(one - 1.0) < 1e-12);
    // sum_j int |xi_j|^2 = 1 and symmetry under the recursion's pole choice
    const auto first = sphere_integrate(
        [](std::span<const std::complex<double>> xi) {
          return std::complex<double>(std::norm(xi[0]));
        },
        n, rule);
    CHECK(std::abs(first - 1.0 / n) < 1e-12);
  }
  const auto rule2 = build_sphere_rule(2, 4, 8);
  CHECK_THROWS_AS(
      sphere_integrate([](std::span<const std::complex<double>>) { return 1.0; }, 3, rule2),
      Error);
}

TEST_CASE("orthogonality of harmonics of different bidegree") {
  const int n = 2;
  const auto rule = build_sphere_rule(n, 8, 14);
  const auto harmonic = [&](int p, int q) {
    std::vector<int> a(n, 0), b(n, 0);
    a[0] = p;
    b[1] = q;
    return polyalg::canonical_decompose(
               polyalg::BiPoly::monomial(n, a, b, CRational(Rational(1))))
        .components[0];
  };
  const auto y21 = harmonic(2, 1);
  const auto y11 = harmonic(1, 1);
  const auto v = sphere_integrate(
      [&](std::span<const std::complex<double>> xi) {
        return y21.eval(xi) * std::conj(y11.eval(xi));
      },
      n, rule);
  CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("recursive consistency for zonal integrands") {
  // the inner sphere integral of a zonal function is constant, so the sphere
  // rule must reproduce the disc rule on the profile
  for (int n = 2; n <= 3; ++n) {
    const auto sphere = build_sphere_rule(n, 8, 12);
    const auto disc = build_disc_rule(n - 2, 8, 12);
    const auto profile = [](std::complex<double> w) {
      return std::complex<double>(std::norm(w)) + 0.25 * w * w * std::conj(w);
    };
    const auto via_sphere = sphere_integrate(
        [&](std::span<const std::complex<double>> xi) { return profile(xi[0]); }, n, sphere);
    const auto via_disc = disc_integrate(profile, disc);
    CHECK(std::abs(via_sphere - via_disc) < 1e-12);
  }
}

TEST_CASE("pole invariance for zonal integrands") {
  const int n = 2;
  const auto rule = build_sphere_rule(n, 8, 14);
  const auto profile = [](std::complex<double> w) {
    return std::complex<double>(std::norm(w)) + w;
  };
  // eta = e_1 (aligned with the recursion) vs a skew unit pole
  const std::vector<std::complex<double>> eta = {{0.6, 0.0}, {0.0, 0.8}};
  const auto aligned = sphere_integrate(
      [&](std::span<const std::complex<double>> xi) { return profile(xi[0]); }, n, rule);
  const auto skew = sphere_integrate(
      [&](std::span<const std::complex<double>> xi) {
        std::complex<double> w = 0.0;
        for (int j = 0; j < n; ++j) w += xi[j] * std::conj(eta[j]);
        return profile(w);
      },
      n, rule);
  CHECK(std::abs(aligned - skew) < 1e-12);
}

TEST_CASE("rule JSON export round trip") {
  const auto rule = build_disc_rule(2, 7, 9);
  const auto back = DiscRule::from_json(rule.to_json());
  CHECK(back.alpha == rule.alpha);
  CHECK(back.angular_points == rule.angular_points);
  REQUIRE(back.radial.size() == rule.radial.size());
  for (std::size_t i = 0; i < rule.radial.size(); ++i) {
    CHECK(back.radial[i].s == rule.radial[i].s);
    CHECK(back.radial[i].u == rule.radial[i].u);
  }
}

TEST_SUITE_END();
