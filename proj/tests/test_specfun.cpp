#include <cmath>

#include "doctest.h"

#include "czonal/errors.hpp"
#include "czonal/specfun.hpp"

using namespace czonal;
using namespace czonal::specfun;

TEST_SUITE_BEGIN("specfun");

TEST_CASE("rational strings") {
  CHECK(to_string(Rational(-7, 3)) == "-7/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(rational_from_string("-7/3") == Rational(-7, 3));
  CHECK(rational_from_string("+12") == Rational(12));
  CHECK(rational_from_string("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(rational_from_string("1.5"), Error);
  CHECK_THROWS_AS(rational_from_string(""), Error);
}

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(Rational(7, 3), 0) == 1);
  CHECK(pochhammer(Rational(3), 2) == 12);
  CHECK(pochhammer(Rational(-2), 3) == 0);  // factor (-2+2)
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("pochhammer splitting identity") {
  // (r)_(j+k) = (r)_j (r+j)_k
  const Rational rs[] = {Rational(1), Rational(-3), Rational(5, 2), Rational(-7, 3)};
  for (const auto& r : rs)
    for (unsigned j = 0; j <= 20; j += 4)
      for (unsigned k = 0; k <= 20; k += 5)
        CHECK(pochhammer(r, j + k) == pochhammer(r, j) * pochhammer(r + (long)j, k));
}

TEST_CASE("terminating 2F1") {
  CHECK(hyp2f1_terminating(0, Rational(5), Rational(7), Rational(9)) == 1);
  // two-term sum: 1 + (-1)(-1)/(-2) * 4 = -1
  CHECK(hyp2f1_terminating(-1, Rational(-1), Rational(-2), Rational(4)) == -1);
  // Chu-Vandermonde sample: 2F1(-k,-j;-a-k-j;1) = (a+1)_k (a+1)_j / (a+1)_(k+j)
  for (int a = 0; a <= 3; ++a)
    for (int k = 0; k <= 4; ++k)
      for (int j = 0; j <= 4; ++j)
        CHECK(hyp2f1_terminating(-k, Rational(-j), Rational(-a - k - j), Rational(1)) ==
              pochhammer(Rational(a + 1), k) * pochhammer(Rational(a + 1), j) /
                  pochhammer(Rational(a + 1), k + j));
  CHECK_THROWS_AS(hyp2f1_terminating(1, Rational(1), Rational(1), Rational(1)), Error);
  // denominator hits zero at j=2 before the numerator terminates at j=3
  CHECK_THROWS_AS(hyp2f1_terminating(-3, Rational(5), Rational(-1), Rational(1)), Error);
}

TEST_CASE("binary64 2F1 matches the exact route") {
  for (int k = 0; k <= 6; ++k) {
    const double exact =
        to_double(hyp2f1_terminating(-k, Rational(3, 2), Rational(7, 2), Rational(1, 3)));
    const double approx = hyp2f1_terminating(-k, 1.5, 3.5, 1.0 / 3.0);
    CHECK(std::abs(exact - approx) < 1e-14);
  }
}

TEST_CASE("Pfaff-Saalschutz") {
  CHECK(pfaff_saalschutz_check(0, Rational(2), Rational(3), Rational(5)));
  CHECK(pfaff_saalschutz_check(2, Rational(-1), Rational(-2), Rational(3)));
  CHECK(pfaff_saalschutz_check(3, Rational(1, 2), Rational(1), Rational(2)));
  // early numerator termination (a = -2 stops the series before j = n)
  CHECK(pfaff_saalschutz_check(8, Rational(-2), Rational(-6), Rational(3, 2)));
  // (c)_n vanishes for c = -1, n >= 2
  CHECK_THROWS_AS(pfaff_saalschutz_check(3, Rational(1, 2), Rational(1, 3), Rational(-1)),
                  Error);
}

TEST_CASE("jacobi_p values") {
  CHECK(jacobi_p(0.7, -0.3, 0, 0.42) == 1.0);
  // Legendre specialization: P_2(1/2) = (3t^2-1)/2 = -1/8
  CHECK(std::abs(jacobi_p(0.0, 0.0, 2, 0.5) - (-0.125)) < 1e-15);
  CHECK_THROWS_AS(jacobi_p(-1.0, 0.0, 2, 0.5), Error);
}

TEST_CASE("jacobi_p at t=1 equals (mu+1)_m / m!") {
  const double mus[] = {0.0, 0.5, 1.0, 2.5, 6.0};
  const double nus[] = {0.0, 1.0, 3.0};
  for (double mu : mus)
    for (double nu : nus)
      for (unsigned m = 0; m <= 30; m += 3) {
        const double expected = pochhammer(mu + 1.0, m) / to_double(factorial(m));
        const double got = jacobi_p(mu, nu, m, 1.0);
        CHECK(std::abs(got - expected) < 1e-12 * std::max(1.0, std::abs(expected)));
      }
}

TEST_CASE("jacobi recurrence against the hypergeometric oracle") {
  // P^(mu,nu)_m(t) = (mu+1)_m / m! * 2F1(-m, m+mu+nu+1; mu+1; (1-t)/2),
  // evaluated exactly at rational t and compared at 1e-12 relative.
  const Rational mus[] = {Rational(0), Rational(1), Rational(5, 2)};
  const Rational nus[] = {Rational(0), Rational(2)};
  for (const auto& mu : mus)
    for (const auto& nu : nus)
      for (unsigned m = 0; m <= 30; m += 5)
        for (int ti = -10; ti <= 10; ti += 2) {
          const Rational t(ti, 10);
          const Rational exact = pochhammer(mu + 1, m) / Rational(factorial(m)) *
                                 hyp2f1_terminating(-(long)m, Rational((long)m) + mu + nu + 1,
                                                    mu + 1, (1 - t) / 2);
          const double got = jacobi_p(to_double(mu), to_double(nu), m, to_double(t));
          CHECK(std::abs(got - to_double(exact)) <
                1e-12 * std::max(1.0, std::abs(to_double(exact))));
        }
}

TEST_CASE("bessel_j values") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(3, 0.0) == 0.0);
  // high-precision series oracle value
  CHECK(std::abs(bessel_j(1, 1.0) - 0.4400505857449335) < 1e-15);
  CHECK(std::abs(bessel_j(1, 2.0) - 0.5767248077568734) < 1e-14);
  CHECK_THROWS_AS(bessel_j(0, -1.0), Error);
}

TEST_CASE("bessel three-term recurrence") {
  // J_(v-1)(r) + J_(v+1)(r) = (2v/r) J_v(r)
  for (unsigned nu = 1; nu <= 20; ++nu)
    for (double r = 0.5; r <= 10.0; r += 0.5) {
      const double lhs = bessel_j(nu - 1, r) + bessel_j(nu + 1, r);
      const double rhs = 2.0 * nu / r * bessel_j(nu, r);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_SUITE_END();
