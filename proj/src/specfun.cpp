#include "czonal/specfun.hpp"

#include <cstdlib>
#include <limits>

#include "czonal/errors.hpp"

namespace czonal::specfun {

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);  // exact at every step
  }
  return b;
}

Rational pochhammer(const Rational& r, unsigned j) {
  Rational p = 1;
  for (unsigned i = 0; i < j; ++i) p *= (r + i);
  return p;
}

double pochhammer(double r, unsigned j) {
  double p = 1.0;
  for (unsigned i = 0; i < j; ++i) p *= (r + i);
  return p;
}

namespace {

// Smallest j such that some numerator parameter makes every term beyond j
// vanish, i.e. min(-a) over non-positive-integer parameters a.
long termination_index(const std::vector<Rational>& numerator_params) {
  long j_end = -1;
  for (const auto& a : numerator_params) {
    if (denominator(a) != 1 || a > 0) continue;
    const BigInt neg = -numerator(a);
    if (neg > std::numeric_limits<long>::max()) throw Error("termination index overflows");
    const long cand = neg.convert_to<long>();
    if (j_end < 0 || cand < j_end) j_end = cand;
  }
  if (j_end < 0) throw Error("hypergeometric series does not terminate");
  return j_end;
}

}  // namespace

Rational hyp_pfq_terminating(const HypergeometricSpec& spec, const Rational& t) {
  const long j_end = termination_index(spec.numerator);
  Rational sum = 1;
  Rational term = 1;
  for (long j = 0; j < j_end; ++j) {
    Rational num = 1;
    for (const auto& a : spec.numerator) num *= (a + j);
    if (num == 0) break;  // an earlier numerator parameter terminated the sum
    Rational den = Rational(j + 1);
    for (const auto& c : spec.denominator) {
      const Rational f = c + j;
      if (f == 0) throw Error("denominator Pochhammer vanishes before termination");
      den *= f;
    }
    term *= num / den * t;
    sum += term;
  }
  return sum;
}

Rational hyp2f1_terminating(long a, const Rational& b, const Rational& c, const Rational& t) {
  if (a > 0) throw Error("2F1: a must be a non-positive integer");
  return hyp_pfq_terminating({{Rational(a), b}, {c}}, t);
}

double hyp2f1_terminating(long a, double b, double c, double t) {
  if (a > 0) throw Error("2F1: a must be a non-positive integer");
  NeumaierSum sum;
  sum.add(1.0);
  double term = 1.0;
  for (long j = 0; j < -a; ++j) {
    const double num = static_cast<double>(a + j) * (b + j);
    if (num == 0.0) break;
    const double den = (c + j) * static_cast<double>(j + 1);
    if (den == 0.0) throw Error("denominator Pochhammer vanishes before termination");
    term *= num / den * t;
    sum.add(term);
  }
  return sum.value();
}

double hyp2f1_series(double a, double b, double c, double t, double rel_tol) {
  if (t < 0.0 || t >= 1.0) throw Error("2F1 series: argument must lie in [0,1)");
  NeumaierSum sum;
  sum.add(1.0);
  double term = 1.0;
  for (long k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * t;
    if (term == 0.0) return sum.value();
    sum.add(term);
    if (std::abs(term) <= rel_tol * std::abs(sum.value())) return sum.value();
  }
  throw ConvergenceError("2F1 series did not converge within 1e5 terms");
}

bool pfaff_saalschutz_check(unsigned n, const Rational& a, const Rational& b, const Rational& c) {
  const Rational d = 1 + a + b - Rational(static_cast<long>(n)) - c;
  const Rational lhs =
      hyp_pfq_terminating({{Rational(-static_cast<long>(n)), a, b}, {c, d}}, 1);
  const Rational den = pochhammer(c, n) * pochhammer(c - a - b, n);
  if (den == 0) throw Error("Pfaff-Saalschutz: denominator Pochhammer vanishes");
  const Rational rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / den;
  return lhs == rhs;
}

double jacobi_p(double mu, double nu, unsigned m, double t) {
  if (mu <= -1.0) throw Error("jacobi_p: mu must exceed -1");
  if (m == 0) return 1.0;
  // Accumulate in extended precision: the tables this feeds are compared at
  // 1e-12 relative after division by values of size (mu+1)_m / m!.
  long double p0 = 1.0L;
  long double p1 = (mu + 1) + (mu + nu + 2) * (static_cast<long double>(t) - 1) / 2;
  for (unsigned k = 2; k <= m; ++k) {
    const long double s = 2.0L * k + mu + nu;
    const long double a1 = 2.0L * k * (k + mu + nu) * (s - 2);
    const long double a2 = (s - 1) * (static_cast<long double>(mu) * mu - static_cast<long double>(nu) * nu);
    const long double a3 = (s - 1) * s * (s - 2);
    const long double a4 = 2.0L * (k + mu - 1) * (k + nu - 1) * s;
    const long double p2 = ((a2 + a3 * t) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  return static_cast<double>(p1);
}

double jacobi_p_derivative(double mu, double nu, unsigned m, double t) {
  if (m == 0) return 0.0;
  return 0.5 * (m + mu + nu + 1) * jacobi_p(mu + 1, nu + 1, m - 1, t);
}

double bessel_j(unsigned nu, double r) {
  if (r < 0.0) throw Error("bessel_j: r must be non-negative");
  if (r == 0.0) return nu == 0 ? 1.0 : 0.0;
  const double x = 0.5 * r;
  double term = 1.0;
  for (unsigned i = 1; i <= nu; ++i) term *= x / i;  // x^nu / nu!
  NeumaierSum sum;
  sum.add(term);
  for (unsigned k = 1; k <= 200; ++k) {
    term *= -(x * x) / (static_cast<double>(k) * (k + nu));
    sum.add(term);
    if (std::abs(term) <= 1e-17 * std::abs(sum.value())) break;
  }
  return sum.value();
}

}  // namespace czonal::specfun
