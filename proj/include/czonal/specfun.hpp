#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "czonal/rational.hpp"

namespace czonal::specfun {

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Pochhammer symbol (r)_j = r(r+1)...(r+j-1), (r)_0 = 1.
Rational pochhammer(const Rational& r, unsigned j);
double pochhammer(double r, unsigned j);

// Generalized hypergeometric parameter set pFq(a_1..a_p; c_1..c_q; t).
// Terminating evaluation requires at least one numerator parameter to be a
// non-positive integer; no denominator parameter may hit zero at an index
// reachable before termination.
struct HypergeometricSpec {
  std::vector<Rational> numerator;
  std::vector<Rational> denominator;
};

// Exact sum of a terminating pFq via forward recurrence on the term ratio.
// Throws Error if no numerator parameter terminates the series, or if a
// denominator Pochhammer vanishes before the series terminates.
Rational hyp_pfq_terminating(const HypergeometricSpec& spec, const Rational& t);

// 2F1(a,b;c;t) with a a non-positive integer, exact.
Rational hyp2f1_terminating(long a, const Rational& b, const Rational& c, const Rational& t);
// binary64 evaluation of the same terminating sum.
double hyp2f1_terminating(long a, double b, double c, double t);

// Forward series for 2F1(a,b;c;t) with a,b,c > 0 and 0 <= t < 1 (all terms of
// one sign, so a relative cutoff is safe). Compensated summation.
double hyp2f1_series(double a, double b, double c, double t, double rel_tol = 1e-15);

// Verifies, in exact arithmetic, the Pfaff-Saalschutz evaluation of the
// balanced terminating 3F2 at unit argument:
//
//   3F2(-n, a, b; c, 1+a+b-n-c; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
//
// Throws Error on a denominator-Pochhammer zero (either side).
bool pfaff_saalschutz_check(unsigned n, const Rational& a, const Rational& b, const Rational& c);

// Jacobi polynomial P^(mu,nu)_m(t) by the three-term recurrence, mu > -1.
double jacobi_p(double mu, double nu, unsigned m, double t);
// d/dt P^(mu,nu)_m(t) = (m+mu+nu+1)/2 * P^(mu+1,nu+1)_(m-1)(t).
double jacobi_p_derivative(double mu, double nu, unsigned m, double t);

// Bessel function of the first kind, integer order nu >= 0, r >= 0:
//
//   J_nu(r) = (r/2)^nu sum_k (-1)^k / (k! (k+nu)!) (r/2)^(2k),
//
// truncated when a term falls below 1e-17 of the running partial sum, with a
// hard cap of 200 terms.
double bessel_j(unsigned nu, double r);

// Neumaier compensated summation; keeps long alternating series reproducible.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class NeumaierComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

}  // namespace czonal::specfun
