#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <string_view>

namespace czonal {

// All combinatorial scalars (beta, gamma, dimensions, Pochhammer products)
// live in exact arbitrary-precision rationals; floating point enters only at
// final kernel/series evaluation. cpp_rational keeps values canonical:
// numerator and denominator coprime, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& x) { return x.template convert_to<double>(); }
inline double to_double(const BigInt& x) { return x.template convert_to<double>(); }

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);

// Parses "num/den" or a plain integer string. Throws Error on junk.
Rational rational_from_string(std::string_view s);

// Complex number with exact rational real and imaginary parts; the
// coefficient field of every polynomial in the library.
struct CRational {
  Rational re;
  Rational im;

  CRational() = default;
  CRational(Rational r) : re(std::move(r)) {}
  CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  CRational(long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  CRational conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  CRational& operator+=(const CRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRational& operator-=(const CRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend CRational operator+(CRational a, const CRational& b) { return a += b; }
  friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
  friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
  friend CRational operator*(const CRational& a, const CRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRational operator*(const Rational& s, const CRational& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const CRational& a, const CRational& b) = default;
};

}  // namespace czonal
