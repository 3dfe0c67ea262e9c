#pragma once

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "czonal/rational.hpp"

namespace czonal::polyalg {

// Exponent pair of a monomial z^a conj(z)^b. Ordering is lexicographic on
// (a, b), which fixes a canonical term order for byte-reproducible output.
struct Monomial {
  std::vector<int> a;
  std::vector<int> b;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse polynomial in z_1..z_n and their conjugates over complex rationals.
// Stored terms never carry a zero coefficient.
class BiPoly {
 public:
  explicit BiPoly(int n);

  static BiPoly monomial(int n, std::vector<int> a, std::vector<int> b, CRational coeff);

  int dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, CRational>& terms() const { return terms_; }

  const CRational* coefficient(const Monomial& m) const;
  void add_term(Monomial m, const CRational& coeff);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly scaled(const CRational& s) const;
  BiPoly operator*(const BiPoly& o) const;

  // (sum a, sum b) when every term agrees; nullopt for the zero polynomial or
  // a mixed-degree polynomial.
  std::optional<std::pair<int, int>> bidegree() const;

  std::complex<double> eval(std::span<const std::complex<double>> z) const;

  nlohmann::json to_json() const;
  static BiPoly from_json(const nlohmann::json& j);

 private:
  int n_;
  std::map<Monomial, CRational> terms_;
};

// 4 sum_j d^2/dz_j dconj(z_j); maps bidegree (p,q) to (p-1,q-1) or zero.
BiPoly complex_laplacian(const BiPoly& P);

// P * |z|^2 with |z|^2 = sum_j z_j conj(z_j); shifts (p,q) to (p+1,q+1).
BiPoly rsq_multiply(const BiPoly& P);

}  // namespace czonal::polyalg
