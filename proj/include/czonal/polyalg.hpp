#pragma once

#include <vector>

#include "czonal/bipoly.hpp"
#include "czonal/rational.hpp"

namespace czonal::polyalg {

// beta^(p,q)_k(j) = (-1)^j (n-1+p+q-2k)(n-2+p+q-2k-j)!
//                   / (4^(k+j) k! j! (n-1+p+q-k)!)
// for n >= 2, 0 <= k <= min(p,q), 0 <= j <= min(p,q)-k.
Rational beta_coefficient(int p, int q, int k, int j, int n);

// The harmonic components h_0..h_m of a bihomogeneous polynomial of bidegree
// (p,q), m = min(p,q): each h_k is harmonic of bidegree (p-k,q-k) and
// P = sum_k |z|^(2k) h_k exactly.
struct HarmonicComponents {
  int p = 0;
  int q = 0;
  std::vector<BiPoly> components;

  friend bool operator==(const HarmonicComponents&, const HarmonicComponents&) = default;

  nlohmann::json to_json() const;
  static HarmonicComponents from_json(const nlohmann::json& j);
};

// h^(p,q)_k(P) = sum_{j=0}^{m-k} beta^(p,q)_k(j) |z|^(2j) Laplacian^(k+j)(P).
BiPoly harmonic_component(const BiPoly& P, int k);

// All components via the closed-form projections; exact rational arithmetic.
HarmonicComponents canonical_decompose(const BiPoly& P);

// Independent oracle: solves the exact linear system
//     P = sum_k |z|^(2k) H_k,   Laplacian(H_k) = 0,
// on the monomial basis by fraction-free Gaussian elimination. The system
// splits into independent blocks indexed by the exponent difference a-b
// (both |z|^2-multiplication and the Laplacian preserve it), which keeps the
// eliminations small. Intended for small p, q, n.
HarmonicComponents brute_force_decompose(const BiPoly& P);

}  // namespace czonal::polyalg
