#pragma once

#include <complex>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "czonal/rational.hpp"

namespace czonal::zonal {

// dim H^(p,q) = (n+p+q-1)(n-2+p)!(n-2+q)! / (p! q! (n-1)! (n-2)!), n >= 2.
BigInt dim_h(int p, int q, int n);

// gamma^(p,q)_k = p! q! (a+1+p+q-2k)(a+p-k)!(a+q-k)!
//                 / (k! a! (a+1+p+q-k)! (p-k)! (q-k)!),  a = n-2.
// The gamma sum to k = min(p,q) is exactly 1 (decomposition of unity).
Rational gamma_coefficient(int p, int q, int k, int n);

// Disc polynomial W^a_(p,q)(w) = sum_j c_j w^(p-j) conj(w)^(q-j) in the
// singularity-free coefficient form: the 1/|w|^2 hypergeometric argument is
// pre-expanded, so nothing blows up at w = 0.
struct DiscPolyTable {
  int p = 0;
  int q = 0;
  int alpha = 0;
  std::vector<Rational> c;  // c_0 .. c_min(p,q)
};

DiscPolyTable disc_poly(int p, int q, int alpha);

// Shared memoized table store; safe for concurrent lookup/insert (entries are
// value-identical, so insert races are benign).
const DiscPolyTable& disc_poly_cached(int p, int q, int alpha);

// Horner evaluation over the c_j table in binary64.
std::complex<double> disc_poly_eval(const DiscPolyTable& table, std::complex<double> w);

// Jacobi-polynomial route to the same value:
//   w^(p-m) conj(w)^(q-m) P^(alpha,|p-q|)_m(2|w|^2-1) / P^(alpha,|p-q|)_m(1).
std::complex<double> disc_poly_via_jacobi(int p, int q, int alpha, std::complex<double> w);

// Zonal reproducing kernel of bidegree (p,q) with pole eta:
//   Z_eta(xi) = W^(n-2)_(p,q)((eta|xi)),  (eta|xi) = sum_j eta_j conj(xi_j).
// The conjugate-flip identity W_(q,p)(w) = conj(W_(p,q)(w)) recovers the
// opposite orientation.
struct ZonalKernelSpec {
  int p = 0;
  int q = 0;
  int n = 0;
  std::vector<std::complex<double>> pole;
};

std::complex<double> zonal_kernel_eval(const ZonalKernelSpec& spec,
                                       std::span<const std::complex<double>> xi);

// w^p conj(w)^q = sum_k gamma^(p,q)_k W^(n-2)_(p-k,q-k)(w).
std::vector<std::pair<std::pair<int, int>, Rational>> monomial_expansion(int p, int q, int n);

// sum_(p+q=l) dim H^(p,q) W^(n-2)_(p,q)(w); a function of Re(w) alone.
double real_zonal_sum(int l, int n, std::complex<double> w);

namespace regression {

// The incorrect decomposition-of-unity sum of Menegatto, Oliveira and Peron,
// formula (2.5), transcribed verbatim. Their dimension parameter enters as
// n-1; requires n >= 3 so that (n-3)! is defined. Kept only as a regression
// witness: at (m,q,n) = (2,3,3) it evaluates to 149/10, not 1.
Rational erroneous_unity_sum(int m, int q, int n);

// A single k-term of the sum above.
Rational erroneous_unity_term(int m, int q, int n, int k);

}  // namespace regression

// CSV emission: "p,q,k,gamma_num,gamma_den" rows for all p,q <= max_bidegree.
void write_gamma_csv(std::ostream& os, int max_bidegree, int n);
// CSV emission: "j,c_num,c_den" rows of a disc-polynomial table.
void write_disc_poly_csv(std::ostream& os, const DiscPolyTable& table);

}  // namespace czonal::zonal
