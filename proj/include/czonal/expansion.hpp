#pragma once

#include <complex>
#include <map>
#include <ostream>
#include <span>
#include <utility>

#include "json.hpp"

#include "czonal/bipoly.hpp"
#include "czonal/profile.hpp"

namespace czonal::expansion {

struct ExpansionEntry {
  std::complex<double> d;
  double trunc_err = 0.0;
};

// The coefficients d_(p,q) of f(xi) = sum d_(p,q) dim H^(p,q) Z^(p,q)_eta(xi)
// for all p+q <= max_bidegree, with per-entry truncation bounds.
struct ExpansionTable {
  int n = 0;
  int max_bidegree = 0;
  std::map<std::pair<int, int>, ExpansionEntry> entries;

  nlohmann::json to_json() const;
  static ExpansionTable from_json(const nlohmann::json& j);
  void write_csv(std::ostream& os) const;
};

// d_(p,q) = (n-1)! sum_k T(p+k, q+k) / (k! (n-1+p+q+k)!).
//
// Polynomial tables terminate exactly. Otherwise the sum stops once the
// certified term bound stays below 1e-16 of the partial sum for three
// consecutive k (near-cancellation guard); if the Taylor data runs out first
// and no tail certificate exists, ConvergenceError is thrown. The geometric
// tail bound at the stopping index is reported through trunc_err.
std::complex<double> expansion_coefficient(const ProfileTaylor& profile, int p, int q, int n,
                                           double* trunc_err = nullptr);

// Fills every cell with p+q <= max_bidegree. Honors CZONAL_THREADS (0 or
// unset: sequential); parallel runs produce bit-identical tables because each
// cell's summation order is fixed and cells are independent.
ExpansionTable expand_profile(const ProfileTaylor& profile, int n, int max_bidegree);

// sum over the table of d_(p,q) dim H^(p,q) W^(n-2)_(p,q)(w), in fixed
// (p+q)-major then p-minor order.
std::complex<double> evaluate_expansion(const ExpansionTable& table, std::complex<double> w);

// Coefficients of exp(i r Re w): (n-1)! i^(p+q) (r/2)^(1-n) J_(p+q+n-1)(r),
// with the removable r = 0 limit handled explicitly.
std::complex<double> plane_wave_coefficient(double r, int p, int q, int n);

// The plane-wave table from the closed Bessel form, for p+q <= max_bidegree.
ExpansionTable plane_wave_table(double r, int n, int max_bidegree);

// Poisson-Szego radial factor in the Pochhammer-normalized (total) form
//   S_n^(p,q)(r) = r^(p+q) C 2F1(p, q; n+p+q; r^2),
//   C = (n+p-1)!(n+q-1)! / ((n-1)!(n-1+p+q)!),
// which agrees with the factorial form for p,q >= 1 and stays defined at
// p = 0 or q = 0. At r = 1 the value is the exact Gauss evaluation (the raw
// series converges too slowly at the boundary to be usable).
double poisson_szego_coefficient(double r, int p, int q, int n);

// The intermediate series of the kernel proof, before the (1-r^2)^n binomial
// expansion: r^(p+q) C 2F1(n+p, n+q; n+p+q; r^2), r < 1. Related to the
// total form by the Euler transformation: S = (1-r^2)^n * this.
double poisson_szego_lemma_coefficient(double r, int p, int q, int n);

// (1-r^2)^n / |1 - r w|^(2n) for r < 1; throws at the boundary singularity.
double poisson_szego_closed_form(double r, std::complex<double> w, int n);

// Truncated kernel expansion sum over p+q <= L_max.
double poisson_szego_reconstruct(double r, std::complex<double> w, int n, int L_max);

// Funk-Hecke pairing: for harmonic bihomogeneous Y of bidegree (p,q),
//   \int_S Y(xi) phi((xi|eta)) dsigma(xi) = d_(q,p)(phi) Y(eta).
// Under the fixed kernel orientation Z = W((eta|xi)) the pairing constant is
// the (q,p) coefficient; this is the documented orientation swap.
std::complex<double> funk_hecke_pair(const ProfileTaylor& profile, const polyalg::BiPoly& Y,
                                     std::span<const std::complex<double>> eta, int n);

}  // namespace czonal::expansion
