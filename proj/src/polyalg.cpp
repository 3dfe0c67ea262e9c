#include "czonal/polyalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "czonal/errors.hpp"
#include "czonal/specfun.hpp"

namespace czonal::polyalg {

using specfun::factorial;

Rational beta_coefficient(int p, int q, int k, int j, int n) {
  if (n < 2) throw DimensionError("beta_coefficient requires n >= 2");
  const int m = std::min(p, q);
  if (p < 0 || q < 0 || k < 0 || k > m || j < 0 || j > m - k)
    throw Error("beta_coefficient: index out of range");
  Rational num = Rational(n - 1 + p + q - 2 * k) * factorial(n - 2 + p + q - 2 * k - j);
  Rational den = Rational(BigInt(1) << (2 * (k + j)))  // 4^(k+j)
                 * factorial(k) * factorial(j) * factorial(n - 1 + p + q - k);
  Rational b = num / den;
  return (j % 2 == 0) ? b : -b;
}

namespace {

std::pair<int, int> checked_bidegree(const BiPoly& P) {
  const auto deg = P.bidegree();
  if (!deg) throw Error("polynomial is zero or not bihomogeneous");
  return *deg;
}

// Laplacian powers D[0] = P, D[i] = Laplacian(D[i-1]); shared across all k, j.
std::vector<BiPoly> laplacian_powers(const BiPoly& P, int up_to) {
  std::vector<BiPoly> d;
  d.reserve(up_to + 1);
  d.push_back(P);
  for (int i = 1; i <= up_to; ++i) d.push_back(complex_laplacian(d.back()));
  return d;
}

BiPoly component_from_powers(const std::vector<BiPoly>& d, int p, int q, int n, int k) {
  const int m = std::min(p, q);
  BiPoly h(n);
  for (int j = 0; j + k <= m; ++j) {
    BiPoly term = d[k + j].scaled(CRational(beta_coefficient(p, q, k, j, n)));
    for (int i = 0; i < j; ++i) term = rsq_multiply(term);
    h += term;
  }
  return h;
}

}  // namespace

BiPoly harmonic_component(const BiPoly& P, int k) {
  const auto [p, q] = checked_bidegree(P);
  const int m = std::min(p, q);
  if (k < 0 || k > m) throw Error("harmonic_component: k out of range");
  return component_from_powers(laplacian_powers(P, m), p, q, P.dimension(), k);
}

HarmonicComponents canonical_decompose(const BiPoly& P) {
  const auto [p, q] = checked_bidegree(P);
  const int m = std::min(p, q);
  const auto d = laplacian_powers(P, m);
  HarmonicComponents out{p, q, {}};
  out.components.reserve(m + 1);
  for (int k = 0; k <= m; ++k)
    out.components.push_back(component_from_powers(d, p, q, P.dimension(), k));
  return out;
}

nlohmann::json HarmonicComponents::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& h : components) comps.push_back(h.to_json());
  return {{"p", p}, {"q", q}, {"components", std::move(comps)}};
}

HarmonicComponents HarmonicComponents::from_json(const nlohmann::json& j) {
  HarmonicComponents out;
  out.p = j.at("p").get<int>();
  out.q = j.at("q").get<int>();
  for (const auto& c : j.at("components")) out.components.push_back(BiPoly::from_json(c));
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force oracle.
// ---------------------------------------------------------------------------

namespace {

// Multi-indices c >= 0 with sum(c) = total, in lexicographic order.
void enumerate_compositions(int n, int total, std::vector<int>& cur, int pos,
                            std::vector<std::vector<int>>& out) {
  if (pos == n - 1) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur[pos] = v;
    enumerate_compositions(n, total - v, cur, pos + 1, out);
  }
}

std::vector<std::vector<int>> compositions(int n, int total) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> cur(n, 0);
  enumerate_compositions(n, total, cur, 0, out);
  return out;
}

// Monomials of bidegree (p,q) with a - b = w: parametrized by b' = b - max(0,-w).
std::vector<Monomial> monomials_with_weight(int n, int q, const std::vector<int>& w) {
  std::vector<Monomial> out;
  int base = 0;
  for (int wj : w) base += std::max(0, -wj);
  for (auto& bp : compositions(n, q - base)) {
    Monomial m;
    m.a.resize(n);
    m.b.resize(n);
    for (int j = 0; j < n; ++j) {
      m.b[j] = bp[j] + std::max(0, -w[j]);
      m.a[j] = m.b[j] + w[j];
    }
    out.push_back(std::move(m));
  }
  return out;
}

BigInt multinomial(int k, const std::vector<int>& c) {
  BigInt v = factorial(k);
  for (int cj : c) v /= factorial(cj);
  return v;
}

// Fraction-free (Bareiss) elimination of the square system M x = rhs with
// integer M and rational right-hand sides, followed by rational back
// substitution. Throws SingularSystemError on a zero pivot column.
std::vector<std::vector<Rational>> solve_exact(std::vector<std::vector<BigInt>>& M,
                                               std::vector<std::vector<Rational>>& rhs) {
  const std::size_t N = M.size();
  const std::size_t R = rhs.size();  // number of right-hand-side columns

  // Scale each rhs column to integers and append to the matrix.
  std::vector<BigInt> scale(R, 1);
  for (std::size_t r = 0; r < R; ++r) {
    BigInt l = 1;
    for (const auto& x : rhs[r]) l = lcm(l, denominator(x));
    scale[r] = l;
    for (std::size_t i = 0; i < N; ++i)
      M[i].push_back(numerator(rhs[r][i]) * (l / denominator(rhs[r][i])));
  }

  const std::size_t cols = N + R;
  BigInt prev = 1;
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t piv = k;
    while (piv < N && M[piv][k] == 0) ++piv;
    if (piv == N) throw SingularSystemError("singular decomposition system");
    if (piv != k) std::swap(M[piv], M[k]);
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j)
        M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
      M[i][k] = 0;
    }
    prev = M[k][k];
  }

  std::vector<std::vector<Rational>> x(R, std::vector<Rational>(N));
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t ii = N; ii-- > 0;) {
      Rational s = Rational(M[ii][N + r]);
      for (std::size_t j = ii + 1; j < N; ++j) s -= Rational(M[ii][j]) * x[r][j];
      x[r][ii] = s / Rational(M[ii][ii]);
    }
    for (auto& v : x[r]) v /= Rational(scale[r]);
  }
  return x;
}

}  // namespace

HarmonicComponents brute_force_decompose(const BiPoly& P) {
  const auto [p, q] = checked_bidegree(P);
  const int n = P.dimension();
  const int m = std::min(p, q);

  HarmonicComponents out{p, q, {}};
  out.components.assign(m + 1, BiPoly(n));

  // Distinct exponent differences a - b present in P. Components of any other
  // weight vanish: each weight block is a square nonsingular subsystem with
  // zero right-hand side.
  std::map<std::vector<int>, bool> weights;
  for (const auto& [mon, c] : P.terms()) {
    std::vector<int> w(n);
    for (int j = 0; j < n; ++j) w[j] = mon.a[j] - mon.b[j];
    weights.emplace(std::move(w), true);
  }

  for (const auto& [w, unused] : weights) {
    // Unknowns: coefficients of each H_k on monomials of bidegree (p-k,q-k)
    // with difference w.
    std::vector<std::pair<int, Monomial>> unknowns;
    std::vector<std::size_t> level_start(m + 2, 0);
    for (int k = 0; k <= m; ++k) {
      level_start[k] = unknowns.size();
      for (auto& mon : monomials_with_weight(n, q - k, w)) unknowns.emplace_back(k, mon);
    }
    level_start[m + 1] = unknowns.size();
    const std::size_t N = unknowns.size();
    if (N == 0) continue;

    std::map<std::pair<int, Monomial>, std::size_t> unknown_index;
    for (std::size_t i = 0; i < N; ++i) unknown_index.emplace(unknowns[i], i);

    std::vector<std::vector<BigInt>> M;
    std::vector<Rational> rhs_re, rhs_im;

    // Reconstruction rows: the coefficient of every bidegree-(p,q) monomial
    // of weight w in sum_k |z|^(2k) H_k, where |z|^(2k) z^a conj(z)^b expands
    // with multinomial coefficients k!/prod(c_j!).
    for (const auto& target : monomials_with_weight(n, q, w)) {
      std::vector<BigInt> row(N, 0);
      for (int k = 0; k <= m; ++k) {
        for (std::size_t i = level_start[k]; i < level_start[k + 1]; ++i) {
          const Monomial& mon = unknowns[i].second;
          std::vector<int> c(n);
          bool ok = true;
          for (int j = 0; j < n; ++j) {
            c[j] = target.a[j] - mon.a[j];
            if (c[j] < 0 || target.b[j] - mon.b[j] != c[j]) {
              ok = false;
              break;
            }
          }
          if (ok) row[i] = multinomial(k, c);
        }
      }
      const CRational* pc = P.coefficient(target);
      rhs_re.push_back(pc ? pc->re : Rational(0));
      rhs_im.push_back(pc ? pc->im : Rational(0));
      M.push_back(std::move(row));
    }

    // Harmonicity rows: Laplacian(H_k) = 0 coefficient-wise.
    for (int k = 0; k <= m; ++k) {
      if (p - k - 1 < 0 || q - k - 1 < 0) continue;
      for (const auto& target : monomials_with_weight(n, q - k - 1, w)) {
        std::vector<BigInt> row(N, 0);
        for (int j = 0; j < n; ++j) {
          Monomial src = target;
          ++src.a[j];
          ++src.b[j];
          const auto it = unknown_index.find({k, src});
          if (it != unknown_index.end())
            row[it->second] = BigInt(4) * src.a[j] * src.b[j];
        }
        rhs_re.push_back(0);
        rhs_im.push_back(0);
        M.push_back(std::move(row));
      }
    }

    if (M.size() != N)
      throw SingularSystemError("decomposition system is not square");

    std::vector<std::vector<Rational>> rhs{std::move(rhs_re), std::move(rhs_im)};
    const auto x = solve_exact(M, rhs);
    for (std::size_t i = 0; i < N; ++i)
      out.components[unknowns[i].first].add_term(unknowns[i].second,
                                                 CRational(x[0][i], x[1][i]));
  }

  return out;
}

}  // namespace czonal::polyalg
