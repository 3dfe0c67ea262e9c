#include "czonal/zonal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "czonal/errors.hpp"
#include "czonal/specfun.hpp"

namespace czonal::zonal {

using specfun::factorial;
using specfun::pochhammer;

BigInt dim_h(int p, int q, int n) {
  if (n < 2) throw DimensionError("dim_h requires n >= 2");
  if (p < 0 || q < 0) throw Error("dim_h: negative bidegree");
  const Rational d = Rational(n + p + q - 1) * factorial(n - 2 + p) * factorial(n - 2 + q) /
                     (factorial(p) * factorial(q) * factorial(n - 1) * factorial(n - 2));
  if (denominator(d) != 1) throw Error("dim_h: non-integer dimension (bug)");
  return numerator(d);
}

Rational gamma_coefficient(int p, int q, int k, int n) {
  if (n < 2) throw DimensionError("gamma_coefficient requires n >= 2");
  if (p < 0 || q < 0 || k < 0 || k > std::min(p, q))
    throw Error("gamma_coefficient: k out of range");
  const int a = n - 2;
  return Rational(factorial(p) * factorial(q)) * Rational(a + 1 + p + q - 2 * k) *
         factorial(a + p - k) * factorial(a + q - k) /
         (factorial(k) * factorial(a) * factorial(a + 1 + p + q - k) * factorial(p - k) *
          factorial(q - k));
}

DiscPolyTable disc_poly(int p, int q, int alpha) {
  if (p < 0 || q < 0 || alpha < 0) throw Error("disc_poly: p, q, alpha must be non-negative");
  DiscPolyTable t{p, q, alpha, {}};
  const int m = std::min(p, q);
  t.c.reserve(m + 1);
  // c_0 = (a+1)_(p+q) / ((a+1)_p (a+1)_q); then the 2F1 term ratio
  // c_j / c_(j-1) = (-p+j-1)(-q+j-1) / ((-a-p-q+j-1) j).
  t.c.push_back(pochhammer(Rational(alpha + 1), p + q) /
                (pochhammer(Rational(alpha + 1), p) * pochhammer(Rational(alpha + 1), q)));
  for (int j = 1; j <= m; ++j) {
    const Rational ratio = Rational((-p + j - 1) * (-q + j - 1)) /
                           Rational(static_cast<long>(-alpha - p - q + j - 1) * j);
    t.c.push_back(t.c.back() * ratio);
  }
  return t;
}

namespace {

std::map<std::tuple<int, int, int>, DiscPolyTable> g_table_cache;
std::shared_mutex g_table_mutex;

}  // namespace

const DiscPolyTable& disc_poly_cached(int p, int q, int alpha) {
  const std::tuple<int, int, int> key{p, q, alpha};
  {
    std::shared_lock lock(g_table_mutex);
    const auto it = g_table_cache.find(key);
    if (it != g_table_cache.end()) return it->second;
  }
  DiscPolyTable t = disc_poly(p, q, alpha);
  std::unique_lock lock(g_table_mutex);
  return g_table_cache.try_emplace(key, std::move(t)).first->second;
}

std::complex<double> disc_poly_eval(const DiscPolyTable& table, std::complex<double> w) {
  const int m = std::min(table.p, table.q);
  const long double u = static_cast<long double>(w.real()) * w.real() +
                        static_cast<long double>(w.imag()) * w.imag();
  // g(u) = sum_j c_j u^(m-j), Horner from c_0 down. The c_j alternate and can
  // reach ~1e6 while |g| <= 1, so both the coefficient conversion and the
  // accumulation run in extended precision.
  long double g = table.c[0].template convert_to<long double>();
  for (int j = 1; j <= m; ++j) g = g * u + table.c[j].template convert_to<long double>();
  std::complex<double> pre = 1.0;
  for (int e = 0; e < table.p - m; ++e) pre *= w;
  for (int e = 0; e < table.q - m; ++e) pre *= std::conj(w);
  return pre * static_cast<double>(g);
}

std::complex<double> disc_poly_via_jacobi(int p, int q, int alpha, std::complex<double> w) {
  const int m = std::min(p, q);
  const double t = 2.0 * std::norm(w) - 1.0;
  const double num = specfun::jacobi_p(alpha, std::abs(p - q), m, t);
  // P^(a,nu)_m(1) = (a+1)_m / m!
  const double den = static_cast<double>(
      (pochhammer(Rational(alpha + 1), m) / factorial(m)).template convert_to<long double>());
  std::complex<double> pre = 1.0;
  for (int e = 0; e < p - m; ++e) pre *= w;
  for (int e = 0; e < q - m; ++e) pre *= std::conj(w);
  return pre * (num / den);
}

std::complex<double> zonal_kernel_eval(const ZonalKernelSpec& spec,
                                       std::span<const std::complex<double>> xi) {
  if (spec.n < 2) throw DimensionError("zonal_kernel_eval requires n >= 2");
  if (static_cast<int>(spec.pole.size()) != spec.n || xi.size() != spec.pole.size())
    throw Error("zonal_kernel_eval: dimension mismatch");
  std::complex<double> w = 0.0;
  for (int j = 0; j < spec.n; ++j) w += spec.pole[j] * std::conj(xi[j]);
  return disc_poly_eval(disc_poly_cached(spec.p, spec.q, spec.n - 2), w);
}

std::vector<std::pair<std::pair<int, int>, Rational>> monomial_expansion(int p, int q, int n) {
  if (n < 2) throw DimensionError("monomial_expansion requires n >= 2");
  std::vector<std::pair<std::pair<int, int>, Rational>> out;
  for (int k = 0; k <= std::min(p, q); ++k)
    out.push_back({{p - k, q - k}, gamma_coefficient(p, q, k, n)});
  return out;
}

double real_zonal_sum(int l, int n, std::complex<double> w) {
  if (l < 0) throw Error("real_zonal_sum: l must be non-negative");
  specfun::NeumaierComplexSum sum;
  for (int p = 0; p <= l; ++p) {
    const int q = l - p;
    sum.add(to_double(dim_h(p, q, n)) * disc_poly_eval(disc_poly_cached(p, q, n - 2), w));
  }
  return sum.value().real();
}

namespace regression {

Rational erroneous_unity_term(int m, int q, int n, int k) {
  if (n < 3) throw DimensionError("erroneous_unity_sum needs n >= 3 ((n-3)! appears)");
  if (m < 0 || q < 0 || k < 0 || k > std::min(m, q))
    throw Error("erroneous_unity_term: k out of range");
  const int a = n - 2;  // their dimension parameter is n-1, so a-1 = n-3 below
  return Rational(factorial(m) * factorial(q)) * factorial(m - k + a - 1) *
         factorial(q - k + a - 1) * factorial(m + q - 2 * k + a) /
         (factorial(a - 1) * factorial(k) * factorial(m - k) * factorial(q - k) *
          factorial(m + q - k + a));
}

Rational erroneous_unity_sum(int m, int q, int n) {
  Rational s = 0;
  for (int k = 0; k <= std::min(m, q); ++k) s += erroneous_unity_term(m, q, n, k);
  return s;
}

}  // namespace regression

void write_gamma_csv(std::ostream& os, int max_bidegree, int n) {
  os << "p,q,k,gamma_num,gamma_den\n";
  for (int p = 0; p <= max_bidegree; ++p)
    for (int q = 0; q <= max_bidegree; ++q)
      for (int k = 0; k <= std::min(p, q); ++k) {
        const Rational g = gamma_coefficient(p, q, k, n);
        os << p << ',' << q << ',' << k << ',' << numerator(g) << ',' << denominator(g)
           << '\n';
      }
}

void write_disc_poly_csv(std::ostream& os, const DiscPolyTable& table) {
  os << "j,c_num,c_den\n";
  for (std::size_t j = 0; j < table.c.size(); ++j)
    os << j << ',' << numerator(table.c[j]) << ',' << denominator(table.c[j]) << '\n';
}

}  // namespace czonal::zonal
