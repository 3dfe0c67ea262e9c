#include "czonal/expansion.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>
#include <vector>

#include "czonal/errors.hpp"
#include "czonal/polyalg.hpp"
#include "czonal/specfun.hpp"
#include "czonal/zonal.hpp"

namespace czonal::expansion {

using specfun::factorial;

std::complex<double> expansion_coefficient(const ProfileTaylor& profile, int p, int q, int n,
                                           double* trunc_err) {
  if (n < 2) throw DimensionError("expansion_coefficient requires n >= 2");
  if (p < 0 || q < 0) throw Error("expansion_coefficient: negative bidegree");

  // The series in Taylor-coefficient form: with tau(j,k) = T(j,k)/(j!k!),
  //
  //   d_(p,q) = sum_k tau(p+k, q+k) F_k,
  //   F_k = (n-1)! (p+k)! (q+k)! / (k! (n-1+p+q+k)!),
  //
  // where F_(k+1)/F_k = (p+k+1)(q+k+1)/((k+1)(n+p+q+k)) tends to 1. Both
  // factors stay in binary64 range; the raw derivatives would not.
  double F = to_double(Rational(factorial(n - 1) * factorial(p) * factorial(q)) /
                       Rational(factorial(n - 1 + p + q)));
  const auto f_step = [&](int k) {
    return (p + k + 1.0) * (q + k + 1.0) / ((k + 1.0) * (n + p + q + k));
  };

  // Certified term bound B_k = C rho^(p+q+2k) F_k when a certificate exists.
  const auto& tail = profile.tail();
  const auto bound_step = [&](int k) { return tail->rho * tail->rho * f_step(k); };
  double bound = 0.0;
  if (tail) bound = tail->C * std::pow(tail->rho, p + q) * F;

  specfun::NeumaierComplexSum sum;
  double reported_tail = 0.0;
  int consecutive_small = 0;
  // The certified bound only decays like rho^(2k), so profiles with rho near
  // 1 legitimately need a few thousand terms before the rule fires.
  const int k_cap = 2000;
  bool converged = false;

  for (int k = 0; k <= k_cap; ++k) {
    if (profile.has_table() && (p + k > profile.max_order() || q + k > profile.max_order())) {
      if (profile.exact_polynomial()) {
        converged = true;  // every later derivative is exactly zero
        break;
      }
      if (tail) {
        const double ratio = bound_step(k);
        reported_tail = ratio < 1.0 ? bound / (1.0 - ratio) : bound * 10.0;
        converged = true;
        break;
      }
      throw ConvergenceError(
          "Taylor table exhausted before the stopping rule fired and no tail "
          "certificate was given");
    }

    const std::complex<double> term = profile.taylor_coefficient(p + k, q + k) * F;
    sum.add(term);

    // Exact polynomial tables are summed to the end: the early-out below
    // would otherwise trip on leading zero terms.
    if (!profile.exact_polynomial()) {
      const double term_bound = tail ? bound : std::abs(term);
      if (term_bound <= 1e-16 * std::abs(sum.value())) {
        if (++consecutive_small >= 3) {
          if (tail) {
            const double ratio = bound_step(k);
            reported_tail = ratio < 1.0 ? bound * ratio / (1.0 - ratio) : bound;
          }
          converged = true;
          break;
        }
      } else {
        consecutive_small = 0;
      }
    }

    F *= f_step(k);
    if (tail) bound *= bound_step(k);
  }

  if (!converged)
    throw ConvergenceError("expansion coefficient series hit the 2000-term cap");

  if (trunc_err) *trunc_err = reported_tail;
  return sum.value();
}

ExpansionTable expand_profile(const ProfileTaylor& profile, int n, int max_bidegree) {
  if (max_bidegree < 0) throw Error("expand_profile: max_bidegree must be non-negative");
  ExpansionTable table;
  table.n = n;
  table.max_bidegree = max_bidegree;

  std::vector<std::pair<int, int>> cells;
  for (int tot = 0; tot <= max_bidegree; ++tot)
    for (int p = 0; p <= tot; ++p) cells.push_back({p, tot - p});

  unsigned threads = 0;
  if (const char* env = std::getenv("CZONAL_THREADS")) threads = std::strtoul(env, nullptr, 10);
  threads = std::min<unsigned>(threads, std::thread::hardware_concurrency());

  std::vector<ExpansionEntry> results(cells.size());
  const auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      double err = 0.0;
      const auto d = expansion_coefficient(profile, cells[i].first, cells[i].second, n, &err);
      results[i] = {d, err};
    }
  };

  if (threads <= 1) {
    work(0, cells.size());
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    const std::size_t chunk = (cells.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(cells.size(), t * chunk);
      const std::size_t hi = std::min(cells.size(), lo + chunk);
      if (lo < hi)
        pool.emplace_back([&, lo, hi, t] {
          try {
            work(lo, hi);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < cells.size(); ++i) table.entries.emplace(cells[i], results[i]);
  return table;
}

std::complex<double> evaluate_expansion(const ExpansionTable& table, std::complex<double> w) {
  specfun::NeumaierComplexSum sum;
  for (int tot = 0; tot <= table.max_bidegree; ++tot) {
    for (int p = 0; p <= tot; ++p) {
      const auto it = table.entries.find({p, tot - p});
      if (it == table.entries.end()) continue;
      const auto& tab = zonal::disc_poly_cached(p, tot - p, table.n - 2);
      sum.add(it->second.d * to_double(zonal::dim_h(p, tot - p, table.n)) *
              zonal::disc_poly_eval(tab, w));
    }
  }
  return sum.value();
}

std::complex<double> plane_wave_coefficient(double r, int p, int q, int n) {
  if (n < 2) throw DimensionError("plane_wave_coefficient requires n >= 2");
  if (r < 0) throw Error("plane_wave_coefficient: r must be non-negative");
  if (r == 0.0) return (p + q == 0) ? 1.0 : 0.0;
  static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const double radial = to_double(factorial(n - 1)) * std::pow(0.5 * r, 1.0 - n) *
                        specfun::bessel_j(p + q + n - 1, r);
  return i_pow[(p + q) % 4] * radial;
}

ExpansionTable plane_wave_table(double r, int n, int max_bidegree) {
  ExpansionTable table;
  table.n = n;
  table.max_bidegree = max_bidegree;
  for (int tot = 0; tot <= max_bidegree; ++tot)
    for (int p = 0; p <= tot; ++p)
      table.entries[{p, tot - p}] = {plane_wave_coefficient(r, p, tot - p, n), 0.0};
  return table;
}

namespace {

// C = (n+p-1)!(n+q-1)! / ((n-1)!(n-1+p+q)!), the Pochhammer normalization;
// by Gauss summation C = 1 / 2F1(p,q;n+p+q;1).
Rational poisson_normalization(int p, int q, int n) {
  return Rational(factorial(n + p - 1) * factorial(n + q - 1)) /
         Rational(factorial(n - 1) * factorial(n - 1 + p + q));
}

}  // namespace

double poisson_szego_coefficient(double r, int p, int q, int n) {
  if (n < 2) throw DimensionError("poisson_szego_coefficient requires n >= 2");
  if (p < 0 || q < 0) throw Error("poisson_szego_coefficient: negative bidegree");
  if (!(r >= 0.0 && r <= 1.0)) throw Error("poisson_szego_coefficient: r must lie in [0,1]");
  const Rational C = poisson_normalization(p, q, n);
  if (r == 1.0) {
    // Gauss: 2F1(p,q;n+p+q;1) = (n+p+q-1)!(n-1)! / ((n+p-1)!(n+q-1)!) = 1/C.
    const Rational gauss = Rational(factorial(n + p + q - 1) * factorial(n - 1)) /
                           Rational(factorial(n + p - 1) * factorial(n + q - 1));
    return to_double(C * gauss);
  }
  if (p == 0 || q == 0) return std::pow(r, p + q) * to_double(C);
  return std::pow(r, p + q) * to_double(C) *
         specfun::hyp2f1_series(p, q, n + p + q, r * r);
}

double poisson_szego_lemma_coefficient(double r, int p, int q, int n) {
  if (n < 2) throw DimensionError("poisson_szego_lemma_coefficient requires n >= 2");
  if (!(r >= 0.0 && r < 1.0))
    throw Error("poisson_szego_lemma_coefficient: r must lie in [0,1)");
  return std::pow(r, p + q) * to_double(poisson_normalization(p, q, n)) *
         specfun::hyp2f1_series(n + p, n + q, n + p + q, r * r);
}

double poisson_szego_closed_form(double r, std::complex<double> w, int n) {
  if (n < 2) throw DimensionError("poisson_szego_closed_form requires n >= 2");
  if (!(r >= 0.0 && r < 1.0))
    throw Error("poisson_szego_closed_form: boundary singularity at r = 1");
  return std::pow(1.0 - r * r, n) / std::pow(std::norm(1.0 - r * w), n);
}

double poisson_szego_reconstruct(double r, std::complex<double> w, int n, int L_max) {
  if (!(r >= 0.0 && r < 1.0)) throw Error("poisson_szego_reconstruct: r must lie in [0,1)");
  specfun::NeumaierComplexSum sum;
  for (int tot = 0; tot <= L_max; ++tot) {
    for (int p = 0; p <= tot; ++p) {
      const int q = tot - p;
      sum.add(to_double(zonal::dim_h(p, q, n)) * poisson_szego_coefficient(r, p, q, n) *
              zonal::disc_poly_eval(zonal::disc_poly_cached(p, q, n - 2), w));
    }
  }
  return sum.value().real();
}

std::complex<double> funk_hecke_pair(const ProfileTaylor& profile, const polyalg::BiPoly& Y,
                                     std::span<const std::complex<double>> eta, int n) {
  if (Y.dimension() != n || static_cast<int>(eta.size()) != n)
    throw Error("funk_hecke_pair: dimension mismatch");
  const auto deg = Y.bidegree();
  if (!deg) throw Error("funk_hecke_pair: Y must be bihomogeneous and nonzero");
  if (!polyalg::complex_laplacian(Y).is_zero())
    throw Error("funk_hecke_pair: Y fails the harmonicity check");
  return expansion_coefficient(profile, deg->second, deg->first, n) * Y.eval(eta);
}

nlohmann::json ExpansionTable::to_json() const {
  nlohmann::json entries_json = nlohmann::json::array();
  for (int tot = 0; tot <= max_bidegree; ++tot) {
    for (int p = 0; p <= tot; ++p) {
      const auto it = entries.find({p, tot - p});
      if (it == entries.end()) continue;
      entries_json.push_back({{"p", p},
                              {"q", tot - p},
                              {"re", it->second.d.real()},
                              {"im", it->second.d.imag()},
                              {"trunc_err", it->second.trunc_err}});
    }
  }
  return {{"n", n}, {"max_bidegree", max_bidegree}, {"entries", std::move(entries_json)}};
}

ExpansionTable ExpansionTable::from_json(const nlohmann::json& j) {
  ExpansionTable table;
  table.n = j.at("n").get<int>();
  table.max_bidegree = j.at("max_bidegree").get<int>();
  for (const auto& e : j.at("entries")) {
    table.entries[{e.at("p").get<int>(), e.at("q").get<int>()}] = {
        {e.at("re").get<double>(), e.at("im").get<double>()},
        e.at("trunc_err").get<double>()};
  }
  return table;
}

void ExpansionTable::write_csv(std::ostream& os) const {
  os << "p,q,re,im,trunc_err\n";
  char buf[128];
  for (int tot = 0; tot <= max_bidegree; ++tot) {
    for (int p = 0; p <= tot; ++p) {
      const auto it = entries.find({p, tot - p});
      if (it == entries.end()) continue;
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g\n", p, tot - p,
                    it->second.d.real(), it->second.d.imag(), it->second.trunc_err);
      os << buf;
    }
  }
}

}  // namespace czonal::expansion
