#include "czonal/bipoly.hpp"

#include <numeric>

#include "czonal/errors.hpp"

namespace czonal::polyalg {

namespace {

void check_exponents(int n, const Monomial& m) {
  if (static_cast<int>(m.a.size()) != n || static_cast<int>(m.b.size()) != n)
    throw Error("monomial exponent vectors must have length n");
  for (int e : m.a)
    if (e < 0) throw Error("negative exponent");
  for (int e : m.b)
    if (e < 0) throw Error("negative exponent");
}

}  // namespace

BiPoly::BiPoly(int n) : n_(n) {
  if (n < 2) throw DimensionError("BiPoly requires n >= 2");
}

BiPoly BiPoly::monomial(int n, std::vector<int> a, std::vector<int> b, CRational coeff) {
  BiPoly p(n);
  Monomial m{std::move(a), std::move(b)};
  check_exponents(n, m);
  p.add_term(std::move(m), coeff);
  return p;
}

const CRational* BiPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? nullptr : &it->second;
}

void BiPoly::add_term(Monomial m, const CRational& coeff) {
  if (coeff.is_zero()) return;
  const auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.n_ != n_) throw Error("dimension mismatch in polynomial sum");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.n_ != n_) throw Error("dimension mismatch in polynomial sum");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly BiPoly::scaled(const CRational& s) const {
  BiPoly r(n_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, s * c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (o.n_ != n_) throw Error("dimension mismatch in polynomial product");
  BiPoly r(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (int j = 0; j < n_; ++j) {
        m.a[j] += mb.a[j];
        m.b[j] += mb.b[j];
      }
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

std::optional<std::pair<int, int>> BiPoly::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  std::optional<std::pair<int, int>> deg;
  for (const auto& [m, c] : terms_) {
    const int p = std::accumulate(m.a.begin(), m.a.end(), 0);
    const int q = std::accumulate(m.b.begin(), m.b.end(), 0);
    if (!deg)
      deg = {p, q};
    else if (*deg != std::make_pair(p, q))
      return std::nullopt;
  }
  return deg;
}

std::complex<double> BiPoly::eval(std::span<const std::complex<double>> z) const {
  if (static_cast<int>(z.size()) != n_) throw Error("evaluation point has wrong dimension");
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int j = 0; j < n_; ++j) {
      for (int e = 0; e < m.a[j]; ++e) t *= z[j];
      for (int e = 0; e < m.b[j]; ++e) t *= std::conj(z[j]);
    }
    sum += t;
  }
  return sum;
}

nlohmann::json BiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    terms.push_back({{"a", m.a},
                     {"b", m.b},
                     {"re", czonal::to_string(c.re)},
                     {"im", czonal::to_string(c.im)}});
  }
  return {{"n", n_}, {"terms", std::move(terms)}};
}

BiPoly BiPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw Error("BiPoly JSON must be an object with \"n\" and \"terms\"");
  BiPoly p(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Monomial m{t.at("a").get<std::vector<int>>(), t.at("b").get<std::vector<int>>()};
    check_exponents(p.n_, m);
    const CRational c{rational_from_string(t.at("re").get<std::string>()),
                      rational_from_string(t.at("im").get<std::string>())};
    p.add_term(std::move(m), c);
  }
  return p;
}

BiPoly complex_laplacian(const BiPoly& P) {
  const int n = P.dimension();
  BiPoly out(n);
  for (const auto& [m, c] : P.terms()) {
    for (int j = 0; j < n; ++j) {
      if (m.a[j] == 0 || m.b[j] == 0) continue;
      Monomial d = m;
      --d.a[j];
      --d.b[j];
      out.add_term(std::move(d), Rational(4L * m.a[j] * m.b[j]) * c);
    }
  }
  return out;
}

BiPoly rsq_multiply(const BiPoly& P) {
  const int n = P.dimension();
  BiPoly out(n);
  for (const auto& [m, c] : P.terms()) {
    for (int j = 0; j < n; ++j) {
      Monomial d = m;
      ++d.a[j];
      ++d.b[j];
      out.add_term(std::move(d), c);
    }
  }
  return out;
}

}  // namespace czonal::polyalg
