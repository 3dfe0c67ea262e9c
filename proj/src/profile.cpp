#include "czonal/profile.hpp"

#include <cmath>
#include <vector>

#include "czonal/errors.hpp"
#include "czonal/specfun.hpp"

namespace czonal::expansion {

ProfileTaylor ProfileTaylor::from_table(
    std::map<std::pair<int, int>, std::complex<double>> table, bool polynomial) {
  ProfileTaylor p;
  int max_order = 0;
  for (const auto& [jk, v] : table) {
    if (jk.first < 0 || jk.second < 0) throw Error("ProfileTaylor: negative derivative order");
    max_order = std::max({max_order, jk.first, jk.second});
  }
  p.table_ = std::move(table);
  p.polynomial_ = polynomial;
  p.max_order_ = max_order;
  return p;
}

ProfileTaylor ProfileTaylor::from_taylor_generator(Generator gen, TailCertificate tail) {
  if (!(tail.rho > 0.0 && tail.rho < 1.0) || !(tail.C > 0.0))
    throw Error("ProfileTaylor: tail certificate needs C > 0 and 0 < rho < 1");
  ProfileTaylor p;
  p.generator_ = std::move(gen);
  p.tail_ = tail;
  return p;
}

std::complex<double> ProfileTaylor::derivative(int j, int k) const {
  if (j < 0 || k < 0) throw Error("ProfileTaylor: negative derivative order");
  if (table_) {
    const auto it = table_->find({j, k});
    return it == table_->end() ? std::complex<double>(0.0) : it->second;
  }
  return generator_(j, k) * to_double(specfun::factorial(j) * specfun::factorial(k));
}

std::complex<double> ProfileTaylor::taylor_coefficient(int j, int k) const {
  if (j < 0 || k < 0) throw Error("ProfileTaylor: negative derivative order");
  if (table_) {
    const auto it = table_->find({j, k});
    if (it == table_->end()) return 0.0;
    return it->second / to_double(specfun::factorial(j) * specfun::factorial(k));
  }
  return generator_(j, k);
}

nlohmann::json ProfileTaylor::to_json() const {
  if (!table_) throw Error("only finite Taylor tables serialize to JSON");
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [jk, v] : *table_)
    entries.push_back(
        {{"j", jk.first}, {"k", jk.second}, {"re", v.real()}, {"im", v.imag()}});
  return {{"polynomial", polynomial_}, {"entries", std::move(entries)}};
}

ProfileTaylor ProfileTaylor::from_json(const nlohmann::json& j) {
  std::map<std::pair<int, int>, std::complex<double>> table;
  for (const auto& e : j.at("entries")) {
    table[{e.at("j").get<int>(), e.at("k").get<int>()}] = {e.at("re").get<double>(),
                                                           e.at("im").get<double>()};
  }
  return from_table(std::move(table), j.value("polynomial", true));
}

namespace {

// sup_j binom(n-1+j, j) x^j for 0 < x < 1, by following the term ratio
// x (n+j)/(j+1) until it drops below 1.
double binomial_growth_sup(int n, double x) {
  double term = 1.0, best = 1.0;
  for (int j = 0;; ++j) {
    const double ratio = x * (n + j) / (j + 1.0);
    term *= ratio;
    best = std::max(best, term);
    if (ratio < 1.0 && term < best * 1e-6) break;
    if (j > 100000) break;
  }
  return best;
}

std::vector<double> parse_args(const std::string& spec, std::size_t open) {
  if (spec.back() != ')') throw Error("bad profile spec: " + spec);
  std::vector<double> args;
  std::string body = spec.substr(open + 1, spec.size() - open - 2);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string tok = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      args.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw Error("");
    } catch (...) {
      throw Error("bad numeric argument in profile spec: " + spec);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return args;
}

}  // namespace

ProfileTaylor make_builtin_profile(const std::string& spec, int n) {
  const std::size_t open = spec.find('(');
  const std::string name = spec.substr(0, open);
  std::vector<double> args;
  if (open != std::string::npos) args = parse_args(spec, open);

  if (name == "const") {
    const double c = args.empty() ? 1.0 : args[0];
    if (args.size() > 1) throw Error("const takes at most one argument");
    return ProfileTaylor::from_table({{{0, 0}, c}})
        .with_evaluator([c](std::complex<double>) { return std::complex<double>(c); });
  }

  if (name == "monomial") {
    if (args.size() != 2) throw Error("monomial(a,b) takes two integer arguments");
    const int a = static_cast<int>(args[0]), b = static_cast<int>(args[1]);
    if (a < 0 || b < 0 || a != args[0] || b != args[1])
      throw Error("monomial(a,b) needs non-negative integers");
    const double t =
        to_double(specfun::factorial(a)) * to_double(specfun::factorial(b));
    return ProfileTaylor::from_table({{{a, b}, t}})
        .with_evaluator([a, b](std::complex<double> w) {
          std::complex<double> v = 1.0;
          for (int e = 0; e < a; ++e) v *= w;
          for (int e = 0; e < b; ++e) v *= std::conj(w);
          return v;
        });
  }

  if (name == "plane-wave") {
    if (args.size() != 1) throw Error("plane-wave(r) takes one argument");
    const double r = args[0];
    if (r < 0) throw Error("plane-wave(r) needs r >= 0");
    // phi(w) = exp(i r Re w): tau(j,k) = (i r / 2)^(j+k) / (j! k!).
    auto gen = [r](int j, int k) -> std::complex<double> {
      if (j + k == 0) return 1.0;
      if (r == 0.0) return 0.0;
      const double mag = std::exp((j + k) * std::log(0.5 * r) - std::lgamma(j + 1.0) -
                                  std::lgamma(k + 1.0));
      static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      return mag * i_pow[(j + k) % 4];
    };
    // |tau| 2^(j+k) = r^(j+k)/(j!k!) <= e^(2r)
    return ProfileTaylor::from_taylor_generator(gen, {std::exp(2.0 * r), 0.5})
        .with_evaluator([r](std::complex<double> w) {
          return std::exp(std::complex<double>(0.0, r * w.real()));
        });
  }

  if (name == "poisson-szego") {
    if (args.size() != 1) throw Error("poisson-szego(r) takes one argument");
    const double r = args[0];
    if (!(r >= 0.0 && r < 1.0)) throw Error("poisson-szego(r) needs 0 <= r < 1");
    if (n < 2) throw DimensionError("poisson-szego profile requires n >= 2");
    // phi(w) = (1-r^2)^n |1-rw|^(-2n):
    // tau(j,k) = (1-r^2)^n r^(j+k) binom(n-1+j,j) binom(n-1+k,k).
    const double pre = std::pow(1.0 - r * r, n);
    auto gen = [r, n, pre](int j, int k) {
      double v = pre;
      for (int i = 1; i <= j; ++i) v *= r * (n - 1 + i) / i;
      for (int i = 1; i <= k; ++i) v *= r * (n - 1 + i) / i;
      return std::complex<double>(v);
    };
    const double rho = 0.5 * (1.0 + r);
    const double sup = binomial_growth_sup(n, r / rho);
    return ProfileTaylor::from_taylor_generator(gen, {pre * sup * sup, rho})
        .with_evaluator([r, n, pre](std::complex<double> w) {
          return std::complex<double>(pre / std::pow(std::norm(1.0 - r * w), n));
        });
  }

  if (name == "exp-re") {
    if (!args.empty()) throw Error("exp-re takes no arguments");
    // phi(w) = exp(Re w): tau(j,k) = 2^(-(j+k)) / (j! k!).
    auto gen = [](int j, int k) {
      return std::complex<double>(std::exp(-(j + k) * std::log(2.0) - std::lgamma(j + 1.0) -
                                           std::lgamma(k + 1.0)));
    };
    return ProfileTaylor::from_taylor_generator(gen, {1.0, 0.5})
        .with_evaluator([](std::complex<double> w) {
          return std::complex<double>(std::exp(w.real()));
        });
  }

  throw Error("unknown profile: " + spec);
}

}  // namespace czonal::expansion
