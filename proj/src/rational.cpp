#include "czonal/rational.hpp"

#include <sstream>

#include "czonal/errors.hpp"

namespace czonal {

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << '/' << denominator(x);
  return os.str();
}

Rational rational_from_string(std::string_view s) {
  const auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) throw Error("empty integer in rational string");
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw Error("sign without digits in rational string");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw Error("bad rational string: " + std::string(t));
    return BigInt(std::string(t));
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  const BigInt num = parse_int(s.substr(0, slash));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in rational string: " + std::string(s));
  return Rational(num, den);
}

}  // namespace czonal
