#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace brieskorn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown by the text-format readers; carries the 1-based line number.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division; boost's operator/ truncates toward zero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    q -= 1;
  }
  return q;
}

inline Integer floor(const Rational& x) {
  return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

inline bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  Integer result = 1;
  for (std::int64_t m = 1; m <= k; ++m) {
    result *= n - k + m;
    result /= m;
  }
  return result;
}

/// num/den for any nonzero den; boost's two-argument constructor rejects negative denominators.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw std::invalid_argument("ratio: zero denominator");
  }
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& x) {
  const auto& num = boost::multiprecision::numerator(x);
  const auto& den = boost::multiprecision::denominator(x);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q" with optional sign on p. Throws std::invalid_argument.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> Integer {
    if (s.empty()) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
    for (std::size_t k = start; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw std::invalid_argument("malformed rational '" + text + "'");
      }
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_int(text));
  }
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  return ratio(num, den);
}

}  // namespace brieskorn
