#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <brieskorn/integer.hpp>

namespace brieskorn {

/// Laurent polynomial in t^{1/2} with integer coefficients. Exponents are stored
/// doubled, so the key 3 means t^{3/2}. Zero coefficients are never stored.
class HalfLaurent {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  HalfLaurent() = default;
  HalfLaurent(Integer constant) { add_term(0, std::move(constant)); }
  HalfLaurent(int constant) : HalfLaurent(Integer(constant)) {}

  /// coefficient * t^{doubled_exponent/2}
  static HalfLaurent monomial(std::int64_t doubled_exponent, Integer coefficient = 1) {
    HalfLaurent p;
    p.add_term(doubled_exponent, std::move(coefficient));
    return p;
  }

  static HalfLaurent t_half() { return monomial(1); }

  /// t^{1/2} - t^{-1/2}
  static HalfLaurent bracket() { return monomial(1) - monomial(-1); }

  static HalfLaurent from_terms(const std::vector<std::pair<std::int64_t, Integer>>& terms) {
    HalfLaurent p;
    for (const auto& [e, c] : terms) {
      p.add_term(e, c);
    }
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coefficient(std::int64_t doubled_exponent) const {
    auto it = terms_.find(doubled_exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(std::int64_t doubled_exponent, const Integer& coefficient) {
    if (coefficient == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(doubled_exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  HalfLaurent& operator+=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
      add_term(e, c);
    }
    return *this;
  }

  HalfLaurent& operator-=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
      add_term(e, -c);
    }
    return *this;
  }

  HalfLaurent operator-() const {
    HalfLaurent out;
    for (const auto& [e, c] : terms_) {
      out.terms_.emplace(e, -c);
    }
    return out;
  }

  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }

  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        out.add_term(ea + eb, ca * cb);
      }
    }
    return out;
  }

  HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

  HalfLaurent pow(std::int64_t k) const {
    if (k < 0) {
      throw std::invalid_argument("HalfLaurent::pow: negative exponent");
    }
    HalfLaurent result(1);
    HalfLaurent base = *this;
    while (k > 0) {
      if (k & 1) {
        result *= base;
      }
      base *= base;
      k >>= 1;
    }
    return result;
  }

  /// t^{1/2} -> t^{-1/2}
  HalfLaurent conjugate() const {
    HalfLaurent out;
    for (const auto& [e, c] : terms_) {
      out.terms_.emplace(-e, c);
    }
    return out;
  }

  bool is_symmetric() const { return conjugate() == *this; }

  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

  /// Ascending exponents, e.g. "t^(-1/2) - 2 + 3t^(3/2)"; zero prints "0".
  std::string to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = abs(c);
      if (first) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string var;
      if (e == 2) {
        var = "t";
      } else if (e % 2 == 0 && e != 0) {
        var = "t^" + std::to_string(e / 2);
      } else if (e % 2 != 0) {
        var = "t^(" + std::to_string(e) + "/2)";
      }
      if (var.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += var;
      } else {
        out += mag.str() + var;
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

inline HalfLaurent conjugate(const HalfLaurent& p) { return p.conjugate(); }

}  // namespace brieskorn
