#pragma once

// Slope bookkeeping for convex tori in the Seifert fibration of -Sigma(2,3,6n-1):
// extended-rational slopes, unimodular gluing maps, negative continued
// fractions and the tight-structure counts on solid tori that they feed.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <brieskorn/integer.hpp>

namespace brieskorn {

/// A curve class (p, q) on a torus, slope q/p. Stored primitive with p > 0;
/// slope infinity is (0, 1). The meridian direction is (1, 0).
class Slope {
 public:
  Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ == 0 && q_ == 0) {
      throw std::invalid_argument("slope: (0, 0) is not a curve class");
    }
    Integer g = gcd(p_, q_);
    p_ /= g;
    q_ /= g;
    if (p_ < 0 || (p_ == 0 && q_ < 0)) {
      p_ = -p_;
      q_ = -q_;
    }
  }

  static Slope infinity() { return Slope(0, 1); }

  /// The class (den, num) of the rational num/den.
  static Slope from_rational(const Rational& value) {
    return Slope(boost::multiprecision::denominator(value), boost::multiprecision::numerator(value));
  }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  bool is_infinite() const { return p_ == 0; }

  Rational value() const {
    if (is_infinite()) {
      throw std::domain_error("slope: infinity has no rational value");
    }
    return Rational(q_, p_);
  }

  std::string to_string() const {
    if (is_infinite()) {
      return "inf";
    }
    return brieskorn::to_string(value());
  }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Integer p_;
  Integer q_;
};

inline Slope normalize_slope(Integer p, Integer q) { return Slope(std::move(p), std::move(q)); }

/// 2x2 integer matrix with determinant +1 or -1, acting on column vectors (p, q).
class UnimodularMatrix {
 public:
  UnimodularMatrix(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Integer det = determinant();
    if (det != 1 && det != -1) {
      throw std::invalid_argument("matrix is not unimodular (det = " + det.str() + ")");
    }
  }

  static UnimodularMatrix identity() { return {1, 0, 0, 1}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer determinant() const { return a_ * d_ - b_ * c_; }
  Integer trace() const { return a_ + d_; }

  UnimodularMatrix inverse() const {
    Integer det = determinant();
    return {det * d_, -det * b_, -det * c_, det * a_};
  }

  std::pair<Integer, Integer> apply(const Integer& p, const Integer& q) const {
    return {a_ * p + b_ * q, c_ * p + d_ * q};
  }

  friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
    return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
            x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
  }

  friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

  std::string to_string() const {
    return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
  }

 private:
  Integer a_, b_, c_, d_;
};

/// Slope of the image curve class.
inline Slope mobius_apply(const UnimodularMatrix& m, const Slope& s) {
  auto [p, q] = m.apply(s.p(), s.q());
  return Slope(std::move(p), std::move(q));
}

// Gluing maps from the solid tori boundaries to the boundary of
// (pair of pants) x S^1, meridian = (1, 0).
inline UnimodularMatrix attaching_map_1() { return {2, -1, 1, 0}; }
inline UnimodularMatrix attaching_map_2() { return {3, 1, -1, 0}; }
inline UnimodularMatrix attaching_map_3(std::int64_t n) { return {6 * n - 1, 6, -n, -1}; }

/// Monodromy of Y_inf as a T^2-bundle over the circle.
inline UnimodularMatrix yinf_monodromy() { return {1, 1, -1, 0}; }

/// Coefficients [a_0, ..., a_k], all <= -2, of x = a_0 - 1/(a_1 - 1/(... - 1/a_k)).
struct NcfExpansion {
  std::vector<Integer> coefficients;

  friend bool operator==(const NcfExpansion&, const NcfExpansion&) = default;
};

/// Expansion of a rational x < -1. Values in [-1, 0) would need a leading
/// coefficient of -1 and are rejected along with non-negative ones.
inline NcfExpansion neg_continued_fraction(const Rational& x) {
  if (x >= 0) {
    throw std::domain_error("negative continued fraction of non-negative rational " + to_string(x));
  }
  if (x >= -1) {
    throw std::domain_error("negative continued fraction needs x < -1, got " + to_string(x));
  }
  NcfExpansion out;
  Rational rest = x;
  while (true) {
    Integer a = floor(rest);
    out.coefficients.push_back(a);
    Rational frac = rest - Rational(a);
    if (frac == 0) {
      break;
    }
    // rest = a - 1/next with frac in (0, 1), so next = -1/frac < -1.
    rest = Rational(-1) / frac;
  }
  return out;
}

inline NcfExpansion neg_continued_fraction(const Integer& num, const Integer& den) {
  if (den < 1) {
    throw std::invalid_argument("negative continued fraction: denominator must be >= 1");
  }
  return neg_continued_fraction(Rational(num, den));
}

inline Rational eval_ncf_value(const NcfExpansion& e) {
  if (e.coefficients.empty()) {
    throw std::invalid_argument("eval_ncf: empty expansion");
  }
  for (const auto& a : e.coefficients) {
    if (a > -2) {
      throw std::invalid_argument("eval_ncf: coefficient " + a.str() + " is not <= -2");
    }
  }
  Rational value(e.coefficients.back());
  for (auto it = e.coefficients.rbegin() + 1; it != e.coefficients.rend(); ++it) {
    value = Rational(*it) - Rational(1) / value;
  }
  return value;
}

inline Slope eval_ncf(const NcfExpansion& e) { return Slope::from_rational(eval_ncf_value(e)); }

/// Number of tight contact structures on a solid torus with boundary slope
/// s = -p/q, p >= q >= 1, with two dividing curves: |(a_0+1)...(a_{k-1}+1) a_k|.
inline Integer tight_count_solid_torus(const Slope& s) {
  if (s.is_infinite()) {
    throw std::domain_error("tight_count_solid_torus: infinite slope");
  }
  Rational value = s.value();
  if (value > -1) {
    throw std::domain_error("tight_count_solid_torus: slope " + s.to_string() + " is not <= -1");
  }
  if (is_integer(value)) {
    return Integer(-boost::multiprecision::numerator(value));
  }
  NcfExpansion e = neg_continued_fraction(value);
  Integer count = 1;
  for (std::size_t k = 0; k + 1 < e.coefficients.size(); ++k) {
    count *= e.coefficients[k] + 1;
  }
  count *= e.coefficients.back();
  return abs(count);
}

/// Sum over the admissible maximal twisting values of the solid-torus counts
/// on V_3; equals n(n-1)/2.
inline Integer upper_bound_count(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("upper_bound_count: n must be >= 2");
  }
  Integer total = 0;
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    total += tight_count_solid_torus(Slope(1, -(n - k)));
  }
  if (total != Integer(n * (n - 1) / 2)) {
    throw std::logic_error("upper_bound_count: sum " + total.str() + " differs from n(n-1)/2");
  }
  return total;
}

/// The possible maximal twisting numbers -6k+1, k = 1 .. n-1.
inline std::vector<std::int64_t> max_twisting_values(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("max_twisting_values: n must be >= 2");
  }
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    out.push_back(-6 * k + 1);
  }
  return out;
}

/// Slope on the boundary of the complement of V_3 seen from a slope on the boundary of V_3.
inline Slope v3_slope_in_complement(std::int64_t n, const Rational& v3_slope) {
  return mobius_apply(attaching_map_3(n), Slope::from_rational(v3_slope));
}

}  // namespace brieskorn
