#pragma once

// Contact invariants c(eta^n_{i,j}) as elements of Z[t^{+-1/2}], the cobordism
// maps relating them, and the grading arithmetic of the surgery triangles.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <brieskorn/census.hpp>
#include <brieskorn/integer.hpp>
#include <brieskorn/laurent.hpp>
#include <brieskorn/matrix.hpp>

namespace brieskorn {

/// The alternating binomial sum sum_k (-1)^k C(i,k) t^{(j-i+2k)/2}, taken
/// literally. It equals (-1)^i times the normalized invariant.
inline HalfLaurent binomial_sum(const ContactDescriptor& d) {
  d.require_valid();
  HalfLaurent p;
  for (std::int64_t k = 0; k <= d.i; ++k) {
    Integer c = binomial(d.i, k);
    p.add_term(d.j - d.i + 2 * k, k % 2 == 0 ? c : Integer(-c));
  }
  return p;
}

/// c(eta^n_{i,j}) with the normalization c(eta^n_{0,j}) = t^{j/2}:
/// sum_k (-1)^{i-k} C(i,k) t^{(j-i+2k)/2}.
inline HalfLaurent invariant(const ContactDescriptor& d) {
  d.require_valid();
  HalfLaurent p;
  for (std::int64_t k = 0; k <= d.i; ++k) {
    Integer c = binomial(d.i, k);
    p.add_term(d.j - d.i + 2 * k, (d.i - k) % 2 == 0 ? c : Integer(-c));
  }
  return p;
}

/// (t^{1/2} - t^{-1/2})^i t^{j/2}
inline HalfLaurent invariant_closed_form(const ContactDescriptor& d) {
  d.require_valid();
  return HalfLaurent::bracket().pow(d.i) * HalfLaurent::monomial(d.j);
}

// ---------------------------------------------------------------------------
// Coordinates in the basis c(eta^n_{0,j'}), j' = -n+2, -n+4, ..., n-2

struct InvariantVector {
  std::int64_t n = 2;
  std::vector<Integer> coords;

  explicit InvariantVector(std::int64_t n_) : n(n_) {
    if (n < 2) {
      throw std::invalid_argument("InvariantVector: n must be >= 2");
    }
    coords.assign(static_cast<std::size_t>(n - 1), 0);
  }

  static std::int64_t basis_label(std::int64_t n, std::size_t index) {
    return -n + 2 + 2 * static_cast<std::int64_t>(index);
  }

  static std::optional<std::size_t> basis_index(std::int64_t n, std::int64_t label) {
    if (label < -n + 2 || label > n - 2 || (label + n) % 2 != 0) {
      return std::nullopt;
    }
    return static_cast<std::size_t>((label + n - 2) / 2);
  }

  bool is_zero() const {
    for (const auto& c : coords) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

inline InvariantVector coordinates(const ContactDescriptor& d) {
  d.require_valid();
  InvariantVector v(d.n);
  for (std::int64_t k = 0; k <= d.i; ++k) {
    auto idx = InvariantVector::basis_index(d.n, d.j - d.i + 2 * k);
    if (idx) {
      Integer c = binomial(d.i, k);
      v.coords[*idx] = (d.i - k) % 2 == 0 ? c : Integer(-c);
    }
  }
  return v;
}

/// F_{V_n}: the basis vector c(eta^n_{0,j'}) goes to t^{j'/2}.
inline HalfLaurent apply_F_Vn(const InvariantVector& v) {
  HalfLaurent p;
  for (std::size_t k = 0; k < v.coords.size(); ++k) {
    p.add_term(InvariantVector::basis_label(v.n, k), v.coords[k]);
  }
  return p;
}

/// Preimage under F_{V_n}; throws if p is not in the image.
inline InvariantVector coordinates_of(std::int64_t n, const HalfLaurent& p) {
  InvariantVector v(n);
  for (const auto& [e, c] : p.terms()) {
    auto idx = InvariantVector::basis_index(n, e);
    if (!idx) {
      throw std::invalid_argument("coordinates_of: t^(" + std::to_string(e) + "/2) is outside the image of F_V" +
                                  std::to_string(n));
    }
    v.coords[*idx] = c;
  }
  return v;
}

/// F_{W_n}: HF(-Y_n) -> HF(-Y_{n+1}), c(eta^n_{0,j'}) -> c(eta^{n+1}_{0,j'+1}) - c(eta^{n+1}_{0,j'-1}).
inline InvariantVector map_F_Wn(const InvariantVector& v) {
  InvariantVector out(v.n + 1);
  for (std::size_t k = 0; k < v.coords.size(); ++k) {
    if (v.coords[k] == 0) {
      continue;
    }
    std::int64_t label = InvariantVector::basis_label(v.n, k);
    auto up = InvariantVector::basis_index(v.n + 1, label + 1);
    auto down = InvariantVector::basis_index(v.n + 1, label - 1);
    if (!up || !down) {
      throw std::logic_error("map_F_Wn: shifted label outside the target basis");
    }
    out.coords[*up] += v.coords[k];
    out.coords[*down] -= v.coords[k];
  }
  return out;
}

/// F_{W_n} read through the F_V identifications: p must be in the image of F_{V_n}.
inline HalfLaurent map_F_Wn(std::int64_t n, const HalfLaurent& p) {
  return apply_F_Vn(map_F_Wn(coordinates_of(n, p)));
}

/// F_{W_inf}: multiplication by t^{1/2} - t^{-1/2}.
inline HalfLaurent map_F_Winf(const HalfLaurent& p) { return HalfLaurent::bracket() * p; }

/// F_{V_inf}: the conjugation t^{1/2} -> t^{-1/2}.
inline HalfLaurent map_F_Vinf(const HalfLaurent& p) { return p.conjugate(); }

enum class CobordismMapKind { v_n, w_n, w_inf, v_inf };

struct CobordismMapSpec {
  CobordismMapKind kind = CobordismMapKind::w_inf;
  std::int64_t n = 0;

  /// The map on invariants, with HF(-Y_n) identified with its F_{V_n} image.
  HalfLaurent apply(const HalfLaurent& p) const {
    switch (kind) {
      case CobordismMapKind::v_n:
        return apply_F_Vn(coordinates_of(n, p));
      case CobordismMapKind::w_n:
        return map_F_Wn(n, p);
      case CobordismMapKind::w_inf:
        return map_F_Winf(p);
      case CobordismMapKind::v_inf:
        return map_F_Vinf(p);
    }
    throw std::logic_error("CobordismMapSpec: unknown kind");
  }

  std::string name() const {
    switch (kind) {
      case CobordismMapKind::v_n:
        return "F_V" + std::to_string(n);
      case CobordismMapKind::w_n:
        return "F_W" + std::to_string(n);
      case CobordismMapKind::w_inf:
        return "F_Winf";
      case CobordismMapKind::v_inf:
        return "F_Vinf";
    }
    return "?";
  }
};

// ---------------------------------------------------------------------------
// Sweeps

inline IntegerMatrix coordinate_matrix(std::int64_t n) {
  auto ds = descriptors(n);
  IntegerMatrix m(ds.size(), static_cast<std::size_t>(n - 1));
  for (std::size_t r = 0; r < ds.size(); ++r) {
    auto v = coordinates(ds[r]);
    for (std::size_t c = 0; c < v.coords.size(); ++c) {
      m(r, c) = v.coords[c];
    }
  }
  return m;
}

struct DistinctnessResult {
  bool ok = true;
  std::string failure;
  std::optional<std::pair<ContactDescriptor, ContactDescriptor>> counterexample;
};

/// All invariants of P_n are nonzero and pairwise distinct.
inline DistinctnessResult verify_distinctness(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("verify_distinctness: n must be >= 2");
  }
  std::map<std::vector<Integer>, ContactDescriptor> seen;
  for (const auto& d : descriptors(n)) {
    auto v = coordinates(d);
    if (v.is_zero()) {
      return {false, "invariant of " + d.to_string() + " vanishes", std::make_pair(d, d)};
    }
    auto [it, inserted] = seen.emplace(v.coords, d);
    if (!inserted) {
      return {false, it->second.to_string() + " and " + d.to_string() + " have equal invariants",
              std::make_pair(it->second, d)};
    }
  }
  return {};
}

struct DiagramResult {
  bool ok = true;
  std::string failure;
  std::optional<ContactDescriptor> counterexample;
};

/// F_{V_{n+1}} o F_{W_n} = F_{W_inf} o F_{V_n} on every c(eta^n_{i,j}), and the
/// common value is the normalized invariant of eta^{n+1}_{i+1,j}.
inline DiagramResult verify_diagram(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("verify_diagram: n must be >= 2");
  }
  for (const auto& d : descriptors(n)) {
    auto v = coordinates(d);
    HalfLaurent through_w = apply_F_Vn(map_F_Wn(v));
    HalfLaurent through_winf = map_F_Winf(apply_F_Vn(v));
    HalfLaurent expected = invariant({d.n + 1, d.i + 1, d.j});
    if (!(through_w == through_winf)) {
      return {false, d.to_string() + ": " + through_w.to_string() + " != " + through_winf.to_string(), d};
    }
    if (!(through_w == expected)) {
      return {false, d.to_string() + ": image " + through_w.to_string() + " is not c(" +
                         ContactDescriptor{d.n + 1, d.i + 1, d.j}.to_string() + ") = " + expected.to_string(),
              d};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Gradings

/// theta = c1^2 - 2 chi - 3 sigma of an almost complex filling.
inline std::int64_t gompf_theta(std::int64_t c1_squared, std::int64_t euler, std::int64_t signature) {
  return c1_squared - 2 * euler - 3 * signature;
}

/// Degree -theta/4 - 1/2 of the contact invariant.
inline Rational contact_degree(std::int64_t theta) { return Rational(-theta, 4) - Rational(1, 2); }

struct GradingData {
  std::int64_t c1_squared = 0;
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  std::int64_t theta = 0;
  Rational degree;

  static GradingData from(std::int64_t c1_squared, std::int64_t euler, std::int64_t signature) {
    std::int64_t theta = gompf_theta(c1_squared, euler, signature);
    return {c1_squared, euler, signature, theta, contact_degree(theta)};
  }
};

/// (Y_inf, xi_i): c1 = 0 on a filling with chi = 2, sigma = 0.
inline GradingData xi_grading() { return GradingData::from(0, 2, 0); }

/// (Y_n, eta^n_{i,j}): one more 2-handle, chi = 3, sigma = 0, c1^2 = 0.
inline GradingData eta_grading() { return GradingData::from(0, 3, 0); }

struct DegreeShift {
  std::int64_t shift = 0;
  /// <c1(s_k), [Sigma-hat]>
  std::int64_t pairing = 0;
};

/// Degree shift of the surgery-triangle cobordism in the Spin^c structure s_k:
/// (c1^2 - 2 chi - 3 sigma)/4 with c1^2 = -(2k+1)^2, chi = 1, sigma = -1.
inline DegreeShift degree_shift(std::int64_t k) {
  std::int64_t pairing = 2 * k + 1;
  std::int64_t numerator = -pairing * pairing - 2 * 1 - 3 * (-1);
  if (numerator % 4 != 0) {
    throw std::logic_error("degree_shift: non-integral shift");
  }
  std::int64_t shift = numerator / 4;
  if (shift != -k * (k + 1) || shift > 0) {
    throw std::logic_error("degree_shift: shift " + std::to_string(shift) + " is not -k(k+1) <= 0");
  }
  return {shift, pairing};
}

struct HfSummand {
  Rational degree;
  std::int64_t rank = 0;
};

struct HfRankData {
  std::string manifold;
  std::vector<HfSummand> summands;
};

/// HF-hat(-Y_inf) in the torsion Spin^c structure: rank one in degrees 1/2 and 3/2.
inline HfRankData hf_rank_data_inf() { return {"Y_inf", {{Rational(1, 2), 1}, {Rational(3, 2), 1}}}; }

/// HF-hat_{+1}(-Y_n) = Z^{n-1}, spanned by the c(eta^n_{0,j}).
inline HfRankData hf_rank_data(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("hf_rank_data: n must be >= 2");
  }
  auto rows = static_cast<std::int64_t>(rank(coordinate_matrix(n)));
  if (rows != n - 1) {
    throw std::logic_error("hf_rank_data: coordinate rank " + std::to_string(rows) + " differs from n-1");
  }
  return {"Y_" + std::to_string(n), {{Rational(1), n - 1}}};
}

}  // namespace brieskorn
