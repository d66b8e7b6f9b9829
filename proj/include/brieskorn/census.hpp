#pragma once

// The index triangle P_n of tight structures eta^n_{i,j} on -Sigma(2,3,6n-1),
// its sub-triangles, and the Legendrian bookkeeping behind each structure.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn {

/// eta^n_{i,j}: 0 <= i <= n-2, |j| <= n-i-2, j = n-i (mod 2).
struct ContactDescriptor {
  std::int64_t n = 2;
  std::int64_t i = 0;
  std::int64_t j = 0;

  bool is_valid() const {
    if (n < 2 || i < 0 || i > n - 2) {
      return false;
    }
    std::int64_t bound = n - i - 2;
    return j >= -bound && j <= bound && ((n - i - j) % 2 == 0);
  }

  void require_valid() const {
    if (!is_valid()) {
      throw std::invalid_argument("invalid descriptor " + to_string());
    }
  }

  std::string to_string() const {
    return "eta^" + std::to_string(n) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  }

  friend bool operator==(const ContactDescriptor&, const ContactDescriptor&) = default;
  friend auto operator<=>(const ContactDescriptor&, const ContactDescriptor&) = default;
};

using IndexPair = std::pair<std::int64_t, std::int64_t>;

inline std::int64_t census_size(std::int64_t n) { return n * (n - 1) / 2; }

/// P_n in ascending lexicographic (i, j) order.
inline std::vector<IndexPair> index_set(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("index_set: n must be >= 2");
  }
  std::vector<IndexPair> out;
  out.reserve(static_cast<std::size_t>(census_size(n)));
  for (std::int64_t i = 0; i <= n - 2; ++i) {
    for (std::int64_t j = -(n - i - 2); j <= n - i - 2; j += 2) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

inline std::vector<ContactDescriptor> descriptors(std::int64_t n) {
  std::vector<ContactDescriptor> out;
  for (const auto& [i, j] : index_set(n)) {
    out.push_back({n, i, j});
  }
  return out;
}

/// {(k, l) in P_n : 0 <= k <= i, |l - j| <= i - k}: the triangle with top vertex
/// (i, j), whose base row is (0, j-i), (0, j-i+2), ..., (0, j+i).
inline std::vector<IndexPair> subtriangle(std::int64_t n, std::int64_t i, std::int64_t j) {
  ContactDescriptor{n, i, j}.require_valid();
  std::vector<IndexPair> out;
  for (const auto& [k, l] : index_set(n)) {
    if (k <= i && l >= j - (i - k) && l <= j + (i - k)) {
      out.emplace_back(k, l);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Legendrian data

enum class StabilizationSign { positive, negative };

/// A Legendrian realization of F: twisting relative to the Seifert framing,
/// rotation, and the numbers of positive/negative stabilizations applied to
/// the twisting -i-1 representative in (Y_inf, xi_i).
struct LegendrianPresentation {
  std::int64_t twisting = -1;
  std::int64_t rotation = 0;
  std::int64_t pos_stabs = 0;
  std::int64_t neg_stabs = 0;
  std::int64_t torsion_index = 0;

  friend bool operator==(const LegendrianPresentation&, const LegendrianPresentation&) = default;
};

/// Twisting of F and the coefficient (twisting - 1) of Legendrian surgery on it,
/// measured against the framing in which -n surgery on F gives Y_n.
struct FSurgeryData {
  std::int64_t twisting = 0;
  std::int64_t surgery_coefficient = 0;
};

/// The unstabilized F in (Y_inf, xi_i): tn = -i-1, so surgery on it gives Y_{i+2}.
inline FSurgeryData surgery_data_for_F(std::int64_t i) {
  if (i < 0) {
    throw std::invalid_argument("surgery_data_for_F: i must be >= 0");
  }
  return {-i - 1, -i - 2};
}

/// Stabilizations needed so that Legendrian surgery on F in (Y_inf, xi_i) has coefficient -n.
inline std::int64_t stabilization_count(std::int64_t n, std::int64_t i) {
  if (i < 0 || n < i + 2) {
    throw std::invalid_argument("stabilization_count: need 0 <= i <= n-2");
  }
  return n - i - 2;
}

inline LegendrianPresentation unstabilized_F(std::int64_t i) {
  return {surgery_data_for_F(i).twisting, 0, 0, 0, i};
}

inline LegendrianPresentation stabilize(LegendrianPresentation p, StabilizationSign sign) {
  p.twisting -= 1;
  if (sign == StabilizationSign::positive) {
    p.rotation += 1;
    p.pos_stabs += 1;
  } else {
    p.rotation -= 1;
    p.neg_stabs += 1;
  }
  return p;
}

inline LegendrianPresentation stabilize(LegendrianPresentation p, std::int64_t l, std::int64_t r) {
  if (l < 0 || r < 0) {
    throw std::invalid_argument("stabilize: negative stabilization count");
  }
  for (std::int64_t k = 0; k < l; ++k) {
    p = stabilize(p, StabilizationSign::positive);
  }
  for (std::int64_t k = 0; k < r; ++k) {
    p = stabilize(p, StabilizationSign::negative);
  }
  return p;
}

/// Legendrian surgery on F in xi_i stabilized l times positively and r times negatively.
inline ContactDescriptor descriptor_from_stabs(std::int64_t i, std::int64_t l, std::int64_t r) {
  if (i < 0 || l < 0 || r < 0) {
    throw std::invalid_argument("descriptor_from_stabs: arguments must be >= 0");
  }
  return {l + r + i + 2, i, l - r};
}

/// Inverse of descriptor_from_stabs: the (l, r) realizing d.
inline std::pair<std::int64_t, std::int64_t> stabs_from_descriptor(const ContactDescriptor& d) {
  d.require_valid();
  std::int64_t s = stabilization_count(d.n, d.i);
  return {(s + d.j) / 2, (s - d.j) / 2};
}

/// F_{i,j}: the Legendrian whose surgery produces eta^n_{i,j}.
inline LegendrianPresentation legendrian_for(const ContactDescriptor& d) {
  auto [l, r] = stabs_from_descriptor(d);
  return stabilize(unstabilized_F(d.i), l, r);
}

// ---------------------------------------------------------------------------
// Surgery factorizations

enum class ManifoldKind { y_inf, y_n };

/// (Y_inf, xi_i) or (Y_n, eta^n_{i,j}).
struct ContactTag {
  ManifoldKind manifold = ManifoldKind::y_inf;
  std::int64_t n = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;

  static ContactTag xi(std::int64_t i) { return {ManifoldKind::y_inf, 0, i, 0}; }
  static ContactTag eta(const ContactDescriptor& d) { return {ManifoldKind::y_n, d.n, d.i, d.j}; }

  std::string to_string() const {
    if (manifold == ManifoldKind::y_inf) {
      return "(Y_inf, xi_" + std::to_string(i) + ")";
    }
    return "(Y_" + std::to_string(n) + ", " + ContactDescriptor{n, i, j}.to_string() + ")";
  }

  friend bool operator==(const ContactTag&, const ContactTag&) = default;
};

/// One Legendrian-surgery step; `link` is "C" (the link whose surgery removes
/// a torsion layer) or "L" (the stabilized F), `cobordism` the handle cobordism.
struct SurgeryStep {
  ContactTag from;
  ContactTag to;
  std::string link;
  std::string cobordism;
  std::int64_t handles = 1;
};

struct SurgeryRoute {
  std::vector<SurgeryStep> steps;

  const ContactTag& source() const { return steps.front().from; }
  const ContactTag& target() const { return steps.back().to; }
  std::int64_t handle_count() const {
    std::int64_t h = 0;
    for (const auto& s : steps) {
      h += s.handles;
    }
    return h;
  }
};

/// The two ways of reaching (Y_n, eta^n_{i,j}) from (Y_inf, xi_{i+1}):
/// through (Y_inf, xi_i) and through (Y_{n+1}, eta^{n+1}_{i+1,j}).
struct SurgeryFactorization {
  ContactTag source;
  ContactTag via_xi;
  ContactTag via_eta;
  ContactDescriptor target;
  SurgeryRoute through_xi;
  SurgeryRoute through_eta;
};

inline SurgeryFactorization factorizations(const ContactDescriptor& d) {
  d.require_valid();
  ContactDescriptor upper{d.n + 1, d.i + 1, d.j};
  upper.require_valid();
  const std::string n = std::to_string(d.n);
  SurgeryFactorization f;
  f.source = ContactTag::xi(d.i + 1);
  f.via_xi = ContactTag::xi(d.i);
  f.via_eta = ContactTag::eta(upper);
  f.target = d;
  f.through_xi.steps = {{f.source, f.via_xi, "C", "W_inf", 1},
                        {f.via_xi, ContactTag::eta(d), "L", "V_" + n, 1}};
  f.through_eta.steps = {{f.source, f.via_eta, "L", "V_" + std::to_string(d.n + 1), 1},
                         {f.via_eta, ContactTag::eta(d), "C", "W_" + n, 1}};
  if (!(f.through_xi.target() == f.through_eta.target())) {
    throw std::logic_error("factorizations: routes disagree on the target");
  }
  return f;
}

// ---------------------------------------------------------------------------
// Census records and text output

struct CensusRecord {
  std::int64_t n = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t l = 0;
  std::int64_t r = 0;
  std::int64_t twisting = 0;
  std::int64_t rotation = 0;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

inline std::vector<CensusRecord> census(std::int64_t n) {
  std::vector<CensusRecord> out;
  for (const auto& d : descriptors(n)) {
    auto leg = legendrian_for(d);
    out.push_back({d.n, d.i, d.j, leg.pos_stabs, leg.neg_stabs, leg.twisting, leg.rotation});
  }
  return out;
}

/// Rows from i = n-2 at the top down to i = 0; entry (i, j) sits in column j.
inline std::string census_triangle(std::int64_t n) {
  auto pairs = index_set(n);
  std::size_t width = 0;
  auto label = [&](std::int64_t i, std::int64_t j) {
    return "eta^" + std::to_string(n) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
  };
  for (const auto& [i, j] : pairs) {
    width = std::max(width, label(i, j).size());
  }
  // Each column j = -(n-2) .. n-2 gets a half-width cell so that neighbours in
  // a row are one full cell apart, as in the usual triangle display.
  const std::size_t half = (width + 2) / 2;
  std::string out;
  for (std::int64_t i = n - 2; i >= 0; --i) {
    std::string row;
    for (std::int64_t j = -(n - i - 2); j <= n - i - 2; j += 2) {
      std::size_t column = static_cast<std::size_t>(j + n - 2) * half;
      if (row.size() < column) {
        row.append(column - row.size(), ' ');
      }
      std::string cell = label(i, j);
      cell.resize(width, ' ');
      row += cell;
    }
    row.erase(row.find_last_not_of(' ') + 1);
    out += row + "\n";
  }
  return out;
}

}  // namespace brieskorn
