#pragma once

// Abstract open books at the level of H_1: a page with named curve classes and
// an explicit intersection form, a signed Dehn-twist word acting by
// transvections, lantern and Hopf moves, and the genus-one family compatible
// with (Y_inf, xi_i) and (Y_n, eta^n_{i,j}).

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <brieskorn/census.hpp>
#include <brieskorn/integer.hpp>
#include <brieskorn/matrix.hpp>
#include <brieskorn/slope.hpp>

namespace brieskorn {

struct Curve {
  std::string name;
  std::vector<Integer> coords;

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// A compact surface of the given genus with boundary_count >= 1 boundary
/// components. H_1 has rank 2g + b - 1; `form` is the intersection pairing on
/// the chosen coordinates. The standard form pairs coordinates (2k, 2k+1) with
/// <e_2k, e_2k+1> = 1 and is zero on the remaining (boundary) coordinates.
class PageSurface {
 public:
  PageSurface() : PageSurface(0, 1) {}

  PageSurface(std::int64_t genus, std::int64_t boundary_count)
      : genus_(genus), boundary_count_(boundary_count), form_(standard_form(genus, boundary_count)) {}

  PageSurface(std::int64_t genus, std::int64_t boundary_count, IntegerMatrix form)
      : genus_(genus), boundary_count_(boundary_count), form_(std::move(form)) {
    if (form_.rows() != expected_rank(genus, boundary_count) || !form_.is_square()) {
      throw std::invalid_argument("page: intersection form has the wrong size");
    }
    for (std::size_t a = 0; a < form_.rows(); ++a) {
      for (std::size_t b = 0; b < form_.cols(); ++b) {
        if (form_(a, b) != -form_(b, a)) {
          throw std::invalid_argument("page: intersection form is not skew-symmetric");
        }
      }
    }
  }

  static std::size_t expected_rank(std::int64_t genus, std::int64_t boundary_count) {
    if (genus < 0 || boundary_count < 1) {
      throw std::invalid_argument("page: need genus >= 0 and at least one boundary component");
    }
    return static_cast<std::size_t>(2 * genus + boundary_count - 1);
  }

  static IntegerMatrix standard_form(std::int64_t genus, std::int64_t boundary_count) {
    std::size_t r = expected_rank(genus, boundary_count);
    IntegerMatrix m(r, r);
    for (std::size_t k = 0; k < static_cast<std::size_t>(genus); ++k) {
      m(2 * k, 2 * k + 1) = 1;
      m(2 * k + 1, 2 * k) = -1;
    }
    return m;
  }

  std::int64_t genus() const { return genus_; }
  std::int64_t boundary_count() const { return boundary_count_; }
  std::size_t rank() const { return form_.rows(); }
  const IntegerMatrix& form() const { return form_; }
  bool has_standard_form() const { return form_ == standard_form(genus_, boundary_count_); }
  const std::vector<Curve>& curves() const { return curves_; }

  void add_curve(std::string name, std::vector<Integer> coords) {
    if (find(name)) {
      throw std::invalid_argument("page: duplicate curve '" + name + "'");
    }
    if (coords.size() != rank()) {
      throw std::invalid_argument("page: curve '" + name + "' has " + std::to_string(coords.size()) +
                                  " coordinates, expected " + std::to_string(rank()));
    }
    curves_.push_back({std::move(name), std::move(coords)});
  }

  const Curve* find(const std::string& name) const {
    for (const auto& c : curves_) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  const Curve& curve(const std::string& name) const {
    const Curve* c = find(name);
    if (c == nullptr) {
      throw std::invalid_argument("unknown curve '" + name + "'");
    }
    return *c;
  }

  Integer pairing(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
    Integer s = 0;
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (x[a] == 0) {
        continue;
      }
      for (std::size_t b = 0; b < y.size(); ++b) {
        if (y[b] != 0 && form_(a, b) != 0) {
          s += x[a] * form_(a, b) * y[b];
        }
      }
    }
    return s;
  }

  Integer pairing(const std::string& a, const std::string& b) const {
    return pairing(curve(a).coords, curve(b).coords);
  }

  /// Pairs to zero with every class, as for curves parallel to the boundary.
  bool is_boundary_parallel(const std::string& name) const {
    const auto& c = curve(name).coords;
    for (std::size_t a = 0; a < rank(); ++a) {
      std::vector<Integer> e(rank());
      e[a] = 1;
      if (pairing(e, c) != 0) {
        return false;
      }
    }
    return true;
  }

  /// Adds a coordinate whose pairings with the existing ones are `crossings`.
  void append_coordinate(const std::vector<Integer>& crossings, std::int64_t genus, std::int64_t boundary_count) {
    std::size_t r = rank();
    if (crossings.size() != r) {
      throw std::invalid_argument("page: crossing vector has the wrong length");
    }
    IntegerMatrix f(r + 1, r + 1);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        f(a, b) = form_(a, b);
      }
      f(a, r) = crossings[a];
      f(r, a) = -crossings[a];
    }
    *this = rebuilt(genus, boundary_count, std::move(f), r, std::nullopt);
  }

  /// Removes coordinate k from the form and from every curve.
  void remove_coordinate(std::size_t k, std::int64_t genus, std::int64_t boundary_count) {
    std::size_t r = rank();
    if (k >= r) {
      throw std::out_of_range("page: coordinate index");
    }
    IntegerMatrix f(r - 1, r - 1);
    for (std::size_t a = 0, fa = 0; a < r; ++a) {
      if (a == k) {
        continue;
      }
      for (std::size_t b = 0, fb = 0; b < r; ++b) {
        if (b == k) {
          continue;
        }
        f(fa, fb) = form_(a, b);
        ++fb;
      }
      ++fa;
    }
    *this = rebuilt(genus, boundary_count, std::move(f), r, k);
  }

  void remove_curve(const std::string& name) {
    curves_.erase(std::remove_if(curves_.begin(), curves_.end(), [&](const Curve& c) { return c.name == name; }),
                  curves_.end());
  }

  friend bool operator==(const PageSurface&, const PageSurface&) = default;

 private:
  PageSurface rebuilt(std::int64_t genus, std::int64_t boundary_count, IntegerMatrix f, std::size_t old_rank,
                      std::optional<std::size_t> dropped) const {
    PageSurface p(genus, boundary_count, std::move(f));
    for (const auto& c : curves_) {
      std::vector<Integer> coords;
      for (std::size_t a = 0; a < old_rank; ++a) {
        if (!dropped || a != *dropped) {
          coords.push_back(c.coords[a]);
        }
      }
      if (!dropped) {
        coords.push_back(0);
      }
      p.curves_.push_back({c.name, std::move(coords)});
    }
    return p;
  }

  std::int64_t genus_ = 0;
  std::int64_t boundary_count_ = 1;
  IntegerMatrix form_;
  std::vector<Curve> curves_;
};

struct Twist {
  std::string curve;
  int sign = 1;

  friend bool operator==(const Twist&, const Twist&) = default;
};

using TwistWord = std::vector<Twist>;

inline std::string to_string(const TwistWord& w) {
  std::string s;
  for (const auto& t : w) {
    s += (s.empty() ? "" : " ") + t.curve + (t.sign > 0 ? "+" : "-");
  }
  return s;
}

/// The dual arc of a Hopf band: it crosses `curve` once at `coordinate` and
/// nothing else in the word. `joined_distinct` records whether the band joined
/// two boundary components (raising the genus) or one (adding a boundary).
struct Cocore {
  std::string arc;
  std::string curve;
  std::size_t coordinate = 0;
  bool joined_distinct = false;

  friend bool operator==(const Cocore&, const Cocore&) = default;
};

struct OpenBookMarkers {
  /// Curves met, in order, by a meridian circle swept once around the torus page.
  std::vector<std::string> walk;
  /// Curve names of each Giroux torsion block, in walk order.
  std::vector<std::vector<std::string>> torsion_blocks;
  std::vector<Cocore> cocores;
  /// Curves kept for reference but not necessarily twisted (F, L_{l,r}).
  std::vector<std::string> named;
  std::optional<ContactDescriptor> descriptor;

  friend bool operator==(const OpenBookMarkers&, const OpenBookMarkers&) = default;
};

struct AbstractOpenBook {
  PageSurface page;
  TwistWord word;
  OpenBookMarkers markers;

  void validate() const {
    for (const auto& t : word) {
      page.curve(t.curve);
      if (t.sign != 1 && t.sign != -1) {
        throw std::invalid_argument("twist sign must be +1 or -1");
      }
    }
  }

  std::size_t occurrences(const std::string& name) const {
    return static_cast<std::size_t>(
        std::count_if(word.begin(), word.end(), [&](const Twist& t) { return t.curve == name; }));
  }

  bool in_word(const std::string& name) const { return occurrences(name) > 0; }

  friend bool operator==(const AbstractOpenBook&, const AbstractOpenBook&) = default;
};

inline std::int64_t euler_characteristic(const AbstractOpenBook& b) {
  return 2 - 2 * b.page.genus() - b.page.boundary_count();
}

// ---------------------------------------------------------------------------
// Action on H_1

/// x -> x + sign <x, c> c
inline IntegerMatrix transvection(const PageSurface& page, const std::vector<Integer>& c, int sign) {
  const std::size_t r = page.rank();
  IntegerMatrix t = IntegerMatrix::identity(r);
  for (std::size_t col = 0; col < r; ++col) {
    std::vector<Integer> e(r);
    e[col] = 1;
    Integer p = page.pairing(e, c);
    if (p == 0) {
      continue;
    }
    for (std::size_t row = 0; row < r; ++row) {
      t(row, col) += sign * p * c[row];
    }
  }
  return t;
}

/// Twists act left to right: the matrix of w_1 w_2 ... w_k is T_{w_k} ... T_{w_1}.
inline IntegerMatrix word_action(const PageSurface& page, const TwistWord& word) {
  IntegerMatrix m = IntegerMatrix::identity(page.rank());
  for (const auto& t : word) {
    m = transvection(page, page.curve(t.curve).coords, t.sign) * m;
  }
  return m;
}

inline IntegerMatrix h1_action(const AbstractOpenBook& b) { return word_action(b.page, b.word); }

enum class BraidCheck { holds, fails, inapplicable };

inline std::string to_string(BraidCheck c) {
  switch (c) {
    case BraidCheck::holds:
      return "holds";
    case BraidCheck::fails:
      return "fails";
    case BraidCheck::inapplicable:
      return "inapplicable";
  }
  return "?";
}

/// T_a T_b T_a = T_b T_a T_b on H_1, for curves meeting once algebraically.
inline BraidCheck braid_relation_check(const PageSurface& page, const std::string& a, const std::string& b) {
  Integer p = page.pairing(a, b);
  if (p != 1 && p != -1) {
    return BraidCheck::inapplicable;
  }
  TwistWord aba{{a, 1}, {b, 1}, {a, 1}};
  TwistWord bab{{b, 1}, {a, 1}, {b, 1}};
  return word_action(page, aba) == word_action(page, bab) ? BraidCheck::holds : BraidCheck::fails;
}

/// Every pair of page curves with pairing +-1.
inline std::vector<std::pair<std::string, std::string>> braid_pairs(const PageSurface& page) {
  std::vector<std::pair<std::string, std::string>> out;
  const auto& cs = page.curves();
  for (std::size_t x = 0; x < cs.size(); ++x) {
    for (std::size_t y = x + 1; y < cs.size(); ++y) {
      Integer p = page.pairing(cs[x].coords, cs[y].coords);
      if (p == 1 || p == -1) {
        out.emplace_back(cs[x].name, cs[y].name);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lantern relation

/// A four-holed sphere in the page: boundary curves d1..d4 and interior curves
/// s1, s2, s3 with d1 d2 d3 d4 = s1 s2 s3.
struct LanternSite {
  std::array<std::string, 4> boundary;
  std::array<std::string, 3> interior;
};

/// The seven classes pair trivially with each other, the d_k sum to zero and
/// the s_k are, up to sign, d1+d2, d1+d3, d1+d4 in some order.
inline void validate_lantern_site(const PageSurface& page, const LanternSite& site) {
  std::vector<const Curve*> all;
  for (const auto& n : site.boundary) {
    all.push_back(&page.curve(n));
  }
  for (const auto& n : site.interior) {
    all.push_back(&page.curve(n));
  }
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      if (page.pairing(all[x]->coords, all[y]->coords) != 0) {
        throw std::invalid_argument("lantern site: '" + all[x]->name + "' and '" + all[y]->name +
                                    "' have nonzero pairing");
      }
    }
  }
  const std::size_t r = page.rank();
  auto add = [&](const std::vector<Integer>& u, const std::vector<Integer>& v) {
    std::vector<Integer> s(r);
    for (std::size_t k = 0; k < r; ++k) {
      s[k] = u[k] + v[k];
    }
    return s;
  };
  auto negate = [&](std::vector<Integer> u) {
    for (auto& x : u) {
      x = -x;
    }
    return u;
  };
  std::vector<Integer> total(r);
  for (std::size_t k = 0; k < 4; ++k) {
    total = add(total, all[k]->coords);
  }
  if (total != std::vector<Integer>(r)) {
    throw std::invalid_argument("lantern site: boundary classes do not sum to zero");
  }
  std::vector<std::vector<Integer>> expected{add(all[0]->coords, all[1]->coords), add(all[0]->coords, all[2]->coords),
                                             add(all[0]->coords, all[3]->coords)};
  std::vector<bool> used(3, false);
  for (std::size_t s = 4; s < 7; ++s) {
    bool matched = false;
    for (std::size_t e = 0; e < 3 && !matched; ++e) {
      if (!used[e] && (all[s]->coords == expected[e] || negate(all[s]->coords) == expected[e])) {
        used[e] = true;
        matched = true;
      }
    }
    if (!matched) {
      throw std::invalid_argument("lantern site: interior curve '" + all[s]->name +
                                  "' is not a sum of two boundary classes");
    }
  }
}

enum class LanternDirection { interior_to_boundary, boundary_to_interior };

namespace detail {

inline std::optional<std::size_t> find_block(const TwistWord& w, const TwistWord& block) {
  if (block.size() > w.size()) {
    return std::nullopt;
  }
  for (std::size_t k = 0; k + block.size() <= w.size(); ++k) {
    if (std::equal(block.begin(), block.end(), w.begin() + static_cast<std::ptrdiff_t>(k))) {
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Replaces the first contiguous s1 s2 s3 by d1 d2 d3 d4 or the reverse.
inline TwistWord lantern_rewrite(const TwistWord& w, const LanternSite& site, LanternDirection dir) {
  TwistWord interior, boundary;
  for (const auto& n : site.interior) {
    interior.push_back({n, 1});
  }
  for (const auto& n : site.boundary) {
    boundary.push_back({n, 1});
  }
  const TwistWord& from = dir == LanternDirection::interior_to_boundary ? interior : boundary;
  const TwistWord& to = dir == LanternDirection::interior_to_boundary ? boundary : interior;
  auto at = detail::find_block(w, from);
  if (!at) {
    throw std::invalid_argument("lantern_rewrite: word does not contain the site contiguously");
  }
  TwistWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*at));
  out.insert(out.end(), to.begin(), to.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(*at + from.size()), w.end());
  return out;
}

/// Rewrites whichever side of the relation occurs first in the word.
inline AbstractOpenBook lantern_rewrite(const AbstractOpenBook& b, const LanternSite& site) {
  validate_lantern_site(b.page, site);
  TwistWord interior, boundary;
  for (const auto& n : site.interior) {
    interior.push_back({n, 1});
  }
  for (const auto& n : site.boundary) {
    boundary.push_back({n, 1});
  }
  auto ai = detail::find_block(b.word, interior);
  auto ab = detail::find_block(b.word, boundary);
  if (!ai && !ab) {
    throw std::invalid_argument("lantern_rewrite: word does not contain the site contiguously");
  }
  LanternDirection dir = (ai && (!ab || *ai <= *ab)) ? LanternDirection::interior_to_boundary
                                                     : LanternDirection::boundary_to_interior;
  AbstractOpenBook out = b;
  out.word = lantern_rewrite(b.word, site, dir);
  if (h1_action(out) != h1_action(b)) {
    throw std::logic_error("lantern_rewrite: H_1 action changed");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hopf stabilization

/// A properly embedded arc with endpoints on boundary components `from` and
/// `to`. `crossings[k]` is the pairing of the new band's core with coordinate k.
struct HopfArc {
  std::string name;
  std::string core;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::vector<Integer> crossings;
};

/// Attaches a band along the arc and appends a positive twist along its core.
inline AbstractOpenBook hopf_stabilize(const AbstractOpenBook& b, const HopfArc& arc) {
  const std::int64_t bc = b.page.boundary_count();
  if (arc.from < 0 || arc.to < 0 || arc.from >= bc || arc.to >= bc) {
    throw std::invalid_argument("hopf_stabilize: arc endpoints must lie on boundary components 0.." +
                                std::to_string(bc - 1));
  }
  std::vector<Integer> crossings = arc.crossings;
  if (crossings.empty()) {
    crossings.assign(b.page.rank(), 0);
  }
  const bool distinct = arc.from != arc.to;
  AbstractOpenBook out = b;
  const std::int64_t genus = b.page.genus() + (distinct ? 1 : 0);
  const std::int64_t boundary = bc + (distinct ? -1 : 1);
  out.page.append_coordinate(crossings, genus, boundary);
  const std::size_t k = out.page.rank() - 1;
  std::vector<Integer> core(out.page.rank());
  core[k] = 1;
  out.page.add_curve(arc.core, std::move(core));
  out.word.push_back({arc.core, 1});
  out.markers.cocores.push_back({arc.name, arc.core, k, distinct});
  return out;
}

namespace detail {

inline bool can_destabilize(const AbstractOpenBook& b, const Cocore& c) {
  const Curve* core = b.page.find(c.curve);
  if (core == nullptr || c.coordinate >= b.page.rank()) {
    return false;
  }
  if (core->coords[c.coordinate] != 1 && core->coords[c.coordinate] != -1) {
    return false;
  }
  std::size_t positive = 0;
  for (const auto& t : b.word) {
    if (t.curve == c.curve) {
      if (t.sign != 1) {
        return false;
      }
      ++positive;
    } else if (b.page.curve(t.curve).coords[c.coordinate] != 0) {
      return false;
    }
  }
  if (positive != 1) {
    return false;
  }
  if (c.joined_distinct && b.page.genus() == 0) {
    return false;
  }
  return true;
}

}  // namespace detail

/// Removes a band through the first (or the named) cocore whose core is twisted
/// exactly once, positively, and which no other twist crosses. Curves that are
/// not twisted and pass through the band are dropped along with it.
inline AbstractOpenBook hopf_destabilize(const AbstractOpenBook& b, const std::optional<std::string>& arc = {}) {
  const Cocore* chosen = nullptr;
  for (const auto& c : b.markers.cocores) {
    if ((!arc || c.arc == *arc) && detail::can_destabilize(b, c)) {
      chosen = &c;
      break;
    }
  }
  if (chosen == nullptr) {
    throw std::invalid_argument(arc ? "hopf_destabilize: arc '" + *arc + "' is not a destabilizing arc"
                                    : std::string("hopf_destabilize: no destabilizing arc found"));
  }
  const Cocore c = *chosen;
  AbstractOpenBook out = b;
  out.word.erase(std::remove_if(out.word.begin(), out.word.end(), [&](const Twist& t) { return t.curve == c.curve; }),
                 out.word.end());
  std::vector<std::string> dropped{c.curve};
  for (const auto& cv : b.page.curves()) {
    if (cv.name != c.curve && cv.coords[c.coordinate] != 0) {
      dropped.push_back(cv.name);
    }
  }
  for (const auto& name : dropped) {
    out.page.remove_curve(name);
  }
  const std::int64_t genus = b.page.genus() - (c.joined_distinct ? 1 : 0);
  const std::int64_t boundary = b.page.boundary_count() + (c.joined_distinct ? 1 : -1);
  out.page.remove_coordinate(c.coordinate, genus, boundary);

  auto gone = [&](const std::string& n) { return std::find(dropped.begin(), dropped.end(), n) != dropped.end(); };
  auto& m = out.markers;
  m.walk.erase(std::remove_if(m.walk.begin(), m.walk.end(), gone), m.walk.end());
  m.named.erase(std::remove_if(m.named.begin(), m.named.end(), gone), m.named.end());
  for (auto& block : m.torsion_blocks) {
    block.erase(std::remove_if(block.begin(), block.end(), gone), block.end());
  }
  m.torsion_blocks.erase(std::remove_if(m.torsion_blocks.begin(), m.torsion_blocks.end(),
                                        [](const auto& blk) { return blk.empty(); }),
                         m.torsion_blocks.end());
  std::vector<Cocore> kept;
  for (auto cc : m.cocores) {
    if (cc.arc == c.arc || gone(cc.curve)) {
      continue;
    }
    if (cc.coordinate > c.coordinate) {
      --cc.coordinate;
    }
    kept.push_back(cc);
  }
  m.cocores = std::move(kept);
  return out;
}

/// Cancels adjacent c+ c- and c- c+ pairs until none remain.
inline TwistWord cancel_inverse_pairs(const TwistWord& w) {
  TwistWord out;
  for (const auto& t : w) {
    if (!out.empty() && out.back().curve == t.curve && out.back().sign == -t.sign) {
      out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  return out;
}

/// Drops curves that are neither twisted nor named, together with their walk
/// and block entries.
inline AbstractOpenBook prune_unused_curves(const AbstractOpenBook& b) {
  AbstractOpenBook out = b;
  std::vector<std::string> unused;
  for (const auto& c : b.page.curves()) {
    bool named = std::find(b.markers.named.begin(), b.markers.named.end(), c.name) != b.markers.named.end();
    if (!named && !b.in_word(c.name)) {
      unused.push_back(c.name);
    }
  }
  auto gone = [&](const std::string& n) { return std::find(unused.begin(), unused.end(), n) != unused.end(); };
  for (const auto& n : unused) {
    out.page.remove_curve(n);
  }
  auto& m = out.markers;
  m.walk.erase(std::remove_if(m.walk.begin(), m.walk.end(), gone), m.walk.end());
  for (auto& block : m.torsion_blocks) {
    block.erase(std::remove_if(block.begin(), block.end(), gone), block.end());
  }
  m.torsion_blocks.erase(std::remove_if(m.torsion_blocks.begin(), m.torsion_blocks.end(),
                                        [](const auto& blk) { return blk.empty(); }),
                         m.torsion_blocks.end());
  m.cocores.erase(std::remove_if(m.cocores.begin(), m.cocores.end(), [&](const Cocore& c) { return gone(c.curve); }),
                  m.cocores.end());
  return out;
}

// ---------------------------------------------------------------------------
// Builtin books

/// A disk with the identity monodromy.
inline AbstractOpenBook disk_book() { return {PageSurface(0, 1), {}, {}}; }

/// The four-holed sphere after the lantern relation, with the destabilizing
/// arc through s1. Coordinates are the classes of d3, d4, d1.
inline AbstractOpenBook lantern_segment_book() {
  AbstractOpenBook b{PageSurface(0, 4), {}, {}};
  b.page.add_curve("d1", {0, 0, 1});
  b.page.add_curve("d2", {-1, -1, -1});
  b.page.add_curve("d3", {1, 0, 0});
  b.page.add_curve("d4", {0, 1, 0});
  b.page.add_curve("s1", {1, 0, 1});
  b.page.add_curve("s2", {-1, -1, 0});
  b.page.add_curve("s3", {0, -1, -1});
  b.word = {{"s1", 1}, {"s2", 1}, {"d4", -1}, {"d3", -1}};
  b.markers.cocores.push_back({"a", "s1", 2, false});
  return b;
}

/// The same segment before the lantern relation: d1 d2 s3^{-1}.
inline AbstractOpenBook braid_segment_b2() {
  AbstractOpenBook b = lantern_segment_book();
  b.word = {{"d1", 1}, {"d2", 1}, {"s3", -1}};
  return b;
}

/// The pair of pants left after destabilizing the lantern segment.
inline AbstractOpenBook braid_segment_b1() {
  AbstractOpenBook b{PageSurface(0, 3), {}, {}};
  b.page.add_curve("d3", {1, 0});
  b.page.add_curve("d4", {0, 1});
  b.page.add_curve("s2", {-1, -1});
  b.word = {{"s2", 1}, {"d4", -1}, {"d3", -1}};
  return b;
}

inline LanternSite standard_lantern_site() { return {{"d1", "d2", "d3", "d4"}, {"s1", "s2", "s3"}}; }

/// The genus-one book for (Y_inf, xi_i), optionally with the positive twist
/// along L_{l,r} that gives (Y_n, eta^n_{i,j}), j = l-r, n = l+r+i+2.
///
/// Coordinates are lambda, mu, then one per hole: h0, the 6i torsion-block
/// holes, the l left and r right stabilization holes. An untwisted outer
/// boundary carries minus the sum of the holes. Going around the torus the
/// meridian circle meets m0, h0, then m{t}.{k}, h{t}.{k} for each block t and
/// k = 1..6; each meridian is mu plus the holes met before it. F = lambda and
/// L_{l,r} = lambda + (left holes) - (right holes).
inline AbstractOpenBook figure3_book(std::int64_t i, std::int64_t l, std::int64_t r, bool with_surgery_twist) {
  if (i < 0 || l < 0 || r < 0) {
    throw std::invalid_argument("figure3_book: i, l, r must be >= 0");
  }
  const std::int64_t holes = 1 + 6 * i + l + r;
  AbstractOpenBook b{PageSurface(1, holes + 1), {}, {}};
  const std::size_t rank = b.page.rank();
  auto unit = [&](std::size_t k) {
    std::vector<Integer> v(rank);
    v[k] = 1;
    return v;
  };

  std::vector<Integer> meridian = unit(1);
  std::size_t next = 2;
  auto add_pair = [&](const std::string& m, const std::string& h) {
    b.page.add_curve(m, meridian);
    b.page.add_curve(h, unit(next));
    b.word.push_back({m, -1});
    b.word.push_back({h, 1});
    b.markers.walk.push_back(m);
    b.markers.walk.push_back(h);
    b.markers.cocores.push_back({"arc." + h, h, next, false});
    meridian[next] = 1;
    ++next;
  };
  add_pair("m0", "h0");
  for (std::int64_t t = 1; t <= i; ++t) {
    std::vector<std::string> block;
    for (int k = 1; k <= 6; ++k) {
      std::string suffix = std::to_string(t) + "." + std::to_string(k);
      add_pair("m" + suffix, "h" + suffix);
      block.push_back("m" + suffix);
      block.push_back("h" + suffix);
    }
    b.markers.torsion_blocks.push_back(std::move(block));
  }

  std::vector<Integer> leg = unit(0);
  auto add_stab = [&](const std::string& name, int side) {
    b.page.add_curve(name, unit(next));
    b.word.push_back({name, 1});
    b.markers.cocores.push_back({"arc." + name, name, next, false});
    leg[next] = side;
    ++next;
  };
  for (std::int64_t k = 1; k <= l; ++k) {
    add_stab("sl" + std::to_string(k), 1);
  }
  for (std::int64_t k = 1; k <= r; ++k) {
    add_stab("sr" + std::to_string(k), -1);
  }
  b.page.add_curve("F", unit(0));
  b.page.add_curve("L", leg);
  b.markers.named = {"F", "L"};
  if (with_surgery_twist) {
    b.word.push_back({"L", 1});
    b.markers.descriptor = descriptor_from_stabs(i, l, r);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Torus-bundle monodromy

/// Negative twist along a meridian parallel to the sweeping circle.
inline UnimodularMatrix meridian_generator() { return {1, 1, 0, 1}; }

/// Crossing a boundary circle carrying a positive twist.
inline UnimodularMatrix bypass_generator() { return {1, 0, -1, 1}; }

/// Monodromy of Y_inf as a T^2 bundle, [[1,1],[-1,0]].
inline UnimodularMatrix yinf_normal_form() { return yinf_monodromy(); }

/// S with S * a * S^{-1} == b, searching entries in [-bound, bound] in a fixed order.
inline std::optional<UnimodularMatrix> find_conjugator(const UnimodularMatrix& a, const UnimodularMatrix& b,
                                                       std::int64_t bound = 4) {
  for (std::int64_t p = -bound; p <= bound; ++p) {
    for (std::int64_t q = -bound; q <= bound; ++q) {
      for (std::int64_t r = -bound; r <= bound; ++r) {
        for (std::int64_t s = -bound; s <= bound; ++s) {
          if (p * s - q * r != 1) {
            continue;
          }
          UnimodularMatrix m(p, q, r, s);
          if (m * a == b * m) {
            return m;
          }
        }
      }
    }
  }
  return std::nullopt;
}

struct TorusMonodromy {
  UnimodularMatrix monodromy = UnimodularMatrix::identity();
  /// One generator per walk event, in walk order.
  std::vector<UnimodularMatrix> factors;
  std::optional<UnimodularMatrix> conjugator;
};

namespace detail {

inline std::vector<UnimodularMatrix> walk_factors(const AbstractOpenBook& b, const std::vector<std::string>& walk) {
  std::vector<UnimodularMatrix> out;
  for (const auto& name : walk) {
    bool parallel = b.page.is_boundary_parallel(name);
    for (const auto& t : b.word) {
      if (t.curve != name) {
        continue;
      }
      if (!parallel && t.sign < 0) {
        out.push_back(meridian_generator());
      } else if (parallel && t.sign > 0) {
        out.push_back(bypass_generator());
      } else {
        throw std::invalid_argument("torus_bundle_monodromy: twist " + name + (t.sign > 0 ? "+" : "-") +
                                    " does not fit the sweep rules");
      }
    }
  }
  return out;
}

inline UnimodularMatrix product(const std::vector<UnimodularMatrix>& ms) {
  UnimodularMatrix m = UnimodularMatrix::identity();
  for (const auto& f : ms) {
    m = m * f;
  }
  return m;
}

}  // namespace detail

/// Sweeps the meridian circle around the page and multiplies the generator of
/// each crossing in order. Twists off the walk must be boundary-parallel.
inline TorusMonodromy torus_bundle_monodromy(const AbstractOpenBook& b) {
  b.validate();
  if (b.markers.walk.empty()) {
    throw std::invalid_argument("torus_bundle_monodromy: book has no meridian walk");
  }
  for (const auto& t : b.word) {
    bool on_walk = std::find(b.markers.walk.begin(), b.markers.walk.end(), t.curve) != b.markers.walk.end();
    if (!on_walk && !b.page.is_boundary_parallel(t.curve)) {
      throw std::invalid_argument("torus_bundle_monodromy: twist along '" + t.curve +
                                  "' is outside the torus-bundle family");
    }
  }
  TorusMonodromy out;
  out.factors = detail::walk_factors(b, b.markers.walk);
  out.monodromy = detail::product(out.factors);
  out.conjugator = find_conjugator(out.monodromy, yinf_normal_form());
  return out;
}

/// Product of the walk generators of one torsion block.
inline UnimodularMatrix torsion_block_monodromy(const AbstractOpenBook& b, std::size_t block) {
  return detail::product(detail::walk_factors(b, b.markers.torsion_blocks.at(block)));
}

// ---------------------------------------------------------------------------
// Removing one torsion block by surgery on C

struct SurgeryReduction {
  AbstractOpenBook start;
  AbstractOpenBook after_c;
  AbstractOpenBook reduced;
  AbstractOpenBook expected;
  bool matches = false;
};

/// Adds positive twists along the meridians of the last torsion block of
/// figure3_book(i+1, l, r, surgery) (the link C), cancels them, destabilizes the
/// block's holes and compares with figure3_book(i, l, r, surgery).
inline SurgeryReduction reduce_torsion_block(std::int64_t i, std::int64_t l, std::int64_t r, bool with_surgery) {
  SurgeryReduction s;
  s.start = figure3_book(i + 1, l, r, with_surgery);
  const auto& block = s.start.markers.torsion_blocks.back();
  s.after_c = s.start;
  s.after_c.word.clear();
  for (const auto& t : s.start.word) {
    s.after_c.word.push_back(t);
    bool in_block = std::find(block.begin(), block.end(), t.curve) != block.end();
    if (in_block && t.sign < 0) {
      s.after_c.word.push_back({t.curve, 1});
    }
  }
  AbstractOpenBook cur = s.after_c;
  cur.word = cancel_inverse_pairs(cur.word);
  for (const auto& name : block) {
    if (s.start.page.is_boundary_parallel(name)) {
      cur = hopf_destabilize(cur, "arc." + name);
    }
  }
  s.reduced = prune_unused_curves(cur);
  s.expected = figure3_book(i, l, r, with_surgery);
  s.matches = euler_characteristic(s.reduced) == euler_characteristic(s.expected) &&
              s.reduced.page.boundary_count() == s.expected.page.boundary_count() &&
              h1_action(s.reduced) == h1_action(s.expected) &&
              s.reduced.page.curve("L").coords == s.expected.page.curve("L").coords;
  return s;
}

// ---------------------------------------------------------------------------
// Text format

/// `page g b`, optional `form i j v` lines for a nonstandard form, `curve name c...`,
/// `pair a b v` for every nonzero pairing, then `twist name +|-` in word order.
inline std::string serialize_book(const AbstractOpenBook& b) {
  std::ostringstream out;
  out << "page " << b.page.genus() << " " << b.page.boundary_count() << "\n";
  if (!b.page.has_standard_form()) {
    const auto& f = b.page.form();
    for (std::size_t x = 0; x < f.rows(); ++x) {
      for (std::size_t y = x + 1; y < f.cols(); ++y) {
        if (f(x, y) != 0) {
          out << "form " << x << " " << y << " " << f(x, y) << "\n";
        }
      }
    }
  }
  const auto& cs = b.page.curves();
  for (const auto& c : cs) {
    out << "curve " << c.name;
    for (const auto& x : c.coords) {
      out << " " << x;
    }
    out << "\n";
  }
  for (std::size_t x = 0; x < cs.size(); ++x) {
    for (std::size_t y = x + 1; y < cs.size(); ++y) {
      Integer p = b.page.pairing(cs[x].coords, cs[y].coords);
      if (p != 0) {
        out << "pair " << cs[x].name << " " << cs[y].name << " " << p << "\n";
      }
    }
  }
  for (const auto& t : b.word) {
    out << "twist " << t.curve << " " << (t.sign > 0 ? "+" : "-") << "\n";
  }
  return out.str();
}

inline AbstractOpenBook parse_book(std::istream& in) {
  auto parse_int = [](const std::string& s, std::size_t lineno) {
    try {
      return parse_rational(s);
    } catch (const std::invalid_argument& e) {
      throw parse_error(lineno, e.what());
    }
  };
  auto integral = [&](const std::string& s, std::size_t lineno) {
    Rational v = parse_int(s, lineno);
    if (!is_integer(v) || s.find('/') != std::string::npos) {
      throw parse_error(lineno, "expected an integer, got '" + s + "'");
    }
    return Integer(boost::multiprecision::numerator(v));
  };

  std::optional<std::pair<std::int64_t, std::int64_t>> shape;
  IntegerMatrix form;
  bool custom_form = false;
  std::optional<PageSurface> page;
  AbstractOpenBook book;
  std::vector<std::tuple<std::string, std::string, Integer, std::size_t>> pairs;

  auto ensure_page = [&](std::size_t lineno) -> PageSurface& {
    if (!shape) {
      throw parse_error(lineno, "missing 'page' line");
    }
    if (!page) {
      try {
        page = custom_form ? PageSurface(shape->first, shape->second, form) : PageSurface(shape->first, shape->second);
      } catch (const std::invalid_argument& e) {
        throw parse_error(lineno, e.what());
      }
    }
    return *page;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) {
      tok.push_back(t);
    }
    if (tok.empty()) {
      continue;
    }
    const std::string& kw = tok[0];
    if (kw == "page") {
      if (shape || tok.size() != 3) {
        throw parse_error(lineno, shape ? "duplicate 'page' line" : "expected 'page <genus> <boundary>'");
      }
      std::int64_t g = static_cast<std::int64_t>(integral(tok[1], lineno));
      std::int64_t bc = static_cast<std::int64_t>(integral(tok[2], lineno));
      try {
        std::size_t r = PageSurface::expected_rank(g, bc);
        form = IntegerMatrix(r, r);
      } catch (const std::invalid_argument& e) {
        throw parse_error(lineno, e.what());
      }
      shape = {g, bc};
    } else if (kw == "form") {
      if (!shape || page) {
        throw parse_error(lineno, "'form' lines must follow 'page' and precede curves");
      }
      if (tok.size() != 4) {
        throw parse_error(lineno, "expected 'form <i> <j> <value>'");
      }
      Integer a = integral(tok[1], lineno);
      Integer c = integral(tok[2], lineno);
      Integer v = integral(tok[3], lineno);
      if (a < 0 || c < 0 || a >= form.rows() || c >= form.rows() || a == c) {
        throw parse_error(lineno, "form index out of range");
      }
      auto x = static_cast<std::size_t>(a);
      auto y = static_cast<std::size_t>(c);
      form(x, y) = v;
      form(y, x) = -v;
      custom_form = true;
    } else if (kw == "curve") {
      PageSurface& p = ensure_page(lineno);
      if (tok.size() < 2) {
        throw parse_error(lineno, "expected 'curve <name> <coords...>'");
      }
      std::vector<Integer> coords;
      for (std::size_t k = 2; k < tok.size(); ++k) {
        coords.push_back(integral(tok[k], lineno));
      }
      try {
        p.add_curve(tok[1], std::move(coords));
      } catch (const std::invalid_argument& e) {
        throw parse_error(lineno, e.what());
      }
    } else if (kw == "pair") {
      ensure_page(lineno);
      if (tok.size() != 4) {
        throw parse_error(lineno, "expected 'pair <a> <b> <value>'");
      }
      pairs.emplace_back(tok[1], tok[2], integral(tok[3], lineno), lineno);
    } else if (kw == "twist") {
      PageSurface& p = ensure_page(lineno);
      if (tok.size() != 3 || (tok[2] != "+" && tok[2] != "-")) {
        throw parse_error(lineno, "expected 'twist <name> +|-'");
      }
      if (p.find(tok[1]) == nullptr) {
        throw parse_error(lineno, "twist along unknown curve '" + tok[1] + "'");
      }
      book.word.push_back({tok[1], tok[2] == "+" ? 1 : -1});
    } else {
      throw parse_error(lineno, "unknown keyword '" + kw + "'");
    }
  }
  book.page = ensure_page(lineno + 1);
  for (const auto& [a, c, v, at] : pairs) {
    if (book.page.find(a) == nullptr || book.page.find(c) == nullptr) {
      throw parse_error(at, "pair references an unknown curve");
    }
    if (book.page.pairing(a, c) != v) {
      throw parse_error(at, "pair " + a + " " + c + " is " + v.str() + " but the classes give " +
                                book.page.pairing(a, c).str());
    }
  }
  return book;
}

}  // namespace brieskorn
