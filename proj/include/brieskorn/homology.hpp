#pragma once

// Integer homology of the surgery descriptions: Smith normal form, cokernels,
// plumbing graphs with rational framings, torus bundles and the kernels
// K(W) = ker(H^2(W, dW) -> H^2(W)) of 2-handle cobordisms.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <brieskorn/integer.hpp>
#include <brieskorn/matrix.hpp>
#include <brieskorn/slope.hpp>

namespace brieskorn {

/// left * input * right == diagonal; left and right are unimodular and
/// right_inverse is the exact inverse of right.
struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left;
  IntegerMatrix right;
  IntegerMatrix right_inverse;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const {
    std::size_t r = 0;
    while (r < std::min(diagonal.rows(), diagonal.cols()) && diagonal(r, r) != 0) {
      ++r;
    }
    return r;
  }
};

/// Pivot is the smallest nonzero |entry| of the trailing block, ties broken by
/// lowest (row, column). Rows are cleared before columns.
inline SmithForm smith_normal_form(const IntegerMatrix& input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  IntegerMatrix a = input;
  IntegerMatrix u = IntegerMatrix::identity(rows);
  IntegerMatrix v = IntegerMatrix::identity(cols);
  IntegerMatrix vinv = IntegerMatrix::identity(cols);

  auto row_add = [&](std::size_t target, std::size_t source, const Integer& f) {
    a.add_row_multiple(target, source, f);
    u.add_row_multiple(target, source, f);
  };
  auto col_add = [&](std::size_t target, std::size_t source, const Integer& f) {
    a.add_col_multiple(target, source, f);
    v.add_col_multiple(target, source, f);
    // (I + f e_s e_t^T)^{-1} = I - f e_s e_t^T acts on rows of the inverse.
    vinv.add_row_multiple(source, target, -f);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
    vinv.swap_rows(x, y);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (a(r, c) != 0 && (!best || abs(a(r, c)) < abs(a(best->first, best->second)))) {
          best = {r, c};
        }
      }
    }
    if (!best) {
      break;
    }
    row_swap(t, best->first);
    col_swap(t, best->second);

    while (true) {
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) != 0) {
          Integer q = a(r, t) / a(t, t);
          if (q != 0) {
            row_add(r, t, -q);
          }
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) != 0) {
          Integer q = a(t, c) / a(t, t);
          if (q != 0) {
            col_add(c, t, -q);
          }
        }
      }
      // Remainders left in row/column t are smaller than the pivot; promote the smallest.
      std::optional<std::pair<std::size_t, std::size_t>> rem;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) != 0 && (!rem || abs(a(r, t)) < abs(a(rem->first, rem->second)))) {
          rem = {r, t};
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) != 0 && (!rem || abs(a(t, c)) < abs(a(rem->first, rem->second)))) {
          rem = {t, c};
        }
      }
      if (rem) {
        row_swap(t, rem->first);
        col_swap(t, rem->second);
        continue;
      }
      // Divisibility: pull a non-multiple of the pivot into row t and repeat.
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < rows && !offending; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a(r, c) % a(t, t) != 0) {
            offending = r;
            break;
          }
        }
      }
      if (!offending) {
        break;
      }
      row_add(t, *offending, 1);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(a), std::move(u), std::move(v), std::move(vinv)};
}

/// A finitely generated abelian group Z^rank + Z/t_1 + ... with t_1 | t_2 | ...
struct AbelianGroupSpec {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }

  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;

  std::string to_string() const {
    if (is_trivial()) {
      return "0";
    }
    std::string s;
    if (rank > 0) {
      s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    }
    for (const auto& t : torsion) {
      s += (s.empty() ? "" : " + ") + std::string("Z/") + t.str();
    }
    return s;
  }
};

/// coker(M: Z^cols -> Z^rows).
inline AbelianGroupSpec cokernel(const IntegerMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  AbelianGroupSpec g;
  std::size_t r = snf.rank();
  g.rank = m.rows() - r;
  for (std::size_t k = 0; k < r; ++k) {
    if (snf.diagonal(k, k) != 1) {
      g.torsion.push_back(snf.diagonal(k, k));
    }
  }
  return g;
}

/// Columns form a Z-basis of {x : M x = 0}.
inline IntegerMatrix kernel_basis(const IntegerMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  std::size_t r = snf.rank();
  IntegerMatrix basis(m.cols(), m.cols() - r);
  for (std::size_t k = r; k < m.cols(); ++k) {
    for (std::size_t row = 0; row < m.cols(); ++row) {
      basis(row, k - r) = snf.right(row, k);
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Plumbing graphs

struct PlumbingVertex {
  std::string name;
  Rational framing;

  friend bool operator==(const PlumbingVertex&, const PlumbingVertex&) = default;
};

/// Framed unknots, one per vertex, linked once along each edge.
class PlumbingGraph {
 public:
  std::size_t add_vertex(std::string name, Rational framing) {
    if (index_of(name)) {
      throw std::invalid_argument("plumbing graph: duplicate vertex '" + name + "'");
    }
    vertices_.push_back({std::move(name), std::move(framing)});
    return vertices_.size() - 1;
  }

  void add_edge(const std::string& a, const std::string& b) {
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib) {
      throw std::invalid_argument("plumbing graph: edge references unknown vertex");
    }
    add_edge(*ia, *ib);
  }

  void add_edge(std::size_t a, std::size_t b) {
    if (a == b) {
      throw std::invalid_argument("plumbing graph: self-loop at '" + vertices_[a].name + "'");
    }
    if (a >= vertices_.size() || b >= vertices_.size()) {
      throw std::out_of_range("plumbing graph: vertex index");
    }
    edges_.emplace_back(a, b);
  }

  const std::vector<PlumbingVertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (vertices_[k].name == name) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& [a, b] : edges_) {
      d += (a == v) + (b == v);
    }
    return d;
  }

  bool is_tree() const {
    if (vertices_.empty()) {
      return true;
    }
    if (edges_.size() + 1 != vertices_.size()) {
      return false;
    }
    // Union-find; a cycle shows up as an edge inside one class.
    std::vector<std::size_t> parent(vertices_.size());
    for (std::size_t k = 0; k < parent.size(); ++k) {
      parent[k] = k;
    }
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (const auto& [a, b] : edges_) {
      std::size_t ra = find(a);
      std::size_t rb = find(b);
      if (ra == rb) {
        return false;
      }
      parent[ra] = rb;
    }
    return true;
  }

  bool has_integer_framings() const {
    for (const auto& v : vertices_) {
      if (!is_integer(v.framing)) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  std::vector<PlumbingVertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Replaces each rational-framed leaf by the chain of its negative continued
/// fraction. The chain head keeps the vertex name and position; the rest are
/// appended as name.1, name.2, ...
inline PlumbingGraph expand_rational_framings(const PlumbingGraph& g) {
  PlumbingGraph out;
  std::vector<std::vector<Integer>> chains(g.vertices().size());
  for (std::size_t k = 0; k < g.vertices().size(); ++k) {
    const auto& v = g.vertices()[k];
    if (is_integer(v.framing)) {
      out.add_vertex(v.name, v.framing);
      continue;
    }
    if (g.degree(k) > 1) {
      throw std::invalid_argument("rational framing on non-leaf vertex '" + v.name + "'");
    }
    if (v.framing > 0) {
      throw std::invalid_argument("positive rational framing on '" + v.name + "' is not supported");
    }
    NcfExpansion e;
    try {
      e = neg_continued_fraction(v.framing);
    } catch (const std::domain_error& err) {
      throw std::invalid_argument("framing of '" + v.name + "' has no chain expansion: " + err.what());
    }
    out.add_vertex(v.name, Rational(e.coefficients.front()));
    chains[k] = std::move(e.coefficients);
  }
  for (const auto& [a, b] : g.edges()) {
    out.add_edge(a, b);
  }
  for (std::size_t k = 0; k < chains.size(); ++k) {
    std::size_t prev = k;
    for (std::size_t m = 1; m < chains[k].size(); ++m) {
      std::size_t next =
          out.add_vertex(g.vertices()[k].name + "." + std::to_string(m), Rational(chains[k][m]));
      out.add_edge(prev, next);
      prev = next;
    }
  }
  return out;
}

inline IntegerMatrix linking_matrix(const PlumbingGraph& g) {
  if (!g.has_integer_framings()) {
    throw std::invalid_argument("linking_matrix: rational framings present; expand_rational_framings first");
  }
  const std::size_t n = g.vertices().size();
  IntegerMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    m(k, k) = boost::multiprecision::numerator(g.vertices()[k].framing);
  }
  for (const auto& [a, b] : g.edges()) {
    m(a, b) += 1;
    m(b, a) += 1;
  }
  return m;
}

inline AbelianGroupSpec h1_of_surgery(const PlumbingGraph& g) {
  return cokernel(linking_matrix(expand_rational_framings(g)));
}

/// -Sigma(2,3,6n-1) as a star: a 0-framed centre with leaves 2, -3 and -(6n-1)/n.
inline PlumbingGraph yn_plumbing(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("yn_plumbing: n must be >= 2");
  }
  PlumbingGraph g;
  g.add_vertex("e0", Rational(0));
  g.add_vertex("r1", Rational(2));
  g.add_vertex("r2", Rational(-3));
  g.add_vertex("r3", Rational(-(6 * n - 1), n));
  g.add_edge("e0", "r1");
  g.add_edge("e0", "r2");
  g.add_edge("e0", "r3");
  return g;
}

/// A single 0-framed component; its H_1 agrees with 0-surgery on the trefoil.
inline PlumbingGraph yinf_plumbing() {
  PlumbingGraph g;
  g.add_vertex("k", Rational(0));
  return g;
}

/// Reads `vertex <name> <p/q>` and `edge <a> <b>` lines; '#' starts a comment.
inline PlumbingGraph parse_plumbing(std::istream& in) {
  PlumbingGraph g;
  std::string line;
  std::size_t lineno = 0;
  bool seen_edge = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) {
      continue;
    }
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw parse_error(lineno, "expected '" + keyword + " <arg> <arg>'");
    }
    try {
      if (keyword == "vertex") {
        if (seen_edge) {
          throw parse_error(lineno, "vertex lines must precede edge lines");
        }
        g.add_vertex(a, parse_rational(b));
      } else if (keyword == "edge") {
        seen_edge = true;
        g.add_edge(a, b);
      } else {
        throw parse_error(lineno, "unknown keyword '" + keyword + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw parse_error(lineno, e.what());
    }
  }
  return g;
}

inline std::string serialize_plumbing(const PlumbingGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) {
    out += "vertex " + v.name + " " + to_string(v.framing) + "\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out += "edge " + g.vertices()[a].name + " " + g.vertices()[b].name + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Torus bundles

/// H_1 of the mapping torus of A: Z + coker(A - I).
inline AbelianGroupSpec h1_torus_bundle(const UnimodularMatrix& a) {
  if (a.determinant() != 1) {
    throw std::invalid_argument("h1_torus_bundle: monodromy must have determinant 1");
  }
  IntegerMatrix m{{a.a() - 1, a.b()}, {a.c(), a.d() - 1}};
  AbelianGroupSpec g = cokernel(m);
  g.rank += 1;
  return g;
}

// ---------------------------------------------------------------------------
// 2-handle cobordisms

/// A cobordism from Y_0 (surgery on a framed link with linking matrix `base`)
/// to Y_1, built by 2-handles. Column h of `handle_classes` holds the linking
/// numbers of handle h with the base components; `handle_linking` is the
/// symmetric linking matrix among the handles, framings on the diagonal.
struct CobordismPresentation {
  IntegerMatrix base;
  IntegerMatrix handle_classes;
  IntegerMatrix handle_linking;

  std::size_t base_size() const { return base.rows(); }
  std::size_t handle_count() const { return handle_linking.rows(); }

  void validate() const {
    if (!base.is_symmetric()) {
      throw std::invalid_argument("cobordism: base linking matrix must be square and symmetric");
    }
    if (!handle_linking.is_symmetric()) {
      throw std::invalid_argument("cobordism: handle linking data must be square and symmetric");
    }
    if (handle_classes.rows() != base.rows() || handle_classes.cols() != handle_linking.rows()) {
      throw std::invalid_argument("cobordism: handle class matrix has the wrong shape");
    }
  }

  /// Linking matrix of the outgoing end Y_1.
  IntegerMatrix result_linking() const {
    validate();
    const std::size_t r = base_size();
    const std::size_t m = handle_count();
    IntegerMatrix out(r + m, r + m);
    for (std::size_t x = 0; x < r; ++x) {
      for (std::size_t y = 0; y < r; ++y) {
        out(x, y) = base(x, y);
      }
      for (std::size_t h = 0; h < m; ++h) {
        out(x, r + h) = handle_classes(x, h);
        out(r + h, x) = handle_classes(x, h);
      }
    }
    for (std::size_t h = 0; h < m; ++h) {
      for (std::size_t k = 0; k < m; ++k) {
        out(r + h, r + k) = handle_linking(h, k);
      }
    }
    return out;
  }

  friend bool operator==(const CobordismPresentation&, const CobordismPresentation&) = default;
};

namespace detail {

/// Coordinates of a lattice vector x in the kernel basis taken from `snf`.
inline std::vector<Integer> kernel_coordinates(const SmithForm& snf, const std::vector<Integer>& x) {
  const std::size_t n = snf.right_inverse.rows();
  const std::size_t r = snf.rank();
  std::vector<Integer> y(n - r);
  for (std::size_t k = r; k < n; ++k) {
    Integer s = 0;
    for (std::size_t c = 0; c < n; ++c) {
      s += snf.right_inverse(k, c) * x[c];
    }
    y[k - r] = s;
  }
  return y;
}

inline std::size_t first_betti_of_surgery(const IntegerMatrix& linking) {
  return linking.rows() - rank(linking);
}

}  // namespace detail

/// K(W) = H^1(Y_0) + H^1(Y_1) modulo the image of the restriction from H^1(W).
/// H^1(X) is computed as Hom(H_1(X), Z), i.e. the integer left kernel of a
/// presentation matrix of H_1(X).
inline AbelianGroupSpec cobordism_kernel(const CobordismPresentation& w) {
  w.validate();
  const std::size_t r = w.base_size();
  const std::size_t m = w.handle_count();

  // H_1(W) = Z^r / <columns of base, handle classes>.
  IntegerMatrix w_relations(r, r + m);
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t y = 0; y < r; ++y) {
      w_relations(x, y) = w.base(x, y);
    }
    for (std::size_t h = 0; h < m; ++h) {
      w_relations(x, r + h) = w.handle_classes(x, h);
    }
  }
  SmithForm y0 = smith_normal_form(w.base.transpose());
  SmithForm y1 = smith_normal_form(w.result_linking().transpose());
  IntegerMatrix h1w = kernel_basis(w_relations.transpose());

  const std::size_t k0 = r - y0.rank();
  const std::size_t k1 = r + m - y1.rank();
  IntegerMatrix relations(k0 + k1, h1w.cols());
  for (std::size_t col = 0; col < h1w.cols(); ++col) {
    std::vector<Integer> on_y0(r);
    std::vector<Integer> on_y1(r + m);
    for (std::size_t x = 0; x < r; ++x) {
      on_y0[x] = h1w(x, col);
      on_y1[x] = h1w(x, col);
    }
    auto c0 = detail::kernel_coordinates(y0, on_y0);
    auto c1 = detail::kernel_coordinates(y1, on_y1);
    for (std::size_t k = 0; k < k0; ++k) {
      relations(k, col) = c0[k];
    }
    for (std::size_t k = 0; k < k1; ++k) {
      relations(k0 + k, col) = c1[k];
    }
  }
  return cokernel(relations);
}

/// W_0 followed by W_1; W_1's base must be the outgoing end of W_0.
inline CobordismPresentation compose(const CobordismPresentation& w0, const CobordismPresentation& w1) {
  w0.validate();
  w1.validate();
  if (w1.base != w0.result_linking()) {
    throw std::invalid_argument("compose: incoming end of the second cobordism is not the outgoing end of the first");
  }
  const std::size_t r = w0.base_size();
  const std::size_t m0 = w0.handle_count();
  const std::size_t m1 = w1.handle_count();
  CobordismPresentation out;
  out.base = w0.base;
  out.handle_classes = IntegerMatrix(r, m0 + m1);
  out.handle_linking = IntegerMatrix(m0 + m1, m0 + m1);
  for (std::size_t x = 0; x < r; ++x) {
    for (std::size_t h = 0; h < m0; ++h) {
      out.handle_classes(x, h) = w0.handle_classes(x, h);
    }
    for (std::size_t h = 0; h < m1; ++h) {
      out.handle_classes(x, m0 + h) = w1.handle_classes(x, h);
    }
  }
  for (std::size_t h = 0; h < m0; ++h) {
    for (std::size_t k = 0; k < m0; ++k) {
      out.handle_linking(h, k) = w0.handle_linking(h, k);
    }
  }
  for (std::size_t h = 0; h < m1; ++h) {
    for (std::size_t k = 0; k < m0; ++k) {
      out.handle_linking(m0 + h, k) = w1.handle_classes(r + k, h);
      out.handle_linking(k, m0 + h) = w1.handle_classes(r + k, h);
    }
    for (std::size_t k = 0; k < m1; ++k) {
      out.handle_linking(m0 + h, m0 + k) = w1.handle_linking(h, k);
    }
  }
  return out;
}

/// rank K(W_1 o W_0) == rank K(W_0) + rank K(W_1) - b_1(Y_1) - delta_rank, where
/// Y_1 is the middle level and delta_rank the rank of the Mayer-Vietoris
/// connecting map H^1(Y_1) -> H^2(W).
inline bool ksequence_rank_check(const CobordismPresentation& w0, const CobordismPresentation& w1,
                                 std::int64_t delta_rank) {
  CobordismPresentation whole = compose(w0, w1);
  const auto lhs = static_cast<std::int64_t>(cobordism_kernel(whole).rank);
  const auto k0 = static_cast<std::int64_t>(cobordism_kernel(w0).rank);
  const auto k1 = static_cast<std::int64_t>(cobordism_kernel(w1).rank);
  const auto b1 = static_cast<std::int64_t>(detail::first_betti_of_surgery(w1.base));
  return lhs == k0 + k1 - b1 - delta_rank;
}

// Homology-level models of the cobordisms between Y_inf and the Y_n. Y_inf is
// one 0-framed component k; F is a meridian of k with surgery framing -n; the
// link C is modelled by one -1-framed component, null-homologous in Y_inf and
// linking F once, so that blowing it down shifts the framing of F by +1.

/// V_n: Y_inf -> Y_n along F.
inline CobordismPresentation cobordism_v(std::int64_t n) {
  return {IntegerMatrix{{0}}, IntegerMatrix{{1}}, IntegerMatrix{{-n}}};
}

/// W_inf: Y_inf -> Y_inf along C.
inline CobordismPresentation cobordism_winf() {
  return {IntegerMatrix{{0}}, IntegerMatrix{{0}}, IntegerMatrix{{-1}}};
}

/// V_n attached after W_inf: Y_inf (k, C) -> Y_n along F, which links C once.
inline CobordismPresentation cobordism_v_after_winf(std::int64_t n) {
  return {cobordism_winf().result_linking(), IntegerMatrix{{1}, {1}}, IntegerMatrix{{-(n + 1)}}};
}

/// W_n: Y_{n+1} -> Y_n along C.
inline CobordismPresentation cobordism_w(std::int64_t n) {
  return {cobordism_v(n + 1).result_linking(), IntegerMatrix{{0}, {1}}, IntegerMatrix{{-1}}};
}

/// Z_n = W_n o V_{n+1}: Y_inf -> Y_n along F and C.
inline CobordismPresentation cobordism_z(std::int64_t n) { return compose(cobordism_v(n + 1), cobordism_w(n)); }

}  // namespace brieskorn
