#pragma once

// Self-verification sweeps over every module. Each suite reports the number of
// checks run and the first failure, if any.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include <brieskorn/census.hpp>
#include <brieskorn/homology.hpp>
#include <brieskorn/invariants.hpp>
#include <brieskorn/open_book.hpp>
#include <brieskorn/slope.hpp>

namespace brieskorn {

struct SuiteResult {
  std::string suite;
  std::size_t checks = 0;
  std::optional<std::string> failure;

  bool ok() const { return !failure; }
};

namespace detail {

class Checker {
 public:
  explicit Checker(std::string suite) { result_.suite = std::move(suite); }

  /// Records a check; only the first failure message is kept.
  bool check(bool condition, const std::function<std::string()>& message) {
    ++result_.checks;
    if (!condition && !result_.failure) {
      result_.failure = message();
    }
    return condition;
  }

  void merge(const SuiteResult& other) {
    result_.checks += other.checks;
    if (other.failure && !result_.failure) {
      result_.failure = other.failure;
    }
  }

  bool failed() const { return result_.failure.has_value(); }
  const SuiteResult& result() const { return result_; }

 private:
  SuiteResult result_;
};

/// Runs body(n) for n = first..last on worker threads and merges in n order.
inline SuiteResult fan_out(const std::string& suite, std::int64_t first, std::int64_t last,
                           const std::function<SuiteResult(std::int64_t)>& body) {
  std::vector<std::future<SuiteResult>> jobs;
  for (std::int64_t n = first; n <= last; ++n) {
    jobs.push_back(std::async(std::launch::async, body, n));
  }
  Checker c(suite);
  for (auto& j : jobs) {
    c.merge(j.get());
  }
  return c.result();
}

}  // namespace detail

inline SuiteResult verify_census(std::int64_t max_n) {
  detail::Checker c("census");
  for (std::int64_t n = 2; n <= max_n; ++n) {
    auto pairs = index_set(n);
    c.check(static_cast<std::int64_t>(pairs.size()) == census_size(n),
            [&] { return "|P_" + std::to_string(n) + "| = " + std::to_string(pairs.size()); });
    for (const auto& [i, j] : pairs) {
      ContactDescriptor d{n, i, j};
      c.check(d.is_valid(), [&] { return d.to_string() + " violates the index constraints"; });
      c.check(ContactDescriptor{n, i, -j}.is_valid(), [&] { return d.to_string() + " has no conjugate partner"; });
      auto [l, r] = stabs_from_descriptor(d);
      c.check(descriptor_from_stabs(i, l, r) == d, [&] { return d.to_string() + " does not round-trip through (l, r)"; });
      auto leg = legendrian_for(d);
      c.check(leg.rotation == j && leg.twisting - 1 == -n,
              [&] { return d.to_string() + ": F_{i,j} has the wrong rotation or surgery coefficient"; });
      auto sub = subtriangle(n, i, j);
      std::size_t base = 0;
      for (const auto& [k, m] : sub) {
        base += k == 0 ? 1 : 0;
      }
      c.check(base == static_cast<std::size_t>(i + 1), [&] { return d.to_string() + ": subtriangle base row size"; });
      auto f = factorizations(d);
      c.check(f.through_xi.target() == f.through_eta.target(),
              [&] { return d.to_string() + ": factorization routes disagree"; });
    }
    if (c.failed()) {
      break;
    }
  }
  return c.result();
}

inline SuiteResult verify_slopes(std::int64_t max_n) {
  detail::Checker c("slopes");
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (std::int64_t k = -50; k <= -1; ++k) {
      Slope s(k, 1);
      c.check(mobius_apply(attaching_map_1(), s) == Slope(2 * k - 1, k), [&] { return "A_1 anchor at k=" + std::to_string(k); });
      c.check(mobius_apply(attaching_map_2(), s) == Slope(3 * k + 1, -k), [&] { return "A_2 anchor at k=" + std::to_string(k); });
      Slope img = mobius_apply(attaching_map_3(n), s);
      c.check(img == Slope((6 * n - 1) * k + 6, -(n * k + 1)),
              [&] { return "A_3 image of 1/" + std::to_string(k) + " at n=" + std::to_string(n); });
      c.check(mobius_apply(attaching_map_3(n).inverse(), img) == s, [&] { return "A_3 inverse round trip"; });
    }
    c.check(v3_slope_in_complement(n, Rational(-n)) == Slope(1, 0), [&] { return "-n anchor at n=" + std::to_string(n); });
    c.check(v3_slope_in_complement(n, Rational(-6 * n + 1, 6)).is_infinite(),
            [&] { return "-n+1/6 anchor at n=" + std::to_string(n); });
    c.check(upper_bound_count(n) == Integer(census_size(n)), [&] { return "upper bound at n=" + std::to_string(n); });
    c.check(tight_count_solid_torus(Slope(1, -n)) == n, [&] { return "solid torus count at -" + std::to_string(n); });
    for (std::int64_t q = 1; q <= n; ++q) {
      Rational x(-(n * q + 1), q);
      auto e = neg_continued_fraction(x);
      c.check(eval_ncf_value(e) == x, [&] { return "NCF round trip at " + to_string(x); });
    }
    if (c.failed()) {
      break;
    }
  }
  return c.result();
}

inline SuiteResult verify_homology(std::int64_t max_n) {
  detail::Checker c("homology");
  c.check(h1_torus_bundle(yinf_monodromy()) == AbelianGroupSpec{1, {}}, [] { return "H_1 of the Y_inf torus bundle"; });
  c.check(h1_of_surgery(yinf_plumbing()) == AbelianGroupSpec{1, {}}, [] { return "H_1 of the 0-framed unknot"; });
  c.check(cobordism_kernel(cobordism_winf()) == AbelianGroupSpec{1, {}}, [] { return "K(W_inf)"; });
  for (std::int64_t n = 2; n <= max_n; ++n) {
    auto lm = linking_matrix(expand_rational_framings(yn_plumbing(n)));
    Integer det = determinant(lm);
    c.check(det == 1 || det == -1, [&] { return "det of Y_" + std::to_string(n) + " linking matrix is " + det.str(); });
    c.check(h1_of_surgery(yn_plumbing(n)).is_trivial(), [&] { return "H_1(Y_" + std::to_string(n) + ") nontrivial"; });
    c.check(cobordism_kernel(cobordism_v(n)) == AbelianGroupSpec{1, {}}, [&] { return "K(V_" + std::to_string(n) + ")"; });
    c.check(cobordism_kernel(cobordism_w(n)).is_trivial(), [&] { return "K(W_" + std::to_string(n) + ")"; });
    c.check(cobordism_kernel(cobordism_z(n)) == AbelianGroupSpec{1, {}}, [&] { return "K(Z_" + std::to_string(n) + ")"; });
    c.check(ksequence_rank_check(cobordism_winf(), cobordism_v_after_winf(n), 0),
            [&] { return "rank sequence for W_inf then V_" + std::to_string(n); });
    c.check(ksequence_rank_check(cobordism_v(n + 1), cobordism_w(n), 0),
            [&] { return "rank sequence for V_" + std::to_string(n + 1) + " then W_" + std::to_string(n); });
    if (c.failed()) {
      break;
    }
  }
  return c.result();
}

inline SuiteResult verify_invariants_at(std::int64_t n) {
  detail::Checker c("invariants");
  for (const auto& d : descriptors(n)) {
    HalfLaurent sign = d.i % 2 == 0 ? HalfLaurent(1) : HalfLaurent(-1);
    c.check(binomial_sum(d) == sign * invariant_closed_form(d),
            [&] { return d.to_string() + ": binomial sum differs from (-1)^i times the closed form"; });
    c.check(invariant(d) == invariant_closed_form(d), [&] { return d.to_string() + ": normalized invariant"; });
    c.check(apply_F_Vn(coordinates(d)) == invariant(d), [&] { return d.to_string() + ": coordinates"; });
    c.check(conjugate(invariant(d)) == sign * invariant({d.n, d.i, -d.j}),
            [&] { return d.to_string() + ": conjugation symmetry"; });
  }
  HalfLaurent top = invariant({n, n - 2, 0});
  c.check(top.is_symmetric() || conjugate(top) == -top,
          [&] { return "top invariant at n=" + std::to_string(n) + " is not symmetric up to sign"; });
  auto distinct = verify_distinctness(n);
  c.check(distinct.ok, [&] { return distinct.failure; });
  auto diagram = verify_diagram(n);
  c.check(diagram.ok, [&] { return diagram.failure; });
  auto m = coordinate_matrix(n);
  c.check(rank(m) == static_cast<std::size_t>(n - 1), [&] { return "coordinate rank at n=" + std::to_string(n); });
  bool identity_block = true;
  for (std::size_t r = 0; r < static_cast<std::size_t>(n - 1); ++r) {
    for (std::size_t col = 0; col < static_cast<std::size_t>(n - 1); ++col) {
      identity_block = identity_block && m(r, col) == (r == col ? 1 : 0);
    }
  }
  c.check(identity_block, [&] { return "i=0 rows are not the identity at n=" + std::to_string(n); });
  return c.result();
}

inline SuiteResult verify_invariants(std::int64_t max_n) {
  return detail::fan_out("invariants", 2, max_n, verify_invariants_at);
}

inline SuiteResult verify_open_books(std::int64_t max_n) {
  detail::Checker c("openbook");
  const std::int64_t max_i = std::min<std::int64_t>(6, std::max<std::int64_t>(0, max_n - 2));
  for (std::int64_t i = 0; i <= max_i; ++i) {
    auto book = figure3_book(i, 0, 0, false);
    auto mono = torus_bundle_monodromy(book);
    c.check(mono.conjugator.has_value(), [&] { return "monodromy at i=" + std::to_string(i) + " is not conjugate to [[1,1],[-1,0]]"; });
    c.check(h1_torus_bundle(mono.monodromy) == AbelianGroupSpec{1, {}}, [&] { return "torus bundle H_1 at i=" + std::to_string(i); });
    for (std::size_t t = 0; t < book.markers.torsion_blocks.size(); ++t) {
      c.check(torsion_block_monodromy(book, t) == UnimodularMatrix::identity(),
              [&] { return "torsion block " + std::to_string(t) + " is not the identity"; });
    }
    auto withL = figure3_book(i, 1, 1, true);
    for (const auto& [a, b] : braid_pairs(withL.page)) {
      c.check(braid_relation_check(withL.page, a, b) == BraidCheck::holds,
              [&] { return "braid relation fails for " + a + ", " + b; });
    }
  }
  for (std::int64_t i = 0; i + 1 <= max_i; ++i) {
    for (std::int64_t l = 0; l <= 2; ++l) {
      for (std::int64_t r = 0; r <= 2; ++r) {
        auto red = reduce_torsion_block(i, l, r, true);
        c.check(red.matches, [&] {
          return "removing a torsion block from i=" + std::to_string(i + 1) + ", l=" + std::to_string(l) +
                 ", r=" + std::to_string(r) + " does not give the i=" + std::to_string(i) + " book";
        });
      }
    }
  }
  auto segment = lantern_segment_book();
  auto b1 = braid_segment_b1();
  auto destab = hopf_destabilize(segment);
  c.check(destab.page == b1.page && destab.word == b1.word, [] { return "lantern segment does not destabilize to B_1"; });
  auto b2 = braid_segment_b2();
  c.check(h1_action(b2) == h1_action(segment), [] { return "lantern relation changes the H_1 action of B_2"; });
  auto disk = disk_book();
  auto hopf = hopf_stabilize(disk, {"a", "c", 0, 0, {}});
  c.check(euler_characteristic(hopf) == euler_characteristic(disk) - 1, [] { return "Hopf band Euler characteristic"; });
  auto back = hopf_destabilize(hopf);
  c.check(back.page.genus() == disk.page.genus() && back.page.boundary_count() == disk.page.boundary_count() &&
              back.word == disk.word,
          [] { return "Hopf stabilization of the disk does not round-trip"; });
  return c.result();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"census", "slopes", "homology", "invariants", "openbook"};
  return names;
}

/// `suite` is one of suite_names() or "all".
inline std::vector<SuiteResult> run_suites(const std::string& suite, std::int64_t max_n) {
  if (max_n < 2) {
    throw std::invalid_argument("max-n must be >= 2");
  }
  std::vector<SuiteResult> out;
  auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  if (want("census")) out.push_back(verify_census(max_n));
  if (want("slopes")) out.push_back(verify_slopes(max_n));
  if (want("homology")) out.push_back(verify_homology(max_n));
  if (want("invariants")) out.push_back(verify_invariants(max_n));
  if (want("openbook")) out.push_back(verify_open_books(max_n));
  if (out.empty()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return out;
}

}  // namespace brieskorn
