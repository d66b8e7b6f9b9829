#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <brieskorn/homology.hpp>
#include <brieskorn/open_book.hpp>

using namespace brieskorn;

namespace {

AbstractOpenBook torus_with_dual_pair() {
  AbstractOpenBook b{PageSurface(1, 1), {}, {}};
  b.page.add_curve("a", {1, 0});
  b.page.add_curve("b", {0, 1});
  return b;
}

// Genus-one page with three holes and an outer boundary. Coordinates are
// lambda, mu, h1, h2, h3; the site is d1 = h1, d2 = h2, d3 = mu and
// d4 = -(mu + h1 + h2).
AbstractOpenBook lantern_torus() {
  AbstractOpenBook b{PageSurface(1, 4), {}, {}};
  b.page.add_curve("lam", {1, 0, 0, 0, 0});
  b.page.add_curve("mu", {0, 1, 0, 0, 0});
  b.page.add_curve("x", {1, 1, 0, 0, 0});
  b.page.add_curve("h3", {0, 0, 0, 0, 1});
  b.page.add_curve("d1", {0, 0, 1, 0, 0});
  b.page.add_curve("d2", {0, 0, 0, 1, 0});
  b.page.add_curve("d3", {0, 1, 0, 0, 0});
  b.page.add_curve("d4", {0, -1, -1, -1, 0});
  b.page.add_curve("s1", {0, 0, 1, 1, 0});
  b.page.add_curve("s2", {0, 1, 1, 0, 0});
  b.page.add_curve("s3", {0, -1, 0, -1, 0});
  return b;
}

TwistWord random_filler(std::mt19937_64& rng) {
  static const std::vector<std::string> names{"lam", "mu", "x", "h3", "d1", "s2"};
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  TwistWord w;
  for (int k = len(rng); k > 0; --k) {
    w.push_back({names[pick(rng)], coin(rng) ? 1 : -1});
  }
  return w;
}

AbstractOpenBook parse(const std::string& text) {
  std::istringstream in(text);
  return parse_book(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const parse_error& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(H1Action, Examples) {
  AbstractOpenBook b = torus_with_dual_pair();
  b.word = {{"a", 1}};
  IntegerMatrix m = h1_action(b);
  EXPECT_EQ(m(0, 0), 1);
  EXPECT_EQ(m(1, 1), 1);
  EXPECT_EQ(abs(m(0, 1)) + abs(m(1, 0)), 1);

  AbstractOpenBook annulus{PageSurface(0, 2), {{"d", 1}}, {}};
  annulus.page.add_curve("d", {1});
  EXPECT_EQ(h1_action(annulus), IntegerMatrix::identity(1));

  AbstractOpenBook trefoil = torus_with_dual_pair();
  trefoil.word = {{"a", 1}, {"b", 1}};
  IntegerMatrix t = h1_action(trefoil);
  EXPECT_EQ(determinant(t), 1);
  EXPECT_EQ(t(0, 0) + t(1, 1), 1);
  EXPECT_EQ(abs(determinant(t - IntegerMatrix::identity(2))), 1);
}

TEST(H1Action, WordOrderIsLeftToRight) {
  AbstractOpenBook b = torus_with_dual_pair();
  b.word = {{"a", 1}, {"b", -1}};
  IntegerMatrix ta = transvection(b.page, b.page.curve("a").coords, 1);
  IntegerMatrix tb = transvection(b.page, b.page.curve("b").coords, -1);
  EXPECT_EQ(h1_action(b), tb * ta);
  EXPECT_EQ(transvection(b.page, b.page.curve("a").coords, 1) *
                transvection(b.page, b.page.curve("a").coords, -1),
            IntegerMatrix::identity(2));
}

TEST(H1Action, UnknownCurve) {
  AbstractOpenBook b = torus_with_dual_pair();
  b.word = {{"zz", 1}};
  EXPECT_THROW(h1_action(b), std::invalid_argument);
  EXPECT_THROW(b.validate(), std::invalid_argument);
}

TEST(Braid, Examples) {
  AbstractOpenBook b = torus_with_dual_pair();
  b.page.add_curve("a2", {1, 0});
  b.page.add_curve("nb", {0, -1});
  EXPECT_EQ(braid_relation_check(b.page, "a", "b"), BraidCheck::holds);
  EXPECT_EQ(braid_relation_check(b.page, "a", "a2"), BraidCheck::inapplicable);
  EXPECT_EQ(b.page.pairing("a", "nb"), -1);
  EXPECT_EQ(braid_relation_check(b.page, "a", "nb"), BraidCheck::holds);
  EXPECT_EQ(to_string(BraidCheck::inapplicable), "inapplicable");
}

TEST(Braid, HoldsOnFigureThreeRoster) {
  for (std::int64_t i = 0; i <= 3; ++i) {
    auto book = figure3_book(i, 1, 2, true);
    auto pairs = braid_pairs(book.page);
    EXPECT_FALSE(pairs.empty());
    for (const auto& [a, c] : pairs) {
      EXPECT_EQ(abs(book.page.pairing(a, c)), 1);
      EXPECT_EQ(braid_relation_check(book.page, a, c), BraidCheck::holds) << a << " " << c;
    }
  }
}

TEST(Lantern, Examples) {
  LanternSite site = standard_lantern_site();
  TwistWord interior{{"s1", 1}, {"s2", 1}, {"s3", 1}};
  TwistWord boundary{{"d1", 1}, {"d2", 1}, {"d3", 1}, {"d4", 1}};
  EXPECT_EQ(lantern_rewrite(interior, site, LanternDirection::interior_to_boundary), boundary);
  EXPECT_EQ(lantern_rewrite(boundary, site, LanternDirection::boundary_to_interior), interior);
  TwistWord broken{{"s1", 1}, {"d1", 1}, {"s2", 1}, {"s3", 1}};
  EXPECT_THROW(lantern_rewrite(broken, site, LanternDirection::interior_to_boundary), std::invalid_argument);

  AbstractOpenBook seg = lantern_segment_book();
  seg.word = {{"s1", 1}, {"s2", 1}, {"s3", 1}};
  EXPECT_NO_THROW(validate_lantern_site(seg.page, site));
  EXPECT_EQ(lantern_rewrite(seg, site).word, boundary);
  seg.word = {{"d1", 1}};
  EXPECT_THROW(lantern_rewrite(seg, site), std::invalid_argument);
}

TEST(Lantern, RejectsBadSites) {
  AbstractOpenBook b = lantern_torus();
  EXPECT_THROW(validate_lantern_site(b.page, {{"d1", "d2", "d3", "lam"}, {"s1", "s2", "s3"}}), std::invalid_argument);
  EXPECT_THROW(validate_lantern_site(b.page, {{"d1", "d2", "d3", "d4"}, {"s1", "s2", "h3"}}), std::invalid_argument);
  EXPECT_THROW(validate_lantern_site(b.page, {{"d1", "d2", "d3", "d4"}, {"s1", "s2", "nope"}}),
               std::invalid_argument);
}

TEST(Lantern, PreservesActionOnRandomWords) {
  std::mt19937_64 rng(2718);
  AbstractOpenBook base = lantern_torus();
  LanternSite site{{"d1", "d2", "d3", "d4"}, {"s1", "s2", "s3"}};
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    AbstractOpenBook b = base;
    bool from_interior = coin(rng) == 1;
    b.word = random_filler(rng);
    if (from_interior) {
      for (const auto& n : site.interior) {
        b.word.push_back({n, 1});
      }
    } else {
      for (const auto& n : site.boundary) {
        b.word.push_back({n, 1});
      }
    }
    for (const auto& t : random_filler(rng)) {
      b.word.push_back(t);
    }
    AbstractOpenBook out = lantern_rewrite(b, site);
    EXPECT_EQ(h1_action(out), h1_action(b)) << to_string(b.word);
    EXPECT_EQ(euler_characteristic(out), euler_characteristic(b));
    auto delta = static_cast<std::int64_t>(out.word.size()) - static_cast<std::int64_t>(b.word.size());
    EXPECT_EQ(delta, from_interior ? 1 : -1);
  }
}

TEST(Lantern, SegmentsAgreeOnH1) {
  EXPECT_EQ(h1_action(braid_segment_b2()), h1_action(lantern_segment_book()));
}

TEST(Hopf, DiskBaseCase) {
  AbstractOpenBook disk = disk_book();
  EXPECT_EQ(euler_characteristic(disk), 1);
  AbstractOpenBook annulus = hopf_stabilize(disk, {"a", "c", 0, 0, {}});
  EXPECT_EQ(annulus.page.genus(), 0);
  EXPECT_EQ(annulus.page.boundary_count(), 2);
  EXPECT_EQ(annulus.word, (TwistWord{{"c", 1}}));
  EXPECT_EQ(euler_characteristic(annulus), 0);
  EXPECT_EQ(hopf_destabilize(annulus), disk);
  EXPECT_THROW(hopf_stabilize(disk, {"a", "c", 0, 1, {}}), std::invalid_argument);
  EXPECT_THROW(hopf_destabilize(disk), std::invalid_argument);
}

TEST(Hopf, SegmentDestabilizesToPants) {
  AbstractOpenBook seg = lantern_segment_book();
  AbstractOpenBook b1 = braid_segment_b1();
  AbstractOpenBook out = hopf_destabilize(seg, std::string("a"));
  EXPECT_EQ(out.page, b1.page);
  EXPECT_EQ(out.word, b1.word);
  EXPECT_EQ(euler_characteristic(out), euler_characteristic(seg) + 1);
  EXPECT_THROW(hopf_destabilize(seg, std::string("missing")), std::invalid_argument);
}

TEST(Hopf, RoundTripsOnRandomArcs) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    AbstractOpenBook book = figure3_book(small(rng), small(rng), small(rng), small(rng) == 0);
    std::uniform_int_distribution<std::int64_t> end(0, book.page.boundary_count() - 1);
    HopfArc arc{"hopf", "core", end(rng), end(rng), {}};
    for (std::size_t k = 0; k < book.page.rank(); ++k) {
      arc.crossings.push_back(entry(rng));
    }
    AbstractOpenBook up = hopf_stabilize(book, arc);
    EXPECT_EQ(euler_characteristic(up), euler_characteristic(book) - 1);
    EXPECT_EQ(up.word.size(), book.word.size() + 1);
    AbstractOpenBook down = hopf_destabilize(up, std::string("hopf"));
    EXPECT_EQ(down.page.genus(), book.page.genus());
    EXPECT_EQ(down.page.boundary_count(), book.page.boundary_count());
    EXPECT_EQ(down.word, book.word);
    EXPECT_EQ(down, book);
  }
}

TEST(Euler, Formula) {
  EXPECT_EQ(euler_characteristic(disk_book()), 1);
  EXPECT_EQ(euler_characteristic({PageSurface(1, 4), {}, {}}), -4);
}

TEST(FigureThree, Shape) {
  auto b = figure3_book(0, 0, 0, false);
  EXPECT_EQ(b.page.genus(), 1);
  EXPECT_EQ(b.page.boundary_count(), 2);
  EXPECT_EQ(to_string(b.word), "m0- h0+");
  EXPECT_NE(b.page.find("F"), nullptr);
  EXPECT_NE(b.page.find("L"), nullptr);
  EXPECT_FALSE(b.markers.descriptor.has_value());

  for (std::int64_t i = 0; i <= 3; ++i) {
    for (std::int64_t l = 0; l <= 2; ++l) {
      for (std::int64_t r = 0; r <= 2; ++r) {
        auto s = figure3_book(i, l, r, true);
        EXPECT_EQ(s.page.genus(), 1);
        EXPECT_EQ(s.page.boundary_count(), 2 + 6 * i + l + r);
        EXPECT_EQ(s.markers.torsion_blocks.size(), static_cast<std::size_t>(i));
        EXPECT_NE(s.page.find("F"), nullptr);
        ASSERT_TRUE(s.markers.descriptor.has_value());
        EXPECT_EQ(*s.markers.descriptor, (ContactDescriptor{l + r + i + 2, i, l - r}));
        EXPECT_EQ(s.word.back(), (Twist{"L", 1}));
        EXPECT_NO_THROW(s.validate());
      }
    }
  }
  EXPECT_THROW(figure3_book(-1, 0, 0, false), std::invalid_argument);
}

TEST(Monodromy, ConjugateToNormalForm) {
  auto base = torus_bundle_monodromy(figure3_book(0, 0, 0, false));
  EXPECT_EQ(base.monodromy.trace(), 1);
  EXPECT_EQ(base.monodromy.determinant(), 1);
  ASSERT_TRUE(base.conjugator.has_value());
  EXPECT_EQ(*base.conjugator * base.monodromy, yinf_normal_form() * *base.conjugator);
  for (std::int64_t i = 0; i <= 6; ++i) {
    auto book = figure3_book(i, 0, 0, false);
    auto m = torus_bundle_monodromy(book);
    EXPECT_EQ(m.monodromy, base.monodromy) << i;
    EXPECT_EQ(h1_torus_bundle(m.monodromy), (AbelianGroupSpec{1, {}}));
    for (std::size_t t = 0; t < book.markers.torsion_blocks.size(); ++t) {
      EXPECT_EQ(torsion_block_monodromy(book, t), UnimodularMatrix::identity());
    }
  }
}

TEST(Monodromy, StabilizationHolesAreIgnoredAndLTwistRejected) {
  auto base = torus_bundle_monodromy(figure3_book(0, 0, 0, false)).monodromy;
  EXPECT_EQ(torus_bundle_monodromy(figure3_book(1, 2, 1, false)).monodromy, base);
  EXPECT_THROW(torus_bundle_monodromy(figure3_book(0, 1, 0, true)), std::invalid_argument);
  EXPECT_THROW(torus_bundle_monodromy(lantern_segment_book()), std::invalid_argument);
}

TEST(Monodromy, Conjugator) {
  UnimodularMatrix a(1, 1, -1, 0);
  auto s = find_conjugator(a, a);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s * a, a * *s);
  EXPECT_FALSE(find_conjugator(UnimodularMatrix::identity(), a).has_value());
}

TEST(SurgeryReduction, TorsionBlockRemoval) {
  for (std::int64_t i = 0; i <= 3; ++i) {
    for (std::int64_t l = 0; l <= 2; ++l) {
      for (std::int64_t r = 0; r <= 2; ++r) {
        for (bool surgery : {false, true}) {
          auto red = reduce_torsion_block(i, l, r, surgery);
          EXPECT_TRUE(red.matches) << i << " " << l << " " << r << " " << surgery;
          EXPECT_EQ(red.reduced.page.curve("L").coords, red.expected.page.curve("L").coords);
        }
      }
    }
  }
}

TEST(WordTools, CancelAndPrune) {
  TwistWord w{{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}, {"c", 1}};
  EXPECT_EQ(cancel_inverse_pairs(w), (TwistWord{{"c", 1}}));
  EXPECT_EQ(cancel_inverse_pairs({{"a", 1}, {"a", 1}}).size(), 2u);

  AbstractOpenBook b = torus_with_dual_pair();
  b.word = {{"a", 1}};
  AbstractOpenBook pruned = prune_unused_curves(b);
  EXPECT_NE(pruned.page.find("a"), nullptr);
  EXPECT_EQ(pruned.page.find("b"), nullptr);
}

TEST(TextFormat, RoundTrip) {
  std::vector<AbstractOpenBook> books{lantern_segment_book(), braid_segment_b1(), figure3_book(1, 1, 0, true),
                                      figure3_book(0, 0, 2, false), lantern_torus()};
  for (const auto& b : books) {
    std::string text = serialize_book(b);
    AbstractOpenBook back = parse(text);
    EXPECT_EQ(back.page, b.page);
    EXPECT_EQ(back.word, b.word);
    EXPECT_EQ(serialize_book(back), text);
  }
}

TEST(TextFormat, NonstandardForm) {
  IntegerMatrix f(2, 2);
  f(0, 1) = 2;
  f(1, 0) = -2;
  AbstractOpenBook b{PageSurface(0, 3, f), {{"u", 1}}, {}};
  b.page.add_curve("u", {1, 0});
  b.page.add_curve("v", {0, 1});
  std::string text = serialize_book(b);
  EXPECT_NE(text.find("form 0 1 2"), std::string::npos);
  EXPECT_EQ(parse(text).page, b.page);
  EXPECT_THROW(PageSurface(0, 3, IntegerMatrix::identity(2)), std::invalid_argument);
}

TEST(TextFormat, Errors) {
  EXPECT_EQ(parse_error_line("curve a 1 0\n"), 1u);
  EXPECT_EQ(parse_error_line("page 1 1\ncurve a 1\n"), 2u);
  EXPECT_EQ(parse_error_line("page 1 1\ncurve a 1 0\ntwist b +\n"), 3u);
  EXPECT_EQ(parse_error_line("page 1 1\ncurve a 1 0\ntwist a *\n"), 3u);
  EXPECT_EQ(parse_error_line("page 1 1\ncurve a 1 0\ncurve b 0 1\npair a b 5\n"), 4u);
  EXPECT_EQ(parse_error_line("page 1 1\npage 1 1\n"), 2u);
  EXPECT_EQ(parse_error_line("page 1 1\nbogus\n"), 2u);
  EXPECT_EQ(parse_error_line("page 1 0\n"), 1u);
  EXPECT_EQ(parse_error_line("page 1 1\ncurve a 1/2 0\n"), 2u);
  EXPECT_EQ(parse_error_line("page 1 1\ncurve a 1 0\ncurve a 0 1\n"), 3u);
  EXPECT_EQ(parse_error_line("page 0 3\ncurve a 1 0\nform 0 1 1\n"), 3u);
  EXPECT_EQ(parse_error_line(""), 1u);
  AbstractOpenBook ok = parse("# trefoil\npage 1 1\ncurve a 1 0\ncurve b 0 1\npair a b 1\ntwist a +\ntwist b +\n");
  EXPECT_EQ(ok.word.size(), 2u);
}
