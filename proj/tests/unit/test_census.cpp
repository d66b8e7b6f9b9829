#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <brieskorn/census.hpp>

using namespace brieskorn;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    out.push_back(line);
  }
  return out;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

}  // namespace

TEST(IndexSet, Examples) {
  EXPECT_EQ(index_set(2), (std::vector<IndexPair>{{0, 0}}));
  EXPECT_EQ(index_set(3), (std::vector<IndexPair>{{0, -1}, {0, 1}, {1, 0}}));
  EXPECT_EQ(index_set(5), (std::vector<IndexPair>{{0, -3}, {0, -1}, {0, 1}, {0, 3}, {1, -2}, {1, 0}, {1, 2},
                                                  {2, -1}, {2, 1}, {3, 0}}));
  EXPECT_THROW(index_set(1), std::invalid_argument);
}

TEST(IndexSet, SizeConstraintsAndSymmetry) {
  for (std::int64_t n = 2; n <= 50; ++n) {
    auto pairs = index_set(n);
    ASSERT_EQ(static_cast<std::int64_t>(pairs.size()), n * (n - 1) / 2);
    std::set<IndexPair> seen(pairs.begin(), pairs.end());
    EXPECT_EQ(seen.size(), pairs.size());
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      EXPECT_LT(pairs[k - 1], pairs[k]);
    }
    std::vector<std::int64_t> row_sizes(static_cast<std::size_t>(n - 1), 0);
    for (const auto& [i, j] : pairs) {
      EXPECT_GE(i, 0);
      EXPECT_LE(i, n - 2);
      EXPECT_LE(j < 0 ? -j : j, n - i - 2);
      EXPECT_EQ(((n - i - j) % 2 + 2) % 2, 0);
      EXPECT_TRUE(seen.count({i, -j}));
      ++row_sizes[static_cast<std::size_t>(i)];
    }
    for (std::int64_t i = 0; i <= n - 2; ++i) {
      EXPECT_EQ(row_sizes[static_cast<std::size_t>(i)], n - i - 1);
    }
  }
}

TEST(IndexSet, AgreesWithBruteForceFilter) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    std::vector<IndexPair> brute;
    for (std::int64_t i = -2; i <= n + 2; ++i) {
      for (std::int64_t j = -n - 2; j <= n + 2; ++j) {
        if (ContactDescriptor{n, i, j}.is_valid()) {
          brute.emplace_back(i, j);
        }
      }
    }
    EXPECT_EQ(index_set(n), brute);
  }
}

TEST(Descriptor, Validity) {
  EXPECT_TRUE((ContactDescriptor{5, 3, 0}.is_valid()));
  EXPECT_FALSE((ContactDescriptor{5, 3, 1}.is_valid()));
  EXPECT_FALSE((ContactDescriptor{5, 4, 0}.is_valid()));
  EXPECT_FALSE((ContactDescriptor{5, 0, 5}.is_valid()));
  EXPECT_FALSE((ContactDescriptor{1, 0, 0}.is_valid()));
  EXPECT_THROW((ContactDescriptor{5, 1, 1}.require_valid()), std::invalid_argument);
  EXPECT_EQ((ContactDescriptor{5, 2, -1}.to_string()), "eta^5_{2,-1}");
}

TEST(Subtriangle, Examples) {
  EXPECT_EQ(subtriangle(5, 0, 1), (std::vector<IndexPair>{{0, 1}}));
  EXPECT_EQ(subtriangle(5, 2, 1), (std::vector<IndexPair>{{0, -1}, {0, 1}, {0, 3}, {1, 0}, {1, 2}, {2, 1}}));
  EXPECT_EQ(subtriangle(5, 3, 0), index_set(5));
  EXPECT_THROW(subtriangle(5, 2, 0), std::invalid_argument);
}

TEST(Subtriangle, BaseRowIsSummationRange) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    auto all = index_set(n);
    std::set<IndexPair> universe(all.begin(), all.end());
    for (const auto& [i, j] : all) {
      auto tri = subtriangle(n, i, j);
      std::vector<IndexPair> base;
      for (const auto& p : tri) {
        EXPECT_TRUE(universe.count(p));
        if (p.first == 0) {
          base.push_back(p);
        }
      }
      std::vector<IndexPair> expected;
      for (std::int64_t k = 0; k <= i; ++k) {
        expected.emplace_back(0, j - i + 2 * k);
      }
      EXPECT_EQ(base, expected) << n << " " << i << " " << j;
      EXPECT_EQ(static_cast<std::int64_t>(tri.size()), (i + 1) * (i + 2) / 2);
    }
  }
}

TEST(Stabilize, Examples) {
  LegendrianPresentation f = unstabilized_F(2);
  EXPECT_EQ(f.twisting, -3);
  LegendrianPresentation plus = stabilize(f, StabilizationSign::positive);
  EXPECT_EQ(plus.twisting, -4);
  EXPECT_EQ(plus.rotation, 1);
  EXPECT_EQ(plus.pos_stabs, 1);

  LegendrianPresentation both = stabilize(stabilize(f, StabilizationSign::positive), StabilizationSign::negative);
  EXPECT_EQ(both.rotation, 0);
  EXPECT_EQ(both.twisting, f.twisting - 2);

  LegendrianPresentation lr = stabilize(unstabilized_F(0), 2, 1);
  EXPECT_EQ(lr.twisting, -4);
  EXPECT_EQ(lr.rotation, 1);
  EXPECT_THROW(stabilize(f, -1, 0), std::invalid_argument);
}

TEST(Stabilize, RotationIsLMinusR) {
  for (std::int64_t i = 0; i <= 5; ++i) {
    for (std::int64_t l = 0; l <= 6; ++l) {
      for (std::int64_t r = 0; r <= 6; ++r) {
        auto p = stabilize(unstabilized_F(i), l, r);
        EXPECT_EQ(p.rotation, l - r);
        EXPECT_EQ(p.twisting, -i - 1 - l - r);
        EXPECT_EQ(p.torsion_index, i);
      }
    }
  }
}

TEST(DescriptorFromStabs, Examples) {
  EXPECT_EQ(descriptor_from_stabs(0, 0, 0), (ContactDescriptor{2, 0, 0}));
  EXPECT_EQ(descriptor_from_stabs(1, 2, 1), (ContactDescriptor{6, 1, 1}));
  EXPECT_THROW(descriptor_from_stabs(0, -1, 0), std::invalid_argument);
}

TEST(DescriptorFromStabs, AlwaysValidAndUniquelyInvertible) {
  for (std::int64_t i = 0; i <= 10; ++i) {
    for (std::int64_t l = 0; l <= 10; ++l) {
      for (std::int64_t r = 0; r <= 10; ++r) {
        EXPECT_TRUE(descriptor_from_stabs(i, l, r).is_valid());
      }
    }
  }
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (const auto& d : descriptors(n)) {
      int solutions = 0;
      for (std::int64_t l = 0; l <= n; ++l) {
        for (std::int64_t r = 0; r <= n; ++r) {
          if (descriptor_from_stabs(d.i, l, r) == d) {
            ++solutions;
            EXPECT_EQ(stabs_from_descriptor(d), std::make_pair(l, r));
          }
        }
      }
      EXPECT_EQ(solutions, 1) << d.to_string();
    }
  }
}

TEST(SurgeryData, TwistingAndStabilizationCount) {
  EXPECT_EQ(surgery_data_for_F(0).twisting, -1);
  EXPECT_EQ(surgery_data_for_F(3).twisting, -4);
  EXPECT_THROW(surgery_data_for_F(-1), std::invalid_argument);
  for (std::int64_t n = 2; n <= 30; ++n) {
    for (std::int64_t i = 0; i <= n - 2; ++i) {
      std::int64_t s = stabilization_count(n, i);
      EXPECT_EQ((-i - 1) - s - 1, -n);
      EXPECT_EQ(surgery_data_for_F(i).surgery_coefficient - s, -n);
    }
  }
  EXPECT_THROW(stabilization_count(3, 2), std::invalid_argument);
}

TEST(LegendrianFor, MatchesDescriptor) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    for (const auto& d : descriptors(n)) {
      auto p = legendrian_for(d);
      EXPECT_EQ(p.rotation, d.j);
      EXPECT_EQ(p.twisting - 1, -n);
      EXPECT_EQ(descriptor_from_stabs(p.torsion_index, p.pos_stabs, p.neg_stabs), d);
    }
  }
}

TEST(Factorizations, Examples) {
  auto f = factorizations({3, 0, 1});
  EXPECT_EQ(f.source, ContactTag::xi(1));
  EXPECT_EQ(f.via_xi, ContactTag::xi(0));
  EXPECT_EQ(f.via_eta, ContactTag::eta({4, 1, 1}));
  EXPECT_EQ(f.via_eta.to_string(), "(Y_4, eta^4_{1,1})");
  EXPECT_EQ(f.through_xi.handle_count(), 2);
  EXPECT_EQ(f.through_xi.steps[0].cobordism, "W_inf");
  EXPECT_EQ(f.through_eta.steps[1].cobordism, "W_3");

  auto g = factorizations({4, 2, 0});
  EXPECT_EQ(g.via_xi, ContactTag::xi(2));
  EXPECT_EQ(g.via_eta, ContactTag::eta({5, 3, 0}));
  EXPECT_THROW(factorizations({4, 1, 0}), std::invalid_argument);
}

TEST(Factorizations, RoutesAgree) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    for (const auto& d : descriptors(n)) {
      auto f = factorizations(d);
      EXPECT_EQ(f.through_xi.source(), f.through_eta.source());
      EXPECT_EQ(f.through_xi.target(), ContactTag::eta(d));
      EXPECT_EQ(f.through_eta.target(), ContactTag::eta(d));
      EXPECT_EQ(f.through_xi.steps[0].to, f.via_xi);
      EXPECT_EQ(f.through_eta.steps[0].to, f.via_eta);
    }
  }
}

TEST(CensusRecords, Fields) {
  auto records = census(4);
  ASSERT_EQ(records.size(), 6u);
  for (const auto& r : records) {
    EXPECT_EQ(r.l - r.r, r.j);
    EXPECT_EQ(r.l + r.r + r.i + 2, r.n);
    EXPECT_EQ(r.rotation, r.j);
    EXPECT_EQ(r.twisting, 1 - r.n);
  }
}

TEST(CensusTriangle, FiveRowsMatchDisplay) {
  auto lines = lines_of(census_triangle(5));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(tokens_of(lines[0]), (std::vector<std::string>{"eta^5_{3,0}"}));
  EXPECT_EQ(tokens_of(lines[1]), (std::vector<std::string>{"eta^5_{2,-1}", "eta^5_{2,1}"}));
  EXPECT_EQ(tokens_of(lines[2]), (std::vector<std::string>{"eta^5_{1,-2}", "eta^5_{1,0}", "eta^5_{1,2}"}));
  EXPECT_EQ(tokens_of(lines[3]),
            (std::vector<std::string>{"eta^5_{0,-3}", "eta^5_{0,-1}", "eta^5_{0,1}", "eta^5_{0,3}"}));
  // Column alignment: each entry sits midway between the two entries below it.
  auto col = [&](std::size_t row, const std::string& label) { return lines[row].find(label); };
  std::size_t step = col(3, "eta^5_{0,-1}") - col(3, "eta^5_{0,-3}");
  EXPECT_GT(step, std::string("eta^5_{0,-3}").size());
  EXPECT_EQ(col(2, "eta^5_{1,-2}") * 2, col(3, "eta^5_{0,-3}") + col(3, "eta^5_{0,-1}"));
  EXPECT_EQ(col(1, "eta^5_{2,1}") * 2, col(2, "eta^5_{1,0}") + col(2, "eta^5_{1,2}"));
  EXPECT_EQ(col(0, "eta^5_{3,0}") * 2, col(1, "eta^5_{2,-1}") + col(1, "eta^5_{2,1}"));
  for (const auto& line : lines) {
    EXPECT_NE(line.back(), ' ');
  }
}
