#include <gtest/gtest.h>

#include <cmath>

#include <json.hpp>

#include "oracles.hpp"
#include "slgrowth/errors.hpp"
#include "slgrowth/growth.hpp"
#include "slgrowth/rng.hpp"

using namespace slgrowth;

namespace {

const PrimeField F5(5);
const PrimeField F7(7);

ElementSet weyl_pair() {
  ElementSet a(2, F5);
  a.insert(Matrix(F5, {{1, 1}, {0, 1}}));
  a.insert(Matrix(F5, {{0, 1}, {-1, 0}}));
  return a;
}

}  // namespace

TEST(ElementSet, RejectsNonGroupAndMismatchedMembers) {
  ElementSet a(2, F5);
  EXPECT_THROW(a.insert(Matrix(F5, {{2, 0}, {0, 2}})), NotInGroup);
  EXPECT_THROW(a.insert(Matrix::identity(3, F5)), StructuralError);
  EXPECT_THROW(a.insert(Matrix::identity(2, F7)), StructuralError);
  EXPECT_TRUE(a.insert(Matrix::identity(2, F5)));
  EXPECT_FALSE(a.insert(Matrix::identity(2, F5)));
  EXPECT_EQ(a.size(), 1u);
}

TEST(ElementSet, CopyKeepsIndexUsable) {
  ElementSet a = weyl_pair();
  ElementSet b = a;
  b.insert(Matrix::identity(2, F5));
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(b.size(), 3u);
  EXPECT_TRUE(b.contains(Matrix(F5, {{1, 1}, {0, 1}})));
  EXPECT_FALSE(a.contains(Matrix::identity(2, F5)));
  EXPECT_TRUE(a.is_subset_of(b));
}

TEST(ElementSet, DumpRoundTrip) {
  const ElementSet ball = word_ball(weyl_pair(), 3);
  const std::string text = ball.dump();
  EXPECT_EQ(text.substr(0, text.find('\n')), "n=2 p=5 count=" + std::to_string(ball.size()));
  const ElementSet back = ElementSet::parse_dump(text);
  EXPECT_TRUE(back.same_members(ball));
  EXPECT_EQ(back.dump(), text);
  EXPECT_THROW(ElementSet::parse_dump("n=2 p=5 count=2\n01000001\n"), StructuralError);
}

TEST(GroupOrder, Formula) {
  EXPECT_EQ(group_order(2, 5), 120u);
  EXPECT_EQ(group_order(2, 7), 336u);
  EXPECT_EQ(group_order(3, 7), 343u * 48u * 342u);
}

TEST(WordBall, Examples) {
  const ElementSet identity = ElementSet::single(Matrix::identity(2, F5));
  for (int r : {1, 2, 7}) EXPECT_EQ(word_ball(identity, r).size(), 1u);
  EXPECT_EQ(word_ball(weyl_pair(), 1).size(), 5u);
  EXPECT_EQ(word_ball(weyl_pair(), 50).size(), 120u);
  EXPECT_THROW(word_ball(weyl_pair(), 0), StructuralError);
  EXPECT_THROW(word_ball(ElementSet(2, F5), 1), StructuralError);
}

TEST(WordBall, MatchesLiteralWordEnumeration) {
  const ElementSet a = weyl_pair();
  const ElementSet s = symmetrize(a);
  const auto letters = s.members();
  for (int r = 1; r <= 4; ++r) {
    ElementSet literal(2, F5);
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    for (;;) {
      Matrix w = Matrix::identity(2, F5);
      for (auto i : idx) w = oracle::multiply(w, letters[i]);
      literal.insert(w);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == letters.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    EXPECT_TRUE(word_ball(a, r).same_members(literal)) << "r=" << r;
  }
}

TEST(WordBall, MonotoneAndProductProperty) {
  const ElementSet a = standard_generators(2, F7);
  EXPECT_TRUE(a.is_subset_of(word_ball(a, 1)));
  std::vector<ElementSet> balls;
  for (int r = 1; r <= 5; ++r) balls.push_back(word_ball(a, r));
  for (std::size_t r = 0; r + 1 < balls.size(); ++r) EXPECT_TRUE(balls[r].is_subset_of(balls[r + 1]));
  SeedStream rng(3);
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 2; ++s)
      for (int trial = 0; trial < 200; ++trial) {
        const auto& x = balls[static_cast<std::size_t>(r - 1)];
        const auto& y = balls[static_cast<std::size_t>(s - 1)];
        const Matrix g = mat_mul(x.at(rng.below(x.size())), y.at(rng.below(y.size())));
        EXPECT_TRUE(balls[static_cast<std::size_t>(r + s - 1)].contains(g));
      }
}

TEST(WordBall, SizesRepeatAfterFixpoint) {
  const auto sizes = word_ball_sizes(weyl_pair(), 12);
  ASSERT_EQ(sizes.size(), 12u);
  EXPECT_EQ(sizes.front(), 5u);
  EXPECT_EQ(sizes.back(), 120u);
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) EXPECT_LE(sizes[i], sizes[i + 1]);
}

TEST(WordBall, BudgetExceededReportsPartialCount) {
  ExpandOptions opts;
  opts.budget.max_elements = 50;
  try {
    word_ball(weyl_pair(), 20, opts);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.partial_count(), 0u);
  }
}

TEST(TripleProduct, Examples) {
  const ElementSet identity = ElementSet::single(Matrix::identity(2, F5));
  EXPECT_EQ(triple_product(identity).size(), 1u);
  const ElementSet g = full_group(2, F5);
  EXPECT_TRUE(triple_product(g).same_members(g));
  const Matrix x(F5, {{1, 2}, {3, 2}});
  ASSERT_EQ(determinant(x), 1u);
  const ElementSet t = triple_product(ElementSet::single(x));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.at(0), mat_pow(x, 3));
}

TEST(TripleProduct, ContainedInBallAndEqualForSymmetricSets) {
  const ElementSet a = standard_generators(2, F7);
  EXPECT_TRUE(triple_product(a).is_subset_of(word_ball(a, 3)));
  const ElementSet s = symmetrize(a);
  EXPECT_TRUE(triple_product(s).same_members(word_ball(a, 3)));
}

TEST(Generates, Examples) {
  EXPECT_TRUE(generates(weyl_pair()));
  EXPECT_FALSE(generates(ElementSet::single(Matrix::identity(2, F5))));
  ElementSet torus(2, F5);
  for (Residue a = 1; a < 5; ++a) torus.insert(Matrix::diagonal(F5, std::vector<Residue>{a, F5.inv(a)}));
  EXPECT_FALSE(generates(torus));
  ExpandOptions tiny;
  tiny.budget.max_elements = 100;
  EXPECT_THROW(generates(weyl_pair(), tiny), Indeterminate);
}

TEST(StandardGenerators, ShapeAndGeneration) {
  const ElementSet s = standard_generators(2, F5);
  EXPECT_TRUE(s.contains(Matrix(F5, {{1, 1}, {0, 1}})));
  EXPECT_TRUE(s.contains(Matrix(F5, {{0, 1}, {-1, 0}})));
  for (int n = 2; n <= 4; ++n) {
    const ElementSet g = standard_generators(n, PrimeField(5));
    for (const auto& m : g.members()) EXPECT_EQ(determinant(m), 1u);
  }
  EXPECT_EQ(full_group(3, PrimeField(5)).size(), group_order(3, 5));
}

TEST(GrowthScan, WholeGroupIsSaturated) {
  const ElementSet g = full_group(2, F5);
  const std::vector<int> ks{2};
  const GrowthReport r = growth_scan(g, ks);
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.epsilon_hat, 0.0);
  EXPECT_EQ(r.size_aaa, 120u);
  EXPECT_TRUE(r.generates);
}

TEST(GrowthScan, SingletonIsDegenerate) {
  const ElementSet one = ElementSet::single(Matrix::identity(2, F5));
  const std::vector<int> ks{1};
  const GrowthReport r = growth_scan(one, ks);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.epsilon_hat, 0.0);
  EXPECT_TRUE(r.generation_checked);
  EXPECT_FALSE(r.generates);
}

TEST(GrowthScan, BallInSl2F7GrowsStrictly) {
  const ElementSet a = word_ball(standard_generators(2, F7), 2);
  const std::vector<int> ks{2, 3};
  const GrowthReport r = growth_scan(a, ks);
  EXPECT_GT(r.size_aaa, r.size_a);
  EXPECT_LE(r.size_aaa, r.group_order);
  EXPECT_EQ(r.group_order, 336u);
  for (const auto& [k, size] : r.ball_sizes) EXPECT_LE(size, r.group_order);
  EXPECT_NEAR(r.epsilon_hat, std::log(double(r.size_aaa)) / std::log(double(r.size_a)) - 1.0, 1e-12);
}

TEST(GrowthScan, SerializationColumnOrder) {
  const ElementSet a = word_ball(standard_generators(2, F7), 2);
  const std::vector<int> ks{2};
  const GrowthReport r = growth_scan(a, ks);
  EXPECT_EQ(GrowthReport::csv_header(ks),
            "n,p,|A|,|AAA|,epsilon_hat,saturated,|A_2|,eps_2,group_order,degenerate,generation_checked,generates");
  const auto j = nlohmann::ordered_json::parse(r.to_json());
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(std::vector<std::string>(keys.begin(), keys.begin() + 6),
            (std::vector<std::string>{"n", "p", "|A|", "|AAA|", "epsilon_hat", "saturated"}));
  EXPECT_EQ(r.csv_row().substr(0, 4), "2,7,");
}

TEST(GrowthScan, ContainmentWhenIdentityPresent) {
  SeedStream rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    ElementSet a(2, F7);
    a.insert(Matrix::identity(2, F7));
    for (int i = 0; i < 4; ++i) a.insert(random_sl(2, F7, rng));
    const ElementSet aaa = triple_product(a);
    EXPECT_TRUE(a.is_subset_of(aaa));
  }
}

TEST(GrowthScan, DeterministicAcrossWorkerCounts) {
  const ElementSet a = word_ball(standard_generators(2, PrimeField(13)), 3);
  const std::vector<int> ks{2, 4};
  ExpandOptions one;
  ExpandOptions four;
  four.workers = 4;
  EXPECT_EQ(growth_scan(a, ks, one).to_json(), growth_scan(a, ks, four).to_json());
  EXPECT_EQ(word_ball(a, 3, one).dump(), word_ball(a, 3, four).dump());
}

// Every generating proper subset of SL_2(F_5) of a sampled family grows
// under tripling. Reported as a property of the sample, not a theorem.
TEST(GrowthScan, GeneratingProperSubsetsOfSl2F5Grow) {
  const ElementSet g = full_group(2, F5);
  SeedStream rng(13);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    ElementSet a(2, F5);
    const std::size_t target = 2 + rng.below(40);
    while (a.size() < target) a.insert(g.at(rng.below(g.size())));
    if (!generates(a) || a.size() == g.size()) continue;
    ++checked;
    EXPECT_GT(triple_product(a).size(), a.size());
  }
  EXPECT_GT(checked, 100);
}
