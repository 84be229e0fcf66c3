#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "slgrowth/errors.hpp"
#include "slgrowth/growth.hpp"
#include "slgrowth/rng.hpp"
#include "slgrowth/torus.hpp"

using namespace slgrowth;

namespace {

const PrimeField F5(5);
const PrimeField F7(7);

const ElementSet& sl2(std::uint32_t p) {
  static std::map<std::uint32_t, ElementSet> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, full_group(2, PrimeField(p))).first;
  return it->second;
}

// Regular element with irreducible characteristic polynomial λ² - cλ + 1.
Matrix nonsplit_witness(const PrimeField& F) {
  for (Residue c = 0; c < F.p(); ++c) {
    const Matrix g(F, {{0, -1}, {1, static_cast<std::int64_t>(c)}});
    if (is_regular_semisimple(g) && !is_split(g)) return g;
  }
  throw std::logic_error("no nonsplit witness");
}

bool is_subgroup(const ElementSet& s) {
  for (const auto& a : s.members()) {
    if (!s.contains(mat_inv(a))) return false;
    for (const auto& b : s.members())
      if (!s.contains(mat_mul(a, b))) return false;
  }
  return true;
}

}  // namespace

TEST(TorusHandle, RejectsNonRegularWitness) {
  EXPECT_THROW(TorusHandle(Matrix::identity(2, F5)), InvalidWitness);
  EXPECT_THROW(TorusHandle(Matrix(F5, {{1, 1}, {0, 1}})), InvalidWitness);
}

TEST(CentralizerTorus, SplitDiagonalTorusOfSl2F5) {
  const Matrix g0(F5, {{2, 0}, {0, 3}});
  const ElementSet t = centralizer_torus(sl2(5), g0);
  EXPECT_EQ(t.size(), 4u);
  for (const auto& m : t.members()) EXPECT_TRUE(m(0, 1) == 0 && m(1, 0) == 0);
  EXPECT_EQ(TorusHandle(g0).order(), 4u);
  EXPECT_TRUE(TorusHandle(g0).split());
}

TEST(CentralizerTorus, TrivialBall) {
  const ElementSet one = ElementSet::single(Matrix::identity(2, F5));
  EXPECT_EQ(centralizer_torus(one, Matrix(F5, {{2, 0}, {0, 3}})).size(), 1u);
  EXPECT_THROW(centralizer_torus(one, Matrix::identity(2, F5)), InvalidWitness);
}

// [[0,1],[-1,0]] has characteristic polynomial λ² + 1, which splits over F_5
// because -1 = 2². Its centralizer is therefore a split torus of order 4.
TEST(CentralizerTorus, WeylElementOverF5IsSplit) {
  const Matrix w(F5, {{0, 1}, {-1, 0}});
  EXPECT_TRUE(is_split(w));
  EXPECT_EQ(centralizer_torus(sl2(5), w).size(), 4u);
  EXPECT_EQ(TorusHandle(w).order(), 4u);
}

TEST(CentralizerTorus, NonsplitOrdersAreQPlusOne) {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const PrimeField F(p);
    const Matrix g0 = nonsplit_witness(F);
    const TorusHandle h(g0);
    EXPECT_FALSE(h.split());
    EXPECT_EQ(h.order(), p + 1);
    EXPECT_EQ(centralizer_torus(sl2(p), g0).size(), p + 1);
    EXPECT_EQ(oracle::centralizer_order(g0), p + 1);
  }
  // Over F_7, λ² + 1 is irreducible.
  EXPECT_EQ(centralizer_torus(sl2(7), Matrix(F7, {{0, 1}, {-1, 0}})).size(), 8u);
}

TEST(CentralizerTorus, SplitOrdersMatchCommutantCount) {
  SeedStream rng(19);
  for (int n : {2, 3}) {
    for (std::uint32_t p : {5u, 7u, 11u}) {
      const PrimeField F(p);
      const std::vector<Residue> s = oracle::distinct_unit_diagonal(F, n);
      const Matrix h = random_gl(n, F, rng);
      const Matrix g0 = mat_mul(mat_mul(h, Matrix::diagonal(F, s)), mat_inv(h));
      const std::uint64_t expected = n == 2 ? p - 1 : std::uint64_t(p - 1) * (p - 1);
      EXPECT_EQ(TorusHandle(g0).order(), expected);
      EXPECT_EQ(oracle::centralizer_order(g0), expected);
    }
  }
}

TEST(CentralizerTorus, IsASubgroup) {
  for (std::uint32_t p : {5u, 7u}) {
    for (const auto& g : sl2(p).members()) {
      if (!is_regular_semisimple(g)) continue;
      EXPECT_TRUE(is_subgroup(centralizer_torus(sl2(p), g)));
    }
  }
}

TEST(RichTorusScan, WholeSl2F5) {
  const auto reports = rich_torus_scan_ball(sl2(5), 1);
  ASSERT_FALSE(reports.empty());
  const auto& top = reports.front();
  EXPECT_TRUE(top.torus_order == 4 || top.torus_order == 5 || top.torus_order == 6);
  EXPECT_NEAR(top.richness_ratio.at(1), double(top.torus_order) / std::cbrt(120.0), 1e-12);
  for (const auto& r : reports) {
    EXPECT_EQ(r.intersection_sizes.at(1), r.torus_order);
    if (r.split) EXPECT_NEAR(r.richness_ratio.at(1), 4.0 / std::cbrt(120.0), 1e-12);
  }
  for (std::size_t i = 0; i + 1 < reports.size(); ++i)
    EXPECT_GE(reports[i].intersection_sizes.at(1), reports[i + 1].intersection_sizes.at(1));
}

TEST(RichTorusScan, OwnTorusContainsWitnessAndInverse) {
  const Matrix g0(F7, {{3, 0}, {0, 5}});
  ElementSet a(2, F7);
  a.insert(Matrix::identity(2, F7));
  a.insert(g0);
  a.insert(mat_inv(g0));
  const auto reports = rich_torus_scan(a, 1);
  ASSERT_FALSE(reports.empty());
  EXPECT_GE(reports.front().intersection_sizes.at(1), 3u);
  for (const auto& r : reports) EXPECT_LE(r.intersection_sizes.at(1), std::min<std::uint64_t>(a.size(), r.torus_order));
}

TEST(RichTorusScan, UnipotentBallGivesNoReports) {
  ElementSet a(2, F7);
  a.insert(Matrix(F7, {{1, 1}, {0, 1}}));
  EXPECT_TRUE(rich_torus_scan(a, 2).empty());
}

TEST(RichTorusScan, CsvShape) {
  const std::vector<int> ks{1, 2};
  EXPECT_EQ(TorusReport::csv_header(ks),
            "witness_kappa,torus_order,split_flag,intersection_1,ratio_1,regular_1,intersection_2,ratio_2,regular_2");
  const auto reports = rich_torus_scan(standard_generators(2, F7), ks);
  ASSERT_FALSE(reports.empty());
  const std::string row = reports.front().csv_row();
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 8);
}

// The measured ratios stay bounded and do not increase with p beyond a
// factor of two.
TEST(RichTorusScan, RichnessShapeAcrossPrimes) {
  double previous = 0.0;
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u}) {
    double worst = 0.0;
    for (const auto& r : rich_torus_scan_ball(sl2(p), 1)) worst = std::max(worst, r.richness_ratio.at(1));
    if (previous > 0.0) EXPECT_LE(worst, 2.0 * previous);
    previous = worst;
  }
}

TEST(CharacterKernel, SplitTorusOfSl2F5) {
  const Matrix g0(F5, {{2, 0}, {0, 3}});
  const ElementSet t = centralizer_torus(sl2(5), g0);
  const ElementSet k20 = character_kernel_members(t, CharacterSpec({2, 0}), g0);
  EXPECT_EQ(k20.size(), 2u);
  EXPECT_TRUE(k20.contains(Matrix::identity(2, F5)));
  EXPECT_TRUE(k20.contains(Matrix(F5, {{4, 0}, {0, 4}})));
  EXPECT_EQ(character_kernel_members(t, CharacterSpec({1, 1}), g0).size(), 4u);
  const ElementSet k10 = character_kernel_members(t, CharacterSpec({1, 0}), g0);
  ASSERT_EQ(k10.size(), 1u);
  EXPECT_EQ(k10.at(0), Matrix::identity(2, F5));
}

TEST(CharacterKernel, ErrorPaths) {
  EXPECT_THROW(CharacterSpec({0, 0}), StructuralError);
  EXPECT_THROW(CharacterSpec({17, 0}), StructuralError);
  const Matrix ns = nonsplit_witness(F7);
  const ElementSet t = centralizer_torus(sl2(7), ns);
  EXPECT_THROW(character_kernel_members(t, CharacterSpec({1, 0}), ns), UnsupportedTorus);
  const Matrix g0(F7, {{3, 0}, {0, 5}});
  EXPECT_THROW(character_kernel_members(t, CharacterSpec({1, 0}), g0), StructuralError);
}

TEST(CharacterKernel, ProductKernelContainsIntersection) {
  const PrimeField F(13);
  SeedStream rng(43);
  const Matrix h = random_gl(3, F, rng);
  const Matrix hi = mat_inv(h);
  const Matrix g0 = mat_mul(mat_mul(h, Matrix::diagonal(F, std::vector<Residue>{2, 3, F.inv(6)})), hi);
  ElementSet torus(3, F);
  for (Residue a = 1; a < 13; ++a)
    for (Residue b = 1; b < 13; ++b)
      torus.insert(mat_mul(mat_mul(h, Matrix::diagonal(F, std::vector<Residue>{a, b, F.inv(F.mul(a, b))})), hi));
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> m1(3), m2(3), sum(3);
    for (int i = 0; i < 3; ++i) {
      m1[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(7)) - 3;
      m2[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(7)) - 3;
      sum[static_cast<std::size_t>(i)] = m1[static_cast<std::size_t>(i)] + m2[static_cast<std::size_t>(i)];
    }
    auto nonzero = [](const std::vector<int>& v) { return std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }); };
    if (!nonzero(m1) || !nonzero(m2) || !nonzero(sum)) continue;
    const ElementSet k1 = character_kernel_members(torus, CharacterSpec(m1), g0);
    const ElementSet k2 = character_kernel_members(torus, CharacterSpec(m2), g0);
    const ElementSet k12 = character_kernel_members(torus, CharacterSpec(sum), g0);
    for (const auto& t : k1.members())
      if (k2.contains(t)) EXPECT_TRUE(k12.contains(t));
  }
}

TEST(ClassCount, Examples) {
  std::set<Residue> traces;
  for (const auto& g : sl2(5).members())
    if (is_regular_semisimple(g)) traces.insert(trace(g));
  EXPECT_EQ(count_semisimple_classes(sl2(5)).regular_class_count, traces.size());
  EXPECT_EQ(count_semisimple_classes(ElementSet::single(Matrix::identity(2, F5))), (SemisimpleClassCount{0, 1}));
  ElementSet pair(2, F5);
  pair.insert(Matrix(F5, {{2, 0}, {0, 3}}));
  pair.insert(Matrix(F5, {{3, 0}, {0, 2}}));
  EXPECT_EQ(count_semisimple_classes(pair), (SemisimpleClassCount{1, 0}));
}
