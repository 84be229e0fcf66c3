#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "slgrowth/energy.hpp"
#include "slgrowth/errors.hpp"
#include "slgrowth/growth.hpp"
#include "slgrowth/rng.hpp"
#include "slgrowth/torus.hpp"
#include "slgrowth/trace_lab.hpp"

using namespace slgrowth;

namespace {

const PrimeField F7(7);

std::vector<Residue> as_vector(const ScalarSet& s) { return {s.values().begin(), s.values().end()}; }

ScalarSet random_set(const PrimeField& F, std::size_t size, SeedStream& rng) {
  ScalarSet s(F);
  while (s.size() < size) s.insert(rng.residue(F));
  return s;
}

// Split regular torus elements of SL_2(F_p) lying in the ball.
ElementSet split_regular_members(const ElementSet& ball) {
  ElementSet d(ball.n(), ball.field());
  for (const auto& g : ball.members())
    if (is_regular_semisimple(g) && is_split(g)) d.insert(g);
  return d;
}

}  // namespace

TEST(AdditiveEnergy, Examples) {
  EXPECT_EQ(additive_energy(ScalarSet(F7, {1, 2}), ScalarSet(F7, {1, 2})), 6u);
  EXPECT_EQ(additive_energy(ScalarSet(F7), ScalarSet(F7, {1})), 0u);
  EXPECT_EQ(additive_energy(ScalarSet(F7, {1}), ScalarSet(F7)), 0u);
  ScalarSet all(F7);
  for (Residue v = 0; v < 7; ++v) all.insert(v);
  EXPECT_EQ(additive_energy(all, all), 343u);
}

TEST(AdditiveEnergy, MatchesPairTableOracle) {
  SeedStream rng(111);
  for (int trial = 0; trial < 100; ++trial) {
    const PrimeField F(trial % 2 ? 1009 : 2003);
    const ScalarSet x = random_set(F, 1 + rng.below(1000), rng);
    const ScalarSet y = random_set(F, 1 + rng.below(1000), rng);
    EXPECT_EQ(additive_energy(x, y), oracle::additive_energy(F, as_vector(x), as_vector(y)));
  }
}

TEST(AdditiveEnergy, CauchySchwarzAndPairCount) {
  SeedStream rng(113);
  const PrimeField F(101);
  for (int trial = 0; trial < 200; ++trial) {
    const ScalarSet x = random_set(F, 1 + rng.below(60), rng);
    const ScalarSet y = random_set(F, 1 + rng.below(60), rng);
    std::set<Residue> diffs;
    for (Residue a : x.values())
      for (Residue b : y.values()) diffs.insert(F.sub(a, b));
    const double pairs = double(x.size()) * double(y.size());
    const auto e = additive_energy(x, y);
    EXPECT_GE(double(e) * double(diffs.size()), pairs * pairs);
    EXPECT_GE(e, x.size() * y.size());
  }
}

TEST(Dilate, Examples) {
  const ScalarSet x(F7, {1, 2, 3});
  EXPECT_EQ(dilate(x, 1), x);
  EXPECT_EQ(dilate(x, 0), ScalarSet(F7, {0}));
  EXPECT_EQ(dilate(x, 3), ScalarSet(F7, {3, 6, 2}));
}

TEST(Dilate, NonzeroScalarIsBijective) {
  SeedStream rng(117);
  const PrimeField F(101);
  for (int trial = 0; trial < 100; ++trial) {
    const ScalarSet x = random_set(F, 1 + rng.below(100), rng);
    EXPECT_EQ(dilate(x, rng.nonzero_residue(F)).size(), x.size());
  }
}

TEST(FiberFamily, CertificateEnforcedOnInsert) {
  FiberFamily fam(ScalarSet(F7, {1, 2, 3}));
  EXPECT_NO_THROW(fam.insert({1, 1}, {1, 2}));
  EXPECT_THROW(fam.insert({1, 1}, {2, 3}), StructuralError);
  EXPECT_THROW(fam.insert({1, 1}, {4, 0}), StructuralError);
  EXPECT_TRUE(fam.certificate_holds());
  VectorSet y(F7, 2);
  EXPECT_THROW(y.insert({1, 2, 3}), StructuralError);
}

TEST(VitalInstance, SingleTorusElement) {
  const PrimeField F(11);
  const ElementSet a = word_ball(standard_generators(2, F), 2);
  const ElementSet pool = word_ball(a, 2);
  const ElementSet all_d = split_regular_members(pool);
  ASSERT_FALSE(all_d.empty());
  const ElementSet d = ElementSet::single(all_d.sorted().at(0));
  const VitalInstance inst = assemble_vital_instance(a, d, 2);
  EXPECT_EQ(inst.y.size(), 1u);
  EXPECT_TRUE(inst.fibers.certificate_holds());
  const auto& fibers = inst.fibers.fibers();
  ASSERT_EQ(fibers.size(), 1u);
  EXPECT_FALSE(fibers.begin()->second.empty());
}

TEST(VitalInstance, Sl2F11BallAssembly) {
  const PrimeField F(11);
  const ElementSet a = word_ball(standard_generators(2, F), 2);
  const ElementSet d = split_regular_members(word_ball(a, 2));
  const VitalInstance inst = assemble_vital_instance(a, d, 2);
  EXPECT_LE(inst.y.size(), d.size());
  EXPECT_TRUE(inst.fibers.certificate_holds());
  EXPECT_LE(inst.x.size(), 3 * inst.bin_members_total);
  for (const auto& [y, xs] : inst.fibers.fibers())
    for (const auto& x : xs) EXPECT_TRUE(inst.x.contains(dot(F, y, x)));
  const VitalDiagnostics diag = vital_diagnostics(inst, 0.1);
  EXPECT_EQ(diag.rows.size(), inst.y.size());
  EXPECT_EQ(diag.x_size, inst.x.size());
  EXPECT_LE(diag.y_double_prime_size, diag.y_prime_size);
  EXPECT_LE(diag.y_prime_size, diag.y_size);
  const auto rows = diag.csv_rows();
  EXPECT_EQ(rows.size(), inst.y.size() + 1);
  const std::string header = VitalDiagnostics::csv_header(2);
  const auto commas = std::count(header.begin(), header.end(), ',');
  for (const auto& row : rows) EXPECT_EQ(std::count(row.begin(), row.end(), ','), commas);
}

TEST(VitalInstance, RejectsBadTorusElements) {
  const ElementSet a = standard_generators(2, F7);
  EXPECT_THROW(assemble_vital_instance(a, ElementSet::single(Matrix::identity(2, F7)), 2), InvalidWitness);
  EXPECT_THROW(assemble_vital_instance(a, ElementSet::single(Matrix(F7, {{0, 1}, {-1, 0}})), 2), UnsupportedTorus);
  EXPECT_THROW(assemble_vital_instance(a, ElementSet(2, F7), 2), StructuralError);
}

TEST(VitalDiagnostics, DegenerateAndEmptyFibers) {
  VectorSet y(F7, 2);
  y.insert({1, 0});
  y.insert({2, 3});
  FiberFamily fam(ScalarSet(F7, {0}));
  fam.insert({1, 0}, {0, 0});
  fam.touch({2, 3});
  const VitalInstance inst{ScalarSet(F7, {0}), y, fam, 2, 1};
  const VitalDiagnostics diag = vital_diagnostics(inst, 0.1);
  EXPECT_TRUE(diag.degenerate);
  ASSERT_EQ(diag.rows.size(), 2u);
  for (const auto& row : diag.rows) {
    EXPECT_TRUE(row.degenerate);
    EXPECT_EQ(row.exponent, 0.0);
  }
  EXPECT_EQ(diag.fiber_min, 0u);
  EXPECT_EQ(diag.fiber_max, 1u);
}

TEST(VitalDiagnostics, EnergySumMatchesOracle) {
  const PrimeField F(13);
  VectorSet y(F, 2);
  y.insert({2, 5});
  y.insert({3, 1});
  y.insert({2, 7});
  const ScalarSet x(F, {1, 4, 5, 9, 12});
  const VitalInstance inst{x, y, FiberFamily(x), 3, 0};
  const VitalDiagnostics diag = vital_diagnostics(inst, 0.2);
  std::uint64_t expected = 0;
  for (Residue y1 : {2u, 3u}) {
    std::vector<Residue> yx;
    for (Residue v : x.values()) yx.push_back(F.mul(v, y1));
    expected += oracle::additive_energy(F, as_vector(x), yx);
  }
  EXPECT_EQ(diag.energy_sum_first, expected);
  EXPECT_EQ(diag.y_size, 3u);
}
