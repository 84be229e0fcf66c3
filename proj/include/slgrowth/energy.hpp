#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slgrowth/element_set.hpp"
#include "slgrowth/field.hpp"

namespace slgrowth {

// A set X ⊂ F_p, kept sorted and deduplicated.
class ScalarSet {
 public:
  explicit ScalarSet(const PrimeField& field) : field_(field) {}
  ScalarSet(const PrimeField& field, std::initializer_list<std::int64_t> values);
  ScalarSet(const PrimeField& field, const std::vector<Residue>& values);

  void insert(Residue v) { values_.insert(v % field_.p()); }
  bool contains(Residue v) const { return values_.count(v) != 0; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const std::set<Residue>& values() const noexcept { return values_; }
  const PrimeField& field() const noexcept { return field_; }

  bool operator==(const ScalarSet& o) const { return field_ == o.field_ && values_ == o.values_; }

 private:
  PrimeField field_;
  std::set<Residue> values_;
};

using FieldVector = std::vector<Residue>;

// A set Y ⊂ F_p^n of uniform dimension.
class VectorSet {
 public:
  VectorSet(const PrimeField& field, int dim) : field_(field), dim_(dim) {}
  void insert(FieldVector v);
  std::size_t size() const noexcept { return values_.size(); }
  int dim() const noexcept { return dim_; }
  const std::set<FieldVector>& values() const noexcept { return values_; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  PrimeField field_;
  int dim_;
  std::set<FieldVector> values_;
};

// X_y ⊆ X^n for each y, with the containment certificate y·x ∈ X enforced on
// insertion.
class FiberFamily {
 public:
  explicit FiberFamily(ScalarSet x) : x_(std::move(x)) {}
  // Throws StructuralError when a coordinate of x lies outside X or y·x ∉ X.
  void insert(const FieldVector& y, const FieldVector& x);
  // Registers y with an empty fiber.
  void touch(const FieldVector& y) { fibers_[y]; }
  const std::map<FieldVector, std::set<FieldVector>>& fibers() const noexcept { return fibers_; }
  // Re-checks every stored pair against X.
  bool certificate_holds() const;

 private:
  ScalarSet x_;
  std::map<FieldVector, std::set<FieldVector>> fibers_;
};

Residue dot(const PrimeField& field, const FieldVector& y, const FieldVector& x);

// E_+(X, Y) = sum_d r(d)^2, r(d) = #{(a, b) ∈ X × Y : a - b = d}.
std::uint64_t additive_energy(const ScalarSet& x, const ScalarSet& y);

// {y·x : x ∈ X}.
ScalarSet dilate(const ScalarSet& x, Residue y);

struct VitalInstance {
  ScalarSet x;
  VectorSet y;
  FiberFamily fibers;
  std::size_t torus_elements = 0;
  std::size_t bin_members_total = 0;
};

// Builds X, Y = f(D) and the fibers X_y from the most popular wealth bin of
// each t ∈ D over the pool A_{pool_radius}. Throws InvalidWitness /
// UnsupportedTorus when a member of D is not regular semisimple / split.
VitalInstance assemble_vital_instance(const ElementSet& a, const ElementSet& d, int pool_radius);
// Same, with the pool supplied directly.
VitalInstance assemble_vital_instance_from_pool(const ElementSet& pool, const ElementSet& d);

struct FiberRow {
  FieldVector y;
  std::size_t size = 0;
  double exponent = 0.0;  // log|X_y| / log|X|
  bool degenerate = false;
};

struct VitalDiagnostics {
  std::size_t x_size = 0;
  double p_bound = 0.0;  // p^{1 - delta}
  bool x_below_bound = false;
  std::size_t y_size = 0;
  std::size_t fiber_min = 0;
  std::size_t fiber_max = 0;
  bool degenerate = false;  // |X| <= 1
  std::vector<FiberRow> rows;
  // Projection with the largest image, its image size, and the refinements
  // Y' (injective on that coordinate) and Y'' (fibers carrying the top half
  // of the total fiber mass).
  int best_coordinate = 0;
  std::size_t best_projection_size = 0;
  std::size_t y_prime_size = 0;
  std::size_t y_double_prime_size = 0;
  // sum over y_1 in pi_1(Y) of E_+(X, y_1 X), and the same over the best
  // coordinate's projection of Y''.
  std::uint64_t energy_sum_first = 0;
  std::uint64_t energy_sum_refined = 0;

  static std::string csv_header(int dim);
  std::vector<std::string> csv_rows() const;
};

VitalDiagnostics vital_diagnostics(const VitalInstance& inst, double delta);

}  // namespace slgrowth
