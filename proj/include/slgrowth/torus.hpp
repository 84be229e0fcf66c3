#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slgrowth/element_set.hpp"
#include "slgrowth/growth.hpp"
#include "slgrowth/matrix.hpp"

namespace slgrowth {

// A maximal torus T(K) = C_{G(K)}(witness), witness regular semisimple.
class TorusHandle {
 public:
  // Throws InvalidWitness unless the witness is regular semisimple.
  explicit TorusHandle(Matrix witness);

  const Matrix& witness() const noexcept { return witness_; }
  const KappaVector& witness_kappa() const noexcept { return kappa_; }
  // Degrees of the irreducible factors of the witness's characteristic
  // polynomial; all ones iff the torus is split.
  const std::vector<int>& factor_degrees() const noexcept { return degrees_; }
  bool split() const noexcept;
  // |T(K)| = prod_i (p^{d_i} - 1) / (p - 1) over the factor degrees d_i.
  std::uint64_t order() const noexcept;
  bool contains(const Matrix& h) const;

 private:
  Matrix witness_;
  KappaVector kappa_;
  std::vector<int> degrees_;
};

struct TorusReport {
  KappaVector witness_kappa;
  Matrix witness;
  std::uint64_t torus_order = 0;
  bool split = false;
  std::map<int, std::size_t> intersection_sizes;  // k -> |A_k ∩ T(K)|
  std::map<int, double> richness_ratio;           // k -> |A_k ∩ T(K)| / |A_k|^{1/(n+1)}
  std::map<int, std::size_t> regular_count;       // k -> regular ss members of A_k ∩ T(K)

  static std::string csv_header(std::span<const int> ks);
  std::string csv_row() const;
};

// {h in A_k : h g0 = g0 h}. Throws InvalidWitness unless g0 is regular semisimple.
ElementSet centralizer_torus(const ElementSet& a_k, const Matrix& g0);

// Tori through the κ-distinct regular semisimple members of A_{max k}, with
// witnesses of one torus merged (two regular semisimple witnesses span the
// same maximal torus iff they commute). Sorted by descending intersection
// with A_{max k}.
std::vector<TorusReport> rich_torus_scan(const ElementSet& a, std::span<const int> ks, const ExpandOptions& opts = {});
std::vector<TorusReport> rich_torus_scan(const ElementSet& a, int k, const ExpandOptions& opts = {});

// Same scan over an explicit ball (used when A_k is already available, e.g.
// the whole group).
std::vector<TorusReport> rich_torus_scan_ball(const ElementSet& a_k, int k);

// Character α(t) = prod_i λ_i(t)^{m_i} on a split torus.
class CharacterSpec {
 public:
  static constexpr int kDefaultBound = 16;

  // Throws StructuralError for an all-zero tuple or an exponent above bound.
  explicit CharacterSpec(std::vector<int> exponents, int bound = kDefaultBound);

  const std::vector<int>& exponents() const noexcept { return exponents_; }
  int bound() const noexcept { return bound_; }

 private:
  std::vector<int> exponents_;
  int bound_;
};

// Eigenvalue coordinates (λ_1(t), ..., λ_n(t)) of t on the eigenbasis of g0,
// ordered by the eigenvalues of g0 ascending in [0, p).
std::vector<Residue> eigen_coordinates(const Matrix& t, const Matrix& g0);

// Members t of T_elems with α(t) = 1. Throws UnsupportedTorus for a nonsplit
// witness, InvalidWitness for a non-regular one, StructuralError when a
// member does not commute with g0 or the exponent count is not n.
ElementSet character_kernel_members(const ElementSet& t_elems, const CharacterSpec& spec, const Matrix& g0);

struct SemisimpleClassCount {
  std::size_t regular_class_count = 0;   // distinct κ over regular semisimple members
  std::size_t nonregular_ss_count = 0;   // semisimple, non-regular members (elements)

  bool operator==(const SemisimpleClassCount&) const = default;
};

SemisimpleClassCount count_semisimple_classes(const ElementSet& b);

}  // namespace slgrowth
