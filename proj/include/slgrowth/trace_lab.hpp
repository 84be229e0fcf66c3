#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slgrowth/element_set.hpp"
#include "slgrowth/matrix.hpp"

namespace slgrowth {

// (tr(g), tr(tg), ..., tr(t^n g)) with the slot of power `omitted` removed.
struct TraceTuple {
  int omitted = 0;
  std::vector<Residue> values;

  auto operator<=>(const TraceTuple&) const = default;
};

// κ-values of (g, tg, ..., t^n g) with the same slot discipline.
struct ClassTuple {
  int omitted = 0;
  std::vector<KappaVector> values;

  auto operator<=>(const ClassTuple&) const = default;
};

// Powers t^0..t^n, computed once per t and reused across a pool.
class TorusPowers {
 public:
  explicit TorusPowers(const Matrix& t);
  int n() const noexcept { return static_cast<int>(powers_.size()) - 1; }
  const Matrix& t() const noexcept { return powers_[1]; }
  const Matrix& power(int k) const { return powers_.at(static_cast<std::size_t>(k)); }

 private:
  std::vector<Matrix> powers_;
};

TraceTuple trace_tuple(const Matrix& g, const Matrix& t, int omitted);
ClassTuple class_tuple(const Matrix& g, const Matrix& t, int omitted);

// Wealth tables for one regular semisimple t over a pool: for each shift
// i in [0, n] and value r, the number of distinct κ(t^i g) among pool members
// g with tr(t^i g) = r and t^i g semisimple.
class WealthTable {
 public:
  // Throws InvalidWitness unless t is regular semisimple.
  WealthTable(const Matrix& t, const ElementSet& pool);

  std::size_t wealth(int i, Residue r) const;
  const Matrix& t() const noexcept { return t_; }
  int n() const noexcept { return t_.n(); }

  // Per pool member: traces tr(t^i g) and whether all of g..t^n g are
  // semisimple.
  const std::vector<std::vector<Residue>>& member_traces() const noexcept { return traces_; }
  const std::vector<bool>& eligible() const noexcept { return eligible_; }

 private:
  Matrix t_;
  std::vector<std::map<Residue, std::size_t>> wealth_;  // per i: r -> #distinct κ
  std::vector<std::vector<Residue>> traces_;
  std::vector<bool> eligible_;
};

std::size_t wealth(const Matrix& t, int i, Residue r, const ElementSet& pool);

struct WealthBin {
  Matrix t;
  std::vector<int> jvec;  // j_0..j_n with 2^{j_i} <= wealth_i < 2^{j_i + 1}
  ElementSet members;

  static std::string csv_header();
  std::string csv_row() const;
};

// floor(log2(w)) for w >= 1.
int dyadic_index(std::size_t w);

// Partition of the eligible pool members by their dyadic wealth vector,
// ordered by jvec. Empty bins are omitted.
std::vector<WealthBin> dyadic_bins(const Matrix& t, const ElementSet& pool);
std::vector<WealthBin> dyadic_bins(const WealthTable& table, const ElementSet& pool);

// Largest bin; ties go to the lexicographically smallest jvec. Throws NoBins.
const WealthBin& popular_tuple(std::span<const WealthBin> bins);

// max over bins with at least `threshold` members of (max_i j_i - min_i j_i).
int bin_spread(std::span<const WealthBin> bins, std::size_t threshold);

// (r_0, ..., r_{n-1}) with tr(t^n g) = sum_k r_k tr(t^k g) for every g.
struct FVector {
  std::vector<Residue> r;

  auto operator<=>(const FVector&) const = default;
};

// Built from κ(t) by Cayley-Hamilton: r_k = -a_k (1 <= k <= n-1),
// r_0 = (-1)^{n+1}. Throws InvalidWitness unless t is regular semisimple.
FVector f_of(const Matrix& t);
std::string fvector_csv_row(const Matrix& t, const FVector& f);

struct FiberBound {
  std::size_t image_size = 0;
  std::size_t set_size = 0;
  std::size_t n_factorial = 1;
  // image_size >= set_size / n!, compared exactly as image_size * n! >= set_size.
  bool holds() const noexcept { return image_size * n_factorial >= set_size; }
  double ratio() const noexcept { return set_size ? static_cast<double>(image_size) / set_size : 0.0; }
};

// Image size of f on a set of pairwise commuting regular semisimple elements.
// Throws InvalidWitness if a member is not regular semisimple or the set does
// not lie in one torus.
FiberBound fiber_bound_check(const ElementSet& s);

struct LindepResult {
  bool dependent_all = false;        // rank of the (n+1) x n form matrix is <= n
  bool independent_subsets = false;  // every n-row subset has rank n
  std::vector<bool> subset_independent;  // per omitted row i
  std::vector<Residue> eigenvalues;      // s_1 < ... < s_n
  std::vector<Residue> symmetric;        // S_0..S_n of the eigenvalues
  bool outside_w = false;               // distinct eigenvalues and every S_m != 0
};

// Rows (s_1^i, ..., s_n^i), i = 0..n, over the eigenvalues of t. Repeated
// eigenvalues are reported through outside_w; throws UnsupportedTorus when
// the characteristic polynomial of t does not split over F_p.
LindepResult lindep_check(const Matrix& t);

}  // namespace slgrowth
