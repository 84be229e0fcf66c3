#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slgrowth/element_set.hpp"

namespace slgrowth {

struct Budget {
  std::size_t max_elements = 20'000'000;
  double max_seconds = 0.0;  // 0 disables the wall-clock limit
};

struct ExpandOptions {
  Budget budget;
  unsigned workers = 1;
};

// |SL_n(F_p)| = p^{n(n-1)/2} prod_{k=2..n} (p^k - 1); saturates at UINT64_MAX.
std::uint64_t group_order(int n, std::uint32_t p) noexcept;

// A ∪ A^{-1} ∪ {I}.
ElementSet symmetrize(const ElementSet& a);

// A_r: all products of r factors from A ∪ A^{-1} ∪ {I}. Stops early once the
// ball stops growing (A_r is then A_s for every s >= r).
ElementSet word_ball(const ElementSet& a, int r, const ExpandOptions& opts = {});

// Balls A_1..A_r; entry i holds |A_{i+1}|. Same early exit as word_ball,
// after which the final size repeats.
std::vector<std::size_t> word_ball_sizes(const ElementSet& a, int r, const ExpandOptions& opts = {});

// {xy : x in X, y in Y}.
ElementSet product_set(const ElementSet& x, const ElementSet& y, const ExpandOptions& opts = {});

// {abc : a, b, c in A}, computed as (A·A)·A.
ElementSet triple_product(const ElementSet& a, const ExpandOptions& opts = {});

// Closure of A ∪ A^{-1} equals SL_n(F_p). Throws Indeterminate when the group
// order exceeds the element budget.
bool generates(const ElementSet& a, const ExpandOptions& opts = {});

struct GrowthReport {
  int n = 0;
  std::uint32_t p = 0;
  std::size_t size_a = 0;
  std::size_t size_aaa = 0;
  std::map<int, std::size_t> ball_sizes;      // k -> |A_k|
  std::map<int, double> ball_exponents;       // k -> log|A_k|/log|A| - 1
  double epsilon_hat = 0.0;                   // log|AAA|/log|A| - 1
  std::uint64_t group_order = 0;
  bool saturated = false;                     // AAA = G
  bool degenerate = false;                    // |A| = 1
  bool generation_checked = false;
  bool generates = false;                     // meaningful when generation_checked

  std::string to_json() const;
  static std::string csv_header(std::span<const int> ks);
  std::string csv_row() const;
};

// Fills a GrowthReport. When check_generation is set and the group fits in
// the budget, generation is verified; otherwise the report is flagged
// unchecked.
GrowthReport growth_scan(const ElementSet& a, std::span<const int> ks, const ExpandOptions& opts = {},
                         bool check_generation = true);

// Whole group SL_n(F_p) by closure from the standard generators.
ElementSet full_group(int n, const PrimeField& field, const ExpandOptions& opts = {});

// E_12(1) and the signed n-cycle (det 1).
ElementSet standard_generators(int n, const PrimeField& field);

// Fixed-precision decimal used by every report writer.
std::string format_decimal(double v);

}  // namespace slgrowth
