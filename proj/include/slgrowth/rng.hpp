#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "slgrowth/element_set.hpp"
#include "slgrowth/matrix.hpp"

namespace slgrowth {

// Deterministic random stream. Streams derived from one global seed by
// module name are independent of each other and of call order elsewhere.
// Bounded draws use rejection sampling rather than std distributions, whose
// output differs between standard libraries.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : engine_(seed) {}
  static SeedStream derived(std::uint64_t global_seed, std::string_view module);

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  Residue residue(const PrimeField& field) { return static_cast<Residue>(below(field.p())); }
  Residue nonzero_residue(const PrimeField& field) { return static_cast<Residue>(1 + below(field.p() - 1)); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view text) noexcept;

// Uniform element of SL_n(F_p): a uniform invertible matrix (rejection on
// singular draws) with its first column scaled by det^{-1}.
Matrix random_sl(int n, const PrimeField& field, SeedStream& rng);

// Uniform element of GL_n(F_p).
Matrix random_gl(int n, const PrimeField& field, SeedStream& rng);

// Regular semisimple element of SL_n(F_p) by rejection from random_sl.
Matrix random_regular_semisimple(int n, const PrimeField& field, SeedStream& rng);

}  // namespace slgrowth
