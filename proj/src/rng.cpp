#include "slgrowth/rng.hpp"

#include <limits>

namespace slgrowth {

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SeedStream SeedStream::derived(std::uint64_t global_seed, std::string_view module) {
  // splitmix64 of the combined key
  std::uint64_t z = global_seed ^ fnv1a64(module);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return SeedStream(z);
}

std::uint64_t SeedStream::below(std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Matrix random_gl(int n, const PrimeField& field, SeedStream& rng) {
  for (;;) {
    Matrix g(n, field);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.residue(field);
    if (determinant(g) != 0) return g;
  }
}

Matrix random_sl(int n, const PrimeField& field, SeedStream& rng) {
  Matrix g = random_gl(n, field, rng);
  const Residue scale = field.inv(determinant(g));
  for (int i = 0; i < n; ++i) g(i, 0) = field.mul(g(i, 0), scale);
  return g;
}

Matrix random_regular_semisimple(int n, const PrimeField& field, SeedStream& rng) {
  for (;;) {
    Matrix g = random_sl(n, field, rng);
    if (is_regular_semisimple(g)) return g;
  }
}

}  // namespace slgrowth
