#pragma once

#include <cstdint>
#include <vector>

namespace slgrowth {

// Canonical representative of a class in Z/pZ, always in [0, p).
using Residue = std::uint32_t;

// The prime field Z/pZ. Primality is checked on construction; moduli are
// limited to p < 65536 and matrix entries pack into 16 bits.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 65536;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  // Reduces any signed integer to its canonical residue.
  Residue reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  // Throws StructuralError on a == 0.
  Residue inv(Residue a) const;
  // a^e for signed e; a must be nonzero when e < 0.
  Residue pow_signed(Residue a, std::int64_t e) const;

  // Residues in [0, p) as a list, for exhaustive loops.
  std::vector<Residue> elements() const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

// Experiment-level admission: p odd and p > n. Throws ConfigError.
void require_experiment_field(const PrimeField& field, int n);

}  // namespace slgrowth
