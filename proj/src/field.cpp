#include "slgrowth/field.hpp"

#include <string>

#include "slgrowth/errors.hpp"

namespace slgrowth {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw StructuralError("modulus " + std::to_string(p) + " exceeds 16-bit entry range");
  }
  if (!is_prime(p)) {
    throw StructuralError("modulus " + std::to_string(p) + " is not prime");
  }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw StructuralError("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Residue PrimeField::pow_signed(Residue a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
  return pow(inv(a), static_cast<std::uint64_t>(-e));
}

std::vector<Residue> PrimeField::elements() const {
  std::vector<Residue> out(p_);
  for (Residue i = 0; i < p_; ++i) out[i] = i;
  return out;
}

void require_experiment_field(const PrimeField& field, int n) {
  if (n < 2) throw ConfigError("dimension n must be at least 2");
  if (field.p() == 2) throw ConfigError("characteristic 2 is excluded");
  if (field.p() <= static_cast<std::uint32_t>(n)) {
    throw ConfigError("need p > n (p=" + std::to_string(field.p()) +
                      ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace slgrowth
