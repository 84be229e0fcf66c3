#include "slgrowth/vandermonde.hpp"

#include <string>

#include "slgrowth/errors.hpp"
#include "slgrowth/matrix.hpp"

namespace slgrowth {

std::vector<Residue> elementary_symmetric_all(const PrimeField& F, std::span<const Residue> s) {
  // coeffs[m] = e_m of the prefix processed so far.
  std::vector<Residue> e(s.size() + 1, 0);
  e[0] = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Residue v = s[j] % F.p();
    for (std::size_t m = j + 1; m >= 1; --m) e[m] = F.add(e[m], F.mul(e[m - 1], v));
  }
  return e;
}

Residue elementary_symmetric(const PrimeField& F, std::span<const Residue> s, int m) {
  if (m < 0 || static_cast<std::size_t>(m) > s.size()) {
    throw StructuralError("elementary_symmetric: degree " + std::to_string(m) + " out of range");
  }
  return elementary_symmetric_all(F, s)[static_cast<std::size_t>(m)];
}

Residue vandermonde_product(const PrimeField& F, std::span<const Residue> s) {
  Residue prod = 1;
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t k = j + 1; k < s.size(); ++k) prod = F.mul(prod, F.sub(s[k] % F.p(), s[j] % F.p()));
  return prod;
}

Residue generalized_vandermonde_det(const PrimeField& F, std::span<const Residue> s, int omitted) {
  const int n = static_cast<int>(s.size());
  if (n < 1) throw StructuralError("generalized_vandermonde_det: empty point list");
  if (omitted < 0 || omitted > n) throw StructuralError("generalized_vandermonde_det: omitted power out of range");
  std::vector<Residue> a;
  a.reserve(static_cast<std::size_t>(n * n));
  for (int j = 0; j < n; ++j) {
    Residue power = 1;
    for (int e = 0; e <= n; ++e) {
      if (e != omitted) a.push_back(power);
      power = F.mul(power, s[static_cast<std::size_t>(j)] % F.p());
    }
  }
  return determinant(F, n, std::move(a));
}

bool verify_vander_identity(const PrimeField& F, std::span<const Residue> s, int omitted) {
  const int n = static_cast<int>(s.size());
  const Residue lhs = generalized_vandermonde_det(F, s, omitted);
  const Residue rhs = F.mul(vandermonde_product(F, s), elementary_symmetric(F, s, n - omitted));
  return lhs == rhs;
}

std::vector<Residue> cyclic_product_coordinates(const PrimeField& F, std::span<const Residue> r, int l) {
  const int n = static_cast<int>(r.size());
  if (l < 1 || l > n - 1) throw StructuralError("cyclic_product_coordinates: need 1 <= l <= n-1");
  Residue total = 1;
  for (Residue v : r) total = F.mul(total, v % F.p());
  if (total != 1) throw StructuralError("cyclic_product_coordinates: product of coordinates is not 1");
  std::vector<Residue> q(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Residue prod = 1;
    for (int j = 0; j < l; ++j) prod = F.mul(prod, r[static_cast<std::size_t>((k + j) % n)] % F.p());
    q[static_cast<std::size_t>(k)] = prod;
  }
  return q;
}

}  // namespace slgrowth
