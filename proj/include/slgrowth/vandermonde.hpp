#pragma once

#include <span>
#include <vector>

#include "slgrowth/field.hpp"

namespace slgrowth {

// e_m(s): coefficient extraction from prod_j (x + s_j). S_m in the
// square-free-monomial sense is the same polynomial. Throws StructuralError
// unless 0 <= m <= |s|.
Residue elementary_symmetric(const PrimeField& field, std::span<const Residue> s, int m);

// All e_0..e_n at once.
std::vector<Residue> elementary_symmetric_all(const PrimeField& field, std::span<const Residue> s);

// prod_{j<k} (s_k - s_j).
Residue vandermonde_product(const PrimeField& field, std::span<const Residue> s);

// Determinant of the n x n matrix whose row j is (s_j^0, ..., s_j^n) with the
// power-`omitted` column removed, by elimination.
Residue generalized_vandermonde_det(const PrimeField& field, std::span<const Residue> s, int omitted);

// det = vandermonde_product(s) * e_{n - omitted}(s), both sides exact.
bool verify_vander_identity(const PrimeField& field, std::span<const Residue> s, int omitted);

// q_k = r_k r_{k+1} ... r_{k+l-1}, indices mod n. Requires prod r = 1 and
// 1 <= l <= n - 1 (StructuralError otherwise).
std::vector<Residue> cyclic_product_coordinates(const PrimeField& field, std::span<const Residue> r, int l);

}  // namespace slgrowth
