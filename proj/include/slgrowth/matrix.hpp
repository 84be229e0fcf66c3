#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "slgrowth/field.hpp"
#include "slgrowth/poly.hpp"

namespace slgrowth {

// n x n matrix over F_p, row-major, entries canonical residues.
class Matrix {
 public:
  Matrix(int n, const PrimeField& field);  // zero matrix
  // Entries may be any integers; they are reduced mod p.
  Matrix(const PrimeField& field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  Matrix(int n, const PrimeField& field, std::vector<Residue> entries);

  static Matrix identity(int n, const PrimeField& field);
  static Matrix diagonal(const PrimeField& field, std::span<const Residue> diag);

  int n() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.p(); }

  Residue operator()(int i, int j) const noexcept { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  Residue& operator()(int i, int j) noexcept { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  std::span<const Residue> entries() const noexcept { return e_; }

  bool operator==(const Matrix& other) const noexcept {
    return n_ == other.n_ && field_ == other.field_ && e_ == other.e_;
  }

  std::string to_string() const;

 private:
  int n_;
  PrimeField field_;
  std::vector<Residue> e_;
};

// Coefficients (a_{n-1}, ..., a_1) of det(λI - g) = λ^n + a_{n-1}λ^{n-1} + ... + a_1λ + (-1)^n.
struct KappaVector {
  std::vector<Residue> coeffs;

  auto operator<=>(const KappaVector&) const = default;
  bool operator==(const KappaVector&) const = default;
};

enum class SemisimplicityClass { kRegularSemisimple, kSemisimpleNotRegular, kNotSemisimple };

const char* to_string(SemisimplicityClass c) noexcept;

// Group law and inverses.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_inv(const Matrix& g);
Matrix mat_pow(const Matrix& g, std::uint64_t e);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix scalar_matrix(int n, const PrimeField& field, Residue s);

Residue trace(const Matrix& g) noexcept;
Residue determinant(const Matrix& g);
// Determinant of a square row-major array, by elimination with row swaps.
Residue determinant(const PrimeField& field, int n, std::vector<Residue> entries);
// Rank of a rows x cols row-major array.
int rank(const PrimeField& field, int rows, int cols, std::vector<Residue> entries);

bool in_special_linear(const Matrix& g);

// Full monic characteristic polynomial det(λI - g), low degree first.
Poly characteristic_polynomial(const Matrix& g);
// Monic minimal polynomial, found as the first linear dependency among
// vec(I), vec(g), vec(g^2), ...
Poly minimal_polynomial(const Matrix& g);

// κ(g). Throws NotInGroup unless det g = 1.
KappaVector char_poly(const Matrix& g);
// Characteristic polynomial rebuilt from κ, with constant term (-1)^n.
Poly poly_from_kappa(const PrimeField& field, const KappaVector& kappa);

// Requires p > n (separability); see require_experiment_field.
SemisimplicityClass classify_semisimple(const Matrix& g);
bool is_semisimple(const Matrix& g);
bool is_regular_semisimple(const Matrix& g);

// Row-major entries, 1 byte each when p < 256, else 2 bytes big-endian.
std::vector<std::uint8_t> canonical_encode(const Matrix& g);
Matrix canonical_decode(int n, const PrimeField& field, std::span<const std::uint8_t> bytes);
std::size_t encoding_width(std::uint32_t p) noexcept;

std::string to_hex(std::span<const std::uint8_t> bytes);
// κ rendered with the same per-entry width as canonical_encode.
std::string kappa_hex(const KappaVector& kappa, std::uint32_t p);

// Sorted eigenvalues in F_p (with multiplicity), i.e. the roots of the
// characteristic polynomial found by exhaustive evaluation.
std::vector<Residue> rational_eigenvalues(const Matrix& g);
// True iff the characteristic polynomial splits into linear factors over F_p.
bool is_split(const Matrix& g);

// Basis of the kernel of g (as column vectors).
std::vector<std::vector<Residue>> kernel_basis(const Matrix& g);

}  // namespace slgrowth
