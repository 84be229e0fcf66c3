#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's linear algebra, polynomial or symmetric-function routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "slgrowth/field.hpp"
#include "slgrowth/matrix.hpp"

namespace oracle {

using slgrowth::Matrix;
using slgrowth::PrimeField;
using slgrowth::Residue;

// Leibniz expansion over all permutations.
inline Residue leibniz_det(const PrimeField& F, int n, const std::vector<Residue>& a) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Residue total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Residue term = 1;
    for (int i = 0; i < n; ++i) term = F.mul(term, a[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])]);
    total = inversions % 2 ? F.sub(total, term) : F.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Residue leibniz_det(const Matrix& g) {
  return leibniz_det(g.field(), g.n(), std::vector<Residue>(g.entries().begin(), g.entries().end()));
}

// det(λI - g) by Leibniz.
inline Residue charpoly_at(const Matrix& g, Residue lambda) {
  const PrimeField& F = g.field();
  const int n = g.n();
  std::vector<Residue> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Residue d = i == j ? lambda : 0;
      a[static_cast<std::size_t>(i * n + j)] = F.sub(d, g(i, j));
    }
  return leibniz_det(F, n, a);
}

// Coefficients of det(λI - g), low degree first, by Lagrange interpolation of
// Leibniz determinants at λ = 0..n. Needs p > n.
inline std::vector<Residue> charpoly_coeffs(const Matrix& g) {
  const PrimeField& F = g.field();
  const int n = g.n();
  std::vector<Residue> result(static_cast<std::size_t>(n + 1), 0);
  for (int k = 0; k <= n; ++k) {
    // Basis polynomial L_k(x) = prod_{m != k} (x - m) / (k - m).
    std::vector<Residue> basis{1};
    Residue denom = 1;
    for (int m = 0; m <= n; ++m) {
      if (m == k) continue;
      std::vector<Residue> next(basis.size() + 1, 0);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] = F.add(next[d + 1], basis[d]);
        next[d] = F.sub(next[d], F.mul(basis[d], F.reduce(m)));
      }
      basis = std::move(next);
      denom = F.mul(denom, F.reduce(k - m));
    }
    const Residue scale = F.mul(charpoly_at(g, F.reduce(k)), F.inv(denom));
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] = F.add(result[d], F.mul(scale, basis[d]));
  }
  return result;
}

// Plain Gauss-Jordan rank.
inline int rank(const PrimeField& F, int rows, int cols, std::vector<Residue> a) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i * cols + c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a[static_cast<std::size_t>(piv * cols + j)], a[static_cast<std::size_t>(r * cols + j)]);
    const Residue inv = F.inv(a[static_cast<std::size_t>(r * cols + c)]);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Residue f = F.mul(a[static_cast<std::size_t>(i * cols + c)], inv);
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j)
        a[static_cast<std::size_t>(i * cols + j)] =
            F.sub(a[static_cast<std::size_t>(i * cols + j)], F.mul(f, a[static_cast<std::size_t>(r * cols + j)]));
    }
    ++r;
  }
  return r;
}

enum class Kind { kRegular, kSemisimple, kNotSemisimple };

// Valid for n <= 3: whatever part of the characteristic polynomial has no
// root in F_p has degree at most 3, hence is irreducible over the perfect
// field F_p and contributes simple eigenvalues over the closure. Repeated
// eigenvalues are therefore rational, and diagonalizability reduces to
// geometric multiplicity n - rank(g - λI) matching algebraic multiplicity
// for every rational λ.
inline Kind diagonalizability(const Matrix& g) {
  const PrimeField& F = g.field();
  const int n = g.n();
  std::vector<Residue> chi = charpoly_coeffs(g);
  bool repeated = false;
  bool diagonalizable = true;
  for (Residue lambda = 0; lambda < F.p(); ++lambda) {
    int mult = 0;
    std::vector<Residue> f = chi;
    for (;;) {
      Residue value = 0;
      for (std::size_t d = f.size(); d-- > 0;) value = F.add(F.mul(value, lambda), f[d]);
      if (value != 0 || f.size() <= 1) break;
      // Synthetic division by (x - λ).
      std::vector<Residue> q(f.size() - 1);
      Residue carry = 0;
      for (std::size_t d = f.size(); d-- > 1;) {
        carry = F.add(f[d], F.mul(carry, lambda));
        q[d - 1] = carry;
      }
      f = std::move(q);
      ++mult;
    }
    if (mult == 0) continue;
    if (mult > 1) repeated = true;
    std::vector<Residue> shifted(g.entries().begin(), g.entries().end());
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i * n + i)] = F.sub(shifted[static_cast<std::size_t>(i * n + i)], lambda);
    if (n - oracle::rank(F, n, n, shifted) != mult) diagonalizable = false;
  }
  if (!diagonalizable) return Kind::kNotSemisimple;
  return repeated ? Kind::kSemisimple : Kind::kRegular;
}

// e_m by enumeration of all m-subsets.
inline Residue elementary_symmetric(const PrimeField& F, const std::vector<Residue>& s, int m) {
  const int n = static_cast<int>(s.size());
  Residue total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    Residue term = 1;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) term = F.mul(term, s[static_cast<std::size_t>(j)]);
    total = F.add(total, term);
  }
  return total;
}

// Σ_d r(d)^2 from an explicit table of a - b over all pairs.
inline std::uint64_t additive_energy(const PrimeField& F, const std::vector<Residue>& x, const std::vector<Residue>& y) {
  std::map<Residue, std::uint64_t> table;
  for (Residue a : x)
    for (Residue b : y) ++table[F.sub(a, b)];
  std::uint64_t total = 0;
  for (const auto& [d, r] : table) total += r * r;
  return total;
}

// Naive product without any shared kernel.
inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const int n = a.n();
  const PrimeField& F = a.field();
  Matrix c(n, F);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
      c(i, j) = static_cast<Residue>(acc % F.p());
    }
  return c;
}

// g^e by e - 1 iterated products.
inline Matrix iterated_power(const Matrix& g, int e) {
  Matrix r = Matrix::identity(g.n(), g.field());
  for (int i = 0; i < e; ++i) r = multiply(r, g);
  return r;
}

inline Residue trace(const Matrix& g) {
  Residue t = 0;
  for (int i = 0; i < g.n(); ++i) t = g.field().add(t, g(i, i));
  return t;
}

// Every matrix of GL_2(F_p).
inline std::vector<Matrix> gl2(const PrimeField& F) {
  std::vector<Matrix> out;
  const Residue p = F.p();
  for (Residue a = 0; a < p; ++a)
    for (Residue b = 0; b < p; ++b)
      for (Residue c = 0; c < p; ++c)
        for (Residue d = 0; d < p; ++d) {
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
          out.push_back(Matrix(2, F, {a, b, c, d}));
        }
  return out;
}

inline Matrix inverse2(const Matrix& h) {
  const PrimeField& F = h.field();
  const Residue det = F.sub(F.mul(h(0, 0), h(1, 1)), F.mul(h(0, 1), h(1, 0)));
  const Residue di = F.inv(det);
  return Matrix(2, F, {F.mul(h(1, 1), di), F.mul(F.neg(h(0, 1)), di), F.mul(F.neg(h(1, 0)), di), F.mul(h(0, 0), di)});
}

// Every element of SL_n(F_p) by enumerating all p^{n^2} matrices (tiny cases).
inline std::vector<Matrix> sl_by_enumeration(int n, const PrimeField& F) {
  std::vector<Matrix> out;
  const std::size_t cells = static_cast<std::size_t>(n * n);
  std::vector<Residue> e(cells, 0);
  for (;;) {
    if (leibniz_det(F, n, e) == 1) out.push_back(Matrix(n, F, e));
    std::size_t i = 0;
    while (i < cells && ++e[i] == F.p()) e[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

// Centralizer size of a regular g0 in SL_n(F_p), by enumerating the commutant
// {X : X g0 = g0 X}. For regular g0 the commutant is spanned by
// I, g0, ..., g0^{n-1}, so it has p^n elements.
inline std::size_t centralizer_order(const Matrix& g0) {
  const PrimeField& F = g0.field();
  const int n = g0.n();
  std::vector<Matrix> basis;
  Matrix power = Matrix::identity(n, F);
  for (int k = 0; k < n; ++k) {
    basis.push_back(power);
    power = multiply(power, g0);
  }
  std::size_t count = 0;
  std::vector<Residue> coeff(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<Residue> e(static_cast<std::size_t>(n * n), 0);
    for (int k = 0; k < n; ++k)
      for (std::size_t c = 0; c < e.size(); ++c)
        e[c] = F.add(e[c], F.mul(coeff[static_cast<std::size_t>(k)], basis[static_cast<std::size_t>(k)].entries()[c]));
    if (leibniz_det(F, n, e) == 1) ++count;
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == F.p()) coeff[i++] = 0;
    if (i == coeff.size()) break;
  }
  return count;
}

// Diagonal entries with det 1 and pairwise distinct values, for n = 2 or 3.
inline std::vector<Residue> distinct_unit_diagonal(const PrimeField& F, int n) {
  for (Residue a = 2; a < F.p(); ++a) {
    if (n == 2) {
      if (F.inv(a) != a) return {a, F.inv(a)};
      continue;
    }
    for (Residue b = a + 1; b < F.p(); ++b) {
      const Residue c = F.inv(F.mul(a, b));
      if (c != a && c != b) return {a, b, c};
    }
  }
  return {};
}

}  // namespace oracle
