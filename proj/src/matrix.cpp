#include "slgrowth/matrix.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <utility>

#include "slgrowth/errors.hpp"

namespace slgrowth {

namespace {

void require_compatible(const Matrix& a, const Matrix& b, const char* op) {
  if (a.n() != b.n() || !(a.field() == b.field())) {
    throw StructuralError(std::string(op) + ": dimension or field mismatch");
  }
}

}  // namespace

Matrix::Matrix(int n, const PrimeField& field)
    : n_(n), field_(field), e_(static_cast<std::size_t>(n * n), 0) {
  if (n < 1) throw StructuralError("matrix dimension must be positive");
}

Matrix::Matrix(const PrimeField& field,
               std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(static_cast<int>(rows.size())), field_(field) {
  e_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw StructuralError("matrix rows must be square");
    for (auto v : row) e_.push_back(field.reduce(v));
  }
  if (n_ < 1) throw StructuralError("matrix dimension must be positive");
}

Matrix::Matrix(int n, const PrimeField& field, std::vector<Residue> entries)
    : n_(n), field_(field), e_(std::move(entries)) {
  if (n < 1 || e_.size() != static_cast<std::size_t>(n * n)) {
    throw StructuralError("entry count does not match dimension");
  }
  for (auto& v : e_) v %= field.p();
}

Matrix Matrix::identity(int n, const PrimeField& field) {
  Matrix m(n, field);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const PrimeField& field, std::span<const Residue> diag) {
  Matrix m(static_cast<int>(diag.size()), field);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    m(static_cast<int>(i), static_cast<int>(i)) = diag[i] % field.p();
  }
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

const char* to_string(SemisimplicityClass c) noexcept {
  switch (c) {
    case SemisimplicityClass::kRegularSemisimple:
      return "REGULAR_SEMISIMPLE";
    case SemisimplicityClass::kSemisimpleNotRegular:
      return "SEMISIMPLE_NOT_REGULAR";
    case SemisimplicityClass::kNotSemisimple:
      return "NOT_SEMISIMPLE";
  }
  return "?";
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_compatible(a, b, "mat_mul");
  const int n = a.n();
  const std::uint64_t p = a.p();
  Matrix out(n, a.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < n; ++k) {
        acc += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
        // p < 2^16 so each term < 2^32; reduce well before overflow.
        if ((k & 0xFF) == 0xFF) acc %= p;
      }
      out(i, j) = static_cast<Residue>(acc % p);
    }
  }
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  require_compatible(a, b, "mat_sub");
  Matrix out(a.n(), a.field());
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < a.n(); ++j) out(i, j) = a.field().sub(a(i, j), b(i, j));
  return out;
}

Matrix scalar_matrix(int n, const PrimeField& field, Residue s) {
  Matrix m(n, field);
  for (int i = 0; i < n; ++i) m(i, i) = s % field.p();
  return m;
}

Matrix mat_inv(const Matrix& g) {
  const int n = g.n();
  const PrimeField& F = g.field();
  // Gauss-Jordan on [g | I].
  const int w = 2 * n;
  std::vector<Residue> aug(static_cast<std::size_t>(n * w), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i * w + j] = g(i, j);
    aug[i * w + n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (aug[r * w + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrix("matrix is singular over F_" + std::to_string(F.p()));
    if (pivot != col) {
      for (int j = 0; j < w; ++j) std::swap(aug[pivot * w + j], aug[col * w + j]);
    }
    const Residue inv = F.inv(aug[col * w + col]);
    for (int j = 0; j < w; ++j) aug[col * w + j] = F.mul(aug[col * w + j], inv);
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r * w + col] == 0) continue;
      const Residue f = aug[r * w + col];
      for (int j = 0; j < w; ++j) {
        aug[r * w + j] = F.sub(aug[r * w + j], F.mul(f, aug[col * w + j]));
      }
    }
  }
  Matrix out(n, F);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug[i * w + n + j];
  return out;
}

Matrix mat_pow(const Matrix& g, std::uint64_t e) {
  Matrix result = Matrix::identity(g.n(), g.field());
  Matrix base = g;
  while (e > 0) {
    if (e & 1U) result = mat_mul(result, base);
    e >>= 1U;
    if (e > 0) base = mat_mul(base, base);
  }
  return result;
}

Residue trace(const Matrix& g) noexcept {
  Residue t = 0;
  for (int i = 0; i < g.n(); ++i) t = g.field().add(t, g(i, i));
  return t;
}

Residue determinant(const PrimeField& F, int n, std::vector<Residue> a) {
  if (a.size() != static_cast<std::size_t>(n * n)) throw StructuralError("determinant: bad size");
  Residue det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a[r * n + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = F.neg(det);
    }
    const Residue pv = a[col * n + col];
    det = F.mul(det, pv);
    const Residue inv = F.inv(pv);
    for (int r = col + 1; r < n; ++r) {
      if (a[r * n + col] == 0) continue;
      const Residue f = F.mul(a[r * n + col], inv);
      for (int j = col; j < n; ++j) a[r * n + j] = F.sub(a[r * n + j], F.mul(f, a[col * n + j]));
    }
  }
  return det;
}

Residue determinant(const Matrix& g) {
  return determinant(g.field(), g.n(), std::vector<Residue>(g.entries().begin(), g.entries().end()));
}

int rank(const PrimeField& F, int rows, int cols, std::vector<Residue> a) {
  if (a.size() != static_cast<std::size_t>(rows * cols)) throw StructuralError("rank: bad size");
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i * cols + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[r * cols + j]);
    const Residue inv = F.inv(a[r * cols + col]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i * cols + col] == 0) continue;
      const Residue f = F.mul(a[i * cols + col], inv);
      for (int j = col; j < cols; ++j) a[i * cols + j] = F.sub(a[i * cols + j], F.mul(f, a[r * cols + j]));
    }
    ++r;
  }
  return r;
}

bool in_special_linear(const Matrix& g) { return determinant(g) == 1; }

Poly characteristic_polynomial(const Matrix& g) {
  const int n = g.n();
  const PrimeField& F = g.field();
  std::vector<Residue> h(g.entries().begin(), g.entries().end());
  auto H = [&](int i, int j) -> Residue& { return h[static_cast<std::size_t>(i * n + j)]; };

  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i) {
      if (H(i, j) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(H(pivot, c), H(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(H(r, pivot), H(r, j + 1));
    }
    const Residue inv = F.inv(H(j + 1, j));
    for (int k = j + 2; k < n; ++k) {
      if (H(k, j) == 0) continue;
      const Residue u = F.mul(H(k, j), inv);
      for (int c = 0; c < n; ++c) H(k, c) = F.sub(H(k, c), F.mul(u, H(j + 1, c)));
      for (int r = 0; r < n; ++r) H(r, j + 1) = F.add(H(r, j + 1), F.mul(u, H(r, k)));
    }
  }

  // chars[m] = charpoly of the leading m x m block.
  std::vector<Poly> chars(static_cast<std::size_t>(n + 1));
  chars[0] = Poly{1};
  for (int m = 1; m <= n; ++m) {
    const int c = m - 1;  // 0-based column of the new block
    Poly next = poly::mul(F, Poly{F.neg(H(c, c)), 1}, chars[m - 1]);
    Residue sub_prod = 1;
    for (int i = c - 1; i >= 0; --i) {
      sub_prod = F.mul(sub_prod, H(i + 1, i));
      const Residue coef = F.mul(H(i, c), sub_prod);
      if (coef == 0) continue;
      Poly term = chars[static_cast<std::size_t>(i)];
      for (auto& t : term) t = F.mul(t, coef);
      next = poly::sub(F, next, term);
    }
    chars[static_cast<std::size_t>(m)] = std::move(next);
  }
  Poly out = chars[static_cast<std::size_t>(n)];
  out.resize(static_cast<std::size_t>(n + 1), 0);  // keep full length even if constant is 0
  return out;
}

Poly minimal_polynomial(const Matrix& g) {
  const int n = g.n();
  const PrimeField& F = g.field();
  const int dim = n * n;
  // Echelon basis of the span of vec(g^0..g^{k-1}), with the combination of
  // powers that produced each basis vector.
  std::vector<std::vector<Residue>> basis;
  std::vector<int> pivots;
  std::vector<Poly> combos;
  Matrix power = Matrix::identity(n, F);
  for (int k = 0; k <= n; ++k) {
    std::vector<Residue> v(power.entries().begin(), power.entries().end());
    Poly combo(static_cast<std::size_t>(k + 1), 0);
    combo[static_cast<std::size_t>(k)] = 1;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Residue c = v[static_cast<std::size_t>(pivots[b])];
      if (c == 0) continue;
      for (int j = 0; j < dim; ++j) v[j] = F.sub(v[j], F.mul(c, basis[b][j]));
      for (std::size_t j = 0; j < combos[b].size(); ++j) {
        combo[j] = F.sub(combo[j], F.mul(c, combos[b][j]));
      }
    }
    int pivot = -1;
    for (int j = 0; j < dim; ++j) {
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) return poly::make_monic(F, combo);
    const Residue inv = F.inv(v[static_cast<std::size_t>(pivot)]);
    for (auto& x : v) x = F.mul(x, inv);
    for (auto& x : combo) x = F.mul(x, inv);
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
    combos.push_back(std::move(combo));
    power = mat_mul(power, g);
  }
  // Cayley-Hamilton guarantees a dependency by degree n.
  throw StructuralError("minimal polynomial search exceeded degree n");
}

KappaVector char_poly(const Matrix& g) {
  if (!in_special_linear(g)) throw NotInGroup("char_poly: det(g) != 1");
  const Poly chi = characteristic_polynomial(g);
  const int n = g.n();
  KappaVector kappa;
  kappa.coeffs.reserve(static_cast<std::size_t>(n - 1));
  for (int k = n - 1; k >= 1; --k) kappa.coeffs.push_back(chi[static_cast<std::size_t>(k)]);
  return kappa;
}

Poly poly_from_kappa(const PrimeField& F, const KappaVector& kappa) {
  const int n = static_cast<int>(kappa.coeffs.size()) + 1;
  Poly f(static_cast<std::size_t>(n + 1), 0);
  f[static_cast<std::size_t>(n)] = 1;
  f[0] = (n % 2 == 0) ? 1 : F.neg(1);
  for (int k = 1; k <= n - 1; ++k) f[static_cast<std::size_t>(k)] = kappa.coeffs[static_cast<std::size_t>(n - 1 - k)];
  return f;
}

SemisimplicityClass classify_semisimple(const Matrix& g) {
  const PrimeField& F = g.field();
  const Poly chi = characteristic_polynomial(g);
  if (poly::is_squarefree(F, chi)) return SemisimplicityClass::kRegularSemisimple;
  if (poly::is_squarefree(F, minimal_polynomial(g))) return SemisimplicityClass::kSemisimpleNotRegular;
  return SemisimplicityClass::kNotSemisimple;
}

bool is_semisimple(const Matrix& g) {
  return classify_semisimple(g) != SemisimplicityClass::kNotSemisimple;
}

bool is_regular_semisimple(const Matrix& g) {
  return poly::is_squarefree(g.field(), characteristic_polynomial(g));
}

std::size_t encoding_width(std::uint32_t p) noexcept { return p < 256 ? 1 : 2; }

std::vector<std::uint8_t> canonical_encode(const Matrix& g) {
  const std::size_t w = encoding_width(g.p());
  std::vector<std::uint8_t> out;
  out.reserve(g.entries().size() * w);
  for (Residue v : g.entries()) {
    if (w == 2) out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  return out;
}

Matrix canonical_decode(int n, const PrimeField& field, std::span<const std::uint8_t> bytes) {
  const std::size_t w = encoding_width(field.p());
  if (bytes.size() != static_cast<std::size_t>(n * n) * w) {
    throw StructuralError("canonical_decode: byte length does not match (n, p)");
  }
  std::vector<Residue> e(static_cast<std::size_t>(n * n));
  for (std::size_t i = 0; i < e.size(); ++i) {
    Residue v = w == 2 ? (Residue{bytes[2 * i]} << 8) | bytes[2 * i + 1] : Residue{bytes[i]};
    if (v >= field.p()) throw StructuralError("canonical_decode: entry out of range");
    e[i] = v;
  }
  return Matrix(n, field, std::move(e));
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xF]);
  }
  return s;
}

std::string kappa_hex(const KappaVector& kappa, std::uint32_t p) {
  const std::size_t w = encoding_width(p);
  std::vector<std::uint8_t> bytes;
  for (Residue v : kappa.coeffs) {
    if (w == 2) bytes.push_back(static_cast<std::uint8_t>(v >> 8));
    bytes.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  return to_hex(bytes);
}

std::vector<Residue> rational_eigenvalues(const Matrix& g) {
  const PrimeField& F = g.field();
  Poly chi = characteristic_polynomial(g);
  std::vector<Residue> roots;
  for (Residue x = 0; x < F.p() && poly::degree(chi) > 0; ++x) {
    while (poly::degree(chi) > 0 && poly::eval(F, chi, x) == 0) {
      roots.push_back(x);
      Poly q, r;
      poly::divmod(F, chi, Poly{F.neg(x), 1}, q, r);
      chi = std::move(q);
    }
  }
  return roots;
}

bool is_split(const Matrix& g) {
  return rational_eigenvalues(g).size() == static_cast<std::size_t>(g.n());
}

std::vector<std::vector<Residue>> kernel_basis(const Matrix& g) {
  const int n = g.n();
  const PrimeField& F = g.field();
  std::vector<Residue> a(g.entries().begin(), g.entries().end());
  std::vector<int> pivot_cols;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int pivot = -1;
    for (int i = r; i < n; ++i) {
      if (a[i * n + col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[r * n + j]);
    const Residue inv = F.inv(a[r * n + col]);
    for (int j = 0; j < n; ++j) a[r * n + j] = F.mul(a[r * n + j], inv);
    for (int i = 0; i < n; ++i) {
      if (i == r || a[i * n + col] == 0) continue;
      const Residue f = a[i * n + col];
      for (int j = 0; j < n; ++j) a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[r * n + j]));
    }
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<std::vector<Residue>> basis;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Residue> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v[static_cast<std::size_t>(pivot_cols[k])] = F.neg(a[static_cast<int>(k) * n + free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace slgrowth
