#include "slgrowth/trace_lab.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "slgrowth/errors.hpp"
#include "slgrowth/vandermonde.hpp"

namespace slgrowth {

namespace {

void require_regular(const Matrix& t, const char* where) {
  if (!is_regular_semisimple(t)) throw InvalidWitness(std::string(where) + ": t is not regular semisimple");
}

}  // namespace

TorusPowers::TorusPowers(const Matrix& t) {
  powers_.reserve(static_cast<std::size_t>(t.n() + 1));
  powers_.push_back(Matrix::identity(t.n(), t.field()));
  for (int k = 1; k <= t.n(); ++k) powers_.push_back(mat_mul(t, powers_.back()));
}

TraceTuple trace_tuple(const Matrix& g, const Matrix& t, int omitted) {
  const int n = t.n();
  if (omitted < 0 || omitted > n) throw StructuralError("trace_tuple: omitted index out of range");
  TraceTuple out{omitted, {}};
  Matrix shifted = g;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) shifted = mat_mul(t, shifted);
    if (k != omitted) out.values.push_back(trace(shifted));
  }
  return out;
}

ClassTuple class_tuple(const Matrix& g, const Matrix& t, int omitted) {
  const int n = t.n();
  if (omitted < 0 || omitted > n) throw StructuralError("class_tuple: omitted index out of range");
  ClassTuple out{omitted, {}};
  Matrix shifted = g;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) shifted = mat_mul(t, shifted);
    if (k != omitted) out.values.push_back(char_poly(shifted));
  }
  return out;
}

WealthTable::WealthTable(const Matrix& t, const ElementSet& pool) : t_(t) {
  require_regular(t, "WealthTable");
  const int n = t.n();
  std::vector<std::map<Residue, std::set<KappaVector>>> classes(static_cast<std::size_t>(n + 1));
  traces_.reserve(pool.size());
  eligible_.reserve(pool.size());
  for (std::size_t idx = 0; idx < pool.size(); ++idx) {
    Matrix shifted = pool.at(idx);
    std::vector<Residue> tr(static_cast<std::size_t>(n + 1));
    bool all_semisimple = true;
    for (int i = 0; i <= n; ++i) {
      if (i > 0) shifted = mat_mul(t, shifted);
      tr[static_cast<std::size_t>(i)] = trace(shifted);
      if (is_semisimple(shifted)) {
        classes[static_cast<std::size_t>(i)][tr[static_cast<std::size_t>(i)]].insert(char_poly(shifted));
      } else {
        all_semisimple = false;
      }
    }
    traces_.push_back(std::move(tr));
    eligible_.push_back(all_semisimple);
  }
  wealth_.resize(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    for (const auto& [r, kappas] : classes[static_cast<std::size_t>(i)]) {
      wealth_[static_cast<std::size_t>(i)][r] = kappas.size();
    }
  }
}

std::size_t WealthTable::wealth(int i, Residue r) const {
  if (i < 0 || i > n()) throw StructuralError("wealth: shift index out of range");
  const auto& m = wealth_[static_cast<std::size_t>(i)];
  auto it = m.find(r);
  return it == m.end() ? 0 : it->second;
}

std::size_t wealth(const Matrix& t, int i, Residue r, const ElementSet& pool) {
  return WealthTable(t, pool).wealth(i, r);
}

int dyadic_index(std::size_t w) {
  if (w == 0) throw StructuralError("dyadic_index: wealth must be positive");
  int j = 0;
  while (w >>= 1U) ++j;
  return j;
}

std::string WealthBin::csv_header() { return "t_kappa,jvec,member_count"; }

std::string WealthBin::csv_row() const {
  std::ostringstream os;
  os << kappa_hex(char_poly(t), t.p()) << ',';
  for (std::size_t i = 0; i < jvec.size(); ++i) os << (i ? "-" : "") << jvec[i];
  os << ',' << members.size();
  return os.str();
}

std::vector<WealthBin> dyadic_bins(const WealthTable& table, const ElementSet& pool) {
  const int n = table.n();
  std::map<std::vector<int>, ElementSet> grouped;
  for (std::size_t idx = 0; idx < pool.size(); ++idx) {
    if (!table.eligible()[idx]) continue;
    std::vector<int> jvec(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
      jvec[static_cast<std::size_t>(i)] =
          dyadic_index(table.wealth(i, table.member_traces()[idx][static_cast<std::size_t>(i)]));
    }
    auto it = grouped.find(jvec);
    if (it == grouped.end()) it = grouped.emplace(jvec, ElementSet(pool.n(), pool.field())).first;
    it->second.insert_raw(pool.raw(idx));
  }
  std::vector<WealthBin> bins;
  bins.reserve(grouped.size());
  for (auto& [jvec, members] : grouped) bins.push_back(WealthBin{table.t(), jvec, std::move(members)});
  return bins;
}

std::vector<WealthBin> dyadic_bins(const Matrix& t, const ElementSet& pool) {
  return dyadic_bins(WealthTable(t, pool), pool);
}

const WealthBin& popular_tuple(std::span<const WealthBin> bins) {
  if (bins.empty()) throw NoBins("popular_tuple: no bins");
  const WealthBin* best = &bins.front();
  for (const auto& b : bins.subspan(1)) {
    if (b.members.size() > best->members.size() ||
        (b.members.size() == best->members.size() && b.jvec < best->jvec)) {
      best = &b;
    }
  }
  return *best;
}

int bin_spread(std::span<const WealthBin> bins, std::size_t threshold) {
  int spread = 0;
  for (const auto& b : bins) {
    if (b.members.size() < threshold || b.jvec.empty()) continue;
    const auto [lo, hi] = std::minmax_element(b.jvec.begin(), b.jvec.end());
    spread = std::max(spread, *hi - *lo);
  }
  return spread;
}

FVector f_of(const Matrix& t) {
  require_regular(t, "f_of");
  const PrimeField& F = t.field();
  const int n = t.n();
  const KappaVector kappa = char_poly(t);  // (a_{n-1}, ..., a_1)
  FVector f;
  f.r.resize(static_cast<std::size_t>(n));
  f.r[0] = (n % 2 == 1) ? 1 : F.neg(1);  // (-1)^{n+1}
  for (int k = 1; k <= n - 1; ++k) {
    f.r[static_cast<std::size_t>(k)] = F.neg(kappa.coeffs[static_cast<std::size_t>(n - 1 - k)]);
  }
  return f;
}

std::string fvector_csv_row(const Matrix& t, const FVector& f) {
  std::ostringstream os;
  os << kappa_hex(char_poly(t), t.p());
  for (Residue r : f.r) os << ',' << r;
  return os.str();
}

FiberBound fiber_bound_check(const ElementSet& s) {
  FiberBound out;
  out.set_size = s.size();
  for (int k = 2; k <= s.n(); ++k) out.n_factorial *= static_cast<std::size_t>(k);
  if (s.empty()) return out;
  const Matrix first = s.at(0);
  std::set<FVector> image;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Matrix t = s.at(i);
    require_regular(t, "fiber_bound_check");
    if (!(mat_mul(t, first) == mat_mul(first, t))) {
      throw InvalidWitness("fiber_bound_check: members do not lie in one torus");
    }
    image.insert(f_of(t));
  }
  out.image_size = image.size();
  return out;
}

LindepResult lindep_check(const Matrix& t) {
  const PrimeField& F = t.field();
  const int n = t.n();
  LindepResult out;
  out.eigenvalues = rational_eigenvalues(t);
  if (out.eigenvalues.size() != static_cast<std::size_t>(n)) {
    throw UnsupportedTorus("lindep_check: t does not split over F_" + std::to_string(F.p()));
  }
  // rows[i] = (s_1^i, ..., s_n^i)
  std::vector<std::vector<Residue>> rows(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    for (Residue s : out.eigenvalues) rows[static_cast<std::size_t>(i)].push_back(F.pow(s, static_cast<std::uint64_t>(i)));
  }
  std::vector<Residue> full;
  for (const auto& row : rows) full.insert(full.end(), row.begin(), row.end());
  out.dependent_all = rank(F, n + 1, n, full) <= n;

  out.independent_subsets = true;
  for (int omit = 0; omit <= n; ++omit) {
    std::vector<Residue> sub;
    for (int i = 0; i <= n; ++i) {
      if (i != omit) sub.insert(sub.end(), rows[static_cast<std::size_t>(i)].begin(), rows[static_cast<std::size_t>(i)].end());
    }
    const bool independent = rank(F, n, n, sub) == n;
    out.subset_independent.push_back(independent);
    out.independent_subsets = out.independent_subsets && independent;
  }

  out.symmetric = elementary_symmetric_all(F, out.eigenvalues);
  const bool distinct = std::adjacent_find(out.eigenvalues.begin(), out.eigenvalues.end()) == out.eigenvalues.end();
  const bool nonzero = std::none_of(out.symmetric.begin(), out.symmetric.end(), [](Residue v) { return v == 0; });
  out.outside_w = distinct && nonzero;
  return out;
}

}  // namespace slgrowth
