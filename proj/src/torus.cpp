#include "slgrowth/torus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "slgrowth/errors.hpp"
#include "slgrowth/poly.hpp"

namespace slgrowth {

namespace {

bool commutes(const Matrix& a, const Matrix& b) { return mat_mul(a, b) == mat_mul(b, a); }

void require_regular(const Matrix& g0, const char* where) {
  if (!is_regular_semisimple(g0)) {
    throw InvalidWitness(std::string(where) + ": witness is not regular semisimple");
  }
}

}  // namespace

TorusHandle::TorusHandle(Matrix witness) : witness_(std::move(witness)) {
  require_regular(witness_, "TorusHandle");
  kappa_ = char_poly(witness_);
  degrees_ = poly::factor_degrees_squarefree(witness_.field(), characteristic_polynomial(witness_));
}

bool TorusHandle::split() const noexcept {
  return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 1; });
}

std::uint64_t TorusHandle::order() const noexcept {
  const std::uint64_t p = witness_.p();
  unsigned __int128 num = 1;
  for (int d : degrees_) {
    unsigned __int128 pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    num *= (pd - 1);
  }
  return static_cast<std::uint64_t>(num / (p - 1));
}

bool TorusHandle::contains(const Matrix& h) const { return in_special_linear(h) && commutes(h, witness_); }

ElementSet centralizer_torus(const ElementSet& a_k, const Matrix& g0) {
  require_regular(g0, "centralizer_torus");
  ElementSet out(a_k.n(), a_k.field());
  for (std::size_t i = 0; i < a_k.size(); ++i) {
    const Matrix h = a_k.at(i);
    if (commutes(h, g0)) out.insert_raw(a_k.raw(i));
  }
  return out;
}

std::string TorusReport::csv_header(std::span<const int> ks) {
  std::ostringstream os;
  os << "witness_kappa,torus_order,split_flag";
  for (int k : ks) os << ",intersection_" << k << ",ratio_" << k << ",regular_" << k;
  return os.str();
}

std::string TorusReport::csv_row() const {
  std::ostringstream os;
  os << kappa_hex(witness_kappa, witness.p()) << ',' << torus_order << ',' << (split ? 1 : 0);
  for (const auto& [k, size] : intersection_sizes) {
    os << ',' << size << ',' << format_decimal(richness_ratio.at(k)) << ',' << regular_count.at(k);
  }
  return os.str();
}

namespace {

struct Candidate {
  KappaVector kappa;
  Matrix witness;
};

// κ-distinct regular witnesses in canonical order, merged by torus.
std::vector<Candidate> pick_witnesses(const ElementSet& ball) {
  const ElementSet sorted = ball.sorted();
  std::vector<Candidate> chosen;
  std::vector<KappaVector> seen;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Matrix g = sorted.at(i);
    if (!is_regular_semisimple(g)) continue;
    KappaVector kappa = char_poly(g);
    if (std::find(seen.begin(), seen.end(), kappa) != seen.end()) continue;
    seen.push_back(kappa);
    const bool same_torus = std::any_of(chosen.begin(), chosen.end(),
                                        [&](const Candidate& c) { return commutes(c.witness, g); });
    if (!same_torus) chosen.push_back({std::move(kappa), g});
  }
  return chosen;
}

std::vector<TorusReport> scan_over(const std::vector<std::pair<int, const ElementSet*>>& balls) {
  const ElementSet& largest = *balls.back().second;
  const int n = largest.n();
  std::vector<TorusReport> reports;
  for (const auto& cand : pick_witnesses(largest)) {
    TorusHandle torus(cand.witness);
    const ElementSet meet = centralizer_torus(largest, cand.witness);
    TorusReport rep{cand.kappa, cand.witness, torus.order(), torus.split(), {}, {}, {}};
    for (const auto& [k, ball] : balls) {
      std::size_t count = 0;
      std::size_t regular = 0;
      for (std::size_t i = 0; i < meet.size(); ++i) {
        if (ball != &largest && !ball->contains_raw(meet.raw(i))) continue;
        ++count;
        if (is_regular_semisimple(meet.at(i))) ++regular;
      }
      rep.intersection_sizes[k] = count;
      rep.regular_count[k] = regular;
      rep.richness_ratio[k] =
          static_cast<double>(count) / std::pow(static_cast<double>(ball->size()), 1.0 / (n + 1));
    }
    reports.push_back(std::move(rep));
  }
  const int kmax = balls.back().first;
  std::stable_sort(reports.begin(), reports.end(), [kmax](const TorusReport& a, const TorusReport& b) {
    const auto sa = a.intersection_sizes.at(kmax);
    const auto sb = b.intersection_sizes.at(kmax);
    if (sa != sb) return sa > sb;
    return a.witness_kappa < b.witness_kappa;
  });
  return reports;
}

}  // namespace

std::vector<TorusReport> rich_torus_scan(const ElementSet& a, std::span<const int> ks_in, const ExpandOptions& opts) {
  if (ks_in.empty()) throw StructuralError("rich_torus_scan: k list is empty");
  std::vector<int> ks(ks_in.begin(), ks_in.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.front() < 1) throw StructuralError("rich_torus_scan: k must be positive");
  std::vector<ElementSet> storage;
  storage.reserve(ks.size());
  for (int k : ks) storage.push_back(word_ball(a, k, opts));
  std::vector<std::pair<int, const ElementSet*>> balls;
  for (std::size_t i = 0; i < ks.size(); ++i) balls.emplace_back(ks[i], &storage[i]);
  return scan_over(balls);
}

std::vector<TorusReport> rich_torus_scan(const ElementSet& a, int k, const ExpandOptions& opts) {
  const int ks[] = {k};
  return rich_torus_scan(a, ks, opts);
}

std::vector<TorusReport> rich_torus_scan_ball(const ElementSet& a_k, int k) {
  return scan_over({{k, &a_k}});
}

CharacterSpec::CharacterSpec(std::vector<int> exponents, int bound) : exponents_(std::move(exponents)), bound_(bound) {
  if (std::all_of(exponents_.begin(), exponents_.end(), [](int m) { return m == 0; })) {
    throw StructuralError("CharacterSpec: trivial character (all exponents zero)");
  }
  for (int m : exponents_) {
    if (std::abs(m) > bound_) throw StructuralError("CharacterSpec: exponent exceeds configured bound");
  }
}

std::vector<Residue> eigen_coordinates(const Matrix& t, const Matrix& g0) {
  require_regular(g0, "eigen_coordinates");
  const PrimeField& F = g0.field();
  const std::vector<Residue> eig = rational_eigenvalues(g0);
  if (eig.size() != static_cast<std::size_t>(g0.n())) {
    throw UnsupportedTorus("eigen_coordinates: witness does not split over F_" + std::to_string(F.p()));
  }
  if (!commutes(t, g0)) throw StructuralError("eigen_coordinates: element does not commute with the witness");
  const int n = g0.n();
  std::vector<Residue> coords;
  coords.reserve(eig.size());
  for (Residue s : eig) {
    const auto kernel = kernel_basis(mat_sub(g0, scalar_matrix(n, F, s)));
    const std::vector<Residue>& v = kernel.front();
    int j = 0;
    while (v[static_cast<std::size_t>(j)] == 0) ++j;
    Residue tv_j = 0;
    for (int c = 0; c < n; ++c) tv_j = F.add(tv_j, F.mul(t(j, c), v[static_cast<std::size_t>(c)]));
    coords.push_back(F.mul(tv_j, F.inv(v[static_cast<std::size_t>(j)])));
  }
  return coords;
}

ElementSet character_kernel_members(const ElementSet& t_elems, const CharacterSpec& spec, const Matrix& g0) {
  require_regular(g0, "character_kernel_members");
  if (!is_split(g0)) {
    throw UnsupportedTorus("character_kernel_members: nonsplit witness needs F_{p^2} coordinates");
  }
  if (spec.exponents().size() != static_cast<std::size_t>(g0.n())) {
    throw StructuralError("character_kernel_members: need exactly n exponents");
  }
  const PrimeField& F = g0.field();
  ElementSet out(t_elems.n(), t_elems.field());
  for (std::size_t i = 0; i < t_elems.size(); ++i) {
    const auto coords = eigen_coordinates(t_elems.at(i), g0);
    Residue value = 1;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      value = F.mul(value, F.pow_signed(coords[c], spec.exponents()[c]));
    }
    if (value == 1) out.insert_raw(t_elems.raw(i));
  }
  return out;
}

SemisimpleClassCount count_semisimple_classes(const ElementSet& b) {
  SemisimpleClassCount out;
  std::vector<KappaVector> kappas;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Matrix g = b.at(i);
    switch (classify_semisimple(g)) {
      case SemisimplicityClass::kRegularSemisimple:
        kappas.push_back(char_poly(g));
        break;
      case SemisimplicityClass::kSemisimpleNotRegular:
        ++out.nonregular_ss_count;
        break;
      case SemisimplicityClass::kNotSemisimple:
        break;
    }
  }
  std::sort(kappas.begin(), kappas.end());
  out.regular_class_count = static_cast<std::size_t>(std::unique(kappas.begin(), kappas.end()) - kappas.begin());
  return out;
}

}  // namespace slgrowth
