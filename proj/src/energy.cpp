#include "slgrowth/energy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slgrowth/errors.hpp"
#include "slgrowth/growth.hpp"
#include "slgrowth/trace_lab.hpp"

namespace slgrowth {

ScalarSet::ScalarSet(const PrimeField& field, std::initializer_list<std::int64_t> values) : field_(field) {
  for (auto v : values) values_.insert(field.reduce(v));
}

ScalarSet::ScalarSet(const PrimeField& field, const std::vector<Residue>& values) : field_(field) {
  for (auto v : values) values_.insert(v % field.p());
}

void VectorSet::insert(FieldVector v) {
  if (static_cast<int>(v.size()) != dim_) throw StructuralError("VectorSet: dimension mismatch");
  for (auto& c : v) c %= field_.p();
  values_.insert(std::move(v));
}

Residue dot(const PrimeField& F, const FieldVector& y, const FieldVector& x) {
  if (y.size() != x.size()) throw StructuralError("dot: length mismatch");
  Residue acc = 0;
  for (std::size_t i = 0; i < y.size(); ++i) acc = F.add(acc, F.mul(y[i], x[i]));
  return acc;
}

void FiberFamily::insert(const FieldVector& y, const FieldVector& x) {
  for (Residue c : x) {
    if (!x_.contains(c)) throw StructuralError("FiberFamily: coordinate outside X");
  }
  if (!x_.contains(dot(x_.field(), y, x))) throw StructuralError("FiberFamily: y·x is not in X");
  fibers_[y].insert(x);
}

bool FiberFamily::certificate_holds() const {
  for (const auto& [y, xs] : fibers_) {
    for (const auto& x : xs) {
      if (!std::all_of(x.begin(), x.end(), [&](Residue c) { return x_.contains(c); })) return false;
      if (!x_.contains(dot(x_.field(), y, x))) return false;
    }
  }
  return true;
}

std::uint64_t additive_energy(const ScalarSet& x, const ScalarSet& y) {
  if (x.empty() || y.empty()) return 0;
  const std::uint32_t p = x.field().p();
  std::vector<std::uint8_t> in_x(p, 0);
  for (Residue a : x.values()) in_x[a] = 1;
  // r(d) = #{b ∈ Y : b + d ∈ X}; summed in increasing d.
  std::uint64_t energy = 0;
  for (std::uint32_t d = 0; d < p; ++d) {
    std::uint64_t r = 0;
    for (Residue b : y.values()) {
      std::uint32_t a = b + d;
      if (a >= p) a -= p;
      r += in_x[a];
    }
    energy += r * r;
  }
  return energy;
}

ScalarSet dilate(const ScalarSet& x, Residue y) {
  ScalarSet out(x.field());
  for (Residue v : x.values()) out.insert(x.field().mul(v, y % x.field().p()));
  return out;
}

namespace {

struct PopularData {
  Matrix t;
  FVector f;
  ElementSet members;
};

}  // namespace

VitalInstance assemble_vital_instance_from_pool(const ElementSet& pool, const ElementSet& d) {
  if (d.empty()) throw StructuralError("assemble_vital_instance: D is empty");
  const PrimeField& F = pool.field();
  const int n = pool.n();
  std::vector<PopularData> chosen;
  ScalarSet x(F);
  VectorSet y(F, n);
  std::size_t total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Matrix t = d.at(i);
    if (!is_regular_semisimple(t)) throw InvalidWitness("assemble_vital_instance: member of D is not regular semisimple");
    if (!is_split(t)) throw UnsupportedTorus("assemble_vital_instance: member of D is not split");
    const FVector f = f_of(t);
    y.insert(f.r);
    const auto bins = dyadic_bins(t, pool);
    if (bins.empty()) {
      chosen.push_back({t, f, ElementSet(n, F)});
      continue;
    }
    const WealthBin& best = popular_tuple(bins);
    // Every bin member has all of g..t^n g semisimple.
    const TorusPowers powers(t);
    for (std::size_t m = 0; m < best.members.size(); ++m) {
      const Matrix g = best.members.at(m);
      for (int k = 0; k <= n; ++k) x.insert(trace(mat_mul(powers.power(k), g)));
    }
    total += best.members.size();
    chosen.push_back({t, f, best.members});
  }
  FiberFamily fibers(x);
  for (const auto& c : chosen) {
    fibers.touch(c.f.r);
    const TorusPowers powers(c.t);
    for (std::size_t m = 0; m < c.members.size(); ++m) {
      const Matrix g = c.members.at(m);
      FieldVector xs(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) xs[static_cast<std::size_t>(k)] = trace(mat_mul(powers.power(k), g));
      fibers.insert(c.f.r, xs);
    }
  }
  return VitalInstance{std::move(x), std::move(y), std::move(fibers), d.size(), total};
}

VitalInstance assemble_vital_instance(const ElementSet& a, const ElementSet& d, int pool_radius) {
  return assemble_vital_instance_from_pool(word_ball(a, pool_radius), d);
}

std::string VitalDiagnostics::csv_header(int /*dim*/) {
  return "row,y,fiber_size,fiber_exponent,degenerate,x_size,p_bound,x_below_bound,y_size,fiber_min,fiber_max,"
         "best_coordinate,best_projection,y_prime,y_double_prime,energy_sum_first,energy_sum_refined";
}

std::vector<std::string> VitalDiagnostics::csv_rows() const {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    std::ostringstream os;
    os << "fiber,";
    for (std::size_t i = 0; i < row.y.size(); ++i) os << (i ? "-" : "") << row.y[i];
    os << ',' << row.size << ',' << format_decimal(row.exponent) << ',' << (row.degenerate ? 1 : 0)
       << ",,,,,,,,,,,,";
    out.push_back(os.str());
  }
  std::ostringstream os;
  os << "summary,,,," << (degenerate ? 1 : 0) << ',' << x_size << ',' << format_decimal(p_bound) << ','
     << (x_below_bound ? 1 : 0) << ',' << y_size << ',' << fiber_min << ',' << fiber_max << ',' << best_coordinate
     << ',' << best_projection_size << ',' << y_prime_size << ',' << y_double_prime_size << ',' << energy_sum_first
     << ',' << energy_sum_refined;
  out.push_back(os.str());
  return out;
}

VitalDiagnostics vital_diagnostics(const VitalInstance& inst, double delta) {
  VitalDiagnostics out;
  const PrimeField& F = inst.x.field();
  const auto& fibers = inst.fibers.fibers();
  out.x_size = inst.x.size();
  out.p_bound = std::pow(static_cast<double>(F.p()), 1.0 - delta);
  out.x_below_bound = static_cast<double>(out.x_size) <= out.p_bound;
  out.y_size = inst.y.size();
  out.degenerate = out.x_size <= 1;
  const double log_x = out.degenerate ? 0.0 : std::log(static_cast<double>(out.x_size));

  bool first = true;
  for (const auto& yv : inst.y.values()) {
    FiberRow row;
    row.y = yv;
    auto it = fibers.find(yv);
    row.size = it == fibers.end() ? 0 : it->second.size();
    row.degenerate = out.degenerate || row.size == 0;
    row.exponent = row.degenerate ? 0.0 : std::log(static_cast<double>(row.size)) / log_x;
    out.fiber_min = first ? row.size : std::min(out.fiber_min, row.size);
    out.fiber_max = std::max(out.fiber_max, row.size);
    first = false;
    out.rows.push_back(std::move(row));
  }

  const int dim = inst.y.dim();
  if (inst.y.size() == 0 || dim == 0) return out;

  auto energy_over = [&](const std::set<Residue>& scalars) {
    std::uint64_t sum = 0;
    for (Residue s : scalars) sum += additive_energy(inst.x, dilate(inst.x, s));
    return sum;
  };

  std::set<Residue> first_coords;
  for (const auto& yv : inst.y.values()) first_coords.insert(yv[0]);
  out.energy_sum_first = energy_over(first_coords);

  // Coordinate with the largest image; lowest index on ties.
  std::size_t best_size = 0;
  for (int c = 0; c < dim; ++c) {
    std::set<Residue> image;
    for (const auto& yv : inst.y.values()) image.insert(yv[static_cast<std::size_t>(c)]);
    if (image.size() > best_size) {
      best_size = image.size();
      out.best_coordinate = c;
    }
  }
  out.best_projection_size = best_size;

  // Y': one y per value of the best coordinate, keeping the largest fiber.
  std::map<Residue, std::pair<std::size_t, FieldVector>> pick;
  for (const auto& row : out.rows) {
    const Residue key = row.y[static_cast<std::size_t>(out.best_coordinate)];
    auto it = pick.find(key);
    if (it == pick.end() || row.size > it->second.first) pick[key] = {row.size, row.y};
  }
  out.y_prime_size = pick.size();

  // Y'': drop the smallest fibers while they carry at most half of the mass.
  std::vector<std::pair<std::size_t, Residue>> by_size;
  std::size_t mass = 0;
  for (const auto& [key, entry] : pick) {
    by_size.emplace_back(entry.first, key);
    mass += entry.first;
  }
  std::sort(by_size.begin(), by_size.end());
  std::size_t dropped = 0;
  std::size_t idx = 0;
  while (idx < by_size.size() && 2 * (dropped + by_size[idx].first) <= mass) dropped += by_size[idx++].first;
  std::set<Residue> refined;
  for (; idx < by_size.size(); ++idx) refined.insert(by_size[idx].second);
  out.y_double_prime_size = refined.size();
  out.energy_sum_refined = energy_over(refined);
  return out;
}

}  // namespace slgrowth
