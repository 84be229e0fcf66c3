#include "slgrowth/growth.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <thread>

#include "slgrowth/errors.hpp"

namespace slgrowth {

namespace {

using Entry = ElementSet::Entry;
using Clock = std::chrono::steady_clock;

void mul_raw(const Entry* a, const Entry* b, Entry* out, int n, std::uint32_t p) noexcept {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(a[i * n + k]) * b[k * n + j];
      out[i * n + j] = static_cast<Entry>(acc % p);
    }
  }
}

class BudgetGuard {
 public:
  explicit BudgetGuard(const Budget& b) : budget_(b), start_(Clock::now()) {}

  void check(std::size_t stored) const {
    if (stored > budget_.max_elements) {
      throw BudgetExceeded("element budget of " + std::to_string(budget_.max_elements) + " exceeded", stored);
    }
    if (budget_.max_seconds > 0) {
      const double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > budget_.max_seconds) {
        throw BudgetExceeded("time budget of " + format_decimal(budget_.max_seconds) + " s exceeded", stored);
      }
    }
  }

 private:
  Budget budget_;
  Clock::time_point start_;
};

// Multiplies every left factor in `lefts` by every member of `rights`
// (left * right) and inserts the products into `target`. Products are computed in parallel per
// chunk of `rights` and merged in chunk order, so the insertion sequence does
// not depend on the worker count.
void expand_into(ElementSet& target, const ElementSet& lefts, const ElementSet& rights, std::size_t right_begin,
                 std::size_t right_end, unsigned workers, const BudgetGuard& guard) {
  const int n = target.n();
  const std::uint32_t p = target.p();
  const std::size_t w = static_cast<std::size_t>(n * n);
  const std::size_t total = right_end - right_begin;
  if (total == 0) return;
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(total)));

  // Process in blocks to bound candidate memory.
  const std::size_t block = std::max<std::size_t>(1, (std::size_t{1} << 20) / std::max<std::size_t>(1, lefts.size()));
  std::vector<std::vector<Entry>> candidates(workers);
  for (std::size_t start = right_begin; start < right_end; start += block) {
    const std::size_t stop = std::min(right_end, start + block);
    const std::size_t span_len = stop - start;
    auto work = [&](unsigned wid) {
      auto& out = candidates[wid];
      out.clear();
      const std::size_t lo = start + span_len * wid / workers;
      const std::size_t hi = start + span_len * (wid + 1) / workers;
      std::vector<Entry> prod(w);
      for (std::size_t r = lo; r < hi; ++r) {
        const Entry* rm = rights.raw(r).data();
        for (std::size_t l = 0; l < lefts.size(); ++l) {
          mul_raw(lefts.raw(l).data(), rm, prod.data(), n, p);
          if (!target.contains_raw(prod)) out.insert(out.end(), prod.begin(), prod.end());
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned wid = 0; wid < workers; ++wid) pool.emplace_back(work, wid);
      for (auto& t : pool) t.join();
    }
    for (const auto& out : candidates) {
      for (std::size_t off = 0; off < out.size(); off += w) {
        target.insert_raw(std::span<const Entry>(out.data() + off, w));
      }
      guard.check(target.size());
    }
  }
}

}  // namespace

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::uint64_t group_order(int n, std::uint32_t p) noexcept {
  unsigned __int128 order = 1;
  const unsigned __int128 cap = std::numeric_limits<std::uint64_t>::max();
  for (int k = 0; k < n * (n - 1) / 2; ++k) {
    order *= p;
    if (order > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  for (int k = 2; k <= n; ++k) {
    unsigned __int128 pk = 1;
    for (int j = 0; j < k; ++j) {
      pk *= p;
      if (pk > cap) return std::numeric_limits<std::uint64_t>::max();
    }
    order *= (pk - 1);
    if (order > cap) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(order);
}

ElementSet symmetrize(const ElementSet& a) {
  ElementSet s(a.n(), a.field());
  s.reserve(2 * a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) s.insert_raw(a.raw(i));
  for (std::size_t i = 0; i < a.size(); ++i) s.insert(mat_inv(a.at(i)));
  s.insert(Matrix::identity(a.n(), a.field()));
  return s;
}

namespace {

ElementSet ball_impl(const ElementSet& a, int r, const ExpandOptions& opts, std::vector<std::size_t>* sizes) {
  if (a.empty()) throw StructuralError("word_ball: generating set is empty");
  if (r < 1) throw StructuralError("word_ball: radius must be at least 1");
  BudgetGuard guard(opts.budget);
  const ElementSet gens = symmetrize(a);
  ElementSet ball = gens;
  guard.check(ball.size());
  if (sizes) sizes->push_back(ball.size());
  std::size_t frontier_begin = 0;
  for (int radius = 2; radius <= r; ++radius) {
    const std::size_t frontier_end = ball.size();
    if (frontier_begin == frontier_end) {
      if (sizes) sizes->resize(static_cast<std::size_t>(r), ball.size());
      break;
    }
    // S·A_{r-1} = A_{r-1} ∪ S·(A_{r-1} \ A_{r-2}) because I ∈ S.
    expand_into(ball, gens, ball, frontier_begin, frontier_end, opts.workers, guard);
    frontier_begin = frontier_end;
    if (sizes) sizes->push_back(ball.size());
  }
  return ball;
}

}  // namespace

ElementSet word_ball(const ElementSet& a, int r, const ExpandOptions& opts) {
  return ball_impl(a, r, opts, nullptr);
}

std::vector<std::size_t> word_ball_sizes(const ElementSet& a, int r, const ExpandOptions& opts) {
  std::vector<std::size_t> sizes;
  ball_impl(a, r, opts, &sizes);
  return sizes;
}

ElementSet product_set(const ElementSet& x, const ElementSet& y, const ExpandOptions& opts) {
  if (x.n() != y.n() || !(x.field() == y.field())) throw StructuralError("product_set: mismatched sets");
  if (x.empty() || y.empty()) throw StructuralError("product_set: empty factor");
  BudgetGuard guard(opts.budget);
  ElementSet out(x.n(), x.field());
  expand_into(out, x, y, 0, y.size(), opts.workers, guard);
  return out;
}

ElementSet triple_product(const ElementSet& a, const ExpandOptions& opts) {
  const ElementSet aa = product_set(a, a, opts);
  return product_set(aa, a, opts);
}

bool generates(const ElementSet& a, const ExpandOptions& opts) {
  const std::uint64_t order = group_order(a.n(), a.p());
  if (order > opts.budget.max_elements) {
    throw Indeterminate("|SL_" + std::to_string(a.n()) + "(F_" + std::to_string(a.p()) +
                        ")| exceeds the closure budget; shrink n or p");
  }
  // word_ball exits as soon as the frontier empties, so this runs to the fixpoint.
  const ElementSet closure = word_ball(a, std::numeric_limits<int>::max(), opts);
  return closure.size() == order;
}

ElementSet standard_generators(int n, const PrimeField& field) {
  Matrix transvection = Matrix::identity(n, field);
  transvection(0, 1) = 1;
  Matrix cycle(n, field);
  for (int i = 0; i + 1 < n; ++i) cycle(i + 1, i) = 1;
  cycle(0, n - 1) = 1;
  // An n-cycle has sign (-1)^{n-1}; flip one entry to land in SL_n.
  if (n % 2 == 0) cycle(n - 1, n - 2) = field.neg(1);
  ElementSet s(n, field);
  s.insert(transvection);
  s.insert(cycle);
  return s;
}

ElementSet full_group(int n, const PrimeField& field, const ExpandOptions& opts) {
  const std::uint64_t order = group_order(n, field.p());
  if (order > opts.budget.max_elements) {
    throw BudgetExceeded("group order exceeds the element budget", 0);
  }
  ElementSet g = word_ball(standard_generators(n, field), std::numeric_limits<int>::max(), opts);
  if (g.size() != order) throw StructuralError("standard generators failed to reach the group order");
  return g;
}

namespace {

double exponent(std::size_t big, std::size_t base) {
  if (base <= 1) return 0.0;
  return std::log(static_cast<double>(big)) / std::log(static_cast<double>(base)) - 1.0;
}

}  // namespace

GrowthReport growth_scan(const ElementSet& a, std::span<const int> ks, const ExpandOptions& opts,
                         bool check_generation) {
  GrowthReport report;
  report.n = a.n();
  report.p = a.p();
  report.group_order = group_order(a.n(), a.p());
  report.size_a = a.size();
  report.degenerate = a.size() <= 1;
  const ElementSet aaa = triple_product(a, opts);
  report.size_aaa = aaa.size();
  report.saturated = aaa.size() == report.group_order;
  report.epsilon_hat = exponent(report.size_aaa, report.size_a);
  int kmax = 0;
  for (int k : ks) {
    if (k < 1) throw StructuralError("growth_scan: k must be positive");
    kmax = std::max(kmax, k);
  }
  if (kmax > 0) {
    const auto sizes = word_ball_sizes(a, kmax, opts);
    for (int k : ks) {
      report.ball_sizes[k] = sizes[static_cast<std::size_t>(k - 1)];
      report.ball_exponents[k] = exponent(report.ball_sizes[k], report.size_a);
    }
  }
  if (check_generation && report.group_order <= opts.budget.max_elements) {
    report.generation_checked = true;
    report.generates = generates(a, opts);
  }
  return report;
}

std::string GrowthReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["p"] = p;
  j["|A|"] = size_a;
  j["|AAA|"] = size_aaa;
  j["epsilon_hat"] = format_decimal(epsilon_hat);
  j["saturated"] = saturated;
  for (const auto& [k, s] : ball_sizes) j["|A_" + std::to_string(k) + "|"] = s;
  for (const auto& [k, e] : ball_exponents) j["eps_" + std::to_string(k)] = format_decimal(e);
  j["group_order"] = group_order;
  j["degenerate"] = degenerate;
  j["generation_checked"] = generation_checked;
  j["generates"] = generates;
  return j.dump();
}

std::string GrowthReport::csv_header(std::span<const int> ks) {
  std::ostringstream os;
  os << "n,p,|A|,|AAA|,epsilon_hat,saturated";
  for (int k : ks) os << ",|A_" << k << '|';
  for (int k : ks) os << ",eps_" << k;
  os << ",group_order,degenerate,generation_checked,generates";
  return os.str();
}

std::string GrowthReport::csv_row() const {
  std::ostringstream os;
  os << n << ',' << p << ',' << size_a << ',' << size_aaa << ',' << format_decimal(epsilon_hat) << ','
     << (saturated ? 1 : 0);
  for (const auto& [k, s] : ball_sizes) os << ',' << s;
  for (const auto& [k, e] : ball_exponents) os << ',' << format_decimal(e);
  os << ',' << group_order << ',' << (degenerate ? 1 : 0) << ',' << (generation_checked ? 1 : 0) << ','
     << (generates ? 1 : 0);
  return os.str();
}

}  // namespace slgrowth
