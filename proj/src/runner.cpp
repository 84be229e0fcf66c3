#include "slgrowth/runner.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "slgrowth/energy.hpp"
#include "slgrowth/errors.hpp"
#include "slgrowth/growth.hpp"
#include "slgrowth/torus.hpp"
#include "slgrowth/trace_lab.hpp"
#include "slgrowth/vandermonde.hpp"

namespace slgrowth {

using nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  return to_hex(std::span<const std::uint8_t>(digest, len));
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const ConfigError*>(&e)) return 2;
  if (dynamic_cast<const BudgetExceeded*>(&e)) return 3;
  if (dynamic_cast<const Indeterminate*>(&e)) return 3;
  if (dynamic_cast<const GenerationFailed*>(&e)) return 4;
  return 1;
}

std::string RunManifest::to_json() const {
  ordered_json j;
  j["version"] = version;
  j["subcommand"] = subcommand;
  j["config"] = config;
  j["wall_seconds"] = format_decimal(wall_seconds);
  j["status"] = status;
  j["exit_code"] = exit_code;
  j["warnings"] = warnings;
  j["digests"] = digests;
  return j.dump(2) + "\n";
}

ElementSet build_generators(const ExperimentConfig& cfg, std::uint32_t p, SeedStream& rng, bool* generation_checked) {
  const PrimeField field(p);
  const int n = cfg.n;
  ExpandOptions opts{{cfg.budget_elems, cfg.budget_secs}, cfg.workers};
  const bool can_check = group_order(n, p) <= cfg.budget_elems;
  if (generation_checked) *generation_checked = can_check;
  if (cfg.generators == GeneratorMode::kStandard) {
    ElementSet gens = standard_generators(n, field);
    if (can_check && !generates(gens, opts)) throw GenerationFailed("standard generators do not generate");
    return gens;
  }
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    ElementSet gens(n, field);
    while (gens.size() < static_cast<std::size_t>(cfg.count)) gens.insert(random_sl(n, field, rng));
    if (!can_check || generates(gens, opts)) return gens;
  }
  throw GenerationFailed("no generating set of size " + std::to_string(cfg.count) + " found in " +
                         std::to_string(cfg.max_retries) + " attempts");
}

namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<ordered_json> rows;
};

std::string render_cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_float()) return format_decimal(v.get<double>());
  return v.dump();
}

std::string render(const Table& t, OutputFormat fmt) {
  std::ostringstream os;
  if (fmt == OutputFormat::kCsv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "");
        auto it = row.find(t.columns[i]);
        if (it != row.end()) os << render_cell(*it);
      }
      os << '\n';
    }
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& row : t.rows) arr.push_back(row);
    os << arr.dump(2) << '\n';
  }
  return os.str();
}

// One emitted document: suffix is appended to the output path ("" = main).
struct Output {
  std::string suffix;
  std::string content;
};

struct Context {
  const ExperimentConfig& cfg;
  ExpandOptions opts;
  std::vector<std::string>& warnings;
};

std::string joined(const std::vector<Residue>& v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
  return os.str();
}

ElementSet generators_for(Context& ctx, std::uint32_t p, const char* stream) {
  SeedStream rng = SeedStream::derived(ctx.cfg.seed, std::string(stream) + "/generators/" + std::to_string(p));
  bool checked = false;
  ElementSet gens = build_generators(ctx.cfg, p, rng, &checked);
  if (!checked) {
    ctx.warnings.push_back("generation unchecked for p=" + std::to_string(p) + ": group exceeds closure budget");
  }
  return gens;
}

std::vector<Output> cmd_expand(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const ElementSet gens = generators_for(ctx, cfg.p, "expand");
  const std::uint64_t order = group_order(cfg.n, cfg.p);
  Table t{{"n", "p", "radius", "size", "saturated"}, {}};
  const auto sizes = word_ball_sizes(gens, cfg.radius, ctx.opts);
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    ordered_json row;
    row["n"] = cfg.n;
    row["p"] = cfg.p;
    row["radius"] = r + 1;
    row["size"] = sizes[r];
    row["saturated"] = sizes[r] == order;
    t.rows.push_back(std::move(row));
    if (r > 0 && sizes[r] == sizes[r - 1]) break;  // fixpoint reached
  }
  std::vector<Output> out{{"", render(t, cfg.format)}};
  if (!cfg.dump.empty()) {
    std::ofstream(cfg.dump, std::ios::binary) << word_ball(gens, cfg.radius, ctx.opts).dump();
  }
  return out;
}

std::vector<Output> cmd_growth_curve(Context& ctx) {
  const auto& cfg = ctx.cfg;
  std::vector<std::uint32_t> primes = cfg.p_list.empty() ? std::vector<std::uint32_t>{cfg.p} : cfg.p_list;
  Table t;
  t.columns = {"n", "p", "|A|", "|AAA|", "epsilon_hat", "saturated"};
  for (int k : cfg.k_list) t.columns.push_back("|A_" + std::to_string(k) + "|");
  for (int k : cfg.k_list) t.columns.push_back("eps_" + std::to_string(k));
  for (const char* c : {"group_order", "degenerate", "generation_checked", "generates"}) t.columns.push_back(c);
  for (std::uint32_t p : primes) {
    const ElementSet gens = generators_for(ctx, p, "growth-curve");
    const ElementSet a = word_ball(gens, cfg.radius, ctx.opts);
    const GrowthReport rep = growth_scan(a, cfg.k_list, ctx.opts, true);
    if (rep.generation_checked && !rep.generates) throw GenerationFailed("growth-curve: A does not generate");
    t.rows.push_back(ordered_json::parse(rep.to_json()));
  }
  return {{"", render(t, cfg.format)}};
}

std::vector<Output> cmd_torus_scan(Context& ctx) {
  const auto& cfg = ctx.cfg;
  if (cfg.k_list.empty()) throw ConfigError("torus-scan needs at least one k");
  const ElementSet gens = generators_for(ctx, cfg.p, "torus-scan");
  const auto reports = rich_torus_scan(gens, cfg.k_list, ctx.opts);
  std::vector<int> ks(cfg.k_list);
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  Table t;
  t.columns = {"witness_kappa", "torus_order", "split_flag"};
  for (int k : ks) {
    t.columns.push_back("intersection_" + std::to_string(k));
    t.columns.push_back("ratio_" + std::to_string(k));
    t.columns.push_back("regular_" + std::to_string(k));
  }
  for (const auto& rep : reports) {
    ordered_json row;
    row["witness_kappa"] = kappa_hex(rep.witness_kappa, cfg.p);
    row["torus_order"] = rep.torus_order;
    row["split_flag"] = rep.split;
    for (int k : ks) {
      row["intersection_" + std::to_string(k)] = rep.intersection_sizes.at(k);
      row["ratio_" + std::to_string(k)] = format_decimal(rep.richness_ratio.at(k));
      row["regular_" + std::to_string(k)] = rep.regular_count.at(k);
    }
    t.rows.push_back(std::move(row));
  }
  return {{"", render(t, cfg.format)}};
}

// κ-distinct split regular semisimple members of a ball, in canonical order.
std::vector<Matrix> split_regular_witnesses(const ElementSet& ball) {
  std::vector<Matrix> out;
  std::set<KappaVector> seen;
  const ElementSet sorted = ball.sorted();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    Matrix g = sorted.at(i);
    if (!is_regular_semisimple(g) || !is_split(g)) continue;
    if (seen.insert(char_poly(g)).second) out.push_back(std::move(g));
  }
  return out;
}

int max_k(const ExperimentConfig& cfg) {
  return cfg.k_list.empty() ? 1 : *std::max_element(cfg.k_list.begin(), cfg.k_list.end());
}

std::vector<Output> cmd_trace_lab(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const ElementSet gens = generators_for(ctx, cfg.p, "trace-lab");
  const ElementSet pool = word_ball(gens, cfg.radius, ctx.opts);
  const ElementSet witnesses_ball = word_ball(gens, max_k(cfg), ctx.opts);
  Table bins_table{{"t_kappa", "jvec", "member_count"}, {}};
  Table f_table;
  f_table.columns = {"t_kappa"};
  for (int k = 0; k < cfg.n; ++k) f_table.columns.push_back("r" + std::to_string(k));
  for (const Matrix& t : split_regular_witnesses(witnesses_ball)) {
    const auto bins = dyadic_bins(t, pool);
    const std::string tk = kappa_hex(char_poly(t), cfg.p);
    for (const auto& b : bins) {
      ordered_json row;
      row["t_kappa"] = tk;
      std::ostringstream jv;
      for (std::size_t i = 0; i < b.jvec.size(); ++i) jv << (i ? "-" : "") << b.jvec[i];
      row["jvec"] = jv.str();
      row["member_count"] = b.members.size();
      bins_table.rows.push_back(std::move(row));
    }
    const FVector f = f_of(t);
    ordered_json frow;
    frow["t_kappa"] = tk;
    for (int k = 0; k < cfg.n; ++k) frow["r" + std::to_string(k)] = f.r[static_cast<std::size_t>(k)];
    f_table.rows.push_back(std::move(frow));
  }
  const std::string ext = cfg.format == OutputFormat::kCsv ? ".csv" : ".json";
  return {{"", render(bins_table, cfg.format)}, {".fvec" + ext, render(f_table, cfg.format)}};
}

// Split regular element h·diag(s)·h^{-1} with distinct s, prod s = 1.
Matrix random_split_regular(int n, const PrimeField& F, SeedStream& rng) {
  for (;;) {
    std::vector<Residue> s(static_cast<std::size_t>(n));
    Residue prod = 1;
    for (int i = 0; i + 1 < n; ++i) {
      s[static_cast<std::size_t>(i)] = rng.nonzero_residue(F);
      prod = F.mul(prod, s[static_cast<std::size_t>(i)]);
    }
    s.back() = F.inv(prod);
    std::vector<Residue> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    const Matrix h = random_gl(n, F, rng);
    return mat_mul(mat_mul(h, Matrix::diagonal(F, s)), mat_inv(h));
  }
}

std::vector<Output> cmd_lemma_check(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const PrimeField F(cfg.p);
  const int n = cfg.n;
  SeedStream rng = SeedStream::derived(cfg.seed, "lemma-check");
  Table t{{"suite", "n", "p", "trials", "passes", "failures"}, {}};
  auto emit = [&](const char* suite, int passes) {
    ordered_json row;
    row["suite"] = suite;
    row["n"] = n;
    row["p"] = cfg.p;
    row["trials"] = cfg.trials;
    row["passes"] = passes;
    row["failures"] = cfg.trials - passes;
    t.rows.push_back(std::move(row));
  };

  int passes = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    std::vector<Residue> s(static_cast<std::size_t>(n));
    for (auto& v : s) v = rng.residue(F);
    const int omitted = static_cast<int>(rng.below(static_cast<std::uint64_t>(n + 1)));
    if (verify_vander_identity(F, s, omitted)) ++passes;
  }
  emit("vander", passes);

  passes = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Matrix tt = random_regular_semisimple(n, F, rng);
    const Matrix g = random_sl(n, F, rng);
    const FVector f = f_of(tt);
    Residue rhs = 0;
    Matrix shifted = g;
    for (int k = 0; k < n; ++k) {
      if (k > 0) shifted = mat_mul(tt, shifted);
      rhs = F.add(rhs, F.mul(f.r[static_cast<std::size_t>(k)], trace(shifted)));
    }
    if (trace(mat_mul(mat_pow(tt, static_cast<std::uint64_t>(n)), g)) == rhs) ++passes;
  }
  emit("f-identity", passes);

  passes = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Matrix g = random_sl(n, F, rng);
    const Matrix h = random_sl(n, F, rng);
    if (char_poly(mat_mul(mat_mul(h, g), mat_inv(h))) == char_poly(g)) ++passes;
  }
  emit("kappa-conjugation", passes);

  passes = 0;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Matrix tt = random_split_regular(n, F, rng);
    const LindepResult res = lindep_check(tt);
    // Omitting row i leaves a generalized Vandermonde matrix whose
    // determinant is the Vandermonde product times S_{n-i}.
    bool ok = res.dependent_all;
    for (int i = 0; i <= n; ++i) {
      ok = ok && res.subset_independent[static_cast<std::size_t>(i)] == (res.symmetric[static_cast<std::size_t>(n - i)] != 0);
    }
    ok = ok && (!res.outside_w || res.independent_subsets);
    if (ok) ++passes;
  }
  emit("lindep", passes);
  return {{"", render(t, cfg.format)}};
}

std::vector<Output> cmd_energy(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const PrimeField F(cfg.p);
  SeedStream rng = SeedStream::derived(cfg.seed, "energy");
  const std::size_t target = std::min<std::size_t>(static_cast<std::size_t>(cfg.count), cfg.p);
  ScalarSet x(F);
  while (x.size() < target) x.insert(rng.residue(F));
  const Residue y = rng.nonzero_residue(F);
  const ScalarSet yx = dilate(x, y);
  const std::uint64_t energy = additive_energy(x, yx);
  std::set<Residue> differences;
  for (Residue a : x.values())
    for (Residue b : yx.values()) differences.insert(F.sub(a, b));
  const double total = static_cast<double>(x.size()) * static_cast<double>(yx.size());
  const double cs_bound = total * total / static_cast<double>(differences.size());
  Table t{{"p", "x_size", "y", "yx_size", "energy", "pair_count", "difference_count", "cs_lower_bound", "cs_holds"}, {}};
  ordered_json row;
  row["p"] = cfg.p;
  row["x_size"] = x.size();
  row["y"] = y;
  row["yx_size"] = yx.size();
  row["energy"] = energy;
  row["pair_count"] = x.size() * yx.size();
  row["difference_count"] = differences.size();
  row["cs_lower_bound"] = format_decimal(cs_bound);
  row["cs_holds"] = static_cast<double>(energy) + 1e-9 >= cs_bound;
  t.rows.push_back(std::move(row));
  return {{"", render(t, cfg.format)}};
}

std::vector<Output> cmd_vital(Context& ctx) {
  const auto& cfg = ctx.cfg;
  const ElementSet gens = generators_for(ctx, cfg.p, "vital");
  const int k = max_k(cfg);
  const auto reports = rich_torus_scan(gens, k, ctx.opts);
  const auto it = std::find_if(reports.begin(), reports.end(), [](const TorusReport& r) { return r.split; });
  if (it == reports.end()) throw InvalidWitness("vital: no split torus meets A_k; raise --k");
  const ElementSet ball = word_ball(gens, k, ctx.opts);
  const ElementSet meet = centralizer_torus(ball, it->witness);
  ElementSet d(cfg.n, PrimeField(cfg.p));
  ElementSet d_relaxed(cfg.n, PrimeField(cfg.p));
  for (std::size_t i = 0; i < meet.size(); ++i) {
    const Matrix t = meet.at(i);
    if (!is_regular_semisimple(t)) continue;
    d_relaxed.insert_raw(meet.raw(i));
    if (lindep_check(t).outside_w) d.insert_raw(meet.raw(i));
  }
  if (d.empty()) {
    if (d_relaxed.empty()) throw InvalidWitness("vital: the rich torus has no regular elements in A_k");
    ctx.warnings.push_back("vital: no torus element passed the pointwise W check; using all regular elements");
    d = d_relaxed;
  }
  const VitalInstance inst = assemble_vital_instance(gens, d, cfg.radius);
  if (!inst.fibers.certificate_holds()) throw StructuralError("vital: containment certificate failed");
  const VitalDiagnostics diag = vital_diagnostics(inst, cfg.delta);
  Table t;
  t.columns = {"row", "y", "fiber_size", "fiber_exponent", "degenerate", "x_size", "p_bound", "x_below_bound",
               "y_size", "fiber_min", "fiber_max", "best_coordinate", "best_projection", "y_prime",
               "y_double_prime", "energy_sum_first", "energy_sum_refined"};
  for (const auto& fr : diag.rows) {
    ordered_json row;
    row["row"] = "fiber";
    row["y"] = joined(fr.y, '-');
    row["fiber_size"] = fr.size;
    row["fiber_exponent"] = format_decimal(fr.exponent);
    row["degenerate"] = fr.degenerate;
    t.rows.push_back(std::move(row));
  }
  ordered_json s;
  s["row"] = "summary";
  s["degenerate"] = diag.degenerate;
  s["x_size"] = diag.x_size;
  s["p_bound"] = format_decimal(diag.p_bound);
  s["x_below_bound"] = diag.x_below_bound;
  s["y_size"] = diag.y_size;
  s["fiber_min"] = diag.fiber_min;
  s["fiber_max"] = diag.fiber_max;
  s["best_coordinate"] = diag.best_coordinate;
  s["best_projection"] = diag.best_projection_size;
  s["y_prime"] = diag.y_prime_size;
  s["y_double_prime"] = diag.y_double_prime_size;
  s["energy_sum_first"] = diag.energy_sum_first;
  s["energy_sum_refined"] = diag.energy_sum_refined;
  t.rows.push_back(std::move(s));
  return {{"", render(t, cfg.format)}};
}

}  // namespace

RunManifest run(const ExperimentConfig& cfg, const std::string& subcommand, std::ostream& console) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest manifest;
  manifest.config = cfg.to_json();
  manifest.subcommand = subcommand;
  try {
    validate(cfg);
    Context ctx{cfg, ExpandOptions{{cfg.budget_elems, cfg.budget_secs}, cfg.workers}, manifest.warnings};
    std::vector<Output> outputs;
    if (subcommand == "expand") outputs = cmd_expand(ctx);
    else if (subcommand == "growth-curve") outputs = cmd_growth_curve(ctx);
    else if (subcommand == "torus-scan") outputs = cmd_torus_scan(ctx);
    else if (subcommand == "trace-lab") outputs = cmd_trace_lab(ctx);
    else if (subcommand == "lemma-check") outputs = cmd_lemma_check(ctx);
    else if (subcommand == "energy") outputs = cmd_energy(ctx);
    else if (subcommand == "vital") outputs = cmd_vital(ctx);
    else throw ConfigError("unknown subcommand '" + subcommand + "'");

    for (const auto& o : outputs) {
      if (cfg.out.empty()) {
        console << o.content;
        if (&o != &outputs.back()) console << '\n';
      } else {
        const std::string path = cfg.out + o.suffix;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file " + path);
        f << o.content;
        manifest.digests[path] = sha256_hex(o.content);
      }
    }
    if (!cfg.dump.empty()) {
      std::ifstream f(cfg.dump, std::ios::binary);
      std::stringstream ss;
      ss << f.rdbuf();
      manifest.digests[cfg.dump] = sha256_hex(ss.str());
    }
  } catch (const std::exception& e) {
    manifest.status = std::string("error: ") + e.what();
    manifest.exit_code = exit_code_for(e);
  }
  manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!cfg.out.empty()) {
    std::ofstream(cfg.out + ".manifest.json", std::ios::binary) << manifest.to_json();
  }
  return manifest;
}

}  // namespace slgrowth
