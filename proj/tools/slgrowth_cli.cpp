#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <iostream>

#include "slgrowth/errors.hpp"
#include "slgrowth/runner.hpp"

namespace {

constexpr const char* kFooter = R"(Output columns (CSV, header row, LF line endings):
  expand        n,p,radius,size,saturated
  growth-curve  n,p,|A|,|AAA|,epsilon_hat,saturated,|A_k|...,eps_k...,
                group_order,degenerate,generation_checked,generates
  torus-scan    witness_kappa,torus_order,split_flag,intersection_k,ratio_k,regular_k...
  trace-lab     t_kappa,jvec,member_count   (f vectors in <out>.fvec.csv: t_kappa,r0..r{n-1})
  lemma-check   suite,n,p,trials,passes,failures
  energy        p,x_size,y,yx_size,energy,pair_count,difference_count,cs_lower_bound,cs_holds
  vital         row,y,fiber_size,fiber_exponent,degenerate,x_size,p_bound,x_below_bound,y_size,
                fiber_min,fiber_max,best_coordinate,best_projection,y_prime,y_double_prime,
                energy_sum_first,energy_sum_refined
Exit codes: 0 success, 2 config error, 3 budget exceeded, 4 generation failed, 1 other.
With --out, a manifest is written to <out>.manifest.json; otherwise it goes to stderr.)";

struct Flags {
  std::string config_path;
  std::string generators;
  std::string format;
  std::string p_list;
};

}  // namespace

int main(int argc, char** argv) {
  using slgrowth::ExperimentConfig;
  CLI::App app{"Growth experiments in SL_n(F_p)"};
  app.footer(kFooter);
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", slgrowth::kVersion);

  ExperimentConfig flag_cfg;
  Flags flags;
  for (const auto& name : slgrowth::subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", flags.config_path, "JSON config file; flags override its values");
    sub->add_option("--n", flag_cfg.n, "Matrix dimension");
    sub->add_option("--p", flag_cfg.p, "Prime modulus");
    sub->add_option("--p-list", flags.p_list, "Comma-separated primes (growth-curve)");
    sub->add_option("--generators", flags.generators, "standard|random");
    sub->add_option("--seed", flag_cfg.seed, "Global seed");
    sub->add_option("--count", flag_cfg.count, "Random generator count; set size for energy");
    sub->add_option("--radius", flag_cfg.radius, "Ball / pool radius");
    sub->add_option("--k", flag_cfg.k_list, "Ball radii k (repeatable or comma-separated)")->delimiter(',');
    sub->add_option("--delta", flag_cfg.delta, "delta in p^{1-delta}");
    sub->add_option("--budget-elems", flag_cfg.budget_elems, "Maximum stored elements");
    sub->add_option("--budget-secs", flag_cfg.budget_secs, "Wall-clock limit per expansion (0 = none)");
    sub->add_option("--out", flag_cfg.out, "Output path (default stdout)");
    sub->add_option("--dump", flag_cfg.dump, "Element dump path (expand)");
    sub->add_option("--format", flags.format, "csv|json");
    sub->add_option("--workers", flag_cfg.workers, "Worker threads");
    sub->add_option("--trials", flag_cfg.trials, "Trials per lemma-check suite");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  ExperimentConfig cfg;
  try {
    if (!flags.config_path.empty()) {
      std::ifstream in(flags.config_path);
      if (!in) throw slgrowth::ConfigError("cannot read config file " + flags.config_path);
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw slgrowth::ConfigError(std::string("config file: ") + e.what());
      }
      cfg.merge_json(j);
    }
    auto given = [&](const char* opt) { return sub->count(opt) > 0; };
    if (given("--n")) cfg.n = flag_cfg.n;
    if (given("--p")) cfg.p = flag_cfg.p;
    if (given("--p-list")) {
      cfg.p_list.clear();
      std::stringstream ss(flags.p_list);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          cfg.p_list.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
          throw slgrowth::ConfigError("bad --p-list entry '" + item + "'");
        }
      }
    }
    if (given("--generators")) cfg.generators = slgrowth::parse_generator_mode(flags.generators);
    if (given("--seed")) cfg.seed = flag_cfg.seed;
    if (given("--count")) cfg.count = flag_cfg.count;
    if (given("--radius")) cfg.radius = flag_cfg.radius;
    if (given("--k")) cfg.k_list = flag_cfg.k_list;
    if (given("--delta")) cfg.delta = flag_cfg.delta;
    if (given("--budget-elems")) cfg.budget_elems = flag_cfg.budget_elems;
    if (given("--budget-secs")) cfg.budget_secs = flag_cfg.budget_secs;
    if (given("--out")) cfg.out = flag_cfg.out;
    if (given("--dump")) cfg.dump = flag_cfg.dump;
    if (given("--format")) cfg.format = slgrowth::parse_output_format(flags.format);
    if (given("--workers")) cfg.workers = flag_cfg.workers;
    if (given("--trials")) cfg.trials = flag_cfg.trials;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return slgrowth::exit_code_for(e);
  }

  const slgrowth::RunManifest manifest = slgrowth::run(cfg, name, std::cout);
  if (cfg.out.empty()) std::cerr << manifest.to_json();
  if (manifest.exit_code != 0) std::cerr << manifest.status << '\n';
  return manifest.exit_code;
}
