#include "slgrowth/config.hpp"

#include "slgrowth/errors.hpp"
#include "slgrowth/field.hpp"

namespace slgrowth {

const char* to_string(GeneratorMode m) noexcept { return m == GeneratorMode::kStandard ? "standard" : "random"; }
const char* to_string(OutputFormat f) noexcept { return f == OutputFormat::kCsv ? "csv" : "json"; }

GeneratorMode parse_generator_mode(const std::string& s) {
  if (s == "standard") return GeneratorMode::kStandard;
  if (s == "random") return GeneratorMode::kRandom;
  throw ConfigError("unknown generator mode '" + s + "' (expected standard|random)");
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + s + "' (expected csv|json)");
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["p"] = p;
  j["p_list"] = p_list;
  j["generators"] = to_string(generators);
  j["seed"] = seed;
  j["count"] = count;
  j["radius"] = radius;
  j["k"] = k_list;
  j["budget_elems"] = budget_elems;
  j["budget_secs"] = budget_secs;
  j["delta"] = delta;
  j["out"] = out;
  j["dump"] = dump;
  j["format"] = to_string(format);
  j["workers"] = workers;
  j["trials"] = trials;
  j["max_retries"] = max_retries;
  return j;
}

void ExperimentConfig::merge_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n") n = value.get<int>();
      else if (key == "p") p = value.get<std::uint32_t>();
      else if (key == "p_list") p_list = value.get<std::vector<std::uint32_t>>();
      else if (key == "generators") generators = parse_generator_mode(value.get<std::string>());
      else if (key == "seed") seed = value.get<std::uint64_t>();
      else if (key == "count") count = value.get<int>();
      else if (key == "radius") radius = value.get<int>();
      else if (key == "k") k_list = value.get<std::vector<int>>();
      else if (key == "budget_elems") budget_elems = value.get<std::size_t>();
      else if (key == "budget_secs") budget_secs = value.get<double>();
      else if (key == "delta") delta = value.get<double>();
      else if (key == "out") out = value.get<std::string>();
      else if (key == "dump") dump = value.get<std::string>();
      else if (key == "format") format = parse_output_format(value.get<std::string>());
      else if (key == "workers") workers = value.get<unsigned>();
      else if (key == "trials") trials = value.get<int>();
      else if (key == "max_retries") max_retries = value.get<int>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

void validate_prime(std::uint32_t p, int n) {
  if (p >= PrimeField::kMaxModulus) throw ConfigError("p must be below 65536");
  if (!is_prime(p)) throw ConfigError("p=" + std::to_string(p) + " is not prime");
  require_experiment_field(PrimeField(p), n);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 8) throw ConfigError("n must lie in [2, 8]");
  validate_prime(cfg.p, cfg.n);
  for (auto q : cfg.p_list) validate_prime(q, cfg.n);
  if (cfg.radius < 1) throw ConfigError("radius must be at least 1");
  for (int k : cfg.k_list) {
    if (k < 1) throw ConfigError("every k must be at least 1");
  }
  if (cfg.count < 1) throw ConfigError("count must be at least 1");
  if (cfg.trials < 0) throw ConfigError("trials must be non-negative");
  if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
  if (cfg.delta < 0 || cfg.delta >= 1) throw ConfigError("delta must lie in [0, 1)");
  if (cfg.max_retries < 1) throw ConfigError("max_retries must be at least 1");
}

}  // namespace slgrowth
