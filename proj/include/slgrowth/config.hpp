#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace slgrowth {

enum class GeneratorMode { kStandard, kRandom };
enum class OutputFormat { kCsv, kJson };

struct ExperimentConfig {
  int n = 2;
  std::uint32_t p = 5;
  std::vector<std::uint32_t> p_list;  // growth-curve sweep; empty means {p}
  GeneratorMode generators = GeneratorMode::kStandard;
  std::uint64_t seed = 1;
  int count = 2;             // random generator count; also the set size for `energy`
  int radius = 2;            // pool / ball radius
  std::vector<int> k_list = {1, 2};
  std::size_t budget_elems = 20'000'000;
  double budget_secs = 0.0;
  double delta = 0.1;
  std::string out;           // empty: stdout
  std::string dump;          // optional element dump path (expand)
  OutputFormat format = OutputFormat::kCsv;
  unsigned workers = 1;
  int trials = 10'000;       // lemma-check trials per suite
  int max_retries = 64;      // random generator resampling attempts

  nlohmann::ordered_json to_json() const;
  // Overlays keys present in `j` onto this config. Throws ConfigError on
  // unknown keys or wrong types.
  void merge_json(const nlohmann::json& j);
};

// p odd prime, p > n, radius >= 1, k list positive. Throws ConfigError.
void validate(const ExperimentConfig& cfg);
void validate_prime(std::uint32_t p, int n);

const char* to_string(GeneratorMode m) noexcept;
const char* to_string(OutputFormat f) noexcept;
GeneratorMode parse_generator_mode(const std::string& s);
OutputFormat parse_output_format(const std::string& s);

}  // namespace slgrowth
