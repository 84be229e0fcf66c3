#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slgrowth/config.hpp"
#include "slgrowth/element_set.hpp"
#include "slgrowth/rng.hpp"

namespace slgrowth {

inline constexpr const char* kVersion = "0.3.0";

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"expand", "growth-curve", "torus-scan", "trace-lab",
                                                 "lemma-check", "energy", "vital"};
  return names;
}

// Standard mode: {E_12(1), signed n-cycle}. Random mode: `count` uniform
// SL_n elements, resampled until they generate (when the group fits in the
// element budget) or `max_retries` draws have failed (GenerationFailed).
// `generation_checked` reports whether generation was actually verified.
ElementSet build_generators(const ExperimentConfig& cfg, std::uint32_t p, SeedStream& rng, bool* generation_checked = nullptr);

struct RunManifest {
  nlohmann::ordered_json config;
  std::string version = kVersion;
  std::string subcommand;
  double wall_seconds = 0.0;
  std::string status = "ok";
  int exit_code = 0;
  std::vector<std::string> warnings;
  std::map<std::string, std::string> digests;  // output path -> sha256 hex

  std::string to_json() const;
};

// Process exit code for an exception raised inside a run.
int exit_code_for(const std::exception& e) noexcept;

// Runs one subcommand. Reports go to cfg.out (plus sibling files for
// subcommands with several tables) or to `console` when cfg.out is empty; the
// manifest is written to `<out>.manifest.json` when cfg.out is set. Errors are
// captured in the manifest rather than thrown.
RunManifest run(const ExperimentConfig& cfg, const std::string& subcommand, std::ostream& console);

std::string sha256_hex(const std::string& bytes);

}  // namespace slgrowth
