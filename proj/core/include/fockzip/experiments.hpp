#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fockzip/coder.hpp"

namespace fockzip::cli {

inline constexpr std::string_view kSchemaVersion = "fockzip.v1";

enum class OutputFormat {
  Csv,
  Json,
};

OutputFormat output_format_from_string(const std::string& name);

// Shared experiment settings. Empty theta/letter-count lists mean "use the
// command's default grid". Angles are degrees on the surface, radians inside.
struct ExperimentConfig {
  std::vector<double> theta_degrees;
  std::vector<int> letter_counts;
  double epsilon = 0.15;
  SymbolOrder symbol_order = SymbolOrder::VFirst;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 1;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::string ensemble_path;  // optional ensemble JSON (bounds command)
};

// All commands return 0 on success, 1 on a property failure. Invalid
// configuration throws ValidationError (exit code 2 at the CLI).
int cmd_table3(const ExperimentConfig& config, std::ostream& out);
int cmd_sweep(const ExperimentConfig& config, std::ostream& out);
int cmd_roundtrip(const ExperimentConfig& config, std::ostream& out);
int cmd_schumacher(const ExperimentConfig& config, std::ostream& out);
int cmd_circuit_demo(const ExperimentConfig& config, std::ostream& out);
int cmd_bounds(const ExperimentConfig& config, std::ostream& out);

}  // namespace fockzip::cli
