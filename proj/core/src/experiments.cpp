#include "fockzip/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fockzip/circuit.hpp"
#include "fockzip/schumacher.hpp"
#include "fockzip/thermo.hpp"

namespace fockzip::cli {

namespace {

constexpr double kRoundTripFidelity = 1.0 - 1e-10;
constexpr int kRoundTripTrials = 200;

std::string fmt(double x) {
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

nlohmann::json json_number(double x) {
  if (!std::isfinite(x)) {
    return nullptr;
  }
  return x;
}

double deg_to_rad(double degrees) {
  return degrees * std::numbers::pi / 180.0;
}

void validate_theta(double degrees) {
  if (!(degrees > 0.0) || !(degrees < 180.0)) {
    throw ValidationError("theta must lie strictly between 0 and 180 degrees");
  }
}

void validate_letter_count(int n) {
  if (n < 1) {
    throw ValidationError("letter counts must be >= 1");
  }
}

EigenDecomposition eigenbasis_for_theta(double theta_degrees) {
  validate_theta(theta_degrees);
  return diagonalize(density_matrix(two_state_ensemble(deg_to_rad(theta_degrees))));
}

std::vector<double> thetas_or(const ExperimentConfig& config, std::vector<double> fallback) {
  std::vector<double> thetas =
      config.theta_degrees.empty() ? std::move(fallback) : config.theta_degrees;
  for (double theta : thetas) {
    validate_theta(theta);
  }
  return thetas;
}

std::vector<int> letter_counts_or(const ExperimentConfig& config, std::vector<int> fallback) {
  std::vector<int> counts =
      config.letter_counts.empty() ? std::move(fallback) : config.letter_counts;
  for (int n : counts) {
    validate_letter_count(n);
  }
  return counts;
}

nlohmann::json state_to_json_value(const FockState& s) {
  return nlohmann::json::parse(to_json(s));
}

struct SweepRow {
  double theta_deg = 0.0;
  BoundsReport bounds;
  EnergyReport energy;
  LandauerAudit audit;
  double adjusted_rate = 0.0;
};

SweepRow sweep_row(const EigenDecomposition& eig, double theta_deg, int n,
                   SymbolOrder order, std::uint64_t cap) {
  const Codebook book = build_codebook(eig, n, order, cap);
  const double letter_entropy = shannon_entropy(eig.eigenvalues());
  const double length = average_length(book);

  SweepRow row;
  row.theta_deg = theta_deg;
  row.bounds = compression_bounds(letter_entropy, n, length);
  row.energy = energy_ratio_one_to_one(book);
  row.audit = landauer_audit(row.bounds.total_entropy, length, row.bounds.side_info_bits);
  row.adjusted_rate = (length + row.bounds.side_info_bits) / n;
  return row;
}

const char* kSweepColumns =
    "theta_deg,n,S_letter,S_total,L,bound_landauer_n,bound_landauer_S,bound_cover,"
    "bound_prisco,bound_prisco_alt,sat_landauer_n,sat_landauer_S,sat_cover,sat_prisco,"
    "energy_ratio,adjusted_rate,side_info_bits,deficit,lossless";

void print_sweep_row_csv(std::ostream& out, const SweepRow& row) {
  const BoundsReport& b = row.bounds;
  out << fmt(row.theta_deg) << ',' << b.letter_count << ',' << fmt(b.letter_entropy) << ','
      << fmt(b.total_entropy) << ',' << fmt(b.average_length) << ','
      << fmt(b.bound_landauer_n) << ',' << fmt(b.bound_landauer_s) << ','
      << fmt(b.bound_cover) << ',' << fmt(b.bound_prisco) << ',' << fmt(b.bound_prisco_alt)
      << ',' << b.satisfies_landauer_n << ',' << b.satisfies_landauer_s << ','
      << b.satisfies_cover << ',' << b.satisfies_prisco << ',' << fmt(row.energy.ratio)
      << ',' << fmt(row.adjusted_rate) << ',' << fmt(b.side_info_bits) << ','
      << fmt(row.audit.deficit) << ',' << row.audit.lossless_consistent << '\n';
}

nlohmann::json sweep_row_json(const SweepRow& row) {
  const BoundsReport& b = row.bounds;
  return {{"theta_deg", row.theta_deg},
          {"n", b.letter_count},
          {"S_letter", b.letter_entropy},
          {"S_total", b.total_entropy},
          {"L", b.average_length},
          {"bound_landauer_n", json_number(b.bound_landauer_n)},
          {"bound_landauer_S", json_number(b.bound_landauer_s)},
          {"bound_cover", json_number(b.bound_cover)},
          {"bound_prisco", json_number(b.bound_prisco)},
          {"bound_prisco_alt", json_number(b.bound_prisco_alt)},
          {"sat_landauer_n", b.satisfies_landauer_n},
          {"sat_landauer_S", b.satisfies_landauer_s},
          {"sat_cover", b.satisfies_cover},
          {"sat_prisco", b.satisfies_prisco},
          {"energy_ratio", row.energy.ratio},
          {"adjusted_rate", row.adjusted_rate},
          {"side_info_bits", b.side_info_bits},
          {"deficit", row.audit.deficit},
          {"lossless", row.audit.lossless_consistent}};
}

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "csv") {
    return OutputFormat::Csv;
  }
  if (name == "json") {
    return OutputFormat::Json;
  }
  throw ValidationError("format must be csv or json: " + name);
}

int cmd_table3(const ExperimentConfig& config, std::ostream& out) {
  const double theta = thetas_or(config, {45.0}).front();
  const int n = letter_counts_or(config, {3}).front();
  const EigenDecomposition eig = eigenbasis_for_theta(theta);
  const Codebook book = build_codebook(eig, n, config.symbol_order, config.enumeration_cap);

  double total_probability = 0.0;
  for (const CodebookEntry& entry : book.entries()) {
    total_probability += entry.probability;
  }
  const double length = average_length(book);

  if (config.format == OutputFormat::Json) {
    nlohmann::json doc{{"schema", std::string(kSchemaVersion)},
                       {"command", "table3"},
                       {"theta_deg", theta},
                       {"codebook", nlohmann::json::parse(to_json(book))},
                       {"total_probability", total_probability},
                       {"average_length", length}};
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << "# schema=" << kSchemaVersion << " command=table3 theta_deg=" << fmt(theta)
      << " n=" << n << " symbol_order=" << to_string(config.symbol_order) << '\n';
  out << "rank,sequence,codeword,probability,length\n";
  for (const CodebookEntry& entry : book.entries()) {
    out << entry.rank << ',' << sequence_label(entry.sequence, book.dimension()) << ','
        << entry.codeword.symbols << ',' << fmt(entry.probability) << ','
        << entry.codeword.length() << '\n';
  }
  out << "# total_probability=" << fmt(total_probability)
      << " average_length=" << fmt(length) << '\n';
  return 0;
}

int cmd_sweep(const ExperimentConfig& config, std::ostream& out) {
  std::vector<double> fallback_thetas;
  for (int deg = 10; deg <= 170; deg += 10) {
    fallback_thetas.push_back(deg);
  }
  std::vector<int> fallback_counts;
  for (int n = 1; n <= 10; ++n) {
    fallback_counts.push_back(n);
  }
  const std::vector<double> thetas = thetas_or(config, std::move(fallback_thetas));
  const std::vector<int> counts = letter_counts_or(config, std::move(fallback_counts));

  std::vector<SweepRow> rows;
  std::vector<std::string> warnings;
  for (double theta : thetas) {
    const EigenDecomposition eig = eigenbasis_for_theta(theta);
    for (int n : counts) {
      try {
        rows.push_back(sweep_row(eig, theta, n, config.symbol_order, config.enumeration_cap));
      } catch (const ResourceError&) {
        std::ostringstream warning;
        warning << "theta_deg=" << fmt(theta) << " n=" << n
                << ": enumeration cap exceeded, row skipped";
        warnings.push_back(warning.str());
      }
    }
  }

  if (config.format == OutputFormat::Json) {
    nlohmann::json json_rows = nlohmann::json::array();
    for (const SweepRow& row : rows) {
      json_rows.push_back(sweep_row_json(row));
    }
    nlohmann::json doc{{"schema", std::string(kSchemaVersion)},
                       {"command", "sweep"},
                       {"rows", json_rows},
                       {"warnings", warnings}};
    out << doc.dump(2) << '\n';
    return 0;
  }

  out << "# schema=" << kSchemaVersion << " command=sweep" << '\n';
  out << kSweepColumns << '\n';
  for (const SweepRow& row : rows) {
    print_sweep_row_csv(out, row);
  }
  for (const std::string& warning : warnings) {
    out << "# warning " << warning << '\n';
  }
  return 0;
}

int cmd_roundtrip(const ExperimentConfig& config, std::ostream& out) {
  const std::vector<double> thetas = thetas_or(config, {30.0, 45.0, 60.0, 90.0, 135.0});
  const std::vector<int> counts = letter_counts_or(config, {1, 2, 3, 4, 5, 6});

  std::mt19937_64 rng(config.seed);
  bool all_pass = true;
  nlohmann::json json_rows = nlohmann::json::array();
  if (config.format == OutputFormat::Csv) {
    out << "# schema=" << kSchemaVersion << " command=roundtrip seed=" << config.seed << '\n';
    out << "theta_deg,n,trials,min_fidelity,side_info_guard,status\n";
  }

  for (double theta : thetas) {
    const EigenDecomposition eig = eigenbasis_for_theta(theta);
    for (int n : counts) {
      const Codebook book = build_codebook(eig, n, config.symbol_order, config.enumeration_cap);
      double min_fidelity = 1.0;
      std::string failure;
      for (int trial = 0; trial < kRoundTripTrials; ++trial) {
        const MessageState message = MessageState::random(book.dimension(), n, rng);
        try {
          const FockState encoded = encode(message, book);
          const MessageState decoded = decode(encoded, book, n);
          min_fidelity = std::min(min_fidelity, fidelity(message, decoded));
        } catch (const CorruptionError& e) {
          failure = e.what();
          break;
        }
      }
      // The decoder must reject wrong total-length side information.
      bool side_info_guard = false;
      try {
        decode(encode(MessageState::basis(book.dimension(),
                                          IndexSequence(static_cast<std::size_t>(n), 0)),
                      book),
               book, n + 1);
      } catch (const SideInfoError&) {
        side_info_guard = true;
      }
      const bool pass =
          failure.empty() && side_info_guard && min_fidelity >= kRoundTripFidelity;
      all_pass = all_pass && pass;

      if (config.format == OutputFormat::Json) {
        json_rows.push_back({{"theta_deg", theta},
                             {"n", n},
                             {"trials", kRoundTripTrials},
                             {"min_fidelity", min_fidelity},
                             {"side_info_guard", side_info_guard},
                             {"status", pass ? "pass" : "fail"},
                             {"error", failure}});
      } else {
        out << fmt(theta) << ',' << n << ',' << kRoundTripTrials << ','
            << fmt(min_fidelity) << ',' << side_info_guard << ','
            << (pass ? "pass" : "fail") << '\n';
        if (!failure.empty()) {
          out << "# corruption " << failure << '\n';
        }
      }
    }
  }

  if (config.format == OutputFormat::Json) {
    nlohmann::json doc{{"schema", std::string(kSchemaVersion)},
                       {"command", "roundtrip"},
                       {"seed", config.seed},
                       {"rows", json_rows},
                       {"status", all_pass ? "pass" : "fail"}};
    out << doc.dump(2) << '\n';
  } else {
    out << "# status=" << (all_pass ? "pass" : "fail") << '\n';
  }
  return all_pass ? 0 : 1;
}

int cmd_schumacher(const ExperimentConfig& config, std::ostream& out) {
  if (!(config.epsilon > 0.0)) {
    throw ValidationError("epsilon must be positive");
  }
  const double theta = thetas_or(config, {45.0}).front();
  std::vector<int> fallback_counts;
  for (int n = 4; n <= 16; ++n) {
    fallback_counts.push_back(n);
  }
  const std::vector<int> counts = letter_counts_or(config, std::move(fallback_counts));
  const EigenDecomposition eig = eigenbasis_for_theta(theta);

  nlohmann::json json_rows = nlohmann::json::array();
  if (config.format == OutputFormat::Csv) {
    out << "# schema=" << kSchemaVersion << " command=schumacher theta_deg=" << fmt(theta)
        << " epsilon=" << fmt(config.epsilon) << '\n';
    out << "n,epsilon,dimension,rate,fidelity,one_one_rate\n";
  }
  for (int n : counts) {
    const TypicalSet ts = typical_set(eig, n, config.epsilon, config.enumeration_cap);
    const double rate = ts.dimension() == 0
                            ? -std::numeric_limits<double>::infinity()
                            : schumacher_rate(ts);
    const Codebook book = build_codebook(eig, n, config.symbol_order, config.enumeration_cap);
    const double one_one_rate =
        (average_length(book) + std::log2(static_cast<double>(n))) / n;
    if (config.format == OutputFormat::Json) {
      json_rows.push_back({{"n", n},
                           {"epsilon", config.epsilon},
                           {"dimension", ts.dimension()},
                           {"rate", json_number(rate)},
                           {"fidelity", projection_fidelity(ts)},
                           {"one_one_rate", one_one_rate}});
    } else {
      out << n << ',' << fmt(config.epsilon) << ',' << ts.dimension() << ',' << fmt(rate)
          << ',' << fmt(projection_fidelity(ts)) << ',' << fmt(one_one_rate) << '\n';
    }
  }
  if (config.format == OutputFormat::Json) {
    nlohmann::json doc{{"schema", std::string(kSchemaVersion)},
                       {"command", "schumacher"},
                       {"theta_deg", theta},
                       {"rows", json_rows}};
    out << doc.dump(2) << '\n';
  }
  return 0;
}

int cmd_circuit_demo(const ExperimentConfig& config, std::ostream& out) {
  const double theta = thetas_or(config, {45.0}).front();
  const EigenDecomposition eig = eigenbasis_for_theta(theta);
  const Codebook book = circuit_codebook(eig);

  const Eigen::Vector4cd input(Complex{0.5, 0.0}, Complex{0.5, 0.0}, Complex{0.5, 0.0},
                               Complex{0.5, 0.0});
  const MessageState message = eigenbasis_superposition(eig, 2, input);
  const FockState reference = encode(message, book);

  nlohmann::json doc{{"schema", std::string(kSchemaVersion)},
                     {"command", "circuit-demo"},
                     {"theta_deg", theta},
                     {"input_plus_minus", nlohmann::json::array()}};
  for (int i = 0; i < 4; ++i) {
    doc["input_plus_minus"].push_back({input(i).real(), input(i).imag()});
  }

  for (CircuitMode mode : {CircuitMode::Measured, CircuitMode::Coherent}) {
    const CircuitTrace trace = run_circuit_trace(input, mode);
    nlohmann::json stages = nlohmann::json::array();
    for (const CircuitState& stage : trace.stages) {
      stages.push_back({{"stage", stage.stage}, {"state", state_to_json_value(stage.combined)}});
    }
    nlohmann::json outcomes = nlohmann::json::array();
    for (const MeasurementOutcome& outcome : trace.outcomes) {
      outcomes.push_back(
          {{"result", outcome.result == EnvOutcome::Vacuum ? "env_vacuum" : "env_one_photon"},
           {"probability", outcome.probability},
           {"post_state", state_to_json_value(outcome.post_state)},
           {"corrected_fidelity_vs_encode",
            fidelity(conditional_phase_correction(outcome.post_state, outcome.result),
                     reference)}});
    }
    doc[mode == CircuitMode::Measured ? "measured" : "coherent"] = {
        {"stages", stages},
        {"outcomes", outcomes},
        {"output", state_to_json_value(trace.output)},
        {"fidelity_vs_encode", fidelity(trace.output, reference)}};
  }
  out << doc.dump(2) << '\n';
  return 0;
}

int cmd_bounds(const ExperimentConfig& config, std::ostream& out) {
  const int n = letter_counts_or(config, {3}).front();
  double theta = 0.0;
  EigenDecomposition eig = [&] {
    if (!config.ensemble_path.empty()) {
      std::ifstream file(config.ensemble_path);
      if (!file) {
        throw ValidationError("cannot open ensemble file: " + config.ensemble_path);
      }
      std::ostringstream text;
      text << file.rdbuf();
      return diagonalize(density_matrix(ensemble_from_json(text.str())));
    }
    theta = thetas_or(config, {45.0}).front();
    return eigenbasis_for_theta(theta);
  }();

  const SweepRow row = sweep_row(eig, theta, n, config.symbol_order, config.enumeration_cap);
  if (config.format == OutputFormat::Json) {
    nlohmann::json doc{{"schema", std::string(kSchemaVersion)},
                       {"command", "bounds"},
                       {"row", sweep_row_json(row)}};
    out << doc.dump(2) << '\n';
    return 0;
  }
  out << "# schema=" << kSchemaVersion << " command=bounds" << '\n';
  out << kSweepColumns << '\n';
  print_sweep_row_csv(out, row);
  return 0;
}

}  // namespace fockzip::cli
