#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fockzip/experiments.hpp"

namespace {

struct RawOptions {
  fockzip::cli::ExperimentConfig config;
  std::string symbol_order = "v-first";
  std::string format = "csv";
};

void add_common_options(CLI::App& cmd, RawOptions& raw) {
  cmd.add_option("--theta", raw.config.theta_degrees,
                 "Source angle(s) in degrees, strictly between 0 and 180");
  cmd.add_option("--n", raw.config.letter_counts, "Letters per message (n >= 1)");
  cmd.add_option("--epsilon", raw.config.epsilon, "Typicality window (epsilon > 0)");
  cmd.add_option("--symbol-order", raw.symbol_order,
                 "Which polarization is binary digit 0: v-first or h-first");
  cmd.add_option("--format", raw.format, "Output format: csv or json");
  cmd.add_option("--seed", raw.config.seed, "Seed for the deterministic RNG");
  cmd.add_option("--cap", raw.config.enumeration_cap,
                 "Enumeration cap on d^n sequences (default 2^22; raising it can "
                 "use hundreds of MB of memory)");
}

void finalize(RawOptions& raw) {
  raw.config.symbol_order = fockzip::symbol_order_from_string(raw.symbol_order);
  raw.config.format = fockzip::cli::output_format_from_string(raw.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fockzip: exact simulator of lossless quantum data compression with "
      "variable-length photonic codes.\n"
      "Exit codes: 0 success, 1 property failure, 2 configuration error."};
  app.require_subcommand(1);

  RawOptions raw;
  int (*command)(const fockzip::cli::ExperimentConfig&, std::ostream&) = nullptr;

  CLI::App* table3 = app.add_subcommand(
      "table3",
      "Print a probability-ranked codebook (default theta=45, n=3).\n"
      "CSV columns: rank (1-based), sequence (eigenbasis labels, + before -),\n"
      "codeword (polarization string), probability (product of eigenvalues),\n"
      "length (photon count). Footer: total_probability, average_length (bits).");
  add_common_options(*table3, raw);
  table3->callback([&] { command = fockzip::cli::cmd_table3; });

  CLI::App* sweep = app.add_subcommand(
      "sweep",
      "Bounds and energy audit over a (theta, n) grid (default 10..170 deg x 1..10).\n"
      "CSV columns: theta_deg, n, S_letter (letter entropy, bits), S_total (n*S),\n"
      "L (expected codeword length = expected photons), bound_landauer_n (S_total-log2 n),\n"
      "bound_landauer_S (S_total-log2 S_total), bound_cover (S_total-log2 n-3),\n"
      "bound_prisco (S_total-log2(S_total+1)-S_total*log2(1+1/S_total)),\n"
      "bound_prisco_alt (log2 S_total variant, reported only),\n"
      "sat_* (1 iff L >= bound), energy_ratio (L/n), adjusted_rate ((L+log2 n)/n),\n"
      "side_info_bits (log2 n), deficit (S_total-(L+side_info)), lossless (deficit<=1e-9).");
  add_common_options(*sweep, raw);
  sweep->callback([&] { command = fockzip::cli::cmd_sweep; });

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip",
      "Seeded encode/decode fidelity suite (default theta in {30,45,60,90,135},\n"
      "n in 1..6, 200 random superpositions each). CSV columns: theta_deg, n,\n"
      "trials, min_fidelity, side_info_guard (1 iff wrong total length was\n"
      "rejected), status. Exits 1 if any fidelity < 1-1e-10.");
  add_common_options(*roundtrip, raw);
  roundtrip->callback([&] { command = fockzip::cli::cmd_roundtrip; });

  CLI::App* schumacher = app.add_subcommand(
      "schumacher",
      "Typical-subspace baseline (default theta=45, n=4..16). CSV columns: n,\n"
      "epsilon, dimension (typical sequences), rate (log2(dimension)/n, -inf if\n"
      "empty), fidelity (projection success probability), one_one_rate\n"
      "((L+log2 n)/n of the lossless scheme for the same n).");
  add_common_options(*schumacher, raw);
  schumacher->callback([&] { command = fockzip::cli::cmd_schumacher; });

  CLI::App* circuit_demo = app.add_subcommand(
      "circuit-demo",
      "Run the two-letter compression network on a uniform +/- superposition and\n"
      "print stage-by-stage JSON state dumps, measurement outcomes, and the final\n"
      "fidelity versus the direct codebook encoding (always JSON).");
  add_common_options(*circuit_demo, raw);
  circuit_demo->callback([&] { command = fockzip::cli::cmd_circuit_demo; });

  CLI::App* bounds = app.add_subcommand(
      "bounds",
      "Single-configuration bounds report (default theta=45, n=3); same columns\n"
      "as sweep. --ensemble reads a source from JSON\n"
      "({\"letters\":[{\"amplitudes\":[[re,im],...],\"p\":...},...]}) instead of --theta.");
  add_common_options(*bounds, raw);
  bounds->add_option("--ensemble", raw.config.ensemble_path,
                     "Path to an ensemble JSON file describing the source");
  bounds->callback([&] { command = fockzip::cli::cmd_bounds; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    finalize(raw);
    return command(raw.config, std::cout);
  } catch (const fockzip::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
