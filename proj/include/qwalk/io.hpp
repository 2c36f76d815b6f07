#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/distribution.hpp"
#include "qwalk/network.hpp"
#include "qwalk/polarization.hpp"

namespace qwalk::io {

enum class RunMode { single, pair, anyon_sweep, independence_report };
enum class OutputFormat { json, csv };

const char* mode_name(RunMode m);
const char* format_name(OutputFormat f);

/// Coupler section of a run config. Either an ideal network (explicit
/// cross-coupling ratios) or a polarized physical model (coupling strengths,
/// V/H ratio directly or through a tilt calibration table).
struct CouplerConfig {
  bool polarized = false;

  CouplerSpec default_coupler{};
  std::map<std::pair<int, int>, CouplerSpec> overrides;

  double coupling_strength = 0.0;
  std::optional<double> ratio_vh;
  std::optional<std::vector<std::pair<double, double>>> tilt_table;
  std::optional<double> tilt_angle;
  double birefringent_phase = 0.0;
  std::map<std::pair<int, int>, double> strength_overrides;

  double resolved_ratio() const;
};

struct RunConfig {
  int steps = 0;
  RunMode mode = RunMode::single;
  std::vector<int> rails;
  std::vector<double> phis;  // one entry for pair mode, the sweep grid otherwise
  CouplerConfig couplers;
  Basis basis = Basis::positions;
  OutputFormat format = OutputFormat::json;
  std::string output;  // empty = stdout
  std::string kernels = "auto";
};

/// Parse and validate a config document. Errors carry the offending field.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);
void validate(const RunConfig& cfg);

/// One sweep entry: the phase it was computed at plus its distribution.
struct SweepBlock {
  double phi = 0.0;
  std::string statistics;
  PairDistribution dist;
};

/// Output of execute(); exactly the section matching the run mode is filled.
struct RunResult {
  RunMode mode = RunMode::single;
  std::vector<int> single_labels;
  std::vector<double> single_probs;
  std::optional<PairDistribution> pair;
  std::vector<SweepBlock> sweep;
  std::optional<IndependenceReport> report;
};

RunResult execute(const RunConfig& cfg);

/// Serialize a result to the configured format. Output is deterministic:
/// identical configs yield byte-identical documents.
std::string render(const RunConfig& cfg, const RunResult& result);

/// Canonical one-line JSON echo of a config (the params header in outputs).
std::string canonical_params(const RunConfig& cfg);

/// Shortest decimal form that round-trips a double exactly (17 significant
/// digits via %.17g).
std::string format_double(double v);

/// A distribution read back from a JSON or CSV output file.
struct ParsedDistribution {
  std::string basis;
  std::size_t arity = 0;  // 1 for single, 2 for pair
  std::vector<std::array<int, 2>> indices;
  std::vector<double> probs;
  double total = 0.0;
};

/// Reads a run output containing a single distribution (format sniffed from
/// the content). Sweep and report files are rejected.
ParsedDistribution read_distribution_file(const std::string& path);

struct CompareResult {
  double similarity = 0.0;
  double max_abs_difference = 0.0;
  bool pass = false;
};

/// Compare two result files entry by entry; they must agree in basis, arity
/// and index sets. pass = similarity >= threshold.
CompareResult compare_files(const std::string& path_a, const std::string& path_b,
                            double threshold);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace qwalk::io
