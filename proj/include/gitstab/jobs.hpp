#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gitstab/worst.hpp"

namespace gitstab::cli {

enum class Command {
  State,
  HmIndex,
  Nearest,
  Worst,
  Destab,
  GenericState,
  Certify,
  Stratify,
  HilbertState,
};

enum class OutputFormat { Json, Csv };

// One fully parsed invocation. Exactly one command; the seed is always
// recorded in the output so runs can be reproduced byte for byte.
struct JobSpec {
  Command command;
  gitcore::Mode mode = gitcore::Mode::SL;
  int n = -1;
  std::optional<int> degree_m;           // hilbert-state
  std::optional<std::string> polynomial; // inline form text
  std::vector<std::string> ideal_generators;
  std::optional<std::string> input_path; // file holding the form/ideal text
  std::optional<std::string> points_text; // nearest: "(1,0),(0,1)" or "[(1,0),(0,1)]"
  std::optional<std::string> rho_text;    // hm-index: "2,-1,-1"
  std::optional<std::string> vertex_weight_text; // hilbert-state: query one vertex, no enumeration
  gitcore::SamplerConfig sampler;
  std::uint64_t samples = 0;          // worst/stratify: explore this many sampled tori
  bool use_permutations = false;      // stratify: bucket all permutation matrices
  std::optional<std::string> gs_file; // stratify/worst: JSON list of matrices
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> svg_path;
  std::optional<std::pair<int, int>> svg_coords; // 2-D coordinate projection
  std::optional<std::uint64_t> budget_override;  // else GIT_INSTAB_BUDGET / default
  unsigned threads = 1;
};

// 0 success, 1 input error, 2 enumeration budget exhausted.
struct JobResult {
  int exit_code;
  std::string output;  // JSON document (or CSV table) to print
};

// Runs the job and renders its artifacts. All errors come back as JSON
// diagnostics with the matching exit code; nothing throws across this
// boundary. Identical JobSpecs produce byte-identical output.
JobResult run(const JobSpec& job);

// Rationals serialize as [numerator, denominator] in lowest terms with
// positive denominator; entries are JSON integers when they fit in 64 bits
// and decimal strings otherwise.
std::string rat_to_json_text(const Rat& q);
Rat rat_from_json_text(const std::string& text);

}  // namespace gitstab::cli
