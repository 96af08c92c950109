#pragma once

#include <cstdint>
#include <vector>

#include "gldpc/decoder.hpp"
#include "gldpc/rng.hpp"
#include "gldpc/tanner.hpp"

namespace gldpc {

// One injected corruption: variable `var` is set to symbol `value` (which
// must be a nonzero field element, since trials transmit the all-zero
// codeword).
struct SymbolError {
  std::uint32_t var = 0;
  std::uint32_t value = 0;
};
using ErrorPattern = std::vector<SymbolError>;

struct ExperimentConfig {
  EnsembleParams ensemble;
  std::uint64_t graph_seed = 1;
  std::uint64_t noise_seed = 1;
  long long trials = 100;       // ignored when `patterns` is non-empty
  long long error_weight = 0;   // symbols corrupted per random trial
  int max_iterations = 100;
  // Explicit error patterns, one trial per entry, replacing the random
  // model when non-empty.
  std::vector<ErrorPattern> patterns;
};

struct TrialRecord {
  std::uint64_t seed = 0;  // per-trial noise seed (0 for explicit patterns)
  long long weight = 0;
  int iterations = 0;
  bool success = false;
  long long residual = 0;  // corrupt symbols after decoding; 0 iff success
};

struct ConfidenceInterval {
  double low = 0;
  double high = 1;
};

// Wilson score interval for a binomial proportion, 95% confidence.
ConfidenceInterval wilson_interval(long long successes, long long trials);

struct SimulationSummary {
  long long trials = 0;
  long long successes = 0;
  double success_rate = 0;
  ConfidenceInterval wilson95;
  double mean_iterations = 0;
};

struct SimulationResult {
  std::vector<TrialRecord> records;
  SimulationSummary summary;
};

// `weight` distinct positions drawn uniformly from [0, num_vars), each
// assigned an independent uniform nonzero symbol; positions ascending.
ErrorPattern random_pattern(long long num_vars, long long weight,
                            std::uint32_t field_order, Rng& rng);

// Samples the graph from `config.ensemble` with graph_seed, then decodes one
// corrupted all-zero codeword per trial (per-trial randomness derived from
// noise_seed and the trial index, so runs are reproducible and
// order-independent). Throws std::invalid_argument for inconsistent
// configs or patterns naming impossible positions/values.
SimulationResult run_trials(const ExperimentConfig& config);

}  // namespace gldpc
