#include "gldpc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace gldpc {

ConfidenceInterval wilson_interval(long long successes, long long trials) {
  if (trials <= 0) return {0.0, 1.0};
  const double z = 1.96;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2n = z * z / n;
  const double center = (p + z2n / 2) / (1 + z2n);
  const double half =
      z * std::sqrt(p * (1 - p) / n + z2n / (4 * n)) / (1 + z2n);
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ErrorPattern random_pattern(long long num_vars, long long weight,
                            std::uint32_t field_order, Rng& rng) {
  if (weight < 0 || weight > num_vars) {
    throw std::invalid_argument("error weight must lie in [0, N]");
  }
  if (field_order < 2) {
    throw std::invalid_argument("field order must be at least 2");
  }
  // Floyd's sampling: `weight` distinct positions in O(weight) draws.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(weight) * 2);
  for (long long j = num_vars - weight; j < num_vars; ++j) {
    const std::uint64_t pick = rng.below(static_cast<std::uint64_t>(j) + 1);
    chosen.insert(chosen.count(pick) ? static_cast<std::uint64_t>(j) : pick);
  }
  ErrorPattern pattern;
  pattern.reserve(chosen.size());
  for (std::uint64_t pos : chosen) {
    pattern.push_back({static_cast<std::uint32_t>(pos), 0});
  }
  std::sort(pattern.begin(), pattern.end(),
            [](const SymbolError& a, const SymbolError& b) {
              return a.var < b.var;
            });
  for (SymbolError& e : pattern) {
    e.value = 1 + static_cast<std::uint32_t>(rng.below(field_order - 1));
  }
  return pattern;
}

SimulationResult run_trials(const ExperimentConfig& config) {
  config.ensemble.validate();
  if (config.patterns.empty() && config.trials < 0) {
    throw std::invalid_argument("trial count must be non-negative");
  }
  const long long N = config.ensemble.N;
  const std::uint32_t q = config.ensemble.code->field().order();
  if (config.error_weight < 0 || config.error_weight > N) {
    throw std::invalid_argument("error weight must lie in [0, N]");
  }

  const TannerGraph graph = sample_graph(config.ensemble, config.graph_seed);
  DecoderConfig decoder;
  decoder.c1 = config.ensemble.c1;
  decoder.max_iterations = config.max_iterations;

  const long long trials = config.patterns.empty()
                               ? config.trials
                               : static_cast<long long>(config.patterns.size());
  SimulationResult result;
  result.records.reserve(static_cast<std::size_t>(trials));

  const Word zero(static_cast<std::size_t>(N), 0);
  double iteration_sum = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    TrialRecord record;
    ErrorPattern pattern;
    if (config.patterns.empty()) {
      record.seed = derive_seed(config.noise_seed,
                                static_cast<std::uint64_t>(trial));
      Rng rng(record.seed);
      pattern = random_pattern(N, config.error_weight, q, rng);
    } else {
      pattern = config.patterns[static_cast<std::size_t>(trial)];
    }

    Word word = zero;
    for (const SymbolError& e : pattern) {
      if (e.var >= N) {
        throw std::invalid_argument("error pattern names a variable past N");
      }
      if (e.value == 0 || e.value >= q) {
        throw std::invalid_argument(
            "error pattern values must be nonzero field elements");
      }
      word[e.var] = e.value;
    }

    const DecodeResult decoded =
        decode(graph, *config.ensemble.code, word, decoder);
    record.weight = static_cast<long long>(pattern.size());
    record.iterations = decoded.iterations;
    record.residual = std::count_if(decoded.word.begin(), decoded.word.end(),
                                    [](std::uint32_t v) { return v != 0; });
    record.success = record.residual == 0;
    iteration_sum += decoded.iterations;
    result.records.push_back(record);
  }

  SimulationSummary& s = result.summary;
  s.trials = trials;
  s.successes = std::count_if(result.records.begin(), result.records.end(),
                              [](const TrialRecord& r) { return r.success; });
  s.success_rate = trials > 0 ? static_cast<double>(s.successes) / trials : 0;
  s.wilson95 = wilson_interval(s.successes, trials);
  s.mean_iterations = trials > 0 ? iteration_sum / trials : 0;
  return result;
}

}  // namespace gldpc
