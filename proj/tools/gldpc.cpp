// Command-line front end for the GLDPC workbench: decoding-radius bounds,
// finite-length failure tails, Monte-Carlo decoding experiments, expurgation
// scans, and graph generation/inspection.
//
// Exit codes: 0 success, 2 configuration error, 3 guarantee-condition
// failure, 4 work-budget exhaustion.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gldpc/component_code.hpp"
#include "gldpc/decoder.hpp"
#include "gldpc/errors.hpp"
#include "gldpc/numerics/exponents.hpp"
#include "gldpc/numerics/finite_length.hpp"
#include "gldpc/partition.hpp"
#include "gldpc/report.hpp"
#include "gldpc/sim.hpp"
#include "gldpc/tanner.hpp"

namespace {

using nlohmann::json;

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::invalid_argument("write failed: " + path);
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit_json(const json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

struct BoundsOpts {
  int c = 0;
  int d = 0;
  int t = 0;
  int c1 = 0;  // 0 = pick the threshold maximizing the certified radius
  std::uint32_t q = 2;
  std::string code_spec;
  std::string family;  // "m_lo:m_hi" single-error-correcting family sweep
  double rate_target = 0.5;
  int grid_cross = 200;
  int grid_confused = 200;
  int refine_starts = 10;
  double root_rel_tol = 1e-3;
  double random_margin_scale = 3e-4;
  double random_target = 0;  // 0 = certified worst-case radius
  bool skip_random = false;
  int sweep_points = 15;
  std::string out;
  std::string format = "json";
};

gldpc::BoundParams make_bound_params(const BoundsOpts& o, int c, int d, int t,
                                     int c1) {
  gldpc::BoundParams p;
  p.c = c;
  p.d = d;
  p.t = t;
  p.c1 = c1;
  p.grid_cross = o.grid_cross;
  p.grid_confused = o.grid_confused;
  p.refine_starts = o.refine_starts;
  p.root_rel_tol = o.root_rel_tol;
  p.random_margin_scale = o.random_margin_scale;
  return p;
}

// Resolves the flip threshold: explicit when given, otherwise the admissible
// threshold with the largest certified radius.
int resolve_threshold(int c1, int c, int d, int t, bool binary,
                      std::string& policy) {
  if (c1 > 0) {
    policy = "explicit";
    if (!binary && 2 * c1 <= c) {
      throw gldpc::ConditionError(
          "non-binary alphabet needs a strict majority: 2*c1 > c fails (c1=" +
          std::to_string(c1) + ", c=" + std::to_string(c) + ")");
    }
    return c1;
  }
  policy = "auto-max-radius";
  return gldpc::select_flip_threshold(c, d, t, binary);
}

void run_family(const BoundsOpts& o) {
  int m_lo = 0, m_hi = 0;
  {
    std::istringstream in(o.family);
    char sep = 0;
    if (!(in >> m_lo)) {
      throw std::invalid_argument("bad --hamming-family (want m or lo:hi): " +
                                  o.family);
    }
    m_hi = m_lo;
    if (in >> sep) {
      if (sep != ':' || !(in >> m_hi) || m_hi < m_lo) {
        throw std::invalid_argument("bad --hamming-family range: " + o.family);
      }
    }
  }
  if (m_lo < 3 || m_hi > 20) {
    throw std::invalid_argument("--hamming-family order out of range [3,20]");
  }
  if (o.rate_target <= 0 || o.rate_target >= 1) {
    throw std::invalid_argument("--rate-target must lie in (0,1)");
  }

  auto start = std::chrono::steady_clock::now();
  std::vector<gldpc::FamilyRow> rows;
  json members = json::array();
  for (int m = m_lo; m <= m_hi; ++m) {
    int d = (1 << m) - 1;
    int k0 = d - m;
    int c = static_cast<int>(
        std::llround(static_cast<double>(d) * (1.0 - o.rate_target) / m));
    if (c < 2) throw std::invalid_argument("family member needs degree >= 2");
    auto member_start = std::chrono::steady_clock::now();
    std::string policy;
    int c1 = resolve_threshold(o.c1, c, d, 1, /*binary=*/true, policy);
    gldpc::BoundParams p = make_bound_params(o, c, d, 1, c1);
    gldpc::RadiusBracket bracket = gldpc::worst_case_radius_bracket(p);
    double alpha_r =
        o.skip_random ? 0
                      : gldpc::random_error_radius(
                            p, o.random_target > 0 ? o.random_target
                                                   : bracket.certified);
    rows.push_back({d, bracket.certified, alpha_r});
    gldpc::Rational rate = gldpc::nominal_rate(c, d, k0);
    members.push_back(
        {{"order", m},
         {"d", d},
         {"k0", k0},
         {"c", c},
         {"c1", c1},
         {"threshold_policy", policy},
         {"rate", rate.value()},
         {"rate_exact", std::to_string(rate.num) + "/" +
                            std::to_string(rate.den)},
         {"alpha0_certified", bracket.certified},
         {"alpha0_upper", bracket.upper},
         {"alphaR", alpha_r},
         {"seconds", elapsed_seconds(member_start)}});
  }

  std::ostringstream csv;
  gldpc::write_family_csv(csv, rows);
  json meta = {{"kind", "ensemble-family"},
               {"version", 1},
               {"rate_target", o.rate_target},
               {"members", members},
               {"wall_seconds", elapsed_seconds(start)}};
  if (o.out.empty()) {
    if (o.format == "json") {
      std::cout << meta.dump(2) << "\n";
    } else {
      std::cout << csv.str();
    }
  } else {
    write_text_file(o.out + ".csv", csv.str());
    emit_json(meta, o.out + ".json");
    std::cout << csv.str();
  }
}

void run_bounds(const BoundsOpts& o) {
  if (!o.family.empty()) {
    run_family(o);
    return;
  }
  int d = o.d, t = o.t;
  bool binary = o.q == 2;
  std::shared_ptr<const gldpc::ComponentCode> code;
  if (!o.code_spec.empty()) {
    code = gldpc::parse_code_spec(o.code_spec);
    if (d != 0 && d != code->blocklength()) {
      throw std::invalid_argument("--d disagrees with the component code");
    }
    if (t != 0 && t != code->radius()) {
      throw std::invalid_argument("--t disagrees with the component code");
    }
    d = code->blocklength();
    t = code->radius();
    binary = code->field().order() == 2;
  }
  if (o.c <= 0 || d <= 0 || t <= 0) {
    throw std::invalid_argument(
        "bounds needs --c and either --code or both --d and --t");
  }

  std::string policy;
  int c1 = resolve_threshold(o.c1, o.c, d, t, binary, policy);
  gldpc::BoundParams p = make_bound_params(o, o.c, d, t, c1);

  auto start = std::chrono::steady_clock::now();
  gldpc::RadiusReport report;
  report.params = p;
  report.worst_case = gldpc::worst_case_radius_bracket(p);
  double target = o.random_target > 0 ? o.random_target
                                      : report.worst_case.certified;
  if (!o.skip_random) {
    report.random_radius = gldpc::random_error_radius(p, target);
    report.random_witness =
        gldpc::max_partition_exponent(report.random_radius, p,
                                      gldpc::PatternModel::kRandom, target)
            .witness;
  }
  report.worst_witness =
      gldpc::max_partition_exponent(report.worst_case.upper, p,
                                    gldpc::PatternModel::kAdversarial)
          .witness;
  report.wall_seconds = elapsed_seconds(start);

  json j = gldpc::radius_report_json(report);
  j["threshold_policy"] = policy;
  if (code) j["component_code"] = code->name();
  if (!o.skip_random && o.random_target > 0) j["random_target"] = target;

  std::vector<gldpc::AlphaSweepRow> sweep;
  if (o.sweep_points > 1 && !o.out.empty()) {
    double lo = report.worst_case.certified / 4;
    double hi = std::min(0.45, report.worst_case.upper * 8);
    for (int i = 0; i < o.sweep_points; ++i) {
      double a = lo * std::pow(hi / lo, i / (o.sweep_points - 1.0));
      sweep.push_back(
          {a, gldpc::max_partition_exponent(a, p,
                                            gldpc::PatternModel::kAdversarial)
                  .value});
    }
  }

  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    emit_json(j, o.out + ".json");
    if (!sweep.empty()) {
      std::ostringstream csv;
      gldpc::write_alpha_sweep_csv(csv, sweep);
      write_text_file(o.out + "_alpha_sweep.csv", csv.str());
    }
    std::cout << j.dump(2) << "\n";
  }
}

// ---------------------------------------------------------------------------
// finite-length
// ---------------------------------------------------------------------------

struct TailOpts {
  int c = 0;
  int d = 0;
  int t = 0;
  int c1 = 0;
  std::uint32_t q = 2;
  std::string code_spec;
  long long N = 0;
  long long i_max = 0;
  std::string count_bound = "stirling";
  std::string denominator = "exact";
  double prune_nats = 40;
  bool keep_going = false;  // keep emitting rows after the bound turns vacuous
  std::string out;
  std::string format = "csv";
};

void run_finite_length(const TailOpts& o) {
  int d = o.d, t = o.t;
  bool binary = o.q == 2;
  if (!o.code_spec.empty()) {
    auto code = gldpc::parse_code_spec(o.code_spec);
    d = code->blocklength();
    t = code->radius();
    binary = code->field().order() == 2;
  }
  if (o.c <= 0 || d <= 0 || t <= 0) {
    throw std::invalid_argument(
        "finite-length needs --c and either --code or both --d and --t");
  }
  if (o.N < 2) throw std::invalid_argument("finite-length needs --N >= 2");

  std::string policy;
  int c1 = resolve_threshold(o.c1, o.c, d, t, binary, policy);
  gldpc::BoundParams p;
  p.c = o.c;
  p.d = d;
  p.t = t;
  p.c1 = c1;

  gldpc::TailOptions options;
  options.weight_max = o.i_max;
  options.prune_nats = o.prune_nats;
  options.stop_when_vacuous = !o.keep_going;
  if (o.count_bound == "stirling") {
    options.count_bound = gldpc::CountBound::kStirling;
  } else if (o.count_bound == "entropy") {
    options.count_bound = gldpc::CountBound::kEntropy;
  } else {
    throw std::invalid_argument("--count-bound must be stirling or entropy");
  }
  if (o.denominator == "exact") {
    options.denominator = gldpc::MatchingDenominator::kExactLogGamma;
  } else if (o.denominator == "stirling") {
    options.denominator = gldpc::MatchingDenominator::kStirlingLowerBound;
  } else {
    throw std::invalid_argument("--denominator must be exact or stirling");
  }

  auto start = std::chrono::steady_clock::now();
  std::vector<gldpc::TailPoint> curve =
      gldpc::failure_tail_bound(o.N, p, options);
  double wall = elapsed_seconds(start);

  std::ostringstream csv;
  gldpc::write_tail_csv(csv, curve);
  json j = gldpc::tail_report_json(o.N, p, options, curve, wall);
  j["threshold_policy"] = policy;

  if (o.out.empty()) {
    if (o.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << csv.str();
    }
  } else {
    write_text_file(o.out + ".csv", csv.str());
    emit_json(j, o.out + ".json");
    std::cout << csv.str();
  }
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimulateOpts {
  std::string code_spec;
  long long N = 0;
  int c = 0;
  int c1 = 0;
  std::uint64_t seed = 1;        // graph seed
  std::uint64_t noise_seed = 1;  // per-trial randomness
  long long trials = 100;
  double weight = 0;  // < 1 means a fraction of N
  int max_iterations = 100;
  std::string error_model = "random";
  std::string pattern_path;
  std::string out;
};

std::vector<gldpc::ErrorPattern> parse_pattern_file(const std::string& path) {
  std::string text = slurp_file(path);
  std::istringstream in(text);
  std::vector<gldpc::ErrorPattern> patterns;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    long long weight = 0;
    if (!(row >> weight)) continue;  // blank line
    std::string where = path + ":" + std::to_string(lineno);
    if (weight < 0) {
      throw std::invalid_argument("negative pattern weight at " + where);
    }
    std::vector<long long> raw(2 * weight);
    for (auto& v : raw) {
      if (!(row >> v)) {
        throw std::invalid_argument(
            "pattern at " + where + " needs " + std::to_string(weight) +
            " positions then " + std::to_string(weight) + " values");
      }
    }
    long long trailing = 0;
    if (row >> trailing) {
      throw std::invalid_argument("trailing tokens in pattern at " + where);
    }
    gldpc::ErrorPattern pattern;
    pattern.reserve(static_cast<std::size_t>(weight));
    for (long long i = 0; i < weight; ++i) {
      if (raw[i] < 0 || raw[weight + i] <= 0) {
        throw std::invalid_argument("pattern at " + where +
                                    " has a negative position or a value "
                                    "outside the nonzero symbol range");
      }
      pattern.push_back({static_cast<std::uint32_t>(raw[i]),
                         static_cast<std::uint32_t>(raw[weight + i])});
    }
    patterns.push_back(std::move(pattern));
  }
  return patterns;
}

long long resolve_weight(double weight, long long N) {
  if (weight < 0) throw std::invalid_argument("--weight must be >= 0");
  if (weight > 0 && weight < 1) {
    return static_cast<long long>(std::floor(weight * static_cast<double>(N)));
  }
  double rounded = std::floor(weight);
  if (rounded != weight) {
    throw std::invalid_argument("--weight must be an integer or a fraction "
                                "below 1");
  }
  return static_cast<long long>(rounded);
}

void run_simulate(const SimulateOpts& o) {
  if (o.code_spec.empty() || o.N <= 0 || o.c <= 0 || o.c1 <= 0) {
    throw std::invalid_argument(
        "simulate needs --code, --N, --c and --c1");
  }
  gldpc::ExperimentConfig config;
  config.ensemble.code = gldpc::parse_code_spec(o.code_spec);
  config.ensemble.N = o.N;
  config.ensemble.c = o.c;
  config.ensemble.d = config.ensemble.code->blocklength();
  config.ensemble.c1 = o.c1;
  config.graph_seed = o.seed;
  config.noise_seed = o.noise_seed;
  config.trials = o.trials;
  config.max_iterations = o.max_iterations;

  std::string model = o.error_model;
  if (!o.pattern_path.empty()) model = "file";
  if (model == "file") {
    if (o.pattern_path.empty()) {
      throw std::invalid_argument("--error-model file needs --patterns");
    }
    config.patterns = parse_pattern_file(o.pattern_path);
    if (config.patterns.empty()) {
      throw std::invalid_argument("pattern file holds no patterns: " +
                                  o.pattern_path);
    }
  } else if (model == "random") {
    config.error_weight = resolve_weight(o.weight, o.N);
  } else {
    throw std::invalid_argument("--error-model must be random or file");
  }

  auto start = std::chrono::steady_clock::now();
  gldpc::SimulationResult result = gldpc::run_trials(config);
  double wall = elapsed_seconds(start);

  std::ostringstream csv;
  csv << "# gldpc-csv v1 kind=trials\n";
  csv << "trial,seed,weight,iterations,success,residual\n";
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const gldpc::TrialRecord& r = result.records[i];
    csv << i << ',' << r.seed << ',' << r.weight << ',' << r.iterations << ','
        << (r.success ? 1 : 0) << ',' << r.residual << '\n';
  }

  const gldpc::SimulationSummary& s = result.summary;
  json j = {{"kind", "simulation-summary"},
            {"version", 1},
            {"component_code", config.ensemble.code->name()},
            {"N", config.ensemble.N},
            {"c", config.ensemble.c},
            {"d", config.ensemble.d},
            {"c1", config.ensemble.c1},
            {"graph_seed", config.graph_seed},
            {"noise_seed", config.noise_seed},
            {"error_model", model},
            {"error_weight", model == "file" ? json() : json(config.error_weight)},
            {"trials", s.trials},
            {"successes", s.successes},
            {"success_rate", s.success_rate},
            {"wilson95_low", s.wilson95.low},
            {"wilson95_high", s.wilson95.high},
            {"mean_iterations", s.mean_iterations},
            {"wall_seconds", wall}};

  if (!o.out.empty()) {
    write_text_file(o.out + ".csv", csv.str());
    emit_json(j, o.out + ".json");
  }
  std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// expurgate
// ---------------------------------------------------------------------------

struct ExpurgateOpts {
  std::string code_spec;
  long long N = 0;
  int c = 0;
  int d = 0;
  int t = 0;
  int c1 = 0;
  std::uint64_t seed = 1;
  int b_max = 1;
  long long budget = -1;
  bool resample = false;
  int max_attempts = 64;
  std::string out;
};

void run_expurgate(const ExpurgateOpts& o) {
  int d = o.d, t = o.t;
  std::shared_ptr<const gldpc::ComponentCode> code;
  if (!o.code_spec.empty()) {
    code = gldpc::parse_code_spec(o.code_spec);
    d = code->blocklength();
    t = code->radius();
  }
  if (o.N <= 0 || o.c <= 0 || d <= 0 || t <= 0 || o.c1 <= 0) {
    throw std::invalid_argument(
        "expurgate needs --N, --c, --c1 and either --code or both --d and "
        "--t");
  }
  if (o.b_max < 1) throw std::invalid_argument("--b-max must be >= 1");

  auto start = std::chrono::steady_clock::now();
  std::uint64_t seed = o.seed;
  int attempts = 0;
  std::vector<std::vector<long long>> bad;
  while (true) {
    ++attempts;
    gldpc::TannerGraph graph = gldpc::sample_graph(o.N, o.c, d, seed);
    bad = gldpc::expurgation_scan(graph, o.b_max, o.c1, t, o.budget);
    if (bad.empty() || !o.resample) break;
    if (attempts >= o.max_attempts) {
      throw gldpc::BudgetExhausted(
          "no clean graph within " + std::to_string(o.max_attempts) +
          " resampling attempts (last seed " + std::to_string(seed) + ")");
    }
    ++seed;
  }

  json bad_json = json::array();
  for (const auto& set : bad) bad_json.push_back(set);
  json j = {{"kind", "expurgation-report"},
            {"version", 1},
            {"N", o.N},
            {"c", o.c},
            {"d", d},
            {"t", t},
            {"c1", o.c1},
            {"b_max", o.b_max},
            {"requested_seed", o.seed},
            {"accepted_seed", seed},
            {"attempts", attempts},
            {"clean", bad.empty()},
            {"bad_sets", bad_json},
            {"wall_seconds", elapsed_seconds(start)}};
  if (code) j["component_code"] = code->name();
  emit_json(j, o.out.empty() ? std::string() : o.out + ".json");
  if (!o.out.empty()) std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// graph gen / graph check
// ---------------------------------------------------------------------------

struct GraphOpts {
  long long N = 0;
  int c = 0;
  int d = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::string in;
};

void run_graph_gen(const GraphOpts& o) {
  if (o.N <= 0 || o.c <= 0 || o.d <= 0) {
    throw std::invalid_argument("graph gen needs --N, --c and --d");
  }
  gldpc::TannerGraph graph = gldpc::sample_graph(o.N, o.c, o.d, o.seed);
  std::string text = gldpc::serialize_graph(graph);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
}

void run_graph_check(const GraphOpts& o) {
  if (o.in.empty()) throw std::invalid_argument("graph check needs --in");
  gldpc::TannerGraph graph = gldpc::parse_graph(slurp_file(o.in));
  json j = {{"kind", "graph-summary"},
            {"version", 1},
            {"N", graph.num_vars()},
            {"c", graph.var_degree()},
            {"d", graph.check_degree()},
            {"checks", graph.num_checks()},
            {"sockets", graph.num_sockets()},
            {"valid", true}};
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "GLDPC workbench: certified decoding radii, finite-length failure "
      "tails, Monte-Carlo decoding experiments, and expurgation scans for "
      "regular generalized LDPC ensembles"};
  app.require_subcommand(1);

  BoundsOpts bounds;
  CLI::App* cmd_bounds = app.add_subcommand(
      "bounds", "Certified worst-case and random-error decoding radii");
  cmd_bounds->add_option("--c", bounds.c, "variable degree");
  cmd_bounds->add_option("--d", bounds.d, "check degree (component length)");
  cmd_bounds->add_option("--t", bounds.t, "component correction radius");
  cmd_bounds->add_option("--c1", bounds.c1,
                         "flip threshold (0 = maximize the radius)");
  cmd_bounds->add_option("--q", bounds.q, "alphabet size when no --code");
  cmd_bounds->add_option("--code", bounds.code_spec,
                         "component code, e.g. rs:d=30,k=24,q=31 or "
                         "hamming:m=7");
  cmd_bounds->add_option("--hamming-family", bounds.family,
                         "sweep single-error-correcting members m or lo:hi");
  cmd_bounds->add_option("--rate-target", bounds.rate_target,
                         "design rate for the family sweep");
  cmd_bounds->add_option("--grid-cross", bounds.grid_cross,
                         "outer grid points, cross-edge axis");
  cmd_bounds->add_option("--grid-confused", bounds.grid_confused,
                         "outer grid points, confused-check axis");
  cmd_bounds->add_option("--refine-starts", bounds.refine_starts,
                         "grid cells polished by coordinate ascent");
  cmd_bounds->add_option("--root-rel-tol", bounds.root_rel_tol,
                         "relative width of the radius bracket");
  cmd_bounds->add_option("--random-margin-scale", bounds.random_margin_scale,
                         "certification margin scale for the random radius "
                         "(margin = scale * t * (t+1) / d)");
  cmd_bounds->add_option("--random-target", bounds.random_target,
                         "residual fraction the random radius must reach "
                         "(0 = certified worst-case radius)");
  cmd_bounds->add_flag("--skip-random", bounds.skip_random,
                       "skip the random-error radius");
  cmd_bounds->add_option("--sweep-points", bounds.sweep_points,
                         "exponent sweep resolution (with --out)");
  cmd_bounds->add_option("--out", bounds.out, "output path prefix");
  cmd_bounds->add_option("--format", bounds.format, "stdout format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_bounds->callback([&bounds] { run_bounds(bounds); });

  TailOpts tail;
  CLI::App* cmd_tail = app.add_subcommand(
      "finite-length", "Per-weight decoding-failure bound at finite length");
  cmd_tail->add_option("--c", tail.c, "variable degree");
  cmd_tail->add_option("--d", tail.d, "check degree (component length)");
  cmd_tail->add_option("--t", tail.t, "component correction radius");
  cmd_tail->add_option("--c1", tail.c1,
                       "flip threshold (0 = maximize the radius)");
  cmd_tail->add_option("--q", tail.q, "alphabet size when no --code");
  cmd_tail->add_option("--code", tail.code_spec, "component code spec");
  cmd_tail->add_option("--N", tail.N, "code length (variables)")->required();
  cmd_tail->add_option("--i-max", tail.i_max, "largest error weight");
  cmd_tail->add_option("--count-bound", tail.count_bound,
                       "class-count prefactor bound")
      ->check(CLI::IsMember({"stirling", "entropy"}));
  cmd_tail->add_option("--denominator", tail.denominator,
                       "socket-matching denominator")
      ->check(CLI::IsMember({"exact", "stirling"}));
  cmd_tail->add_option("--prune-nats", tail.prune_nats,
                       "per-weight pruning threshold, nats");
  cmd_tail->add_flag("--keep-going", tail.keep_going,
                     "emit rows past the point where the bound is vacuous");
  cmd_tail->add_option("--out", tail.out, "output path prefix");
  cmd_tail->add_option("--format", tail.format, "stdout format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_tail->callback([&tail] { run_finite_length(tail); });

  SimulateOpts sim;
  CLI::App* cmd_sim = app.add_subcommand(
      "simulate", "Monte-Carlo decoding trials on a sampled graph");
  cmd_sim->add_option("--code", sim.code_spec, "component code spec")
      ->required();
  cmd_sim->add_option("--N", sim.N, "code length (variables)")->required();
  cmd_sim->add_option("--c", sim.c, "variable degree")->required();
  cmd_sim->add_option("--c1", sim.c1, "flip threshold")->required();
  cmd_sim->add_option("--seed", sim.seed, "graph seed");
  cmd_sim->add_option("--noise-seed", sim.noise_seed, "trial noise seed");
  cmd_sim->add_option("--trials", sim.trials, "trial count (random model)");
  cmd_sim->add_option("--weight", sim.weight,
                      "errors per trial; a value below 1 is a fraction of N");
  cmd_sim->add_option("--max-iterations", sim.max_iterations,
                      "decoding round cap");
  cmd_sim->add_option("--error-model", sim.error_model, "random or file")
      ->check(CLI::IsMember({"random", "file"}));
  cmd_sim->add_option("--patterns", sim.pattern_path,
                      "pattern file: weight, positions, values per line");
  cmd_sim->add_option("--out", sim.out, "output path prefix");
  cmd_sim->callback([&sim] { run_simulate(sim); });

  ExpurgateOpts exp;
  CLI::App* cmd_exp = app.add_subcommand(
      "expurgate", "Scan small corrupt sets for non-contracting patterns");
  cmd_exp->add_option("--code", exp.code_spec, "component code spec");
  cmd_exp->add_option("--N", exp.N, "code length (variables)")->required();
  cmd_exp->add_option("--c", exp.c, "variable degree")->required();
  cmd_exp->add_option("--d", exp.d, "check degree when no --code");
  cmd_exp->add_option("--t", exp.t, "correction radius when no --code");
  cmd_exp->add_option("--c1", exp.c1, "flip threshold")->required();
  cmd_exp->add_option("--seed", exp.seed, "graph seed");
  cmd_exp->add_option("--b-max", exp.b_max, "largest corrupt-set size");
  cmd_exp->add_option("--budget", exp.budget,
                      "candidate-set budget (-1 = unlimited)");
  cmd_exp->add_flag("--resample", exp.resample,
                    "advance the seed until a clean graph is found");
  cmd_exp->add_option("--max-attempts", exp.max_attempts,
                      "resampling attempt cap");
  cmd_exp->add_option("--out", exp.out, "output path prefix");
  cmd_exp->callback([&exp] { run_expurgate(exp); });

  GraphOpts graph;
  CLI::App* cmd_graph =
      app.add_subcommand("graph", "Generate or validate serialized graphs");
  cmd_graph->require_subcommand(1);
  CLI::App* cmd_gen =
      cmd_graph->add_subcommand("gen", "Sample a graph and serialize it");
  cmd_gen->add_option("--N", graph.N, "variables")->required();
  cmd_gen->add_option("--c", graph.c, "variable degree")->required();
  cmd_gen->add_option("--d", graph.d, "check degree")->required();
  cmd_gen->add_option("--seed", graph.seed, "sampling seed");
  cmd_gen->add_option("--out", graph.out, "output file (default stdout)");
  cmd_gen->callback([&graph] { run_graph_gen(graph); });
  CLI::App* cmd_check = cmd_graph->add_subcommand(
      "check", "Parse a serialized graph and print a summary");
  cmd_check->add_option("--in", graph.in, "input file")->required();
  cmd_check->callback([&graph] { run_graph_check(graph); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gldpc::ConditionError& e) {
    std::cerr << "condition check failed: " << e.what() << "\n";
    return 3;
  } catch (const gldpc::BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
