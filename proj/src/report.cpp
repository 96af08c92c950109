#include "gldpc/report.hpp"

#include <cmath>
#include <cstdio>

namespace gldpc {
namespace {

using nlohmann::json;

// JSON has no infinity; report caps as null when unrestricted.
json cap_to_json(double cap) {
  if (std::isinf(cap)) return nullptr;
  return cap;
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

json to_json(const BoundParams& p) {
  return json{{"c", p.c},
              {"d", p.d},
              {"t", p.t},
              {"c1", p.c1},
              {"grid_cross", p.grid_cross},
              {"grid_confused", p.grid_confused},
              {"refine_starts", p.refine_starts},
              {"saddle_tol", p.saddle_tol},
              {"root_rel_tol", p.root_rel_tol},
              {"scan_start", p.scan_start},
              {"random_margin_scale", p.random_margin_scale},
              {"cross_cap", cap_to_json(p.cross_cap)},
              {"confused_cap", cap_to_json(p.confused_cap)}};
}

json to_json(const PartitionFractions& f) {
  return json{{"corrupt", f.corrupt},
              {"undecided", f.undecided},
              {"at_risk", f.at_risk},
              {"confused", f.confused},
              {"cross", f.cross}};
}

json radius_report_json(const RadiusReport& report) {
  json out{{"kind", "radius-report"},
           {"version", 1},
           {"config", to_json(report.params)},
           {"worst_case_radius",
            {{"certified", report.worst_case.certified},
             {"upper", report.worst_case.upper}}},
           {"wall_seconds", report.wall_seconds}};
  if (report.random_radius > 0) {
    out["random_error_radius"] = report.random_radius;
    out["random_margin"] = report.params.random_margin_scale *
                           report.params.t * (report.params.t + 1) /
                           report.params.d;
  }
  if (report.worst_witness.corrupt > 0) {
    out["worst_case_witness"] = to_json(report.worst_witness);
  }
  if (report.random_witness.corrupt > 0) {
    out["random_witness"] = to_json(report.random_witness);
  }
  return out;
}

json tail_report_json(long long block_length, const BoundParams& params,
                      const TailOptions& options,
                      std::span<const TailPoint> curve, double wall_seconds) {
  json rows = json::array();
  for (const TailPoint& p : curve) {
    rows.push_back({{"weight", p.weight},
                    {"failure_bound", p.failure_bound},
                    {"cumulative", p.cumulative}});
  }
  return json{{"kind", "failure-tail-report"},
              {"version", 1},
              {"config", to_json(params)},
              {"block_length", block_length},
              {"weight_max", options.weight_max},
              {"count_bound", options.count_bound == CountBound::kStirling
                                  ? "stirling"
                                  : "entropy"},
              {"denominator",
               options.denominator == MatchingDenominator::kExactLogGamma
                   ? "exact-log-gamma"
                   : "stirling-lower-bound"},
              {"prune_nats", options.prune_nats},
              {"curve", rows},
              {"wall_seconds", wall_seconds}};
}

void write_alpha_sweep_csv(std::ostream& out,
                           std::span<const AlphaSweepRow> rows) {
  out << "# gldpc-csv v1 kind=alpha_sweep\n";
  out << "alpha,f_alpha\n";
  for (const AlphaSweepRow& r : rows) {
    out << format_number(r.alpha) << ',' << format_number(r.exponent) << '\n';
  }
}

void write_tail_csv(std::ostream& out, std::span<const TailPoint> rows) {
  out << "# gldpc-csv v1 kind=finite_length\n";
  out << "i,pe_i,cumulative\n";
  for (const TailPoint& r : rows) {
    out << r.weight << ',' << format_number(r.failure_bound) << ','
        << format_number(r.cumulative) << '\n';
  }
}

void write_family_csv(std::ostream& out, std::span<const FamilyRow> rows) {
  out << "# gldpc-csv v1 kind=ensemble_family\n";
  out << "d,alpha0,alphaR\n";
  for (const FamilyRow& r : rows) {
    out << r.d << ',' << format_number(r.worst_case) << ','
        << format_number(r.random_radius) << '\n';
  }
}

}  // namespace gldpc
