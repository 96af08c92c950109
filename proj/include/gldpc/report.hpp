#pragma once

#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

#include "gldpc/numerics/exponents.hpp"
#include "gldpc/numerics/finite_length.hpp"

namespace gldpc {

// Radius computation results plus enough provenance to reproduce them.
struct RadiusReport {
  BoundParams params;
  RadiusBracket worst_case;   // exponent < 0 at certified, >= 0 at upper
  double random_radius = 0;   // 0 when not computed
  // Maximizer witnesses at the bracket's upper end (adversarial) and at the
  // random radius (random model); corrupt == 0 marks "not recorded".
  PartitionFractions worst_witness;
  PartitionFractions random_witness;
  double wall_seconds = 0;
};

nlohmann::json to_json(const BoundParams& params);
nlohmann::json to_json(const PartitionFractions& point);
nlohmann::json radius_report_json(const RadiusReport& report);
nlohmann::json tail_report_json(long long block_length,
                                const BoundParams& params,
                                const TailOptions& options,
                                std::span<const TailPoint> curve,
                                double wall_seconds);

struct AlphaSweepRow {
  double alpha = 0;
  double exponent = 0;
};

struct FamilyRow {
  int d = 0;
  double worst_case = 0;
  double random_radius = 0;
};

// CSV emitters. Every file starts with a "# gldpc-csv v1 kind=..." comment
// line followed by a column-name header; numbers use %.12g.
void write_alpha_sweep_csv(std::ostream& out,
                           std::span<const AlphaSweepRow> rows);
void write_tail_csv(std::ostream& out, std::span<const TailPoint> rows);
void write_family_csv(std::ostream& out, std::span<const FamilyRow> rows);

// %.12g rendering used by the CSV emitters, exposed for tests.
std::string format_number(double value);

}  // namespace gldpc
