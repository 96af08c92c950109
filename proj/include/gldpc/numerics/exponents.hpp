#pragma once

#include <limits>

#include "gldpc/numerics/logpoly.hpp"

namespace gldpc {

// Parameters of a regular ensemble bound computation: every variable meets
// `c` checks, every check constrains `d` variables and corrects up to `t`
// local errors, and a variable flips when at least `c1` of its checks agree
// on the change.
struct BoundParams {
  int c = 0;
  int d = 0;
  int t = 0;
  int c1 = 0;

  // Search controls. The outer maximization scans a cross-fraction grid and
  // a confused-check grid, then polishes the best cells by coordinate ascent.
  int grid_cross = 200;
  int grid_confused = 200;
  int refine_starts = 10;
  double saddle_tol = 1e-10;

  // Radius search controls: geometric scan starts at `scan_start` and the
  // bracketing bisection stops at relative width `root_rel_tol`.
  double root_rel_tol = 1e-3;
  double scan_start = 1e-8;

  // Certification margin scale for the random-pattern radius. The exact
  // random-model exponent is never positive: it reaches zero precisely where
  // the typical one-round statistics already satisfy the coupled mass
  // constraint, so a bare sign test certifies nothing. We instead certify a
  // fraction only when the exponent clears margin = scale * t * (t+1) / d
  // below zero, which makes the failure bound decay like exp(-margin * N)
  // and absorbs evaluation tolerance. The t(t+1)/d normalization tracks the
  // scale on which the check-side exponents respond to the corrupt fraction
  // near the coupling threshold, keeping the certified radius a comparable
  // safety distance inside that threshold across component-code sizes.
  double random_margin_scale = 3e-4;

  // Optional caps on the searched region, used to restrict the maximization
  // to a sub-box (tests and diagnostics). Infinity means unrestricted.
  double cross_cap = std::numeric_limits<double>::infinity();
  double confused_cap = std::numeric_limits<double>::infinity();

  void validate() const;  // throws std::invalid_argument
};

// A point in the normalized partition space describing one round of
// decoding: fractions are relative to the variable count except `confused`,
// which is relative to the check count.
//
//   corrupt    fraction of variables holding a wrong value
//   undecided  fraction of variables that are corrupt and see too few
//              helpful checks to be repaired
//   at_risk    fraction of correct variables that see enough confused
//              checks to be flipped wrongly
//   confused   fraction of checks with more corrupt neighbours than their
//              correction radius
//   cross      fraction (per variable socket) of edges joining corrupt
//              variables to confused checks
struct PartitionFractions {
  double corrupt = 0;
  double undecided = 0;
  double at_risk = 0;
  double confused = 0;
  double cross = 0;

  // Checks the mutual feasibility constraints to tolerance `tol`; throws
  // std::invalid_argument naming the first violated constraint.
  void validate(const BoundParams& params, double tol = 1e-12) const;
};

// How the initial error pattern is drawn: an adversarial pattern makes the
// exponent count every partition whose undecided-plus-at-risk mass can reach
// the full corrupt set, while a random pattern only needs the mass to reach
// a chosen residual fraction and discounts the pattern choice itself.
enum class PatternModel { kAdversarial, kRandom };

struct ExponentMax {
  double value = -std::numeric_limits<double>::infinity();
  PartitionFractions witness;
};

// Edge-perspective enumerators, log-domain. For a corrupt variable, a check
// is "helpful" when it proposes the repair; `undecided_var_poly` enumerates
// corrupt variables with too few helpful checks (at most c - c1) and
// `secured_var_poly` the rest. For a correct variable, `at_risk_var_poly`
// enumerates those adjacent to at least c1 confused checks and
// `safe_var_poly` the rest. `suspect_check_poly` enumerates checks with more
// than `t` corrupt neighbours, `helpful_check_poly` those with at most `t`.
LogPoly undecided_var_poly(int c, int c1);
LogPoly secured_var_poly(int c, int c1);
LogPoly at_risk_var_poly(int c, int c1);
LogPoly safe_var_poly(int c, int c1);
LogPoly suspect_check_poly(int d, int t);
LogPoly helpful_check_poly(int d, int t);

// Normalized log-probability exponent that a uniform socket matching routes
// the prescribed edge masses between the variable and check classes of
// `point`. Returns -infinity when the masses are unattainable.
double matching_exponent(const PartitionFractions& point,
                         const BoundParams& params);

// Full per-variable growth exponent of the expected number of adversarial
// failure partitions at `point` (class-choice entropy plus matching
// exponent, minus the socket-class normalization).
double partition_exponent(const PartitionFractions& point,
                          const BoundParams& params);

// Same exponent discounted by the number of weight-|corrupt| patterns,
// as appropriate when the error pattern is drawn uniformly at random.
double partition_exponent_random(const PartitionFractions& point,
                                 const BoundParams& params);

// Maximizes the partition exponent over all feasible partitions with corrupt
// fraction `alpha`. Under kAdversarial the undecided and at-risk masses must
// cover the corrupt set (undecided + at_risk >= alpha); under kRandom they
// must cover `residual` instead and the random discount applies.
ExponentMax max_partition_exponent(double alpha, const BoundParams& params,
                                   PatternModel model, double residual = 0);

// True when the flip threshold admits the convergence guarantee: c1 >= 2 and
// (c - c1 + 1) * t > t + 1.
bool guarantee_conditions_hold(const BoundParams& params);
void require_guarantee_conditions(const BoundParams& params);  // ConditionError

// Largest certified fraction alpha such that every error pattern of weight
// at most alpha*N is corrected with probability -> 1 over the ensemble:
// the first sign change of the adversarial exponent, located by geometric
// scan from `scan_start` and bisection to `root_rel_tol`. Throws
// ConditionError when the exponent is not negative at `scan_start` or never
// becomes positive below 1/2.
double worst_case_radius(const BoundParams& params);

// The same search, returning both ends of the final bracket: the exponent is
// negative at `certified` and non-negative at `upper`.
struct RadiusBracket {
  double certified = 0;
  double upper = 0;
};
RadiusBracket worst_case_radius_bracket(const BoundParams& params);

// Largest fraction alpha <= 1/2 such that a random pattern of weight
// alpha*N collapses below `target_fraction`*N with probability -> 1
// (take target_fraction = worst_case_radius to chain the two guarantees).
// Scans downward from 1/2 and certifies the returned point.
double random_error_radius(const BoundParams& params, double target_fraction);

// Picks the flip threshold maximizing the certified worst-case radius over
// all thresholds that satisfy the guarantee conditions (and exceed c/2 when
// the alphabet is not binary), using a coarse grid. Throws ConditionError
// when no threshold qualifies.
int select_flip_threshold(int c, int d, int t, bool binary_alphabet);

}  // namespace gldpc
