#include "gldpc/numerics/exponents.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gldpc/errors.hpp"
#include "gldpc/numerics/entropy.hpp"
#include "gldpc/numerics/saddle.hpp"

namespace gldpc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

double nonneg(double x, const char* what) {
  if (x >= 0) return x;
  if (x > -1e-9) return 0.0;
  throw std::invalid_argument(std::string(what) + " must be non-negative");
}

struct ClassPolys {
  LogPoly undecided, secured, at_risk, safe, suspect, helpful;
};

ClassPolys build_polys(const BoundParams& p) {
  return {undecided_var_poly(p.c, p.c1), secured_var_poly(p.c, p.c1),
          at_risk_var_poly(p.c, p.c1),   safe_var_poly(p.c, p.c1),
          suspect_check_poly(p.d, p.t),  helpful_check_poly(p.d, p.t)};
}

// P[Binomial(trials, p) lands in the degree support of `slice`], where
// `slice` holds the binomial coefficients of the supported outcomes and the
// support is an upper range. Evaluated in the log domain for stability.
double binomial_upper_tail(const LogPoly& slice, int trials, double p) {
  if (!(p > 0)) return slice.min_degree() == 0 ? 1.0 : 0.0;
  if (p >= 1) return 1.0;
  const double u = std::log(p) - std::log1p(-p);
  return std::exp(slice.tilt(u, true).log_value - trials * log1p_exp(u));
}

// Single-poly saddle routed through the two-poly solver so a warm-start
// hint (the log of the previous argmin) can be carried across a sweep.
SaddleResult hinted_saddle(const LogPoly& poly, double weight, double k,
                           double tol, double* hint) {
  SaddleResult r =
      saddle_point_bound2(poly, weight, poly, 0.0, k, tol, hint ? *hint : kNaN);
  if (hint && r.argmin > 0 && std::isfinite(r.argmin)) {
    *hint = std::log(r.argmin);
  }
  return r;
}

struct VarSideSaddle {
  SaddleResult res;
  double ratio;  // log(top(x*) / bottom(x*)) at the minimizing x*
};

VarSideSaddle var_side_saddle(const LogPoly& top, double w_top,
                              const LogPoly& bottom, double w_bottom, double k,
                              double tol, double* hint) {
  SaddleResult r = saddle_point_bound2(top, w_top, bottom, w_bottom, k, tol,
                                       hint ? *hint : kNaN);
  double ratio;
  if (!(r.argmin > 0)) {
    ratio = -kInf;  // x* -> 0: the top class has strictly higher low degree
  } else if (std::isinf(r.argmin)) {
    ratio = kInf;  // x* -> inf: the top class has strictly higher top degree
  } else {
    const double u = std::log(r.argmin);
    if (hint) *hint = u;
    ratio = top.tilt(u, true).log_value - bottom.tilt(u, true).log_value;
  }
  return {r, ratio};
}

struct InnerMax {
  double value = -kInf;
  double undecided = 0;
  double at_risk = 0;
};

// Evaluates the exponent at fixed (cross, confused), maximizing analytically
// over the undecided and at-risk fractions subject to the coverage coupling
// undecided + at_risk >= coupling.
class PointEvaluator {
 public:
  PointEvaluator(const BoundParams& params, const ClassPolys& polys,
                 double alpha, double coupling, bool random_model)
      : p_(params),
        polys_(polys),
        alpha_(alpha),
        coupling_(coupling),
        random_model_(random_model),
        hb_alpha_(binary_entropy(alpha)) {}

  void reset_hints() { u1_hint_ = u2_hint_ = t1_hint_ = t2_hint_ = kNaN; }

  InnerMax eval(double cross, double confused) {
    const double c = p_.c, d = p_.d;
    const double alpha = alpha_;

    // Check-side saddles: suspect checks must absorb the cross edges, and
    // helpful checks must absorb the remaining corrupt sockets.
    const SaddleResult u1 = hinted_saddle(polys_.suspect, confused * c / d,
                                          cross * c, p_.saddle_tol, &u1_hint_);
    if (u1.value == -kInf) return {};
    const SaddleResult u2 =
        hinted_saddle(polys_.helpful, (1 - confused) * c / d,
                      (alpha - cross) * c, p_.saddle_tol, &u2_hint_);
    if (u2.value == -kInf) return {};
    const double check_side =
        (c / d) * binary_entropy(confused) + u1.value + u2.value;

    // Unconstrained inner maximizers: the class-membership entropy plus the
    // variable-side saddles peak at binomial tail fractions, which always
    // respect the per-class edge budgets.
    const double p_helpful = clamp01(cross / alpha);
    const double p_confused = clamp01((confused - cross) / (1 - alpha));
    const double g_hat =
        alpha * binomial_upper_tail(polys_.undecided, p_.c, p_helpful);
    const double d_hat =
        (1 - alpha) * binomial_upper_tail(polys_.at_risk, p_.c, p_confused);

    const double g_cap =
        std::min(alpha, cross * c / (p_.c - p_.c1 + 1));
    const double d_cap =
        std::min(1 - alpha, (confused - cross) * c / p_.c1);

    if (g_hat + d_hat >= coupling_ - 1e-15) {
      // Coverage inactive: the variable-side terms collapse against the
      // socket-class normalization, leaving only the check side.
      const double disc = random_model_ ? -p_.c * hb_alpha_
                                        : (1 - p_.c) * hb_alpha_;
      return {disc + check_side, std::min(g_hat, g_cap),
              std::min(d_hat, d_cap)};
    }

    // Coverage active: maximize along undecided + at_risk == coupling.
    if (g_cap + d_cap < coupling_ - 1e-15) return {};
    InnerMax line = maximize_on_line(cross, confused, g_cap, d_cap);
    if (line.value == -kInf) return {};

    std::array<double, 3> socket_parts = {cross, alpha - cross,
                                          confused - cross};
    line.value += check_side - p_.c * entropy(socket_parts) -
                  (random_model_ ? hb_alpha_ : 0.0);
    return line;
  }

 private:
  // Concave 1-D maximization of the variable-side entropy plus saddles along
  // the coverage line, by bisection on the derivative.
  InnerMax maximize_on_line(double cross, double confused, double g_cap,
                            double d_cap) {
    const double c = p_.c, alpha = alpha_, S = coupling_;
    const double k1 = cross * c;
    const double k2 = (confused - cross) * c;

    double g_lo = std::max(0.0, S - d_cap);
    double g_hi = std::min({g_cap, S, alpha});
    // Keep both saddles inside their attainable degree ranges: the secured
    // and safe classes can absorb only so many of the routed edges.
    g_lo = std::max(g_lo, (k1 - alpha * (p_.c - p_.c1)) / p_.c1);
    g_hi = std::min(
        g_hi, S - (k2 - (1 - alpha) * (p_.c1 - 1)) / (p_.c - p_.c1 + 1));
    if (!(g_lo <= g_hi)) return {};

    t1_hint_ = t2_hint_ = kNaN;
    double lo = g_lo, hi = g_hi;
    const double width_tol = std::max(1e-15, 1e-12 * (g_hi - g_lo));
    for (int it = 0; it < 64 && hi - lo > width_tol; ++it) {
      const double g = 0.5 * (lo + hi);
      const double dl = S - g;
      const VarSideSaddle v1 = var_side_saddle(
          polys_.undecided, g, polys_.secured, alpha - g, k1, p_.saddle_tol,
          &t1_hint_);
      const VarSideSaddle v2 = var_side_saddle(
          polys_.at_risk, dl, polys_.safe, 1 - alpha - dl, k2, p_.saddle_tol,
          &t2_hint_);
      const double left = std::log((alpha - g) / g) + v1.ratio;
      const double right = std::log((1 - alpha - dl) / dl) + v2.ratio;
      double slope = left - right;
      if (std::isnan(slope)) break;
      if (slope > 0) {
        lo = g;
      } else {
        hi = g;
      }
    }

    const double g = 0.5 * (lo + hi);
    const double dl = S - g;
    const double t1 =
        saddle_point_bound2(polys_.undecided, g, polys_.secured,
                            std::max(0.0, alpha - g), k1, p_.saddle_tol,
                            t1_hint_)
            .value;
    const double t2 =
        saddle_point_bound2(polys_.at_risk, dl, polys_.safe,
                            std::max(0.0, 1 - alpha - dl), k2, p_.saddle_tol,
                            t2_hint_)
            .value;
    if (t1 == -kInf || t2 == -kInf) return {};
    std::array<double, 3> parts = {g, std::max(0.0, alpha - g), dl};
    return {entropy(parts) + t1 + t2, g, dl};
  }

  const BoundParams& p_;
  const ClassPolys& polys_;
  double alpha_;
  double coupling_;
  bool random_model_;
  double hb_alpha_;
  double u1_hint_ = kNaN, u2_hint_ = kNaN, t1_hint_ = kNaN, t2_hint_ = kNaN;
};

// Golden-section maximization of fn over [a, b]; fn may return -infinity.
template <typename Fn>
double golden_max(double a, double b, int iters, Fn&& fn) {
  constexpr double kRatio = 0.6180339887498949;
  double x1 = b - kRatio * (b - a);
  double x2 = a + kRatio * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kRatio * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kRatio * (b - a);
      f1 = fn(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

struct GridCell {
  double value = -kInf;
  double cross = 0;
  double confused = 0;
};

}  // namespace

void BoundParams::validate() const {
  if (c < 1) throw std::invalid_argument("variable degree must be at least 1");
  if (d < 2) throw std::invalid_argument("check degree must be at least 2");
  if (t < 1 || t >= d) {
    throw std::invalid_argument(
        "correction radius must lie in [1, check degree)");
  }
  if (c1 < 1 || c1 > c) {
    throw std::invalid_argument("flip threshold must lie in [1, c]");
  }
  if (grid_cross < 2 || grid_confused < 2) {
    throw std::invalid_argument("grid resolutions must be at least 2");
  }
  if (refine_starts < 0) {
    throw std::invalid_argument("refine_starts must be non-negative");
  }
  if (!(saddle_tol > 0) || !(root_rel_tol > 0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (!(scan_start > 0) || !(scan_start < 0.5)) {
    throw std::invalid_argument("scan_start must lie in (0, 0.5)");
  }
  if (!(random_margin_scale > 0)) {
    throw std::invalid_argument("random_margin_scale must be positive");
  }
  if (!(cross_cap >= 0) || !(confused_cap >= 0)) {
    throw std::invalid_argument("search caps must be non-negative");
  }
}

void PartitionFractions::validate(const BoundParams& params, double tol) const {
  const double c = params.c, d = params.d, t = params.t, c1 = params.c1;
  auto check = [&](bool ok, const char* what) {
    if (!ok) {
      throw std::invalid_argument(std::string("infeasible partition point: ") +
                                  what);
    }
  };
  check(corrupt >= -tol && corrupt <= 1 + tol, "corrupt fraction outside [0, 1]");
  check(confused >= -tol && confused <= 1 + tol,
        "confused fraction outside [0, 1]");
  check(undecided >= -tol && undecided <= corrupt + tol,
        "undecided fraction outside [0, corrupt]");
  check(at_risk >= -tol && at_risk <= 1 - corrupt + tol,
        "at-risk fraction outside [0, 1 - corrupt]");
  check(cross >= -tol && cross <= std::min(corrupt, confused) + tol,
        "cross-edge fraction outside [0, min(corrupt, confused)]");
  check(corrupt - cross <= 1 - confused + tol,
        "non-cross corrupt sockets exceed helpful-check capacity");
  check(confused <= cross * d / (t + 1) + tol,
        "confused checks exceed the cross-edge supply");
  check(at_risk * c1 <= (confused - cross) * c + tol,
        "at-risk variables exceed the spare confused-check sockets");
  check(undecided * (c - c1 + 1) <= cross * c + tol,
        "undecided variables exceed the cross-edge budget");
}

LogPoly undecided_var_poly(int c, int c1) {
  return LogPoly::binomial_slice(c, c - c1 + 1, c);
}
LogPoly secured_var_poly(int c, int c1) {
  return LogPoly::binomial_slice(c, 0, c - c1);
}
LogPoly at_risk_var_poly(int c, int c1) {
  return LogPoly::binomial_slice(c, c1, c);
}
LogPoly safe_var_poly(int c, int c1) {
  return LogPoly::binomial_slice(c, 0, c1 - 1);
}
LogPoly suspect_check_poly(int d, int t) {
  return LogPoly::binomial_slice(d, t + 1, d);
}
LogPoly helpful_check_poly(int d, int t) {
  return LogPoly::binomial_slice(d, 0, t);
}

double matching_exponent(const PartitionFractions& point,
                         const BoundParams& params) {
  params.validate();
  const ClassPolys polys = build_polys(params);
  const double c = params.c, d = params.d;
  const double alpha = nonneg(point.corrupt, "corrupt");
  const double g = nonneg(point.undecided, "undecided");
  const double dl = nonneg(point.at_risk, "at_risk");
  const double ph = nonneg(point.confused, "confused");
  const double om = nonneg(point.cross, "cross");
  const double tol = params.saddle_tol;

  const double t1 = saddle_point_bound2(polys.undecided, g, polys.secured,
                                        nonneg(alpha - g, "corrupt-undecided"),
                                        om * c, tol)
                        .value;
  const double t2 =
      saddle_point_bound2(polys.at_risk, dl, polys.safe,
                          nonneg(1 - alpha - dl, "correct-at_risk"),
                          nonneg(ph - om, "confused-cross") * c, tol)
          .value;
  const double u1 = saddle_point_bound(polys.suspect, ph * c / d, om * c, tol).value;
  const double u2 = saddle_point_bound(polys.helpful, (1 - ph) * c / d,
                                       nonneg(alpha - om, "corrupt-cross") * c,
                                       tol)
                        .value;
  return t1 + t2 + u1 + u2;
}

double partition_exponent(const PartitionFractions& point,
                          const BoundParams& params) {
  const double rho = matching_exponent(point, params);
  if (rho == -kInf) return -kInf;
  const double alpha = point.corrupt;
  std::array<double, 3> var_parts = {point.undecided,
                                     nonneg(alpha - point.undecided, "corrupt"),
                                     point.at_risk};
  std::array<double, 3> socket_parts = {
      point.cross, nonneg(alpha - point.cross, "corrupt-cross"),
      nonneg(point.confused - point.cross, "confused-cross")};
  return entropy(var_parts) + (double(params.c) / params.d) *
             binary_entropy(point.confused) +
         rho - params.c * entropy(socket_parts);
}

double partition_exponent_random(const PartitionFractions& point,
                                 const BoundParams& params) {
  const double psi = partition_exponent(point, params);
  if (psi == -kInf) return -kInf;
  return psi - binary_entropy(point.corrupt);
}

ExponentMax max_partition_exponent(double alpha, const BoundParams& params,
                                   PatternModel model, double residual) {
  params.validate();
  if (!(alpha > 0 && alpha < 1)) {
    throw std::invalid_argument("corrupt fraction must lie in (0, 1)");
  }
  if (model == PatternModel::kRandom && !(residual >= 0 && residual <= 1)) {
    throw std::invalid_argument("residual fraction must lie in [0, 1]");
  }

  const ClassPolys polys = build_polys(params);
  const bool random_model = model == PatternModel::kRandom;
  const double coupling = random_model ? residual : alpha;
  PointEvaluator ev(params, polys, alpha, coupling, random_model);

  ExponentMax best;
  best.witness.corrupt = alpha;
  std::vector<GridCell> top;

  auto consider = [&](double cross, double confused) {
    const InnerMax r = ev.eval(cross, confused);
    if (r.value == -kInf) return -kInf;
    if (r.value > best.value) {
      best.value = r.value;
      best.witness = {alpha, r.undecided, r.at_risk, confused, cross};
    }
    if (params.refine_starts > 0) {
      if (top.size() < static_cast<size_t>(params.refine_starts)) {
        top.push_back({r.value, cross, confused});
      } else {
        auto worst = std::min_element(
            top.begin(), top.end(),
            [](const GridCell& a, const GridCell& b) { return a.value < b.value; });
        if (r.value > worst->value) *worst = {r.value, cross, confused};
      }
    }
    return r.value;
  };

  const double t = params.t, d = params.d;
  auto confused_range = [&](double cross) {
    const double hi = std::min(
        {cross * d / (t + 1), 1 - d * (alpha - cross) / t,
         params.confused_cap, 1.0});
    return std::pair<double, double>(cross, hi);
  };
  auto cross_range = [&](double confused) {
    const double lo =
        std::max({confused * (t + 1) / d, alpha - t * (1 - confused) / d, 0.0});
    const double hi = std::min({alpha, confused, params.cross_cap});
    return std::pair<double, double>(lo, hi);
  };

  ev.reset_hints();
  consider(0.0, 0.0);

  // Typical one-round statistics of a random weight-alpha pattern: a check
  // is confused when more than t of its d neighbours are corrupt, and a
  // corrupt socket crosses into a confused check when at least t of the
  // other d-1 neighbours are corrupt. Any deviation from this point pays
  // large-deviation cost, so the true maximizer sits exactly here whenever
  // the point is feasible; evaluating it directly keeps the maximization
  // sharp where a grid cannot resolve the peak.
  {
    const LogPoly check_tail =
        LogPoly::binomial_slice(params.d, params.t + 1, params.d);
    const LogPoly edge_tail =
        LogPoly::binomial_slice(params.d - 1, params.t, params.d - 1);
    // Clamp against the one-ulp overshoot a long log-sum-exp can leave on a
    // tail probability; the candidate must stay inside the feasible simplex.
    const double confused_typ =
        std::min(1.0, binomial_upper_tail(check_tail, params.d, alpha));
    const double cross_typ =
        std::min(alpha,
                 alpha * binomial_upper_tail(edge_tail, params.d - 1, alpha));
    if (cross_typ <= params.cross_cap && confused_typ <= params.confused_cap) {
      ev.reset_hints();
      consider(cross_typ, confused_typ);
    }
  }

  const double cross_hi = std::min(alpha, params.cross_cap);
  if (cross_hi > 0) {
    const int G = params.grid_cross, K = params.grid_confused;
    for (int j = 0; j < G; ++j) {
      const double w = cross_hi * std::pow(1e-6, double(G - 1 - j) / (G - 1));
      const auto [f_lo, f_hi] = confused_range(w);
      if (f_hi < f_lo) continue;
      ev.reset_hints();
      for (int k = 0; k < K; ++k) {
        const double s = k == 0  ? 0.0
                         : K > 2 ? std::pow(1e-6, double(K - 1 - k) / (K - 2))
                                 : 1.0;
        consider(w, f_lo + (f_hi - f_lo) * s);
      }
    }

    // Polish the best grid cells by coordinate ascent (on a copy: consider()
    // keeps maintaining the running top list).
    std::vector<GridCell> starts = top;
    std::sort(starts.begin(), starts.end(),
              [](const GridCell& a, const GridCell& b) { return a.value > b.value; });
    for (const GridCell& cell : starts) {
      double w = cell.cross, f = cell.confused;
      for (int round = 0; round < 3; ++round) {
        const auto [w_lo, w_hi] = cross_range(f);
        if (w_lo < w_hi) {
          ev.reset_hints();
          w = golden_max(w_lo, w_hi, 40,
                         [&](double x) { return consider(x, f); });
        }
        const auto [f_lo, f_hi] = confused_range(w);
        if (f_lo < f_hi) {
          ev.reset_hints();
          f = golden_max(f_lo, f_hi, 40,
                         [&](double x) { return consider(w, x); });
        }
      }
    }
  }
  return best;
}

bool guarantee_conditions_hold(const BoundParams& params) {
  return params.c1 >= 2 && (params.c - params.c1 + 1) * params.t > params.t + 1;
}

void require_guarantee_conditions(const BoundParams& params) {
  if (params.c1 < 2) {
    throw ConditionError(
        "flip threshold below 2: a single confused check could flip a "
        "correct variable, so no contraction guarantee holds");
  }
  if ((params.c - params.c1 + 1) * params.t <= params.t + 1) {
    throw ConditionError(
        "(c - c1 + 1) * t must exceed t + 1: undecided variables can "
        "otherwise sustain the corrupt set and the exponent never certifies");
  }
}

RadiusBracket worst_case_radius_bracket(const BoundParams& params) {
  params.validate();
  require_guarantee_conditions(params);
  auto f = [&](double a) {
    return max_partition_exponent(a, params, PatternModel::kAdversarial).value;
  };

  double lo = params.scan_start;
  if (!(f(lo) < 0)) {
    throw ConditionError(
        "partition exponent is not negative at the smallest scanned corrupt "
        "fraction; no positive worst-case radius certified");
  }
  double hi = kNaN;
  for (double a = lo; a < 0.5;) {
    const double next = std::min(2 * a, 0.5);
    if (f(next) >= 0) {
      hi = next;
      break;
    }
    lo = next;
    a = next;
  }
  if (!std::isfinite(hi)) {
    throw ConditionError(
        "partition exponent stays negative up to one half; no sign change "
        "to bracket");
  }
  while (hi / lo > 1 + params.root_rel_tol) {
    const double mid = std::sqrt(lo * hi);
    if (f(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

double worst_case_radius(const BoundParams& params) {
  return worst_case_radius_bracket(params).certified;
}

double random_error_radius(const BoundParams& params, double target_fraction) {
  params.validate();
  require_guarantee_conditions(params);
  if (!(target_fraction > 0 && target_fraction <= 0.5)) {
    throw std::invalid_argument("target fraction must lie in (0, 0.5]");
  }
  // The exact random-model exponent is <= 0 everywhere and equals zero for
  // every corrupt fraction whose typical one-round statistics already carry
  // the required coupled mass, so certification demands clearance below
  // -margin (which also makes the failure bound decay exponentially). The
  // margin is normalized by t(t+1)/d; see BoundParams::random_margin_scale.
  const double margin = params.random_margin_scale * params.t *
                        (params.t + 1) / params.d;
  auto certifies = [&](double a) {
    return max_partition_exponent(a, params, PatternModel::kRandom,
                                  target_fraction)
               .value <= -margin;
  };

  double hi = 0.5;
  double lo = kNaN;
  for (double a = 0.5 * 0.8; a > target_fraction; a *= 0.8) {
    if (certifies(a)) {
      lo = a;
      break;
    }
    hi = a;
  }
  if (!std::isfinite(lo)) {
    // A random pattern at the target fraction itself is covered by the
    // adversarial guarantee; certify the target directly.
    if (certifies(target_fraction)) return target_fraction;
    throw ConditionError(
        "random-pattern exponent never clears the certification margin, "
        "even at the target fraction");
  }
  while (hi / lo > 1 + params.root_rel_tol) {
    const double mid = std::sqrt(lo * hi);
    if (certifies(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

int select_flip_threshold(int c, int d, int t, bool binary_alphabet) {
  std::vector<int> candidates;
  for (int c1 = 2; c1 <= c; ++c1) {
    if ((c - c1 + 1) * t <= t + 1) continue;
    if (!binary_alphabet && 2 * c1 <= c) continue;
    candidates.push_back(c1);
  }
  if (candidates.empty()) {
    throw ConditionError(
        "no flip threshold satisfies the convergence guarantee for these "
        "degrees");
  }

  int best_c1 = -1;
  double best_radius = -1;
  for (int c1 : candidates) {
    BoundParams coarse;
    coarse.c = c;
    coarse.d = d;
    coarse.t = t;
    coarse.c1 = c1;
    coarse.grid_cross = 48;
    coarse.grid_confused = 32;
    coarse.refine_starts = 4;
    coarse.root_rel_tol = 0.03;
    double radius = -1;
    try {
      radius = worst_case_radius(coarse);
    } catch (const ConditionError&) {
      continue;  // this threshold certifies no positive radius
    }
    if (radius > best_radius) {
      best_radius = radius;
      best_c1 = c1;
    }
  }
  if (best_c1 < 0) {
    throw ConditionError(
        "no admissible flip threshold certifies a positive radius");
  }
  return best_c1;
}

}  // namespace gldpc
