#include "gldpc/numerics/finite_length.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <stdexcept>

#include "gldpc/numerics/saddle.hpp"

namespace gldpc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kLogTwoPi = 1.8378770664093453;

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a > 0 ? (a + b - 1) / b : a / b;  // b > 0
}

// log of an upper bound on C(n; parts...) where the parts listed here
// exhaust n. Zero parts are dropped. The Stirling form sharpens the entropy
// form by the sqrt prefactor and is exact (zero) for a single part.
double log_count_upper(double n, std::initializer_list<double> parts,
                       CountBound variant) {
  double value = xlogx(n);
  double log_product = 0;
  int kept = 0;
  for (double p : parts) {
    if (p > 0) {
      value -= xlogx(p);
      log_product += std::log(p);
      ++kept;
    }
  }
  if (variant == CountBound::kEntropy || kept <= 1) return value;
  return value - 0.5 * (kept - 1) * kLogTwoPi + 1.0 / 12 +
         0.5 * (std::log(n) - log_product);
}

// log of a lower bound on C(n; listed..., rest): the entropy term minus the
// Stirling defect of the listed parts (the rest part's sqrt factor is
// conceded). Zero listed parts are dropped.
double log_count_lower(double n, std::initializer_list<double> listed,
                       double rest) {
  double value = xlogx(n) - xlogx(rest);
  double log_product = 0;
  int kept = 0;
  for (double p : listed) {
    if (p > 0) {
      value -= xlogx(p);
      log_product += std::log(p);
      ++kept;
    }
  }
  if (kept == 0) return 0.0;
  return value - 0.5 * kept * kLogTwoPi - (kept + 1) / 12.0 -
         0.5 * log_product;
}

// Exact log C(n; a, b, c, rest) by log-gamma.
double log_count_exact(std::int64_t n, std::int64_t a, std::int64_t b,
                       std::int64_t c, std::int64_t rest) {
  return std::lgamma(double(n) + 1) - std::lgamma(double(a) + 1) -
         std::lgamma(double(b) + 1) - std::lgamma(double(c) + 1) -
         std::lgamma(double(rest) + 1);
}

// Streaming log-sum-exp.
class LogSumAccumulator {
 public:
  void add(double log_term) {
    if (log_term == -kInf) return;
    if (log_term <= max_log_) {
      sum_ += std::exp(log_term - max_log_);
    } else {
      sum_ = sum_ * std::exp(max_log_ - log_term) + 1.0;
      max_log_ = log_term;
    }
  }
  double total() const {
    return sum_ > 0 ? std::exp(max_log_ + std::log(sum_))
                    : 0.0;  // empty sum
  }

 private:
  double max_log_ = -kInf;
  double sum_ = 0;
};

}  // namespace

std::vector<TailPoint> failure_tail_bound(std::int64_t block_length,
                                          const BoundParams& params,
                                          const TailOptions& options) {
  params.validate();
  const std::int64_t N = block_length;
  if (N < 2) throw std::invalid_argument("block length must be at least 2");
  if (options.weight_max < 0) {
    throw std::invalid_argument("weight_max must be non-negative");
  }
  if (options.weight_max == 0) return {};
  if (2 * options.weight_max > N) {
    throw std::invalid_argument("weight_max must not exceed half the block");
  }
  if (!(options.prune_nats > 0)) {
    throw std::invalid_argument("prune_nats must be positive");
  }

  const std::int64_t c = params.c, d = params.d, t = params.t, c1 = params.c1;
  const double J = double(N) * c / d;  // check count, possibly fractional
  const double tol = params.saddle_tol;

  const LogPoly undecided = undecided_var_poly(params.c, params.c1);
  const LogPoly secured = secured_var_poly(params.c, params.c1);
  const LogPoly at_risk = at_risk_var_poly(params.c, params.c1);
  const LogPoly safe = safe_var_poly(params.c, params.c1);
  const LogPoly suspect = suspect_check_poly(params.d, params.t);
  const LogPoly helpful = helpful_check_poly(params.d, params.t);

  std::vector<TailPoint> curve;
  double cumulative = 0;

  for (std::int64_t i = 1; i <= options.weight_max; ++i) {
    const std::int64_t ic = i * c;
    LogSumAccumulator acc;
    double stratum_max = -kInf;

    // Every loop level scans a sequence that is concave in its index (each
    // log-term is a sum of saddle infima of linear functions plus log-concave
    // count prefactors), hence unimodal. A level may therefore stop once its
    // current value falls prune_nats below the best value seen by that same
    // loop run: past the peak, the remaining tail contributes a vanishing
    // fraction of the stratum. Comparing against the within-loop best (never
    // a neighbour or a global maximum) keeps saddle warm-start jitter from
    // faking a descent while a sequence is still climbing.
    const std::int64_t ph_hi =
        std::min<std::int64_t>(ic / (t + 1), std::int64_t(std::floor(J - 1)));
    double u1_hint = kNaN, u2_hint = kNaN;
    double best_ph = -kInf;
    for (std::int64_t ph = 1; ph <= ph_hi; ++ph) {
      const std::int64_t om_lo = (t + 1) * ph;
      const std::int64_t om_hi = std::min(ic, ph * d);
      double best_om = -kInf;
      for (std::int64_t om = om_lo; om <= om_hi; ++om) {
        if (double(ic - om) > t * (J - ph)) continue;
        const std::int64_t cross_spare = ph * d - om;   // suspect -> correct
        const std::int64_t rest = (N - i) * c - cross_spare;
        if (rest < 0) continue;  // correct sockets cannot host the spares

        // Hoisted per (ph, om): the check-side saddles, the class-count
        // prefactor of the check split, and the matching denominator.
        const double u1 = saddle_point_bound2(suspect, double(ph), suspect,
                                              0.0, double(om), tol, u1_hint)
                              .value;
        if (u1 == -kInf) continue;
        const double u2 =
            saddle_point_bound2(helpful, J - ph, helpful, 0.0,
                                double(ic - om), tol, u2_hint)
                .value;
        if (u2 == -kInf) continue;
        const double count_checks =
            log_count_upper(J, {double(ph), J - ph}, options.count_bound);
        const double denom =
            options.denominator == MatchingDenominator::kExactLogGamma
                ? log_count_exact(N * c, om, ic - om, cross_spare,
                                  N * c - ic - cross_spare)
                : log_count_lower(double(N) * c,
                                  {double(om), double(ic - om),
                                   double(cross_spare)},
                                  double(rest));
        const double base = u1 + u2 + count_checks - denom;

        const std::int64_t g_lo =
            std::max<std::int64_t>(0, ceil_div(om - i * (c - c1), c1));
        const std::int64_t g_hi = std::min(i, om / (c - c1 + 1));
        double t1_hint = kNaN;
        double best_g = -kInf;
        for (std::int64_t g = g_lo; g <= g_hi; ++g) {
          const double t1 =
              saddle_point_bound2(undecided, double(g), secured, double(i - g),
                                  double(om), tol, t1_hint)
                  .value;
          if (t1 == -kInf) continue;
          const std::int64_t dl_lo = std::max<std::int64_t>(
              {0, i - g,
               ceil_div(cross_spare - (N - i) * (c1 - 1), c - c1 + 1)});
          const std::int64_t dl_hi = std::min(N - i, cross_spare / c1);
          if (dl_lo > dl_hi) continue;

          double t2_hint = kNaN;
          double best_dl = -kInf;
          for (std::int64_t dl = dl_lo; dl <= dl_hi; ++dl) {
            const double t2 =
                saddle_point_bound2(at_risk, double(dl), safe,
                                    double(N - i - dl), double(cross_spare),
                                    tol, t2_hint)
                    .value;
            if (t2 != -kInf) {
              const double count_vars = log_count_upper(
                  double(N),
                  {double(g), double(i - g), double(dl), double(N - i - dl)},
                  options.count_bound);
              const double term = base + t1 + t2 + count_vars;
              acc.add(term);
              stratum_max = std::max(stratum_max, term);
              if (term > best_dl) {
                best_dl = term;
              } else if (term < best_dl - options.prune_nats) {
                break;  // deep in this run's decaying tail
              }
            }
          }

          if (best_dl > best_g) {
            best_g = best_dl;
          } else if (best_dl < best_g - options.prune_nats) {
            break;
          }
        }

        // A cell with no feasible integer tuple is neutral: the feasible
        // region's lattice sections can have isolated gaps, so only a
        // genuinely evaluated cell may end the scan.
        if (best_g == -kInf) continue;
        if (best_g > best_om) {
          best_om = best_g;
        } else if (best_g < best_om - options.prune_nats) {
          break;
        }
      }

      if (best_om == -kInf) continue;
      if (best_om > best_ph) {
        best_ph = best_om;
      } else if (best_om < best_ph - options.prune_nats) {
        break;
      }
    }
    (void)best_ph;

    const double failure = acc.total();
    cumulative += failure;
    curve.push_back({i, failure, cumulative});
    if (options.stop_when_vacuous && cumulative >= 1) break;
  }
  return curve;
}

}  // namespace gldpc
