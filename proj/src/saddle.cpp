#include "gldpc/numerics/saddle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gldpc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// log x beyond +-745 leaves double range for x; the tilted means have long
// since saturated there.
constexpr double kUMax = 745.0;

struct Term {
  const LogPoly* poly;
  double weight;
};

// Minimizes sum_i L_i log F_i(e^u) - k u over u; the derivative is
// sum_i L_i mean_i(u) - k, increasing in u with slope sum_i L_i var_i(u).
SaddleResult solve(const Term* terms, int count, double k, double tol_u,
                   double u_hint) {
  for (int i = 0; i < count; ++i) {
    if (terms[i].weight < 0 || !std::isfinite(terms[i].weight)) {
      throw std::invalid_argument("saddle_point_bound: weights must be >= 0");
    }
  }
  if (k < 0 || !std::isfinite(k)) {
    throw std::invalid_argument("saddle_point_bound: k must be finite, >= 0");
  }

  Term active[2];
  int n_active = 0;
  for (int i = 0; i < count; ++i) {
    if (terms[i].weight > 0) active[n_active++] = terms[i];
  }
  if (n_active == 0) {
    if (k == 0) return {0.0, 1.0};
    return {-kInf, kInf};  // -k log x alone is unbounded below
  }

  double m_min = 0, m_max = 0, v_lo = 0, v_hi = 0;
  for (int i = 0; i < n_active; ++i) {
    m_min += active[i].weight * active[i].poly->min_degree();
    m_max += active[i].weight * active[i].poly->max_degree();
    v_lo += active[i].weight * active[i].poly->log_coefficient(
                                   active[i].poly->min_degree());
    v_hi += active[i].weight * active[i].poly->log_coefficient(
                                   active[i].poly->max_degree());
  }

  const double btol = 1e-9 * std::max({1.0, std::abs(k), std::abs(m_max)});
  if (k < m_min - btol) return {-kInf, 0.0};
  if (k <= m_min + btol) return {v_lo, 0.0};
  if (k > m_max + btol) return {-kInf, kInf};
  if (k >= m_max - btol) return {v_hi, kInf};

  auto slope = [&](double u, double* var_out) {
    double m = 0, v = 0;
    for (int i = 0; i < n_active; ++i) {
      const auto t = active[i].poly->tilt(u);
      m += active[i].weight * t.mean;
      v += active[i].weight * t.var;
    }
    if (var_out) *var_out = v;
    return m - k;
  };

  // Bracket a sign change of the slope, expanding geometrically from the
  // starting point.
  double u0 = std::isfinite(u_hint) ? u_hint : 0.0;
  double var = 0;
  double g0 = slope(u0, &var);
  double u_lo, u_hi;
  if (g0 == 0) {
    u_lo = u_hi = u0;
  } else if (g0 > 0) {
    u_hi = u0;
    double step = 1;
    for (;;) {
      u_lo = u_hi - step;
      if (u_lo < -kUMax) {
        // The mean saturated before crossing k; the infimum is the x -> 0
        // boundary value.
        return {v_lo, 0.0};
      }
      if (slope(u_lo, nullptr) <= 0) break;
      u_hi = u_lo;
      step *= 2;
    }
  } else {
    u_lo = u0;
    double step = 1;
    for (;;) {
      u_hi = u_lo + step;
      if (u_hi > kUMax) return {v_hi, kInf};
      if (slope(u_hi, nullptr) >= 0) break;
      u_lo = u_hi;
      step *= 2;
    }
  }

  // Safeguarded Newton on the slope. With a finite hint the first probe is
  // the Newton step taken from the hint itself.
  double u = 0.5 * (u_lo + u_hi);
  if (g0 != 0 && var > 0) {
    const double first = u0 - g0 / var;
    if (first > u_lo && first < u_hi) u = first;
  }
  const double gtol = 1e-13 * std::max(1.0, std::abs(k));
  for (int iter = 0; iter < 200 && u_hi - u_lo > tol_u; ++iter) {
    if (u <= u_lo || u >= u_hi) u = 0.5 * (u_lo + u_hi);
    const double g = slope(u, &var);
    if (std::abs(g) <= gtol) break;
    if (g > 0) {
      u_hi = u;
    } else {
      u_lo = u;
    }
    u = (var > 0) ? u - g / var : 0.5 * (u_lo + u_hi);
  }
  if (u <= u_lo || u >= u_hi) u = 0.5 * (u_lo + u_hi);

  double value = -k * u;
  for (int i = 0; i < n_active; ++i) {
    value += active[i].weight * active[i].poly->tilt(u, true).log_value;
  }
  return {value, std::exp(u)};
}

}  // namespace

SaddleResult saddle_point_bound(const LogPoly& F, double L, double k,
                                double tol_u) {
  const Term terms[1] = {{&F, L}};
  return solve(terms, 1, k, tol_u, std::numeric_limits<double>::quiet_NaN());
}

SaddleResult saddle_point_bound2(const LogPoly& Fa, double La,
                                 const LogPoly& Fb, double Lb, double k,
                                 double tol_u, double u_hint) {
  const Term terms[2] = {{&Fa, La}, {&Fb, Lb}};
  return solve(terms, 2, k, tol_u, u_hint);
}

}  // namespace gldpc
