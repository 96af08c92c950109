#include "gldpc/numerics/logpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gldpc {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Relative weight below which window terms stop contributing to double
// precision sums.
constexpr double kTermCutoff = 1e-18;

double log_binomial(int n, int j) {
  return std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
}

}  // namespace

LogPoly::LogPoly(int lo, std::vector<double> logc, int slice_n)
    : lo_(lo), logc_(std::move(logc)), slice_n_(slice_n) {}

LogPoly LogPoly::from_coefficients(std::span<const double> coefficients) {
  int lo = -1;
  int hi = -1;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const double cj = coefficients[j];
    if (cj < 0 || !std::isfinite(cj)) {
      throw std::invalid_argument(
          "LogPoly: coefficients must be finite and nonnegative");
    }
    if (cj > 0) {
      if (lo < 0) lo = static_cast<int>(j);
      hi = static_cast<int>(j);
    }
  }
  if (lo < 0) throw std::invalid_argument("LogPoly: zero polynomial");
  std::vector<double> logc(hi - lo + 1, kNegInf);
  for (int j = lo; j <= hi; ++j) {
    if (coefficients[j] > 0) logc[j - lo] = std::log(coefficients[j]);
  }
  return LogPoly(lo, std::move(logc), -1);
}

LogPoly LogPoly::binomial_slice(int n, int lo, int hi) {
  if (n < 0 || lo < 0 || lo > hi || hi > n) {
    throw std::invalid_argument("LogPoly: invalid binomial slice");
  }
  std::vector<double> logc(hi - lo + 1);
  for (int j = lo; j <= hi; ++j) logc[j - lo] = log_binomial(n, j);
  return LogPoly(lo, std::move(logc), n);
}

double LogPoly::log_coefficient(int degree) const {
  if (degree < lo_ || degree > max_degree()) return kNegInf;
  return logc_[degree - lo_];
}

double LogPoly::coefficient(int degree) const {
  const double lc = log_coefficient(degree);
  return lc == kNegInf ? 0.0 : std::exp(lc);
}

LogPoly::Tilt LogPoly::tilt(double u, bool need_log_value) const {
  if (single_term()) {
    return {static_cast<double>(lo_), 0.0,
            need_log_value ? logc_[0] + lo_ * u : kNaN};
  }
  return slice_n_ >= 0 ? tilt_slice(u, need_log_value)
                       : tilt_generic(u, need_log_value);
}

LogPoly::Tilt LogPoly::tilt_slice(double u, bool need_log_value) const {
  const int n = slice_n_;
  const int hi = max_degree();
  const double x = std::exp(u);

  // Mode of the tilted binomial terms, computed without overflow for huge x.
  const double mode_real =
      x > 1 ? (n + 1.0) / (1.0 + 1.0 / x) : x * (n + 1.0) / (1.0 + x);
  int jm = static_cast<int>(mode_real);
  jm = std::clamp(jm, lo_, hi);

  // Terms decay geometrically away from the mode; accumulate relative
  // weights outward until they stop mattering.  Sums are centered at the
  // mode to keep the variance well conditioned.
  double s0 = 1, s1 = 0, s2 = 0;
  double w = 1;
  for (int j = jm; j < hi; ++j) {
    w *= x * (n - j) / (j + 1.0);
    if (w < kTermCutoff) break;
    const double dj = j + 1.0 - jm;
    s0 += w;
    s1 += w * dj;
    s2 += w * dj * dj;
  }
  w = 1;
  for (int j = jm; j > lo_; --j) {
    w *= j / (x * (n - j + 1.0));
    if (w < kTermCutoff) break;
    const double dj = j - 1.0 - jm;
    s0 += w;
    s1 += w * dj;
    s2 += w * dj * dj;
  }

  const double mean_off = s1 / s0;
  double var = s2 / s0 - mean_off * mean_off;
  if (var < 0) var = 0;
  Tilt out{jm + mean_off, var, kNaN};
  if (need_log_value) {
    out.log_value = logc_[jm - lo_] + static_cast<double>(jm) * u + std::log(s0);
  }
  return out;
}

LogPoly::Tilt LogPoly::tilt_generic(double u, bool need_log_value) const {
  const int hi = max_degree();
  int best = lo_;
  double best_val = kNegInf;
  for (int j = lo_; j <= hi; ++j) {
    const double lc = logc_[j - lo_];
    if (lc == kNegInf) continue;
    const double v = lc + j * u;
    if (v > best_val) {
      best_val = v;
      best = j;
    }
  }
  double s0 = 0, s1 = 0, s2 = 0;
  for (int j = lo_; j <= hi; ++j) {
    const double lc = logc_[j - lo_];
    if (lc == kNegInf) continue;
    const double w = std::exp(lc + j * u - best_val);
    const double dj = static_cast<double>(j) - best;
    s0 += w;
    s1 += w * dj;
    s2 += w * dj * dj;
  }
  const double mean_off = s1 / s0;
  double var = s2 / s0 - mean_off * mean_off;
  if (var < 0) var = 0;
  return {best + mean_off, var,
          need_log_value ? best_val + std::log(s0) : kNaN};
}

}  // namespace gldpc
