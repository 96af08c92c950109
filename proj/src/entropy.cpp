#include "gldpc/numerics/entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace gldpc {
namespace {

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

constexpr double kMassSlack = 1e-12;

}  // namespace

double entropy(std::span<const double> masses) {
  double sum = 0;
  double acc = 0;
  for (double m : masses) {
    if (m < -kMassSlack || !std::isfinite(m)) {
      throw std::invalid_argument("entropy: negative mass");
    }
    if (m < 0) m = 0;
    sum += m;
    acc -= xlogx(m);
  }
  if (sum > 1 + kMassSlack) {
    throw std::invalid_argument("entropy: masses sum beyond 1");
  }
  acc -= xlogx(std::max(0.0, 1.0 - sum));
  return acc;
}

double binary_entropy(double p) {
  const double masses[1] = {p};
  return entropy(masses);
}

double log1p_exp(double u) {
  if (u > 0) return u + std::log1p(std::exp(-u));
  return std::log1p(std::exp(u));
}

MultinomialBounds log_multinomial(long long n,
                                  std::span<const long long> parts) {
  if (n < 0) throw std::invalid_argument("log_multinomial: n < 0");
  long long used = 0;
  std::vector<long long> nonzero;
  nonzero.reserve(parts.size());
  for (long long p : parts) {
    if (p < 0) throw std::invalid_argument("log_multinomial: negative part");
    used += p;
    if (p > 0) nonzero.push_back(p);
  }
  if (used > n) throw std::invalid_argument("log_multinomial: parts exceed n");
  long long remainder = n - used;
  // An empty remainder would break the Stirling forms; folding one listed
  // part into the remainder leaves the coefficient itself unchanged.
  if (remainder == 0 && !nonzero.empty()) {
    remainder = nonzero.back();
    nonzero.pop_back();
  }

  MultinomialBounds out{};

  double exact = std::lgamma(static_cast<double>(n) + 1) -
                 std::lgamma(static_cast<double>(remainder) + 1);
  for (long long p : nonzero) exact -= std::lgamma(static_cast<double>(p) + 1);
  out.exact = exact;

  // n h(parts/n) written with exact integers: n log n - sum n_j log n_j.
  double nh = xlogx(static_cast<double>(n)) -
              xlogx(static_cast<double>(remainder));
  for (long long p : nonzero) nh -= xlogx(static_cast<double>(p));
  out.upper_entropy = nh;

  const auto i = static_cast<double>(nonzero.size());
  const double log_2pi = std::log(2 * std::numbers::pi);
  if (n == 0 || nonzero.empty()) {
    // C(n; nothing) = 1; the Stirling forms still bracket it.
    out.upper_stirling = nh + 1.0 / 12.0;
    out.lower_stirling = nh - (i + 1) / 12.0;
    return out;
  }

  // Upper: (2pi)^(-i/2) e^(1/12) sqrt(n / (prod parts * remainder)) e^(nh).
  double log_prod_all = std::log(static_cast<double>(remainder));
  double log_prod_listed = 0;
  for (long long p : nonzero) {
    log_prod_all += std::log(static_cast<double>(p));
    log_prod_listed += std::log(static_cast<double>(p));
  }
  out.upper_stirling = nh - (i / 2) * log_2pi + 1.0 / 12.0 +
                       0.5 * (std::log(static_cast<double>(n)) - log_prod_all);

  // Lower: (2pi)^(-i/2) e^(-(i+1)/12) e^(nh) / sqrt(prod parts).
  out.lower_stirling =
      nh - (i / 2) * log_2pi - (i + 1) / 12.0 - 0.5 * log_prod_listed;

  return out;
}

}  // namespace gldpc
