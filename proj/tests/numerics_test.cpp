#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <stdexcept>

#include "doctest.h"

#include "gldpc/crc32.hpp"
#include "gldpc/numerics/entropy.hpp"
#include "gldpc/numerics/gv.hpp"
#include "gldpc/numerics/logpoly.hpp"
#include "gldpc/numerics/saddle.hpp"
#include "gldpc/rng.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

// Plain-double polynomial arithmetic used as the oracle for the log-domain
// saddle machinery; fine for the small degrees and coefficients tested.
std::vector<double> poly_mul(const std::vector<double>& a,
                             const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<double> poly_pow(std::vector<double> base, int exponent) {
  std::vector<double> out = {1.0};
  for (int k = 0; k < exponent; ++k) out = poly_mul(out, base);
  return out;
}

std::vector<double> random_poly(gldpc::Rng& rng) {
  const int degree = 1 + static_cast<int>(rng.below(8));
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
  bool any = false;
  for (auto& value : coeffs) {
    value = rng.below(4) == 0 ? 0.0 : 10.0 * rng.unit();
    any = any || value > 0;
  }
  if (!any) coeffs.back() = 1.0;
  return coeffs;
}

double h_q(double x, int q) {
  const double logq = std::log(static_cast<double>(q));
  auto xlog = [](double v) { return v > 0 ? v * std::log(v) : 0.0; };
  return (x * std::log(q - 1.0) - xlog(x) - xlog(1 - x)) / logq;
}

}  // namespace

TEST_CASE("binomial slices hold exact log-binomial coefficients") {
  for (int n : {1, 5, 30, 127, 1023}) {
    const gldpc::LogPoly full = gldpc::LogPoly::binomial_slice(n, 0, n);
    CHECK(full.min_degree() == 0);
    CHECK(full.max_degree() == n);
    for (int k = 0; k <= n; k += std::max(1, n / 17)) {
      CHECK(full.log_coefficient(k) ==
            doctest::Approx(log_binomial(n, k)).epsilon(1e-12));
    }
    CHECK(full.log_coefficient(-1) == -kInf);
    CHECK(full.log_coefficient(n + 1) == -kInf);
  }
  const gldpc::LogPoly tail = gldpc::LogPoly::binomial_slice(10, 4, 7);
  CHECK(tail.min_degree() == 4);
  CHECK(tail.max_degree() == 7);
  CHECK(tail.log_coefficient(3) == -kInf);
  CHECK(tail.coefficient(5) == doctest::Approx(252.0));
}

TEST_CASE("coefficient polynomials round-trip and reject bad input") {
  const std::vector<double> coeffs = {0.0, 0.0, 5.0, 0.0, 2.5};
  const gldpc::LogPoly poly = gldpc::LogPoly::from_coefficients(coeffs);
  CHECK(poly.min_degree() == 2);
  CHECK(poly.max_degree() == 4);
  CHECK_FALSE(poly.single_term());
  CHECK(poly.coefficient(2) == doctest::Approx(5.0));
  CHECK(poly.coefficient(3) == 0.0);
  CHECK(poly.coefficient(4) == doctest::Approx(2.5));

  const std::vector<double> single = {0.0, 7.0};
  CHECK(gldpc::LogPoly::from_coefficients(single).single_term());

  const std::vector<double> negative = {1.0, -0.5};
  CHECK_THROWS_AS(gldpc::LogPoly::from_coefficients(negative),
                  std::invalid_argument);
}

TEST_CASE("tilted degree statistics: increasing mean, exact log value") {
  gldpc::Rng rng(100);
  for (int trial = 0; trial < 50; ++trial) {
    const auto coeffs = random_poly(rng);
    const gldpc::LogPoly poly = gldpc::LogPoly::from_coefficients(coeffs);
    double previous_mean = -kInf;
    for (double u = -4; u <= 4; u += 0.5) {
      const auto tilt = poly.tilt(u, true);
      CHECK(tilt.mean >= previous_mean - 1e-9);
      CHECK(tilt.var >= -1e-9);
      previous_mean = tilt.mean;

      double direct = 0;
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        direct += coeffs[j] * std::exp(static_cast<double>(j) * u);
      }
      CHECK(tilt.log_value ==
            doctest::Approx(std::log(direct)).epsilon(1e-9));
    }
  }
}

TEST_CASE("entropy values and guards") {
  using gldpc::binary_entropy;
  using gldpc::entropy;
  const std::vector<double> half = {0.5};
  CHECK(entropy(half) == doctest::Approx(std::log(2.0)));
  const std::vector<double> skewed = {0.2, 0.3};
  CHECK(entropy(skewed) ==
        doctest::Approx(-(0.2 * std::log(0.2) + 0.3 * std::log(0.3) +
                          0.5 * std::log(0.5))));
  const std::vector<double> pointmass = {0.0, 1.0};
  CHECK(entropy(pointmass) == 0.0);

  CHECK(binary_entropy(0.5) == doctest::Approx(std::log(2.0)));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)));

  const std::vector<double> negative = {-0.1};
  CHECK_THROWS_AS(entropy(negative), std::invalid_argument);
  const std::vector<double> overfull = {0.6, 0.6};
  CHECK_THROWS_AS(entropy(overfull), std::invalid_argument);
}

TEST_CASE("log1p_exp stays accurate across magnitudes") {
  CHECK(gldpc::log1p_exp(0.0) == doctest::Approx(std::log(2.0)));
  CHECK(gldpc::log1p_exp(1000.0) == doctest::Approx(1000.0));
  CHECK(gldpc::log1p_exp(-1000.0) == doctest::Approx(0.0).epsilon(1e-300));
  CHECK(gldpc::log1p_exp(-3.0) == doctest::Approx(std::log1p(std::exp(-3.0))));
}

TEST_CASE("multinomial bounds sandwich the exact coefficient") {
  gldpc::Rng rng(55);
  int checked = 0;
  int spread = 0;
  while (checked < 1000) {
    const long long n = 2 + static_cast<long long>(rng.below(199));
    const int count = 1 + static_cast<int>(rng.below(4));
    std::vector<long long> parts;
    long long used = 0;
    for (int i = 0; i < count; ++i) {
      const long long part =
          static_cast<long long>(rng.below(static_cast<std::uint64_t>(
              std::max<long long>(1, n - used + 1))));
      parts.push_back(part);
      used += part;
    }
    if (used > n) continue;
    const auto bounds = gldpc::log_multinomial(n, parts);

    double direct = std::lgamma(static_cast<double>(n) + 1);
    long long listed = 0;
    for (long long part : parts) {
      direct -= std::lgamma(static_cast<double>(part) + 1);
      listed += part;
    }
    direct -= std::lgamma(static_cast<double>(n - listed) + 1);
    CHECK(bounds.exact == doctest::Approx(direct).epsilon(1e-10));

    CHECK(bounds.lower_stirling <= bounds.exact + 1e-9);
    CHECK(bounds.exact <= bounds.upper_stirling + 1e-9);
    CHECK(bounds.exact <= bounds.upper_entropy + 1e-9);
    // The Stirling form refines the bare entropy bound only when the mass
    // spreads over at least two categories (counting the implicit
    // remainder); a concentrated multinomial equals 1 while the Stirling
    // correction still adds e^{1/12n}.
    int categories = (n - listed > 0) ? 1 : 0;
    for (long long part : parts) categories += (part > 0);
    if (categories >= 2) {
      CHECK(bounds.upper_stirling <= bounds.upper_entropy + 1e-9);
      ++spread;
    }
    ++checked;
  }
  CHECK(spread >= 900);  // the generator rarely concentrates everything

  const std::vector<long long> bad = {-1};
  CHECK_THROWS_AS(gldpc::log_multinomial(10, bad), std::invalid_argument);
  const std::vector<long long> over = {6, 6};
  CHECK_THROWS_AS(gldpc::log_multinomial(10, over), std::invalid_argument);
}

TEST_CASE("saddle bound dominates every exact power coefficient") {
  gldpc::Rng rng(808);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto coeffs = random_poly(rng);
    const gldpc::LogPoly poly = gldpc::LogPoly::from_coefficients(coeffs);
    const int exponent = 1 + static_cast<int>(rng.below(4));
    const auto power = poly_pow(coeffs, exponent);
    const int k = static_cast<int>(rng.below(power.size()));
    const auto bound = gldpc::saddle_point_bound(poly, exponent, k);
    if (power[static_cast<std::size_t>(k)] > 0) {
      CHECK(std::log(power[static_cast<std::size_t>(k)]) <=
            bound.value + 1e-9);
    }
    // The objective evaluated at x = 1 is always an admissible point.
    const double at_one = exponent * poly.tilt(0.0, true).log_value;
    CHECK(bound.value <= at_one + 1e-9);
  }
}

TEST_CASE("saddle bound boundary behavior") {
  const std::vector<double> coeffs = {2.0, 0.0, 3.0};  // 2 + 3x^2
  const gldpc::LogPoly poly = gldpc::LogPoly::from_coefficients(coeffs);

  // k below the attainable degree range: the infimum runs to x -> 0.
  const auto at_zero = gldpc::saddle_point_bound(poly, 2.0, 0.0);
  CHECK(at_zero.value == doctest::Approx(2 * std::log(2.0)));
  // k at the top of the range: x -> infinity leaves only the lead term.
  const auto at_top = gldpc::saddle_point_bound(poly, 2.0, 4.0);
  CHECK(at_top.value == doctest::Approx(2 * std::log(3.0)));
  // k beyond the range: unbounded below.
  const auto beyond = gldpc::saddle_point_bound(poly, 2.0, 5.0);
  CHECK(beyond.value == -kInf);

  const std::vector<double> shifted = {0.0, 1.0};  // x
  const gldpc::LogPoly monomial = gldpc::LogPoly::from_coefficients(shifted);
  CHECK(gldpc::saddle_point_bound(monomial, 3.0, 0.0).value == -kInf);

  CHECK_THROWS_AS(gldpc::saddle_point_bound(poly, -1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("two-factor saddle bound: reduction and validity") {
  gldpc::Rng rng(909);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ca = random_poly(rng);
    const auto cb = random_poly(rng);
    const gldpc::LogPoly fa = gldpc::LogPoly::from_coefficients(ca);
    const gldpc::LogPoly fb = gldpc::LogPoly::from_coefficients(cb);
    const int la = 1 + static_cast<int>(rng.below(3));
    const int lb = 1 + static_cast<int>(rng.below(3));
    const auto product = poly_mul(poly_pow(ca, la), poly_pow(cb, lb));
    const int k = static_cast<int>(rng.below(product.size()));

    const auto two = gldpc::saddle_point_bound2(fa, la, fb, lb, k);
    if (product[static_cast<std::size_t>(k)] > 0) {
      CHECK(std::log(product[static_cast<std::size_t>(k)]) <=
            two.value + 1e-9);
    }

    // Zero weight on the second factor reduces to the single-factor bound.
    const auto reduced = gldpc::saddle_point_bound2(fa, la, fb, 0.0,
                                                    std::min<int>(k, la * 8));
    const auto single = gldpc::saddle_point_bound(fa, la,
                                                  std::min<int>(k, la * 8));
    if (std::isfinite(single.value)) {
      CHECK(reduced.value == doctest::Approx(single.value).epsilon(1e-8));
    } else {
      CHECK(reduced.value == single.value);
    }

    // A warm-start hint must not change the answer.
    const auto hinted = gldpc::saddle_point_bound2(fa, la, fb, lb, k, 1e-10,
                                                   0.37);
    if (std::isfinite(two.value)) {
      CHECK(hinted.value == doctest::Approx(two.value).epsilon(1e-7));
    } else {
      CHECK(hinted.value == two.value);
    }
  }
}

TEST_CASE("guaranteed relative distance solves the rate equation") {
  struct Pin {
    double rate;
    int q;
    double expected;
  };
  // Reference points computed independently by bisecting the alphabet-size
  // entropy (200 halvings in extended precision).
  const std::vector<Pin> pins = {{0.2, 31, 0.61125753},
                                 {0.2, 41, 0.62617925},
                                 {0.5, 2, 0.11002786}};
  for (const auto& pin : pins) {
    const double delta = gldpc::gilbert_varshamov_distance(pin.rate, pin.q);
    CHECK(delta == doctest::Approx(pin.expected).epsilon(1e-4));
    CHECK(h_q(delta, pin.q) == doctest::Approx(1 - pin.rate).epsilon(1e-4));
    CHECK(delta > 0);
    CHECK(delta < 1.0 - 1.0 / pin.q);
  }
  CHECK(gldpc::gilbert_varshamov_distance(0.9, 31) <
        gldpc::gilbert_varshamov_distance(0.1, 31));
  CHECK_THROWS_AS(gldpc::gilbert_varshamov_distance(0.0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(gldpc::gilbert_varshamov_distance(1.0, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(gldpc::gilbert_varshamov_distance(0.5, 1),
                  std::invalid_argument);
}

TEST_CASE("crc32 matches the standard check values") {
  CHECK(gldpc::crc32("") == 0u);
  CHECK(gldpc::crc32("123456789") == 0xCBF43926u);
  CHECK(gldpc::crc32("The quick brown fox jumps over the lazy dog") ==
        0x414FA339u);
  CHECK(gldpc::crc32("a") != gldpc::crc32("b"));
}
