#include <cmath>
#include <limits>
#include <vector>

#include <stdexcept>

#include "doctest.h"

#include "gldpc/errors.hpp"
#include "gldpc/numerics/entropy.hpp"
#include "gldpc/numerics/exponents.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

gldpc::BoundParams example_params() {
  gldpc::BoundParams p;
  p.c = 4;
  p.d = 30;
  p.t = 3;
  p.c1 = 3;
  return p;
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

// log of sum_{j=lo}^{hi} C(n,j) e^(j u), via a max-shifted sum over lgamma
// binomials: an evaluation path fully separate from the library's tilted
// polynomial machinery.
double log_slice_value(int n, int lo, int hi, double u) {
  double peak = -kInf;
  for (int j = lo; j <= hi; ++j) peak = std::max(peak, log_binomial(n, j) + j * u);
  if (peak == -kInf) return -kInf;
  double sum = 0;
  for (int j = lo; j <= hi; ++j) {
    sum += std::exp(log_binomial(n, j) + j * u - peak);
  }
  return peak + std::log(sum);
}

struct Slice {
  int n, lo, hi;
};

// Grid minimization of  sum_i L_i log F_i(e^u) - k u  over u, refined twice
// around the best coarse cell.  Used as the independent check on the
// saddle-point values inside the matching exponent.
double grid_min(const std::vector<Slice>& slices,
                const std::vector<double>& weights, double k) {
  auto value = [&](double u) {
    double total = -k * u;
    for (std::size_t i = 0; i < slices.size(); ++i) {
      if (weights[i] == 0) continue;
      total += weights[i] *
               log_slice_value(slices[i].n, slices[i].lo, slices[i].hi, u);
    }
    return total;
  };
  double lo = -30, hi = 30, best_u = 0;
  for (int round = 0; round < 3; ++round) {
    double best = kInf;
    const int steps = 400;
    for (int i = 0; i <= steps; ++i) {
      const double u = lo + (hi - lo) * i / steps;
      const double v = value(u);
      if (v < best) {
        best = v;
        best_u = u;
      }
    }
    const double width = (hi - lo) / steps;
    lo = best_u - 2 * width;
    hi = best_u + 2 * width;
  }
  return value(best_u);
}

double xlogx(double v) { return v > 0 ? v * std::log(v) : 0.0; }

double entropy3(double a, double b, double c) {
  const double rest = 1 - a - b - c;
  return -(xlogx(a) + xlogx(b) + xlogx(c) + xlogx(rest));
}

double hb(double p) { return -(xlogx(p) + xlogx(1 - p)); }

}  // namespace

TEST_CASE("class enumerators are the expected binomial slices") {
  const int c = 5, c1 = 3, d = 12, t = 2;
  const gldpc::LogPoly undecided = gldpc::undecided_var_poly(c, c1);
  const gldpc::LogPoly secured = gldpc::secured_var_poly(c, c1);
  const gldpc::LogPoly at_risk = gldpc::at_risk_var_poly(c, c1);
  const gldpc::LogPoly safe = gldpc::safe_var_poly(c, c1);
  const gldpc::LogPoly suspect = gldpc::suspect_check_poly(d, t);
  const gldpc::LogPoly helpful = gldpc::helpful_check_poly(d, t);

  // A corrupt variable is undecided when at most c1-1 checks can help, i.e.
  // at least c-c1+1 of its edges sit on overwhelmed checks.
  CHECK(undecided.min_degree() == c - c1 + 1);
  CHECK(undecided.max_degree() == c);
  CHECK(secured.min_degree() == 0);
  CHECK(secured.max_degree() == c - c1);
  CHECK(at_risk.min_degree() == c1);
  CHECK(at_risk.max_degree() == c);
  CHECK(safe.min_degree() == 0);
  CHECK(safe.max_degree() == c1 - 1);
  CHECK(suspect.min_degree() == t + 1);
  CHECK(suspect.max_degree() == d);
  CHECK(helpful.min_degree() == 0);
  CHECK(helpful.max_degree() == t);

  for (int j = 0; j <= c; ++j) {
    const double expected = log_binomial(c, j);
    if (j >= c - c1 + 1) {
      CHECK(undecided.log_coefficient(j) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
    if (j <= c - c1) {
      CHECK(secured.log_coefficient(j) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
  for (int j = 0; j <= d; ++j) {
    const double expected = log_binomial(d, j);
    if (j > t) {
      CHECK(suspect.log_coefficient(j) ==
            doctest::Approx(expected).epsilon(1e-12));
    } else {
      CHECK(helpful.log_coefficient(j) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("matching exponent agrees with brute grid minimization") {
  const gldpc::BoundParams p = example_params();
  // A strictly interior feasible point: 2% corrupt variables, 1.5% of checks
  // overwhelmed, and edge masses satisfying every degree constraint slackly.
  gldpc::PartitionFractions point;
  point.corrupt = 0.02;
  point.undecided = 0.003;
  point.at_risk = 0.01;
  point.confused = 0.015;
  point.cross = 0.004;
  REQUIRE_NOTHROW(point.validate(p));

  const double got = gldpc::matching_exponent(point, p);

  const double alpha = point.corrupt, g = point.undecided,
               dl = point.at_risk, ph = point.confused, om = point.cross;
  const double c = p.c, d = p.d;
  const double t1 =
      grid_min({{p.c, p.c - p.c1 + 1, p.c}, {p.c, 0, p.c - p.c1}},
               {g, alpha - g}, om * c);
  const double t2 = grid_min({{p.c, p.c1, p.c}, {p.c, 0, p.c1 - 1}},
                             {dl, 1 - alpha - dl}, (ph - om) * c);
  const double u1 =
      grid_min({{p.d, p.t + 1, p.d}}, {ph * c / d}, om * c);
  const double u2 =
      grid_min({{p.d, 0, p.t}}, {(1 - ph) * c / d}, (alpha - om) * c);
  const double expected = t1 + t2 + u1 + u2;

  CHECK(got == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("matching exponent is unattainable outside the edge budget") {
  const gldpc::BoundParams p = example_params();
  gldpc::PartitionFractions point;
  point.corrupt = 0.02;
  point.undecided = 0.02;  // every corrupt variable undecided...
  point.at_risk = 0.0;
  point.confused = 1e-6;   // ...but almost no overwhelmed checks to blame
  point.cross = 1e-6;
  CHECK(gldpc::matching_exponent(point, p) == -kInf);
}

TEST_CASE("partition exponent composes entropy terms with the matching") {
  const gldpc::BoundParams p = example_params();
  gldpc::PartitionFractions point;
  point.corrupt = 0.02;
  point.undecided = 0.003;
  point.at_risk = 0.01;
  point.confused = 0.015;
  point.cross = 0.004;

  const double rho = gldpc::matching_exponent(point, p);
  const double expected =
      entropy3(point.undecided, point.corrupt - point.undecided,
               point.at_risk) +
      (double(p.c) / p.d) * hb(point.confused) + rho -
      p.c * entropy3(point.cross, point.corrupt - point.cross,
                     point.confused - point.cross);
  CHECK(gldpc::partition_exponent(point, p) ==
        doctest::Approx(expected).epsilon(1e-10));

  // The random-pattern form discounts by the number of weight-alpha sets.
  CHECK(gldpc::partition_exponent_random(point, p) ==
        doctest::Approx(gldpc::partition_exponent(point, p) -
                        hb(point.corrupt))
            .epsilon(1e-10));
}

TEST_CASE("maximizer dominates a coarse feasible grid") {
  const gldpc::BoundParams p = example_params();
  const double alpha = 0.02;
  const auto adversarial = gldpc::max_partition_exponent(
      alpha, p, gldpc::PatternModel::kAdversarial);
  const double residual = 0.01;
  const auto random = gldpc::max_partition_exponent(
      alpha, p, gldpc::PatternModel::kRandom, residual);

  int feasible = 0;
  for (int ig = 0; ig <= 4; ++ig) {
    for (int id = 0; id <= 5; ++id) {
      for (int ip = 1; ip <= 5; ++ip) {
        for (int io = 0; io <= 5; ++io) {
          gldpc::PartitionFractions point;
          point.corrupt = alpha;
          point.undecided = alpha * ig / 4.0;
          point.at_risk = 0.08 * id / 5.0;
          point.confused = 0.08 * ip / 5.0;
          point.cross = std::min(alpha, point.confused) * io / 5.0;
          try {
            point.validate(p);
          } catch (const std::invalid_argument&) {
            continue;
          }
          ++feasible;
          if (point.undecided + point.at_risk >= alpha) {
            CHECK(gldpc::partition_exponent(point, p) <=
                  adversarial.value + 1e-7);
          }
          if (point.undecided + point.at_risk >= residual) {
            CHECK(gldpc::partition_exponent_random(point, p) <=
                  random.value + 1e-7);
          }
        }
      }
    }
  }
  CHECK(feasible > 50);  // the sweep must actually exercise the bound

  // The reported witnesses are feasible and reproduce the reported values.
  REQUIRE_NOTHROW(adversarial.witness.validate(p, 1e-9));
  REQUIRE_NOTHROW(random.witness.validate(p, 1e-9));
  CHECK(gldpc::partition_exponent(adversarial.witness, p) ==
        doctest::Approx(adversarial.value).epsilon(1e-8));
  CHECK(gldpc::partition_exponent_random(random.witness, p) ==
        doctest::Approx(random.value).epsilon(1e-8));

  CHECK_THROWS_AS(gldpc::max_partition_exponent(
                      0.0, p, gldpc::PatternModel::kAdversarial),
                  std::invalid_argument);
  CHECK_THROWS_AS(gldpc::max_partition_exponent(
                      0.1, p, gldpc::PatternModel::kRandom, -0.5),
                  std::invalid_argument);
}

TEST_CASE("convergence guarantee preconditions") {
  gldpc::BoundParams p = example_params();
  CHECK(gldpc::guarantee_conditions_hold(p));

  gldpc::BoundParams weak;
  weak.c = 3;
  weak.d = 7;
  weak.t = 1;
  weak.c1 = 2;  // (c - c1 + 1) t = 2 is not above t + 1 = 2
  CHECK_FALSE(gldpc::guarantee_conditions_hold(weak));
  CHECK_THROWS_AS(gldpc::require_guarantee_conditions(weak),
                  gldpc::ConditionError);
  CHECK_THROWS_AS(gldpc::worst_case_radius(weak), gldpc::ConditionError);

  weak.c1 = 1;  // below the minimum threshold outright
  CHECK_FALSE(gldpc::guarantee_conditions_hold(weak));
}

TEST_CASE("flip threshold selection maximizes the certified radius") {
  CHECK(gldpc::select_flip_threshold(9, 127, 1, true) == 4);
  CHECK(gldpc::select_flip_threshold(4, 30, 3, false) == 3);
  // Degree 3 with radius-1 checks: no admissible threshold exists.
  CHECK_THROWS_AS(gldpc::select_flip_threshold(3, 7, 1, true),
                  gldpc::ConditionError);
  CHECK_THROWS_AS(gldpc::select_flip_threshold(3, 7, 1, false),
                  gldpc::ConditionError);
}

TEST_CASE("worst-case radius bracket straddles the sign change") {
  gldpc::BoundParams p = example_params();
  const gldpc::RadiusBracket bracket = gldpc::worst_case_radius_bracket(p);
  CHECK(bracket.certified > 0);
  CHECK(bracket.certified < bracket.upper);
  CHECK((bracket.upper - bracket.certified) / bracket.upper <=
        2 * p.root_rel_tol);
  // Loose location pin; the acceptance suite holds the tight window.
  CHECK(bracket.certified > 0.8e-4);
  CHECK(bracket.certified < 1.3e-4);

  const auto below = gldpc::max_partition_exponent(
      bracket.certified, p, gldpc::PatternModel::kAdversarial);
  const auto above = gldpc::max_partition_exponent(
      bracket.upper, p, gldpc::PatternModel::kAdversarial);
  CHECK(below.value < 0);
  CHECK(above.value >= 0);
  CHECK(gldpc::worst_case_radius(p) == bracket.certified);
}

TEST_CASE("radius is stable under grid halving") {
  gldpc::BoundParams fine = example_params();
  gldpc::BoundParams coarse = example_params();
  coarse.grid_cross = 100;
  coarse.grid_confused = 100;
  coarse.refine_starts = 5;
  const double fine_radius = gldpc::worst_case_radius(fine);
  const double coarse_radius = gldpc::worst_case_radius(coarse);
  CHECK(std::abs(fine_radius - coarse_radius) / fine_radius < 0.03);
}

TEST_CASE("random-pattern radius certifies clearance below the margin") {
  gldpc::BoundParams p = example_params();
  const double target = gldpc::worst_case_radius(p);
  const double radius = gldpc::random_error_radius(p, target);
  CHECK(radius >= target);
  CHECK(radius > 0.012);
  CHECK(radius < 0.018);

  const double margin =
      p.random_margin_scale * p.t * (p.t + 1) / p.d;
  const auto at_radius = gldpc::max_partition_exponent(
      radius, p, gldpc::PatternModel::kRandom, target);
  CHECK(at_radius.value <= -margin + 1e-12);

  // A larger safety margin can only shrink the certified radius.
  gldpc::BoundParams cautious = p;
  cautious.random_margin_scale = 4 * p.random_margin_scale;
  const double shy = gldpc::random_error_radius(cautious, target);
  CHECK(shy <= radius + 1e-12);
}

TEST_CASE("bound parameters validate their ranges") {
  gldpc::BoundParams p = example_params();
  CHECK_NOTHROW(p.validate());
  SUBCASE("degrees") {
    p.c = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  }
  SUBCASE("radius range") {
    p.t = 30;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  }
  SUBCASE("threshold range") {
    p.c1 = 5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  }
  SUBCASE("margin scale") {
    p.random_margin_scale = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  }
  SUBCASE("scan start") {
    p.scan_start = 0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  }
}

TEST_CASE("partition fractions validate mutual feasibility") {
  const gldpc::BoundParams p = example_params();
  gldpc::PartitionFractions point;
  point.corrupt = 0.02;
  point.undecided = 0.003;
  point.at_risk = 0.01;
  point.confused = 0.015;
  point.cross = 0.004;
  CHECK_NOTHROW(point.validate(p));

  SUBCASE("cross mass cannot exceed the corrupt sockets") {
    point.cross = 0.03;
    CHECK_THROWS_AS(point.validate(p), std::invalid_argument);
  }
  SUBCASE("undecided variables cannot outnumber corrupt ones") {
    point.undecided = 0.021;
    CHECK_THROWS_AS(point.validate(p), std::invalid_argument);
  }
  SUBCASE("overwhelmed checks need enough corrupt edges") {
    point.confused = 0.5;  // cross mass cannot feed this many checks
    CHECK_THROWS_AS(point.validate(p), std::invalid_argument);
  }
}
