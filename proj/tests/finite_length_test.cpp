#include <cmath>
#include <vector>

#include <stdexcept>

#include "doctest.h"

#include "gldpc/numerics/exponents.hpp"
#include "gldpc/numerics/finite_length.hpp"

namespace {

gldpc::BoundParams small_params() {
  gldpc::BoundParams p;
  p.c = 4;
  p.d = 30;
  p.t = 3;
  p.c1 = 3;
  return p;
}

gldpc::TailOptions base_options(std::int64_t weight_max) {
  gldpc::TailOptions options;
  options.weight_max = weight_max;
  return options;
}

}  // namespace

TEST_CASE("tail curve bookkeeping: weights, positivity, running sum") {
  // The blocklength must be large enough that the first eight weights sit
  // well inside the correctable regime, or the curve stops early as vacuous.
  const auto curve =
      gldpc::failure_tail_bound(2000000, small_params(), base_options(8));
  REQUIRE(curve.size() == 8);
  double running = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].weight == static_cast<std::int64_t>(i) + 1);
    CHECK(curve[i].failure_bound >= 0);
    CHECK(std::isfinite(curve[i].failure_bound));
    running += curve[i].failure_bound;
    CHECK(curve[i].cumulative ==
          doctest::Approx(running).epsilon(1e-12));
  }
  // At this blocklength the first weights are overwhelmingly correctable.
  CHECK(curve.front().failure_bound < 1e-3);
}

TEST_CASE("tail bound input guards") {
  const gldpc::BoundParams p = small_params();
  CHECK(gldpc::failure_tail_bound(3000, p, base_options(0)).empty());
  CHECK_THROWS_AS(gldpc::failure_tail_bound(1, p, base_options(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gldpc::failure_tail_bound(3000, p, base_options(1501)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gldpc::failure_tail_bound(3000, p, base_options(-1)),
                  std::invalid_argument);
  auto bad_prune = base_options(4);
  bad_prune.prune_nats = 0;
  CHECK_THROWS_AS(gldpc::failure_tail_bound(3000, p, bad_prune),
                  std::invalid_argument);
}

TEST_CASE("bound variants are ordered by tightness") {
  const gldpc::BoundParams p = small_params();

  auto exact_denom = base_options(8);
  auto stirling_denom = base_options(8);
  stirling_denom.denominator = gldpc::MatchingDenominator::kStirlingLowerBound;
  const auto tight = gldpc::failure_tail_bound(3000, p, exact_denom);
  const auto loose = gldpc::failure_tail_bound(3000, p, stirling_denom);
  REQUIRE(tight.size() == loose.size());
  for (std::size_t i = 0; i < tight.size(); ++i) {
    // Lower-bounding the socket-matching denominator can only grow the bound.
    CHECK(tight[i].failure_bound <= loose[i].failure_bound * (1 + 1e-9));
  }

  auto entropy_count = base_options(8);
  entropy_count.count_bound = gldpc::CountBound::kEntropy;
  const auto entropy_curve = gldpc::failure_tail_bound(3000, p, entropy_count);
  for (std::size_t i = 0; i < tight.size(); ++i) {
    // The per-factor Stirling count prefactor is tighter than entropy.
    CHECK(tight[i].failure_bound <=
          entropy_curve[i].failure_bound * (1 + 1e-9));
  }
}

TEST_CASE("pruning leaves the curve numerically unchanged") {
  const gldpc::BoundParams p = small_params();
  auto pruned = base_options(8);       // default prune_nats = 40
  auto unpruned = base_options(8);
  unpruned.prune_nats = 1e300;         // never triggers
  const auto fast = gldpc::failure_tail_bound(3000, p, pruned);
  const auto full = gldpc::failure_tail_bound(3000, p, unpruned);
  REQUIRE(fast.size() == full.size());
  for (std::size_t i = 0; i < fast.size(); ++i) {
    if (full[i].failure_bound == 0) {
      CHECK(fast[i].failure_bound == 0);
    } else {
      CHECK(fast[i].failure_bound ==
            doctest::Approx(full[i].failure_bound).epsilon(1e-10));
    }
  }
}

TEST_CASE("the curve stops once the bound turns vacuous") {
  // A short blocklength makes the bound cross 1 quickly.
  const gldpc::BoundParams p = small_params();
  auto stopping = base_options(100);
  const auto curve = gldpc::failure_tail_bound(240, p, stopping);
  REQUIRE_FALSE(curve.empty());
  REQUIRE(curve.size() < 100);
  CHECK(curve.back().cumulative >= 1.0);
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    CHECK(curve[i].cumulative < 1.0);
  }

  auto keep_going = stopping;
  keep_going.stop_when_vacuous = false;
  keep_going.weight_max = curve.back().weight + 3;
  const auto longer = gldpc::failure_tail_bound(240, p, keep_going);
  CHECK(longer.size() ==
        static_cast<std::size_t>(keep_going.weight_max));
}

TEST_CASE("fractional check counts are handled throughout") {
  gldpc::BoundParams p;
  p.c = 9;
  p.d = 127;
  p.t = 1;
  p.c1 = 5;
  // 300 * 9 / 127 is not an integer; the bound must still be well defined.
  const auto curve = gldpc::failure_tail_bound(300, p, base_options(3));
  REQUIRE(curve.size() <= 3);
  for (const auto& point : curve) {
    CHECK(point.failure_bound >= 0);
    CHECK(std::isfinite(point.failure_bound));
  }
}
