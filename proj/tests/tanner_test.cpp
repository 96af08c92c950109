#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <vector>

#include <stdexcept>

#include "doctest.h"

#include "gldpc/component_code.hpp"
#include "gldpc/crc32.hpp"
#include "gldpc/tanner.hpp"

namespace {

std::vector<std::uint32_t> identity_permutation(std::size_t size) {
  std::vector<std::uint32_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0u);
  return perm;
}

}  // namespace

TEST_CASE("nominal rate: closed form in lowest terms") {
  // 1 - (1 - k0/d) c, reduced.
  const gldpc::Rational half = gldpc::nominal_rate(3, 6, 5);
  CHECK(half.num == 1);
  CHECK(half.den == 2);

  const gldpc::Rational r9 = gldpc::nominal_rate(9, 127, 120);
  CHECK(r9.num == 64);
  CHECK(r9.den == 127);
  CHECK(std::round(r9.value() * 1e4) / 1e4 == doctest::Approx(0.5039));

  const gldpc::Rational r28 = gldpc::nominal_rate(28, 511, 502);
  CHECK(r28.num == 37);  // 1 - 252/511 = 259/511 = 37/73
  CHECK(r28.den == 73);

  const gldpc::Rational negative = gldpc::nominal_rate(6, 8, 6);
  CHECK(negative.num == -1);
  CHECK(negative.den == 2);
  CHECK(negative.value() == doctest::Approx(-0.5));
}

TEST_CASE("socket wiring follows the permutation, multiplicity intact") {
  // 4 variables of degree 2, 2 checks of degree 4, identity wiring:
  // socket s belongs to variable s/2 and lands in check s/4 at slot s%4.
  const gldpc::TannerGraph graph(4, 2, 4, identity_permutation(8));
  CHECK(graph.num_vars() == 4);
  CHECK(graph.num_checks() == 2);
  CHECK(graph.num_sockets() == 8);

  auto vars0 = graph.check_vars(0);
  REQUIRE(vars0.size() == 4);
  CHECK(vars0[0] == 0);
  CHECK(vars0[1] == 0);
  CHECK(vars0[2] == 1);
  CHECK(vars0[3] == 1);

  auto checks0 = graph.var_checks(0);
  REQUIRE(checks0.size() == 2);
  CHECK(checks0[0] == 0);
  CHECK(checks0[1] == 0);  // parallel edge, counted twice

  auto checks3 = graph.var_checks(3);
  CHECK(checks3[0] == 1);
  CHECK(checks3[1] == 1);
}

TEST_CASE("sampled graphs are valid permutations and reproducible") {
  const gldpc::TannerGraph a = gldpc::sample_graph(21, 3, 7, 99);
  const gldpc::TannerGraph b = gldpc::sample_graph(21, 3, 7, 99);
  const gldpc::TannerGraph c = gldpc::sample_graph(21, 3, 7, 100);
  auto pa = a.socket_permutation();
  auto pb = b.socket_permutation();
  auto pc = c.socket_permutation();
  CHECK(std::equal(pa.begin(), pa.end(), pb.begin(), pb.end()));
  CHECK_FALSE(std::equal(pa.begin(), pa.end(), pc.begin(), pc.end()));

  std::vector<std::uint32_t> sorted(pa.begin(), pa.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    CHECK(sorted[i] == static_cast<std::uint32_t>(i));
  }
}

TEST_CASE("socket matching is close to uniform over seeds") {
  // Track which socket is matched to check slot 0 across many seeds; each of
  // the 8 sockets should receive close to 1/8 of the mass.  Bins are checked
  // against a 5-sigma binomial band; the seed set is fixed, so the test is
  // deterministic.
  constexpr int kSamples = 100000;
  std::array<int, 8> hits{};
  for (int seed = 0; seed < kSamples; ++seed) {
    const gldpc::TannerGraph g =
        gldpc::sample_graph(4, 2, 4, static_cast<std::uint64_t>(seed));
    auto perm = g.socket_permutation();
    for (int s = 0; s < 8; ++s) {
      if (perm[static_cast<std::size_t>(s)] == 0) {
        ++hits[static_cast<std::size_t>(s)];
        break;
      }
    }
  }
  const double expect = kSamples / 8.0;
  const double sigma = std::sqrt(kSamples * (1.0 / 8) * (7.0 / 8));
  for (int count : hits) {
    CHECK(std::abs(count - expect) <= 5 * sigma);
  }
}

TEST_CASE("graph serialization round-trips and detects corruption") {
  const gldpc::TannerGraph graph = gldpc::sample_graph(14, 2, 7, 3);
  const std::string text = gldpc::serialize_graph(graph);
  const gldpc::TannerGraph parsed = gldpc::parse_graph(text);
  CHECK(gldpc::serialize_graph(parsed) == text);
  CHECK(parsed.num_vars() == 14);
  CHECK(parsed.check_degree() == 7);

  SUBCASE("flipping a digit breaks the checksum") {
    std::string bad = text;
    const auto pos = bad.find("1 ");
    REQUIRE(pos != std::string::npos);
    bad[pos] = '2';
    CHECK_THROWS_AS(gldpc::parse_graph(bad), std::invalid_argument);
  }
  SUBCASE("truncation is rejected") {
    CHECK_THROWS_AS(gldpc::parse_graph(text.substr(0, text.size() / 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(gldpc::parse_graph(""), std::invalid_argument);
  }
  SUBCASE("a well-checksummed non-permutation is still rejected") {
    std::ostringstream body;
    body << "GLDPC-GRAPH v1\n4 2 4\n0 0 2 3 4 5 6 7\n";  // socket 0 twice
    std::ostringstream file;
    char crc[16];
    std::snprintf(crc, sizeof crc, "%08x", gldpc::crc32(body.str()));
    file << body.str() << crc << "\n";
    CHECK_THROWS_AS(gldpc::parse_graph(file.str()), std::invalid_argument);
  }
  SUBCASE("incompatible socket counts are rejected") {
    std::ostringstream body;
    body << "GLDPC-GRAPH v1\n4 2 3\n0 1 2 3 4 5 6 7\n";  // 8 sockets, d=3
    std::ostringstream file;
    char crc[16];
    std::snprintf(crc, sizeof crc, "%08x", gldpc::crc32(body.str()));
    file << body.str() << crc << "\n";
    CHECK_THROWS_AS(gldpc::parse_graph(file.str()), std::invalid_argument);
  }
}

TEST_CASE("ensemble parameters validate their mutual constraints") {
  gldpc::EnsembleParams params;
  params.N = 60;
  params.c = 4;
  params.d = 30;
  params.c1 = 3;
  params.code = gldpc::rs_code(30, 24, gldpc::FiniteField::prime(31));
  CHECK_NOTHROW(params.validate());
  CHECK(params.num_checks() == 8);
  CHECK(params.rate().value() == doctest::Approx(1 - (6.0 / 30) * 4));

  SUBCASE("socket divisibility") {
    params.N = 61;  // 61*4 not divisible by 30
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  }
  SUBCASE("threshold range") {
    params.c1 = 0;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
    params.c1 = 5;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  }
  SUBCASE("non-binary alphabets need a majority threshold") {
    params.c1 = 2;  // not > c/2, ambiguous flip targets possible
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  }
  SUBCASE("component blocklength must match the check degree") {
    params.d = 15;
    params.N = 30;
    CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  }
  SUBCASE("binary codes allow sub-majority thresholds") {
    params.code = gldpc::hamming_code(5);
    params.d = 31;
    params.N = 31;
    params.c1 = 2;
    CHECK_NOTHROW(params.validate());
  }
}
