#pragma once
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gldpc/component_code.hpp"

namespace gldpc {

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

// Design rate of a regular ensemble whose variables have degree c and whose
// checks apply a component code of blocklength d and dimension k0:
//   1 - c * (d - k0) / d
// (each check contributes d - k0 parity constraints and N c / d checks share
// N variables).  Returned in lowest terms; may be negative for over-checked
// parameter choices.
Rational nominal_rate(int c, int d, int k0);

// A (c, d)-regular bipartite multigraph between N variable nodes and
// J = N c / d check nodes, represented by a permutation of edge sockets:
// variable socket s (variable s / c) is wired to check socket perm[s]
// (check perm[s] / d, slot perm[s] % d).  Parallel edges are allowed and
// counted with multiplicity everywhere.
class TannerGraph {
 public:
  TannerGraph(long long num_vars, int var_degree, int check_degree,
              std::vector<std::uint32_t> perm);

  long long num_vars() const { return num_vars_; }
  long long num_checks() const { return num_checks_; }
  int var_degree() const { return var_degree_; }
  int check_degree() const { return check_degree_; }
  long long num_sockets() const { return num_vars_ * var_degree_; }
  const std::vector<std::uint32_t>& socket_permutation() const { return perm_; }

  // Variables wired to check j, one entry per slot (so with multiplicity).
  std::span<const std::uint32_t> check_vars(long long j) const {
    return {check_vars_.data() + j * check_degree_,
            static_cast<std::size_t>(check_degree_)};
  }
  // Checks wired to variable i, one entry per socket (with multiplicity).
  std::span<const std::uint32_t> var_checks(long long i) const {
    return {var_checks_.data() + i * var_degree_,
            static_cast<std::size_t>(var_degree_)};
  }

 private:
  long long num_vars_;
  long long num_checks_;
  int var_degree_;
  int check_degree_;
  std::vector<std::uint32_t> perm_;
  std::vector<std::uint32_t> check_vars_;
  std::vector<std::uint32_t> var_checks_;
};

// Parameters of a regular ensemble: N variables of degree c, checks of
// degree d running the given component code, and the flip threshold c1 used
// by the decoder.
struct EnsembleParams {
  long long N = 0;
  int c = 0;
  int d = 0;
  int c1 = 0;
  std::shared_ptr<const ComponentCode> code;

  // Throws std::invalid_argument if the parameters are inconsistent:
  // divisibility of N c by d, 1 <= c1 <= c, code blocklength d, and for
  // non-binary codes the majority requirement c1 > c/2 (votes to flip a
  // symbol must name a unique target value).
  void validate() const;

  long long num_checks() const { return N * c / d; }
  Rational rate() const {
    return nominal_rate(c, d, code ? code->dimension() : 0);
  }
};

// Samples a uniformly random socket permutation with a seeded Fisher-Yates
// shuffle driven by the in-repo xoshiro256** generator, so a given seed
// reproduces the same graph on any platform.
TannerGraph sample_graph(const EnsembleParams& params, std::uint64_t seed);
TannerGraph sample_graph(long long N, int c, int d, std::uint64_t seed);

// Text serialization:
//   line 1: "GLDPC-GRAPH v1"
//   line 2: "N c d"
//   line 3: the socket permutation, space separated
//   line 4: CRC-32 of lines 1-3 (including their newlines), 8 hex digits
std::string serialize_graph(const TannerGraph& graph);

// Parses and validates a serialized graph.  Throws std::invalid_argument on
// malformed input, checksum mismatch, non-divisible N c / d, or a socket map
// that is not a permutation.
TannerGraph parse_graph(std::string_view text);

}  // namespace gldpc
