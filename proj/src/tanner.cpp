#include "gldpc/tanner.hpp"

#include <numeric>
#include <stdexcept>

#include "gldpc/rng.hpp"

namespace gldpc {

Rational nominal_rate(int c, int d, int k0) {
  if (c < 1 || d < 1 || k0 < 0 || k0 > d) {
    throw std::invalid_argument("nominal_rate: need c >= 1, 0 <= k0 <= d");
  }
  // 1 - c (d - k0) / d in lowest terms.
  long long num = static_cast<long long>(d) - static_cast<long long>(c) * (d - k0);
  long long den = d;
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

TannerGraph::TannerGraph(long long num_vars, int var_degree, int check_degree,
                         std::vector<std::uint32_t> perm)
    : num_vars_(num_vars),
      var_degree_(var_degree),
      check_degree_(check_degree),
      perm_(std::move(perm)) {
  if (num_vars < 1 || var_degree < 1 || check_degree < 1) {
    throw std::invalid_argument("graph dimensions must be positive");
  }
  const long long sockets = num_vars * var_degree;
  if (sockets % check_degree != 0) {
    throw std::invalid_argument("N*c must be divisible by d");
  }
  num_checks_ = sockets / check_degree;
  if (static_cast<long long>(perm_.size()) != sockets) {
    throw std::invalid_argument("socket permutation has wrong length");
  }
  std::vector<char> seen(sockets, 0);
  for (std::uint32_t target : perm_) {
    if (target >= sockets || seen[target]) {
      throw std::invalid_argument("socket map is not a permutation");
    }
    seen[target] = 1;
  }

  check_vars_.resize(sockets);
  var_checks_.resize(sockets);
  for (long long s = 0; s < sockets; ++s) {
    const std::uint32_t var = static_cast<std::uint32_t>(s / var_degree_);
    const std::uint32_t check =
        static_cast<std::uint32_t>(perm_[s] / check_degree_);
    check_vars_[perm_[s]] = var;
    var_checks_[s] = check;
  }
}

void EnsembleParams::validate() const {
  if (N < 1 || c < 1 || d < 1) {
    throw std::invalid_argument("ensemble requires N >= 1, c >= 1, d >= 1");
  }
  if ((N * c) % d != 0) {
    throw std::invalid_argument("N*c must be divisible by d");
  }
  if (c1 < 1 || c1 > c) {
    throw std::invalid_argument("flip threshold c1 must satisfy 1 <= c1 <= c");
  }
  if (!code) throw std::invalid_argument("ensemble has no component code");
  if (code->blocklength() != d) {
    throw std::invalid_argument("component code blocklength != check degree");
  }
  if (code->field().order() > 2 && 2 * c1 <= c) {
    throw std::invalid_argument(
        "non-binary decoding requires c1 > c/2 so that the flip target is "
        "unique");
  }
}

TannerGraph sample_graph(long long N, int c, int d, std::uint64_t seed) {
  const long long sockets = N * c;
  if (N < 1 || c < 1 || d < 1 || sockets % d != 0) {
    throw std::invalid_argument("sample_graph: invalid (N, c, d)");
  }
  std::vector<std::uint32_t> perm(sockets);
  std::iota(perm.begin(), perm.end(), 0u);
  Rng rng(seed);
  // Fisher-Yates; together with the fixed generator this makes graphs fully
  // reproducible from (N, c, d, seed).
  for (long long i = sockets - 1; i > 0; --i) {
    const auto j = static_cast<long long>(
        rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[i], perm[j]);
  }
  return TannerGraph(N, c, d, std::move(perm));
}

TannerGraph sample_graph(const EnsembleParams& params, std::uint64_t seed) {
  params.validate();
  return sample_graph(params.N, params.c, params.d, seed);
}

}  // namespace gldpc
