#pragma once
#include <span>

namespace gldpc {

// Natural-log entropy of a distribution given by its first masses; the
// remainder 1 - sum is an implicit final mass.  0 log 0 counts as 0.
// Throws std::invalid_argument for a negative mass (beyond rounding slack)
// or masses summing to more than 1.
double entropy(std::span<const double> masses);

double binary_entropy(double p);

// log(1 + e^u) without overflow.
double log1p_exp(double u);

// Logarithms of a multinomial coefficient C(n; parts..., remainder) and of
// three classical estimates of it.
struct MultinomialBounds {
  double exact;           // via lgamma
  double upper_entropy;   // n h(parts/n); always >= exact
  double upper_stirling;  // tighter upper bound, requires parts >= 1
  double lower_stirling;  // lower bound, requires parts >= 1
};

// Zero parts are dropped before the Stirling forms are applied (they do not
// change the coefficient).  If the parts exhaust n the remainder is empty
// and one part is treated as the remainder instead, which also leaves the
// coefficient unchanged.  Throws std::invalid_argument when a part is
// negative or the parts sum past n.
MultinomialBounds log_multinomial(long long n, std::span<const long long> parts);

}  // namespace gldpc
