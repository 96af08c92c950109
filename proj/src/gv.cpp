#include "gldpc/numerics/gv.hpp"

#include <cmath>
#include <stdexcept>

namespace gldpc {

double gilbert_varshamov_distance(double rate, int field_order) {
  if (!(rate > 0 && rate < 1)) {
    throw std::invalid_argument("rate must lie in (0, 1)");
  }
  if (field_order < 2) {
    throw std::invalid_argument("field order must be at least 2");
  }
  const double q = field_order;
  const double log_q = std::log(q);
  auto alphabet_entropy = [&](double x) {
    double h = x * std::log(q - 1) / log_q;
    if (x > 0) h -= x * std::log(x) / log_q;
    if (x < 1) h -= (1 - x) * std::log1p(-x) / log_q;
    return h;
  };

  // 1 - h_q decreases from 1 to 0 on [0, 1 - 1/q]; bracket and bisect.
  double lo = 0.0, hi = 1.0 - 1.0 / q;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (1 - alphabet_entropy(mid) > rate) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace gldpc
