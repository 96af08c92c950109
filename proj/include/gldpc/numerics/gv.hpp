#pragma once

namespace gldpc {

// Relative minimum distance guaranteed to exist at rate `rate` over an
// alphabet of `field_order` symbols: the root of
// rate = 1 - h_q(delta) on (0, 1 - 1/q), where
// h_q(x) = x log_q(q - 1) - x log_q(x) - (1 - x) log_q(1 - x).
// Solved by bisection to 1e-6. Throws std::invalid_argument for
// rate outside (0, 1) or field_order < 2.
double gilbert_varshamov_distance(double rate, int field_order);

}  // namespace gldpc
