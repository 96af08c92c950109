#pragma once
#include "gldpc/numerics/logpoly.hpp"

namespace gldpc {

// Result of minimizing a weighted log-polynomial expression over x > 0.
// argmin may be 0 or +infinity when the minimum sits on the boundary of the
// positive axis; value is -infinity when the expression is unbounded below.
struct SaddleResult {
  double value;
  double argmin;
};

// inf over x > 0 of  L * log F(x) - k * log x,  with L >= 0 and k >= 0.
//
// The objective upper-bounds the coefficient exponent: for integer data,
// log [x^k] F(x)^L <= saddle value.  The minimum is found where the tilted
// mean degree of F matches k / L; outside the attainable range
// [L min_deg, L max_deg] the objective is unbounded below.
SaddleResult saddle_point_bound(const LogPoly& F, double L, double k,
                                double tol_u = 1e-10);

// inf over x > 0 of  La log Fa(x) + Lb log Fb(x) - k log x.
// u_hint, when finite, warm-starts the search at x = e^(u_hint).
SaddleResult saddle_point_bound2(const LogPoly& Fa, double La,
                                 const LogPoly& Fb, double Lb, double k,
                                 double tol_u = 1e-10,
                                 double u_hint = 0.0 / 0.0);

}  // namespace gldpc
