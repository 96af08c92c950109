#pragma once
#include <span>
#include <vector>

namespace gldpc {

// A polynomial with nonnegative coefficients, held in log form so that
// binomial-scale coefficients (degrees in the thousands) stay representable.
//
// The saddle-point machinery views F through its "tilted degree"
// distribution at x = e^u: weights w_j proportional to c_j e^(j u).  tilt()
// returns the mean and variance of that distribution and, on request,
// log F(e^u); the mean is increasing in u, which drives the solver.
class LogPoly {
 public:
  // Coefficients by degree, index 0 = constant term.  Negative entries are
  // rejected; zeros are allowed (and skipped internally).
  static LogPoly from_coefficients(std::span<const double> coefficients);

  // sum_{j=lo}^{hi} C(n, j) x^j
  static LogPoly binomial_slice(int n, int lo, int hi);

  int min_degree() const { return lo_; }
  int max_degree() const { return lo_ + static_cast<int>(logc_.size()) - 1; }
  bool single_term() const { return logc_.size() == 1; }

  // log of the coefficient of x^degree (-inf outside the support).
  double log_coefficient(int degree) const;
  // Plain coefficient; may round or overflow for large degrees.
  double coefficient(int degree) const;

  struct Tilt {
    double mean;
    double var;
    double log_value;  // NaN unless requested
  };
  Tilt tilt(double u, bool need_log_value = false) const;

 private:
  LogPoly(int lo, std::vector<double> logc, int slice_n);

  Tilt tilt_slice(double u, bool need_log_value) const;
  Tilt tilt_generic(double u, bool need_log_value) const;

  int lo_ = 0;                 // smallest degree with a nonzero coefficient
  std::vector<double> logc_;   // logc_[j - lo_]; -inf marks interior zeros
  int slice_n_ = -1;           // >= 0 marks a binomial slice of (1+x)^n
};

}  // namespace gldpc
