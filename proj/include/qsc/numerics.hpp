#ifndef QSC_NUMERICS_HPP
#define QSC_NUMERICS_HPP

#include <complex>
#include <vector>

namespace qsc {

// An unnormalized nonnegative quantity carried in the log domain.
// Exact zeros (from selection rules) are structural, not -inf magnitudes.
struct LogWeight {
  double log_magnitude = 0.0;
  bool zero_flag = false;

  static LogWeight zero() { return {0.0, true}; }
  static LogWeight from_log(double lm) { return {lm, false}; }
};

// ln(n!), accurate to <= 1e-12 relative error for n <= 2000.
double log_factorial(unsigned n);

// Laguerre polynomial L_r(z) by the three-term recurrence
//   (k+1) L_{k+1} = (2k+1-z) L_k - k L_{k-1},  L_0 = 1, L_1 = 1-z.
std::complex<double> laguerre(unsigned r, std::complex<double> z);

// Turns log-domain weights into probabilities summing to 1, subtracting the
// maximum log magnitude before exponentiation. Structural zeros map to 0.
// Throws AllZeroError when every weight is an exact zero.
std::vector<double> normalize_log_weights(const std::vector<LogWeight>& weights);

}  // namespace qsc

#endif
