#include "qsc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qsc/errors.hpp"

namespace qsc {

namespace {

// Cumulative sum of ln k with Kahan compensation; covers every photon number
// the library touches (n_max stays well under 4096). Larger n falls back to
// lgamma.
constexpr unsigned kTableSize = 4096;

std::vector<double> build_log_factorial_table() {
  std::vector<double> table(kTableSize);
  table[0] = 0.0;
  double sum = 0.0, comp = 0.0;
  for (unsigned k = 1; k < kTableSize; ++k) {
    double term = std::log(static_cast<double>(k)) - comp;
    double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
    table[k] = sum;
  }
  return table;
}

}  // namespace

double log_factorial(unsigned n) {
  static const std::vector<double> table = build_log_factorial_table();
  if (n < kTableSize) return table[n];
  return std::lgamma(static_cast<double>(n) + 1.0);
}

std::complex<double> laguerre(unsigned r, std::complex<double> z) {
  std::complex<double> p0(1.0, 0.0);
  if (r == 0) return p0;
  std::complex<double> p1 = 1.0 - z;
  for (unsigned k = 1; k < r; ++k) {
    std::complex<double> p2 =
        ((2.0 * k + 1.0 - z) * p1 - static_cast<double>(k) * p0) /
        static_cast<double>(k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

std::vector<double> normalize_log_weights(const std::vector<LogWeight>& weights) {
  double max_log = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (const auto& w : weights) {
    if (w.zero_flag) continue;
    any = true;
    max_log = std::max(max_log, w.log_magnitude);
  }
  if (!any) throw AllZeroError();

  std::vector<double> probs(weights.size(), 0.0);
  double total = 0.0;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].zero_flag) continue;
    probs[i] = std::exp(weights[i].log_magnitude - max_log);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

}  // namespace qsc
