#ifndef QSC_ERRORS_HPP
#define QSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qsc {

// Base class for numeric failures; the CLI maps these to exit code 2.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Every log weight handed to normalize_log_weights was an exact zero.
class AllZeroError : public NumericError {
public:
  AllZeroError() : NumericError("all log weights are exact zeros") {}
};

// A normalization double sum came out non-positive after rounding.
class NonPositiveNormSumError : public NumericError {
public:
  explicit NonPositiveNormSumError(double value)
      : NumericError("normalization sum is non-positive: " + std::to_string(value)) {}
};

// n_max too small: the truncated Fock tail carries more mass than tolerated.
class TailMassTooLargeError : public NumericError {
public:
  explicit TailMassTooLargeError(double mass)
      : NumericError("truncated tail mass too large: " + std::to_string(mass)) {}
};

// Fano factor requested for a distribution with vanishing mean.
class ZeroMeanError : public NumericError {
public:
  ZeroMeanError() : NumericError("mean photon number is zero; Fano factor undefined") {}
};

}  // namespace qsc

#endif
