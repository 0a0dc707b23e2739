#include "qsc/pnd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsc/errors.hpp"
#include "qsc/numerics.hpp"

namespace qsc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Sum-to-one closure guards both the tail truncation and the analytically
// computed normalization constant; a bad constant fails loudly here.
void check_closure(const std::vector<double>& probs) {
  double sum = 0.0;
  for (double p : probs) sum += p;
  if (std::abs(sum - 1.0) > 1e-10) throw TailMassTooLargeError(std::abs(sum - 1.0));
}

double cos_reduced(long long k, unsigned N) {
  long long m = k % static_cast<long long>(N);
  if (m < 0) m += N;
  return std::cos(kTwoPi * static_cast<double>(m) / static_cast<double>(N));
}

}  // namespace

PhotonNumberDistribution pnd_gcs_closed(const CircularStateSpec& spec,
                                        unsigned n_max) {
  if (spec.photons_added != 0)
    throw std::invalid_argument("pnd_gcs_closed requires r = 0");
  unsigned N = spec.order;
  double alpha = spec.alpha_mag;
  double norm = gcs_normalization(spec);
  double a2 = alpha * alpha;
  double log_scale = std::log(norm * norm * N) - a2;

  std::vector<double> probs(n_max + 1, 0.0);
  if (alpha == 0.0) {
    probs[0] = 1.0;
  } else {
    double log_alpha = std::log(alpha);
    for (unsigned n = 0; n <= n_max; n += N)
      probs[n] = std::exp(log_scale + 2.0 * n * log_alpha - log_factorial(n));
  }
  check_closure(probs);
  return {std::move(probs), n_max, PndSource::ClosedForm};
}

PhotonNumberDistribution pnd_gcs_intermediate(const CircularStateSpec& spec,
                                              unsigned n_max) {
  if (spec.photons_added != 0)
    throw std::invalid_argument("pnd_gcs_intermediate requires r = 0");
  unsigned N = spec.order;
  double alpha = spec.alpha_mag;
  double norm = gcs_normalization(spec);
  double a2 = alpha * alpha;
  double log_scale = std::log(norm * norm / N) - a2;

  std::vector<double> probs(n_max + 1, 0.0);
  for (unsigned n = 0; n <= n_max; ++n) {
    // N + 2 sum_{m=1}^{N-1} (N - m) cos(2 pi n m / N); equals N^2 at n = S N
    // and cancels to zero elsewhere.
    double bracket = static_cast<double>(N);
    for (unsigned m = 1; m < N; ++m)
      bracket += 2.0 * static_cast<double>(N - m) *
                 cos_reduced(static_cast<long long>(n) * m, N);
    if (bracket <= 0.0) continue;
    double log_poisson;
    if (alpha == 0.0) {
      if (n > 0) continue;
      log_poisson = log_scale;
    } else {
      log_poisson = log_scale + 2.0 * n * std::log(alpha) - log_factorial(n);
    }
    probs[n] = std::exp(log_poisson) * bracket;
  }
  check_closure(probs);
  return {std::move(probs), n_max, PndSource::Intermediate};
}

PhotonNumberDistribution pnd_gpacs_closed(const CircularStateSpec& spec,
                                          unsigned n_max) {
  if (spec.photons_added == 0)
    throw std::invalid_argument("pnd_gpacs_closed requires r >= 1");
  unsigned N = spec.order;
  unsigned r = spec.photons_added;
  double alpha = spec.alpha_mag;
  double norm = gpacs_normalization(spec);
  double a2 = alpha * alpha;
  double log_scale = std::log(norm * norm * N) - a2;

  std::vector<double> probs(n_max + 1, 0.0);
  if (alpha == 0.0) {
    if (r > n_max) throw TailMassTooLargeError(1.0);
    probs[r] = 1.0;
  } else {
    double log_alpha = std::log(alpha);
    for (unsigned n = r; n <= n_max; n += N) {
      unsigned m = n - r;
      probs[n] = std::exp(log_scale + 2.0 * m * log_alpha + log_factorial(n) -
                          2.0 * log_factorial(m));
    }
  }
  check_closure(probs);
  return {std::move(probs), n_max, PndSource::ClosedForm};
}

PhotonNumberDistribution pnd_elliptic(const EllipticStateSpec& spec,
                                      unsigned n_max) {
  if (spec.photons_added != 0)
    throw std::invalid_argument("pnd_elliptic requires r = 0");
  unsigned N = spec.order;
  double norm = elliptic_normalization(spec);
  std::vector<double> mag(N), logmag(N);
  for (unsigned j = 1; j <= N; ++j) {
    mag[j - 1] = radial_distance(j, spec);
    logmag[j - 1] = std::log(mag[j - 1]);
  }

  double pref = norm / std::sqrt(static_cast<double>(N));
  std::vector<double> probs(n_max + 1, 0.0);
  for (unsigned n = 0; n <= n_max; ++n) {
    std::complex<double> amp = 0.0;
    for (unsigned j = 1; j <= N; ++j) {
      double mj = mag[j - 1];
      double m = std::exp(-0.5 * mj * mj + n * logmag[j - 1] - 0.5 * log_factorial(n));
      long long k = static_cast<long long>(j) * n % N;
      double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(N);
      amp += m * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    probs[n] = std::norm(pref * amp);
  }
  check_closure(probs);
  return {std::move(probs), n_max, PndSource::ClosedForm};
}

PhotonNumberDistribution pnd_from_expansion(const FockExpansion& expansion) {
  if (!expansion.normalized)
    throw std::invalid_argument("pnd_from_expansion requires a normalized expansion");
  std::vector<double> probs(expansion.coefficients.size());
  for (size_t n = 0; n < probs.size(); ++n)
    probs[n] = std::norm(expansion.coefficients[n]);
  return {std::move(probs), expansion.n_max, PndSource::Oracle};
}

Moments moments(const PhotonNumberDistribution& dist) {
  double mean = 0.0, second = 0.0;
  for (size_t n = 0; n < dist.probs.size(); ++n) {
    mean += static_cast<double>(n) * dist.probs[n];
    second += static_cast<double>(n) * static_cast<double>(n) * dist.probs[n];
  }
  if (mean < 1e-14) throw ZeroMeanError();
  double variance = second - mean * mean;
  if (variance < 0.0) variance = 0.0;  // rounding near a Fock state
  return {mean, variance, variance / mean};
}

}  // namespace qsc
