#include "qsc/states.hpp"

#include <cmath>
#include <numbers>

#include "qsc/errors.hpp"
#include "qsc/numerics.hpp"

namespace qsc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Unit phase e^{i 2 pi k / N} with the angle reduced modulo N first, so that
// opposite constituents cancel exactly in the oracle sums.
std::complex<double> unit_phase(long long k, unsigned N) {
  long long m = k % static_cast<long long>(N);
  if (m < 0) m += N;
  double angle = kTwoPi * static_cast<double>(m) / static_cast<double>(N);
  return {std::cos(angle), std::sin(angle)};
}

// `scale` is the sum of the term magnitudes; the imaginary residue of the
// conjugate-symmetric double sum must be rounding-level relative to it.
double check_norm_sum(std::complex<double> sum, double scale) {
  if (std::abs(sum.imag()) > std::max(1e-10 * scale, 1e-12))
    throw NumericError("normalization sum has non-negligible imaginary part");
  if (sum.real() <= 0.0) throw NonPositiveNormSumError(sum.real());
  return sum.real();
}

// Applies (a^dagger)^r by index shift and normalizes in place.
void add_photons_and_normalize(std::vector<std::complex<double>>& c, unsigned r) {
  unsigned n_max = static_cast<unsigned>(c.size()) - 1;
  if (r > 0) {
    for (unsigned n = n_max + 1; n-- > 0;) {
      if (n >= r) {
        unsigned m = n - r;
        double scale = std::exp(0.5 * (log_factorial(n) - log_factorial(m)));
        c[n] = c[m] * scale;
      } else {
        c[n] = 0.0;
      }
    }
  }

  double total = 0.0;
  for (const auto& z : c) total += std::norm(z);
  if (total <= 0.0) throw NonPositiveNormSumError(total);

  // Tail heuristic: the topmost coefficients must carry negligible mass.
  unsigned tail = std::min<unsigned>(5, n_max + 1);
  double tail_mass = 0.0;
  for (unsigned n = n_max + 1 - tail; n <= n_max; ++n) tail_mass += std::norm(c[n]);
  if (tail_mass / total > 1e-12) throw TailMassTooLargeError(tail_mass / total);

  double inv = 1.0 / std::sqrt(total);
  for (auto& z : c) z *= inv;
}

}  // namespace

double gcs_normalization(const CircularStateSpec& spec) {
  unsigned N = spec.order;
  double a2 = spec.alpha_mag * spec.alpha_mag;
  std::complex<double> sum = 0.0;
  double scale = 0.0;
  for (unsigned j1 = 1; j1 <= N; ++j1)
    for (unsigned j2 = 1; j2 <= N; ++j2) {
      // alpha_j1 alpha_j2^* = |alpha|^2 e^{i 2 pi (j1-j2)/N}
      std::complex<double> cross = a2 * unit_phase(static_cast<long long>(j1) - j2, N);
      std::complex<double> term = std::exp(cross - a2);
      sum += term;
      scale += std::abs(term);
    }
  double s = check_norm_sum(sum, scale);
  return std::sqrt(static_cast<double>(N)) / std::sqrt(s);
}

double gpacs_normalization(const CircularStateSpec& spec) {
  unsigned N = spec.order;
  unsigned r = spec.photons_added;
  double a2 = spec.alpha_mag * spec.alpha_mag;
  std::complex<double> sum = 0.0;
  double scale = 0.0;
  for (unsigned j = 1; j <= N; ++j)
    for (unsigned k = 1; k <= N; ++k) {
      std::complex<double> cross = a2 * unit_phase(static_cast<long long>(j) - k, N);
      std::complex<double> term = laguerre(r, -cross) * std::exp(cross - a2);
      sum += term;
      scale += std::abs(term);
    }
  double s = check_norm_sum(sum, scale);
  double scaled = std::exp(log_factorial(r)) / static_cast<double>(N) * s;
  if (scaled <= 0.0) throw NonPositiveNormSumError(scaled);
  return 1.0 / std::sqrt(scaled);
}

double radial_distance(unsigned j, const EllipticStateSpec& spec) {
  double angle = kTwoPi * static_cast<double>(j) / static_cast<double>(spec.order);
  double c = std::cos(angle), s = std::sin(angle);
  double inv2 = c * c / (spec.semi_major * spec.semi_major) +
                s * s / (spec.semi_minor * spec.semi_minor);
  return 1.0 / std::sqrt(inv2);
}

double elliptic_normalization(const EllipticStateSpec& spec) {
  unsigned N = spec.order;
  std::vector<double> mag(N);
  for (unsigned j = 1; j <= N; ++j) mag[j - 1] = radial_distance(j, spec);
  std::complex<double> sum = 0.0;
  double scale = 0.0;
  for (unsigned j = 1; j <= N; ++j)
    for (unsigned k = 1; k <= N; ++k) {
      double mj = mag[j - 1], mk = mag[k - 1];
      std::complex<double> cross =
          mj * mk * unit_phase(static_cast<long long>(k) - j, N);
      std::complex<double> term = std::exp(cross - 0.5 * (mj * mj + mk * mk));
      sum += term;
      scale += std::abs(term);
    }
  double s = check_norm_sum(sum, scale);
  return std::sqrt(static_cast<double>(N)) / std::sqrt(s);
}

unsigned default_n_max(const CircularStateSpec& spec) {
  double mu = spec.alpha_mag * spec.alpha_mag;
  return static_cast<unsigned>(std::ceil(mu + 12.0 * std::sqrt(mu) + spec.order +
                                         spec.photons_added + 25.0));
}

unsigned default_n_max(const EllipticStateSpec& spec) {
  double mu = spec.semi_major * spec.semi_major;
  return static_cast<unsigned>(std::ceil(mu + 12.0 * std::sqrt(mu) + spec.order +
                                         spec.photons_added + 25.0));
}

FockExpansion fock_expansion(const CircularStateSpec& spec, unsigned n_max) {
  unsigned N = spec.order;
  double alpha = spec.alpha_mag;
  std::vector<std::complex<double>> c(n_max + 1, 0.0);
  if (alpha == 0.0) {
    c[0] = static_cast<double>(N);
  } else {
    double a2 = alpha * alpha;
    double log_alpha = std::log(alpha);
    for (unsigned n = 0; n <= n_max; ++n) {
      double mag = std::exp(-0.5 * a2 + n * log_alpha - 0.5 * log_factorial(n));
      std::complex<double> phase_sum = 0.0;
      for (unsigned j = 1; j <= N; ++j)
        phase_sum += unit_phase(static_cast<long long>(j) * n, N);
      c[n] = mag * phase_sum;
    }
  }
  add_photons_and_normalize(c, spec.photons_added);
  return {std::move(c), n_max, true};
}

FockExpansion fock_expansion(const EllipticStateSpec& spec, unsigned n_max) {
  unsigned N = spec.order;
  std::vector<double> mag(N), logmag(N);
  for (unsigned j = 1; j <= N; ++j) {
    mag[j - 1] = radial_distance(j, spec);
    logmag[j - 1] = std::log(mag[j - 1]);
  }
  std::vector<std::complex<double>> c(n_max + 1, 0.0);
  for (unsigned n = 0; n <= n_max; ++n) {
    std::complex<double> term = 0.0;
    for (unsigned j = 1; j <= N; ++j) {
      double mj = mag[j - 1];
      double m = std::exp(-0.5 * mj * mj + n * logmag[j - 1] - 0.5 * log_factorial(n));
      term += m * unit_phase(static_cast<long long>(j) * n, N);
    }
    c[n] = term;
  }
  add_photons_and_normalize(c, spec.photons_added);
  return {std::move(c), n_max, true};
}

}  // namespace qsc
