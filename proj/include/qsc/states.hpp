#ifndef QSC_STATES_HPP
#define QSC_STATES_HPP

#include <complex>
#include <vector>

namespace qsc {

// N coherent states of amplitude |alpha| at equal angles on a circle, with r
// photons added to the superposition. r = 0 is a plain generalized coherent
// state; r >= 1 is its photon-added variant.
struct CircularStateSpec {
  double alpha_mag = 0.0;   // |alpha| >= 0
  unsigned order = 1;       // N >= 1
  unsigned photons_added = 0;  // r
};

// N coherent states at equal angles on an ellipse with semi-axes a >= b > 0.
// a == b degenerates to CircularStateSpec with alpha_mag = a.
struct EllipticStateSpec {
  double semi_major = 1.0;  // a
  double semi_minor = 1.0;  // b
  unsigned order = 1;       // N
  unsigned photons_added = 0;
};

// Number-basis coefficient vector; the oracle representation.
struct FockExpansion {
  std::vector<std::complex<double>> coefficients;  // index = photon number
  unsigned n_max = 0;
  bool normalized = false;
};

// Normalization constant of the circular superposition (r = 0):
//   N_norm = sqrt(N) [ sum_{j1,j2} exp(alpha_j1 alpha_j2^* - |alpha|^2) ]^(-1/2).
double gcs_normalization(const CircularStateSpec& spec);

// Normalization magnitude of the photon-added superposition (r >= 1):
//   |N_pa| = [ (r!/N) sum_{j,k} L_r(-alpha_j alpha_k^*)
//              exp(-|alpha|^2 + alpha_j alpha_k^*) ]^(-1/2).
double gpacs_normalization(const CircularStateSpec& spec);

// Normalization constant of the elliptic superposition (r = 0).
double elliptic_normalization(const EllipticStateSpec& spec);

// Distance from the origin of the j-th constituent (1 <= j <= N):
//   |alpha_j| = [ cos^2(2 pi j / N)/a^2 + sin^2(2 pi j / N)/b^2 ]^(-1/2).
double radial_distance(unsigned j, const EllipticStateSpec& spec);

// n_max covering >= 12 standard deviations of the widest Poisson envelope.
unsigned default_n_max(const CircularStateSpec& spec);
unsigned default_n_max(const EllipticStateSpec& spec);

// Brute-force number-basis expansion: sums coherent-state coefficients over
// the constituents, applies (a^dagger)^r as an index shift, and normalizes
// numerically. This is the oracle; it shares no code with the closed-form
// distributions. Throws TailMassTooLargeError if n_max is too small.
FockExpansion fock_expansion(const CircularStateSpec& spec, unsigned n_max);
FockExpansion fock_expansion(const EllipticStateSpec& spec, unsigned n_max);

}  // namespace qsc

#endif
