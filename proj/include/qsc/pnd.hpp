#ifndef QSC_PND_HPP
#define QSC_PND_HPP

#include <vector>

#include "qsc/states.hpp"

namespace qsc {

enum class PndSource { ClosedForm, Intermediate, Oracle };

struct PhotonNumberDistribution {
  std::vector<double> probs;  // index = photon number
  unsigned n_max = 0;
  PndSource source = PndSource::ClosedForm;
};

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double fano = 0.0;  // variance / mean
};

// Closed-form distribution of the circular superposition (r = 0):
//   P_n = |N_norm|^2 N e^{-|alpha|^2} |alpha|^{2n} / n!  at n = S N,
// exactly 0 elsewhere. Evaluated in the log domain.
PhotonNumberDistribution pnd_gcs_closed(const CircularStateSpec& spec, unsigned n_max);

// Same distribution through the finite trigonometric bracket
//   N + 2 sum_{m=1}^{N-1} (N - m) cos(2 pi n m / N),
// which sidesteps the removable 0/0 of the sine-ratio form. Exists as a
// cross-check of the closed form; must agree with it within 1e-9.
PhotonNumberDistribution pnd_gcs_intermediate(const CircularStateSpec& spec,
                                              unsigned n_max);

// Closed-form distribution of the photon-added superposition (r >= 1):
//   P_n = |N_pa|^2 N e^{-|alpha|^2} |alpha|^{2(n-r)} n! / [(n-r)!]^2
// at n = S N + r, exactly 0 elsewhere.
PhotonNumberDistribution pnd_gpacs_closed(const CircularStateSpec& spec,
                                          unsigned n_max);

// Distribution of the elliptic superposition (r = 0), as the modulus squared
// of the amplitude c_n = (N_e / sqrt(N)) sum_j e^{-|alpha_j|^2/2}
// |alpha_j|^n e^{i 2 pi j n / N} / sqrt(n!).
PhotonNumberDistribution pnd_elliptic(const EllipticStateSpec& spec, unsigned n_max);

// Oracle path: P_n = |c_n|^2.
PhotonNumberDistribution pnd_from_expansion(const FockExpansion& expansion);

// Mean, variance and Fano factor. Throws ZeroMeanError when the mean
// vanishes (Fano undefined).
Moments moments(const PhotonNumberDistribution& dist);

}  // namespace qsc

#endif
