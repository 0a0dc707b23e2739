#ifndef QSC_SCISSORS_HPP
#define QSC_SCISSORS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "qsc/pnd.hpp"
#include "qsc/states.hpp"

namespace qsc {

// Interval of |alpha| over which a target Fock state is produced at the
// given probability threshold.
struct ParameterWindow {
  unsigned target_n = 0;
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  double threshold = 0.99;
  CircularStateSpec spec;  // alpha_mag unused

  double width() const { return alpha_hi - alpha_lo; }
};

struct TruncationLevel {
  unsigned n = 0;
  double probability = 0.0;
};

// The k most probable levels of a distribution plus the unlisted mass.
struct TruncationOutcome {
  std::vector<TruncationLevel> levels;  // probability descending, lower n on ties
  double residual = 0.0;
};

struct ReachabilityRecord {
  unsigned fock_n = 0;
  std::vector<unsigned> gcs_orders;
  std::vector<std::pair<unsigned, unsigned>> gpacs_combos;  // (N, r), r >= 1
  bool elliptic_reachable = false;
};

// Single-level closed-form probability, dispatching on photons_added.
double closed_prob_at(const CircularStateSpec& spec, unsigned n);

// Scans alpha on a coarse grid over [0, alpha_max], locates the widest
// contiguous region with P_target >= threshold and refines both endpoints by
// bisection. Returns nullopt when the selection rule forbids the target or no
// grid point qualifies. alpha_max < 0 selects the default sqrt(target_n) + 8.
std::optional<ParameterWindow> fock_window(const CircularStateSpec& spec,
                                           unsigned target_n,
                                           double threshold = 0.99,
                                           double alpha_max = -1.0,
                                           double grid_step = 0.01);

// Closed-form |alpha| at which consecutive allowed levels S N and (S+1) N
// carry equal probability.
double equal_superposition_alpha(unsigned N, unsigned S);

// Evaluates the closed-form distribution at the given alpha and reports the
// k dominant levels.
TruncationOutcome two_fock_truncation(const CircularStateSpec& spec, double alpha,
                                      unsigned k = 2);

// |F|^2 between the state at the given alpha (r = 0) and the equal
// superposition (|SN> + |(S+1)N>)/sqrt(2), from the oracle expansion.
double overlap_fidelity(const CircularStateSpec& spec, double alpha, unsigned S);

enum class TargetKind { NPlusR = 1, TwoNPlusR = 2, ThreeNPlusR = 3 };

// Window widths for target n = k N + r across orders; orders with an empty
// window are omitted.
std::vector<std::pair<unsigned, double>> delta_alpha_curve(
    const std::vector<unsigned>& orders, unsigned r, TargetKind kind,
    double threshold = 0.99);

// Per-Fock-state reachability across (N, r) combinations plus an elliptic
// sweep at the given aspect ratio over the equal-area amplitude.
std::vector<ReachabilityRecord> reachability_table(unsigned n_fock_max,
                                                   unsigned N_max, unsigned r_max,
                                                   double threshold = 0.99,
                                                   double elliptic_aspect = 5.0 / 3.2);

}  // namespace qsc

#endif
