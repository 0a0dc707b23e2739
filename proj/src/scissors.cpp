#include "qsc/scissors.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "qsc/errors.hpp"
#include "qsc/numerics.hpp"

namespace qsc {

namespace {

bool selection_allows(const CircularStateSpec& spec, unsigned target_n) {
  unsigned r = spec.photons_added;
  if (target_n < r) return false;
  return (target_n - r) % spec.order == 0;
}

double prob_at_alpha(CircularStateSpec spec, double alpha, unsigned target_n) {
  spec.alpha_mag = alpha;
  return closed_prob_at(spec, target_n);
}

}  // namespace

double closed_prob_at(const CircularStateSpec& spec, unsigned n) {
  if (!selection_allows(spec, n)) return 0.0;
  unsigned N = spec.order;
  unsigned r = spec.photons_added;
  double alpha = spec.alpha_mag;
  if (alpha == 0.0) return n == r ? 1.0 : 0.0;

  double a2 = alpha * alpha;
  double log_alpha = std::log(alpha);
  if (r == 0) {
    double norm = gcs_normalization(spec);
    return std::exp(std::log(norm * norm * N) - a2 + 2.0 * n * log_alpha -
                    log_factorial(n));
  }
  double norm = gpacs_normalization(spec);
  unsigned m = n - r;
  return std::exp(std::log(norm * norm * N) - a2 + 2.0 * m * log_alpha +
                  log_factorial(n) - 2.0 * log_factorial(m));
}

std::optional<ParameterWindow> fock_window(const CircularStateSpec& spec,
                                           unsigned target_n, double threshold,
                                           double alpha_max, double grid_step) {
  if (!selection_allows(spec, target_n)) return std::nullopt;
  if (alpha_max < 0.0) alpha_max = std::sqrt(static_cast<double>(target_n)) + 8.0;

  std::vector<double> grid;
  for (double a = 0.0; a <= alpha_max + grid_step / 2; a += grid_step)
    grid.push_back(a);

  auto qualifies = [&](double a) {
    return prob_at_alpha(spec, a, target_n) >= threshold;
  };

  std::vector<char> ok(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) ok[i] = qualifies(grid[i]);

  // Widest contiguous qualifying run; warn if the region is not unique.
  size_t best_lo = 0, best_hi = 0;
  bool found = false;
  int regions = 0;
  for (size_t i = 0; i < grid.size();) {
    if (!ok[i]) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j + 1 < grid.size() && ok[j + 1]) ++j;
    ++regions;
    if (!found || j - i > best_hi - best_lo) {
      best_lo = i;
      best_hi = j;
      found = true;
    }
    i = j + 1;
  }
  if (!found) return std::nullopt;
  if (regions > 1)
    std::cerr << "warning: " << regions
              << " disjoint qualifying regions for target n=" << target_n
              << "; reporting the widest\n";

  auto refine = [&](double inside, double outside) {
    for (int iter = 0; iter < 60 && std::abs(inside - outside) > 1e-6; ++iter) {
      double mid = 0.5 * (inside + outside);
      (qualifies(mid) ? inside : outside) = mid;
    }
    return inside;
  };

  ParameterWindow window;
  window.target_n = target_n;
  window.threshold = threshold;
  window.spec = spec;
  window.alpha_lo =
      best_lo == 0 ? grid.front() : refine(grid[best_lo], grid[best_lo - 1]);
  window.alpha_hi = best_hi + 1 == grid.size()
                        ? grid.back()
                        : refine(grid[best_hi], grid[best_hi + 1]);
  return window;
}

double equal_superposition_alpha(unsigned N, unsigned S) {
  double num = log_factorial((S + 1) * N) - log_factorial(S * N);
  return std::exp(num / (2.0 * N));
}

TruncationOutcome two_fock_truncation(const CircularStateSpec& spec, double alpha,
                                      unsigned k) {
  CircularStateSpec at = spec;
  at.alpha_mag = alpha;
  unsigned n_max = default_n_max(at);
  PhotonNumberDistribution dist = at.photons_added == 0
                                      ? pnd_gcs_closed(at, n_max)
                                      : pnd_gpacs_closed(at, n_max);

  std::vector<TruncationLevel> levels;
  for (unsigned n = 0; n <= n_max; ++n)
    if (dist.probs[n] > 0.0) levels.push_back({n, dist.probs[n]});
  std::sort(levels.begin(), levels.end(), [](const auto& a, const auto& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    return a.n < b.n;
  });
  if (levels.size() > k) levels.resize(k);

  double listed = 0.0;
  for (const auto& lvl : levels) listed += lvl.probability;
  return {std::move(levels), std::max(0.0, 1.0 - listed)};
}

double overlap_fidelity(const CircularStateSpec& spec, double alpha, unsigned S) {
  if (spec.photons_added != 0)
    throw std::invalid_argument("overlap_fidelity requires r = 0");
  CircularStateSpec at = spec;
  at.alpha_mag = alpha;
  unsigned top = (S + 1) * spec.order;
  unsigned n_max = std::max(default_n_max(at), top + 25);
  FockExpansion expansion = fock_expansion(at, n_max);
  std::complex<double> f =
      (expansion.coefficients[S * spec.order] + expansion.coefficients[top]) /
      std::sqrt(2.0);
  return std::norm(f);
}

std::vector<std::pair<unsigned, double>> delta_alpha_curve(
    const std::vector<unsigned>& orders, unsigned r, TargetKind kind,
    double threshold) {
  std::vector<std::pair<unsigned, double>> out;
  unsigned multiple = static_cast<unsigned>(kind);
  for (unsigned N : orders) {
    CircularStateSpec spec{0.0, N, r};
    unsigned target = multiple * N + r;
    if (auto window = fock_window(spec, target, threshold))
      out.emplace_back(N, window->width());
  }
  return out;
}

std::vector<ReachabilityRecord> reachability_table(unsigned n_fock_max,
                                                   unsigned N_max, unsigned r_max,
                                                   double threshold,
                                                   double elliptic_aspect) {
  // One elliptic sweep serves every row: track the best probability each
  // level attains over all orders and equal-area amplitudes.
  std::vector<double> elliptic_best(n_fock_max + 1, 0.0);
  double alpha_top = std::sqrt(static_cast<double>(n_fock_max)) + 8.0;
  double ratio = std::sqrt(elliptic_aspect);
  for (unsigned N = 1; N <= N_max; ++N) {
    for (double alpha = 0.05; alpha <= alpha_top; alpha += 0.05) {
      EllipticStateSpec espec{alpha * ratio, alpha / ratio, N, 0};
      PhotonNumberDistribution dist = pnd_elliptic(espec, default_n_max(espec));
      for (unsigned n = 0; n <= n_fock_max && n < dist.probs.size(); ++n)
        elliptic_best[n] = std::max(elliptic_best[n], dist.probs[n]);
    }
  }

  std::vector<ReachabilityRecord> records;
  for (unsigned fock_n = 0; fock_n <= n_fock_max; ++fock_n) {
    ReachabilityRecord rec;
    rec.fock_n = fock_n;
    for (unsigned N = 1; N <= N_max; ++N) {
      CircularStateSpec spec{0.0, N, 0};
      if (fock_window(spec, fock_n, threshold)) rec.gcs_orders.push_back(N);
    }
    for (unsigned N = 1; N <= N_max; ++N)
      for (unsigned r = 1; r <= r_max; ++r) {
        CircularStateSpec spec{0.0, N, r};
        if (!selection_allows(spec, fock_n)) continue;
        if (fock_window(spec, fock_n, threshold)) rec.gpacs_combos.emplace_back(N, r);
      }
    rec.elliptic_reachable = elliptic_best[fock_n] >= threshold;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace qsc
