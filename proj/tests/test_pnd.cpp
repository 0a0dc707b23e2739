#include <doctest.h>

#include <cmath>

#include "qsc/errors.hpp"
#include "qsc/pnd.hpp"
#include "qsc/states.hpp"

using qsc::CircularStateSpec;
using qsc::EllipticStateSpec;

namespace {

double max_abs_diff(const qsc::PhotonNumberDistribution& a,
                    const qsc::PhotonNumberDistribution& b) {
  double worst = 0.0;
  for (size_t n = 0; n < a.probs.size() && n < b.probs.size(); ++n)
    worst = std::max(worst, std::abs(a.probs[n] - b.probs[n]));
  return worst;
}

double sum(const qsc::PhotonNumberDistribution& dist) {
  double total = 0.0;
  for (double p : dist.probs) total += p;
  return total;
}

}  // namespace

TEST_CASE("gcs closed form point values") {
  auto cat = qsc::pnd_gcs_closed({2.0, 2, 0}, 60);
  CHECK(cat.probs[3] == 0.0);  // structural zero at odd n

  auto cs = qsc::pnd_gcs_closed({2.0, 1, 0}, 60);
  double poisson4 = std::exp(-4.0) * 256.0 / 24.0;
  CHECK(cs.probs[4] == doctest::Approx(poisson4).epsilon(1e-12));

  auto big = qsc::pnd_gcs_closed({4.0, 16, 0}, 150);
  CHECK(big.probs[16] == doctest::Approx(0.9985342280947361).epsilon(1e-10));
}

TEST_CASE("gcs closed form equals the oracle expansion") {
  for (unsigned N : {1u, 2u, 5u, 16u}) {
    for (double alpha : {0.5, 2.0, 4.0}) {
      CircularStateSpec spec{alpha, N, 0};
      unsigned n_max = qsc::default_n_max(spec);
      auto closed = qsc::pnd_gcs_closed(spec, n_max);
      auto oracle = qsc::pnd_from_expansion(qsc::fock_expansion(spec, n_max));
      CHECK(max_abs_diff(closed, oracle) <= 1e-9);
    }
  }
}

TEST_CASE("intermediate trigonometric form matches the closed form") {
  for (unsigned N : {1u, 2u, 3u, 7u, 12u}) {
    for (double alpha : {0.0, 1.0, 3.0, 6.0}) {
      CircularStateSpec spec{alpha, N, 0};
      unsigned n_max = std::max(qsc::default_n_max(spec), 100u);
      auto mid = qsc::pnd_gcs_intermediate(spec, n_max);
      auto closed = qsc::pnd_gcs_closed(spec, n_max);
      CHECK(max_abs_diff(mid, closed) <= 1e-9);
      CHECK(mid.source == qsc::PndSource::Intermediate);
      // destructive interference away from multiples of N
      for (unsigned n = 0; n <= n_max; ++n)
        if (n % N != 0) CHECK(mid.probs[n] <= 1e-9);
    }
  }
}

TEST_CASE("gpacs closed form point values") {
  auto nearly_one = qsc::pnd_gpacs_closed({0.001, 4, 1}, 40);
  CHECK(nearly_one.probs[1] == doctest::Approx(1.0).epsilon(1e-5));

  auto skipped = qsc::pnd_gpacs_closed({3.0, 5, 2}, 80);
  CHECK(skipped.probs[6] == 0.0);  // (6-2) mod 5 != 0

  CircularStateSpec spec{3.0, 6, 4};
  unsigned n_max = qsc::default_n_max(spec);
  auto closed = qsc::pnd_gpacs_closed(spec, n_max);
  auto oracle = qsc::pnd_from_expansion(qsc::fock_expansion(spec, n_max));
  CHECK(std::abs(closed.probs[10] - oracle.probs[10]) <= 1e-9);
}

TEST_CASE("gpacs closed form equals the oracle expansion") {
  for (unsigned N : {1u, 3u, 6u}) {
    for (unsigned r : {1u, 2u, 4u}) {
      for (double alpha : {0.5, 2.0, 4.0}) {
        CircularStateSpec spec{alpha, N, r};
        unsigned n_max = qsc::default_n_max(spec);
        auto closed = qsc::pnd_gpacs_closed(spec, n_max);
        auto oracle = qsc::pnd_from_expansion(qsc::fock_expansion(spec, n_max));
        CHECK(max_abs_diff(closed, oracle) <= 1e-9);
      }
    }
  }
}

TEST_CASE("elliptic distribution degenerates and matches its oracle") {
  EllipticStateSpec round{4.0, 4.0, 16, 0};
  unsigned n_max = qsc::default_n_max(round);
  auto elliptic = qsc::pnd_elliptic(round, n_max);
  auto circular = qsc::pnd_gcs_closed({4.0, 16, 0}, n_max);
  CHECK(max_abs_diff(elliptic, circular) <= 1e-10);

  EllipticStateSpec squashed{5.0, 3.2, 16, 0};
  unsigned m = qsc::default_n_max(squashed);
  auto dist = qsc::pnd_elliptic(squashed, m);
  CHECK(dist.probs[16] == doctest::Approx(0.83713546482).epsilon(1e-7));
  auto oracle = qsc::pnd_from_expansion(qsc::fock_expansion(squashed, m));
  CHECK(max_abs_diff(dist, oracle) <= 1e-10);
}

TEST_CASE("pnd_from_expansion on basis states") {
  qsc::FockExpansion basis;
  basis.coefficients.assign(10, 0.0);
  basis.coefficients[7] = 1.0;
  basis.n_max = 9;
  basis.normalized = true;
  auto dist = qsc::pnd_from_expansion(basis);
  CHECK(dist.probs[7] == 1.0);
  CHECK(dist.source == qsc::PndSource::Oracle);

  qsc::FockExpansion pair;
  pair.coefficients.assign(20, 0.0);
  pair.coefficients[0] = 1.0 / std::sqrt(2.0);
  pair.coefficients[16] = 1.0 / std::sqrt(2.0);
  pair.n_max = 19;
  pair.normalized = true;
  auto two = qsc::pnd_from_expansion(pair);
  CHECK(two.probs[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(two.probs[16] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("normalization closure everywhere") {
  CHECK(std::abs(sum(qsc::pnd_gcs_closed({3.0, 4, 0}, 120)) - 1.0) <= 1e-10);
  CHECK(std::abs(sum(qsc::pnd_gcs_intermediate({3.0, 4, 0}, 120)) - 1.0) <= 1e-10);
  CHECK(std::abs(sum(qsc::pnd_gpacs_closed({3.0, 4, 2}, 120)) - 1.0) <= 1e-10);
  CHECK(std::abs(sum(qsc::pnd_elliptic({5.0, 3.2, 8, 0}, 160)) - 1.0) <= 1e-10);
}

TEST_CASE("envelope factor is constant across contributing levels") {
  CircularStateSpec spec{3.0, 4, 0};
  auto dist = qsc::pnd_gcs_closed(spec, qsc::default_n_max(spec));
  double reference = 0.0;
  bool have_reference = false;
  for (unsigned n = 0; n < dist.probs.size(); n += 4) {
    if (dist.probs[n] < 1e-20) continue;
    double log_envelope = std::log(dist.probs[n]) + std::lgamma(n + 1.0) -
                          2.0 * n * std::log(3.0);
    if (!have_reference) {
      reference = log_envelope;
      have_reference = true;
    } else {
      CHECK(std::abs(log_envelope - reference) <= 1e-9);
    }
  }
  CHECK(have_reference);
}

TEST_CASE("undersized truncation is rejected") {
  CHECK_THROWS_AS(qsc::pnd_gcs_closed({4.0, 1, 0}, 20), qsc::TailMassTooLargeError);
}

TEST_CASE("moments and Fano factor") {
  auto cs = qsc::pnd_gcs_closed({2.5, 1, 0}, 90);
  auto m = qsc::moments(cs);
  CHECK(m.mean == doctest::Approx(6.25).epsilon(1e-9));
  CHECK(m.fano == doctest::Approx(1.0).epsilon(1e-9));

  auto fock = qsc::pnd_gpacs_closed({0.0, 5, 3}, 40);
  auto mf = qsc::moments(fock);
  CHECK(mf.mean == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(mf.variance == 0.0);
  CHECK(mf.fano == 0.0);

  CircularStateSpec cat{2.0, 2, 0};
  unsigned n_max = qsc::default_n_max(cat);
  auto closed = qsc::moments(qsc::pnd_gcs_closed(cat, n_max));
  auto oracle = qsc::moments(qsc::pnd_from_expansion(qsc::fock_expansion(cat, n_max)));
  CHECK(std::abs(closed.fano - oracle.fano) <= 1e-9);

  auto vacuum = qsc::pnd_gcs_closed({0.0, 3, 0}, 10);
  CHECK_THROWS_AS(qsc::moments(vacuum), qsc::ZeroMeanError);
}

TEST_CASE("Fano factor of the hexagonal state oscillates around one") {
  bool above = false, below = false;
  for (double alpha = 1.0; alpha <= 6.0 + 1e-9; alpha += 0.05) {
    CircularStateSpec spec{alpha, 6, 0};
    auto m = qsc::moments(qsc::pnd_gcs_closed(spec, qsc::default_n_max(spec)));
    if (m.fano > 1.0) above = true;
    if (m.fano < 1.0) below = true;
  }
  CHECK(above);
  CHECK(below);
}
