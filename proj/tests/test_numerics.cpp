#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qsc/errors.hpp"
#include "qsc/numerics.hpp"

using qsc::LogWeight;
using std::complex;

namespace {

// Independent oracle: plain cumulative sum of logs in long double.
double log_factorial_oracle(unsigned n) {
  long double sum = 0.0L;
  for (unsigned k = 1; k <= n; ++k) sum += std::log(static_cast<long double>(k));
  return static_cast<double>(sum);
}

// Independent oracle: finite power series, usable for small r.
complex<double> laguerre_series(unsigned r, complex<double> z) {
  complex<double> sum = 0.0;
  double binom = 1.0;  // C(r, k)
  double kfact = 1.0;
  double sign = 1.0;
  for (unsigned k = 0; k <= r; ++k) {
    if (k > 0) {
      binom *= static_cast<double>(r - k + 1) / k;
      kfact *= k;
      sign = -sign;
    }
    sum += sign * binom / kfact * std::pow(z, static_cast<double>(k));
  }
  return sum;
}

}  // namespace

TEST_CASE("log_factorial at small arguments") {
  CHECK(qsc::log_factorial(0) == 0.0);
  CHECK(qsc::log_factorial(1) == 0.0);
  CHECK(qsc::log_factorial(5) ==
        doctest::Approx(std::log(120.0)).epsilon(1e-14));
}

TEST_CASE("log_factorial against the cumulative-sum oracle") {
  for (unsigned n : {2u, 10u, 170u, 500u, 2000u}) {
    double expected = log_factorial_oracle(n);
    CHECK(std::abs(qsc::log_factorial(n) - expected) <= 1e-12 * expected);
  }
}

TEST_CASE("log_factorial difference identity") {
  for (unsigned n = 1; n <= 2000; ++n) {
    double diff = qsc::log_factorial(n) - qsc::log_factorial(n - 1);
    // the subtraction of two large logs costs a few ulp of their magnitude
    double tolerance = 1e-15 * qsc::log_factorial(n) + 1e-13;
    CHECK(std::abs(diff - std::log(static_cast<double>(n))) <= tolerance);
  }
}

TEST_CASE("laguerre base cases") {
  CHECK(qsc::laguerre(0, {17.0, -3.0}) == complex<double>(1.0, 0.0));
  CHECK(qsc::laguerre(1, {3.0, 0.0}).real() == doctest::Approx(-2.0));
  CHECK(std::abs(qsc::laguerre(1, {3.0, 0.0}).imag()) <= 1e-12);
  // L_2(x) = (x^2 - 4x + 2)/2 at x = 2
  CHECK(qsc::laguerre(2, {2.0, 0.0}).real() == doctest::Approx(-1.0));
}

TEST_CASE("laguerre recurrence against the power series") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> coord(-35.0, 35.0);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned r = rng() % 11;
    complex<double> z(coord(rng), coord(rng));
    if (std::abs(z) > 50.0) z *= 50.0 / std::abs(z);
    complex<double> got = qsc::laguerre(r, z);
    complex<double> expected = laguerre_series(r, z);
    CHECK(std::abs(got - expected) <= 1e-7 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("laguerre satisfies the recurrence identically") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coord(-35.0, 35.0);
  for (int trial = 0; trial < 100; ++trial) {
    unsigned r = 2 + rng() % 49;
    complex<double> z(coord(rng), coord(rng));
    complex<double> lm1 = qsc::laguerre(r - 1, z);
    complex<double> lm2 = qsc::laguerre(r - 2, z);
    complex<double> expected =
        ((2.0 * (r - 1) + 1.0 - z) * lm1 - (r - 1.0) * lm2) / static_cast<double>(r);
    complex<double> got = qsc::laguerre(r, z);
    CHECK(std::abs(got - expected) <= 1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("normalize_log_weights basic ratios") {
  auto equal = qsc::normalize_log_weights(
      {LogWeight::from_log(0.0), LogWeight::from_log(0.0)});
  CHECK(equal[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(equal[1] == doctest::Approx(0.5).epsilon(1e-12));

  auto mixed = qsc::normalize_log_weights(
      {LogWeight::from_log(0.0), LogWeight::zero(), LogWeight::from_log(std::log(3.0))});
  CHECK(mixed[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(mixed[1] == 0.0);
  CHECK(mixed[2] == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("normalize_log_weights is shift invariant and overflow safe") {
  auto big = qsc::normalize_log_weights(
      {LogWeight::from_log(1000.0), LogWeight::from_log(1001.0)});
  auto small = qsc::normalize_log_weights(
      {LogWeight::from_log(0.0), LogWeight::from_log(1.0)});
  CHECK(big[0] == doctest::Approx(small[0]).epsilon(1e-14));
  CHECK(big[1] == doctest::Approx(small[1]).epsilon(1e-14));
  CHECK(big[0] == doctest::Approx(1.0 / (1.0 + std::exp(1.0))).epsilon(1e-12));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> mag(-40.0, 40.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<LogWeight> ws, shifted;
    double shift = mag(rng) * 25.0;
    for (int i = 0; i < 12; ++i) {
      double lm = mag(rng);
      bool zero = (rng() % 5) == 0;
      ws.push_back(zero ? LogWeight::zero() : LogWeight::from_log(lm));
      shifted.push_back(zero ? LogWeight::zero() : LogWeight::from_log(lm + shift));
    }
    bool any = false;
    for (const auto& w : ws) any = any || !w.zero_flag;
    if (!any) continue;
    auto p = qsc::normalize_log_weights(ws);
    auto q = qsc::normalize_log_weights(shifted);
    double sum = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
      CHECK(std::abs(p[i] - q[i]) <= 1e-12);
      sum += p[i];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("normalize_log_weights rejects all-zero input") {
  CHECK_THROWS_AS(qsc::normalize_log_weights({LogWeight::zero(), LogWeight::zero()}),
                  qsc::AllZeroError);
}
