#include <doctest.h>

#include <cmath>
#include <random>

#include "dsoc/detector.hpp"

using namespace dsoc;
using doctest::Approx;

namespace {
const PhotonEnergyJ kE = photon_energy(LengthM::from_nm(1550));
}

TEST_CASE("photon flux") {
  const auto f = photon_flux(PowerW(4.5053e-12), PowerW(1.162e-16), 0.5, kE);
  CHECK(f.signal == Approx(4.5053e-12 * 0.5 * 1550e-9 / 1.98644586e-25).epsilon(1e-8));
  CHECK(f.signal == Approx(1.757e7).epsilon(1e-3));
  CHECK(f.noise == Approx(1.162e-16 / kE.value()).epsilon(1e-12));
  CHECK(f.total() == f.signal + f.noise);
}

TEST_CASE("blocking loss") {
  CHECK(blocking_loss(FluxPair{1e9, 0.0}, 0.0) == 1.0);
  CHECK(blocking_loss(FluxPair{0.0, 0.0}, 50e-9) == 1.0);
  CHECK(blocking_loss(FluxPair{1e7, 1e7}, 50e-9) == Approx(0.5).epsilon(1e-12));

  const auto mars = photon_flux(PowerW(4.5053e-12), PowerW(1.162e-16), 0.5, kE);
  const double mu = blocking_loss(mars, 50e-9);
  CHECK(mu == Approx(0.532).epsilon(2e-3));
  CHECK(10 * std::log10(mu) == Approx(-2.74).epsilon(0.01 / 2.74));
  CHECK_THROWS_AS(blocking_loss(FluxPair{1.0, 0.0}, -1.0), InvalidInput);
}

TEST_CASE("blocking decreases with flux and dead time") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 100.0);
  for (int i = 0; i < 500; ++i) {
    const double l = 1e6 * u(rng);
    const double tau = 1e-8 * u(rng);
    const double mu = blocking_loss(FluxPair{l, 0.0}, tau);
    CHECK(mu > 0.0);
    CHECK(mu <= 1.0);
    CHECK(blocking_loss(FluxPair{l * 1.1, 0.0}, tau) < mu);
    CHECK(blocking_loss(FluxPair{l, 0.0}, tau * 1.1) < mu);
  }
}

TEST_CASE("jitter psi") {
  CHECK(jitter_psi(0.0, 1e-9, 0.5, 16) == 0.0);
  CHECK(jitter_psi(1e-9, 1e-9, 0.5, 16) == Approx(1.0 / std::pow(1.25, 4)).epsilon(1e-12));
  CHECK(jitter_psi(1e-9, 1e-9, 0.5, 16) == Approx(0.4096).epsilon(1e-12));
  // (1 + tanh(R - 0.5)) at R = 1, M = 2: one factor of 1.25.
  CHECK(jitter_psi(2e-9, 1e-9, 1.0, 2) == Approx(2 * (1 + std::tanh(0.5)) / 1.25).epsilon(1e-12));
  CHECK_THROWS_AS(jitter_psi(1e-9, 0.0, 0.5, 16), InvalidInput);
  CHECK_THROWS_AS(jitter_psi(1e-9, 1e-9, 0.0, 16), InvalidInput);
}

TEST_CASE("jitter loss") {
  CHECK(jitter_loss(0.0).value() == 0.0);
  CHECK(jitter_loss(0.4096).value() == Approx(10 * std::log10(1 + 7 * 0.4096)).epsilon(1e-12));
  CHECK(jitter_loss(0.4096).value() == Approx(5.87).epsilon(0.005 / 5.87));
  CHECK(jitter_loss(1e-9).value() < 1e-7);

  const JitterCoefficients quad{5.0, 2.0, JitterPolynomial::quadratic};
  CHECK(jitter_loss(0.5, quad).value() == Approx(10 * std::log10(5 * 0.25 + 2 * 0.5 + 1)).epsilon(1e-12));

  double prev = -1.0;
  for (double psi = 0.0; psi < 10.0; psi += 0.05) {
    const double l = jitter_loss(psi).value();
    CHECK(l > prev);
    prev = l;
  }
}

TEST_CASE("detected power") {
  PhotonCountingDetector ideal;
  CHECK(detected_power(PowerW(1e-12), ideal, {}).value() == 1e-12);

  PhotonCountingDetector half;
  half.quantum_efficiency = 0.5;
  CHECK(detected_power(PowerW(1e-12), half, {}).value() == Approx(0.5e-12).epsilon(1e-15));

  const double mu = 0.532;
  const auto mars = detected_power(PowerW(1.0), half, DetectionLosses{mu, DecibelLoss(0.0)});
  CHECK(mars.value() == Approx(0.266).epsilon(1e-12));
  CHECK(10 * std::log10(mars.value()) == Approx(-5.75).epsilon(0.01 / 5.75));

  const auto jittered = detected_power(PowerW(1.0), ideal, DetectionLosses{1.0, DecibelLoss(3.0)});
  CHECK(jittered.value() == Approx(std::pow(10.0, -0.3)).epsilon(1e-12));
}

TEST_CASE("detected power never exceeds aperture power") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    PhotonCountingDetector det;
    det.quantum_efficiency = 0.01 + 0.99 * u(rng);
    const DetectionLosses losses{0.01 + 0.99 * u(rng), DecibelLoss(20 * u(rng))};
    const double pr = 1e-12 * (0.1 + u(rng));
    CHECK(detected_power(PowerW(pr), det, losses).value() <= pr);
  }
}

TEST_CASE("coding gap") {
  CHECK(required_power_with_coding(PowerW(1e-12), DecibelLoss(0.0)).value() == 1e-12);
  CHECK(required_power_with_coding(PowerW(1.0), DecibelLoss(0.5)).value() == Approx(1.122).epsilon(1e-3));
  CHECK(required_power_with_coding(PowerW(1.0), DecibelLoss(2.5)).value() == Approx(1.778).epsilon(1e-3));
}
