#include "dsoc/detector.hpp"

#include <bit>
#include <cmath>

namespace dsoc {

void PhotonCountingDetector::validate() const {
  require(quantum_efficiency > 0.0 && quantum_efficiency <= 1.0, "quantum efficiency must lie in (0, 1]");
  require(dead_time_s >= 0.0, "dead time must be >= 0");
  require(jitter_sigma_s >= 0.0, "jitter sigma must be >= 0");
}

FluxPair photon_flux(PowerW pr_ap, PowerW pn, double quantum_efficiency, PhotonEnergyJ photon) {
  require(quantum_efficiency > 0.0 && quantum_efficiency <= 1.0, "quantum efficiency must lie in (0, 1]");
  return {pr_ap.value() * quantum_efficiency / photon.value(), pn.value() / photon.value()};
}

double blocking_loss(const FluxPair& flux, double dead_time_s) {
  require(dead_time_s >= 0.0, "dead time must be >= 0");
  require(flux.signal >= 0.0 && flux.noise >= 0.0, "photon flux must be >= 0");
  return 1.0 / (1.0 + flux.total() * dead_time_s);
}

double jitter_psi(double sigma_s, double slot_time_s, double code_rate, unsigned order) {
  require(slot_time_s > 0.0, "slot time must be > 0");
  require(sigma_s >= 0.0, "jitter sigma must be >= 0");
  require(code_rate > 0.0 && code_rate <= 1.0, "code rate must lie in (0, 1]");
  require(order >= 2 && std::has_single_bit(order), "PPM order must be a power of two >= 2");
  const double bits = std::log2(static_cast<double>(order));
  return (sigma_s / slot_time_s) * (1.0 + std::tanh(code_rate - 0.5)) / std::pow(1.25, bits);
}

DecibelLoss jitter_loss(double psi, const JitterCoefficients& coeffs) {
  require(psi >= 0.0, "Psi must be >= 0");
  const double first = coeffs.form == JitterPolynomial::quadratic ? psi * psi : psi;
  return DecibelLoss(10.0 * std::log10(coeffs.a * first + coeffs.b * psi + 1.0));
}

PowerW detected_power(PowerW pr_ap, const PhotonCountingDetector& det, const DetectionLosses& losses) {
  det.validate();
  require(losses.blocking > 0.0 && losses.blocking <= 1.0, "blocking factor must lie in (0, 1]");
  require(losses.jitter.value() >= 0.0, "jitter loss must be >= 0 dB");
  return PowerW(pr_ap.value() * losses.blocking * db_to_linear(losses.jitter) * det.quantum_efficiency);
}

PowerW required_power_with_coding(PowerW detected, DecibelLoss coding_gap) {
  require(coding_gap.value() >= 0.0, "coding efficiency gap must be >= 0 dB");
  return PowerW(detected.value() / db_to_linear(coding_gap));
}

}  // namespace dsoc
