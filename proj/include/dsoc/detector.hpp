#pragma once

#include "dsoc/quantities.hpp"

namespace dsoc {

/// Jitter-loss polynomial. `linear` evaluates a*Psi + b*Psi + 1;
/// `quadratic` evaluates a*Psi^2 + b*Psi + 1.
enum class JitterPolynomial { linear, quadratic };

struct JitterCoefficients {
  double a = 5.0;
  double b = 2.0;
  JitterPolynomial form = JitterPolynomial::linear;
};

struct PhotonCountingDetector {
  double quantum_efficiency = 1.0;
  double dead_time_s = 0.0;
  double jitter_sigma_s = 0.0;
  JitterCoefficients jitter{};

  void validate() const;
};

/// Photon arrival rates at the detector, photons/s.
struct FluxPair {
  double signal = 0.0;
  double noise = 0.0;

  double total() const { return signal + noise; }
};

/// l_s = P_r,ap eta_det / E and l_n = P_n / E.
FluxPair photon_flux(PowerW pr_ap, PowerW pn, double quantum_efficiency, PhotonEnergyJ photon);

/// Non-paralyzable single-detector blocking factor mu = 1 / (1 + l tau).
double blocking_loss(const FluxPair& flux, double dead_time_s);

/// Normalized jitter Psi for slot time, code rate and PPM order.
double jitter_psi(double sigma_s, double slot_time_s, double code_rate, unsigned order);

DecibelLoss jitter_loss(double psi, const JitterCoefficients& coeffs = {});

struct DetectionLosses {
  double blocking = 1.0;   // mu, linear
  DecibelLoss jitter{};    // >= 0 dB
};

/// P_r,ap L_b L_j eta_det
PowerW detected_power(PowerW pr_ap, const PhotonCountingDetector& det, const DetectionLosses& losses);

/// Power needed once the code's gap to capacity is paid.
PowerW required_power_with_coding(PowerW detected, DecibelLoss coding_gap);

}  // namespace dsoc
