#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dsoc/quantities.hpp"

namespace dsoc {

/// Telescope aperture. A Cassegrain secondary obscures the primary.
struct Terminal {
  LengthM aperture_diameter;
  LengthM secondary_diameter{};
  double optics_efficiency = 1.0;

  double obscuration_ratio() const;
  void validate() const;
};

struct FixedPointingLoss {
  DecibelLoss loss{1.95};
};

/// Pointing loss from RMS pointing error sigma (rad) at probability level p0.
struct ComputedPointingLoss {
  double sigma_rad = 0.0;
  double probability_level = 0.01;
};

using PointingLossModel = std::variant<FixedPointingLoss, ComputedPointingLoss>;

struct PathEnvironment {
  double atmospheric_transmittance = 1.0;
  DecibelLoss cirrus_loss{};
  DecibelLoss scintillation_loss{};
  PointingLossModel pointing = FixedPointingLoss{};
  // Reported only; consumed by the designer's feasibility test.
  DecibelLoss link_margin{};

  void validate() const;
};

struct LinkScenario {
  Terminal tx;
  Terminal rx;
  PathEnvironment env;
  LengthM range;
  LengthM wavelength;
  PowerW tx_power;

  void validate() const;
};

/// (lambda / (4 pi R))^2
double free_space_loss(LengthM range, LengthM wavelength);

/// 2 (pi D_t / lambda)^2, Gaussian-beam transmitter.
double tx_gain(const Terminal& tx, LengthM wavelength);

/// (pi D_r / lambda)^2 (1 - gamma_r^2)
double rx_gain(const Terminal& rx, LengthM wavelength);

/// Gaussian half beamwidth w0 = 2 lambda / (pi D_t), radians.
double gaussian_half_beamwidth(const Terminal& tx, LengthM wavelength);

/// Linear pointing-loss factor in (0, 1].
double pointing_loss(const PathEnvironment& env, const Terminal& tx, LengthM wavelength);

struct BudgetTerm {
  std::string name;
  double factor;  // linear, multiplies P_t

  double db() const;  // 10 log10(factor); negative for losses
};

struct ReceivedPowerReport {
  PowerW transmit;
  PowerW received;
  std::vector<BudgetTerm> terms;
  DecibelLoss link_margin;

  /// Sum of the per-term dB values; equals dBW(received) - dBW(transmit).
  double total_db() const;
};

/// Power after the receiver telescope, before the photon detector.
ReceivedPowerReport received_power(const LinkScenario& scenario);

}  // namespace dsoc
