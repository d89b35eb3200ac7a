#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsoc/capacity.hpp"
#include "dsoc/config.hpp"
#include "dsoc/detector.hpp"
#include "dsoc/link_budget.hpp"
#include "dsoc/noise.hpp"

namespace dsoc {

enum class SkyCondition { night, day };
enum class PointingMode { fixed, computed };

/// Mars downlink parameter set. Every field maps to one config key; units
/// are fixed by the key name (see README).
struct MissionPreset {
  double wavelength_nm = 1550.0;
  double range_km = 225e6;
  double transmit_power_w = 4.0;
  double transmitter_diameter_m = 0.22;
  double transmitter_secondary_diameter_m = 0.0;
  double transmitter_efficiency = 0.6;
  std::vector<double> receiver_diameters_m{4.0, 6.0, 8.0, 10.0};
  double receiver_secondary_aperture_m = 0.0;
  double receiver_efficiency = 0.4;
  double receiver_quantum_efficiency = 0.5;
  double focal_length_m = 16.0;
  double detector_diameter_m = 30e-6;
  double optical_filter_um = 0.2e-3;
  double link_margin_db = 4.0;
  PointingMode pointing_model = PointingMode::fixed;
  double pointing_loss_db = 1.95;
  double pointing_rms_error_urad = 0.7;
  double probability_level = 1e-14;
  std::vector<unsigned> modulation_numbers{16, 64, 256, 1024};
  std::vector<double> slot_time_ns{2.0, 0.25};
  double coding_ratio = 0.5;
  double coding_efficiency_db = 0.8;
  double background_noise_reduction = 0.5;
  SkyCondition sky = SkyCondition::night;
  double radiance_planets_sky = 85.0;  // daytime
  double night_sky_radiance = 1e-5;
  double planet_radiance = 0.0;
  double stray_factor = 0.0;
  double star_irradiance = 0.0;
  double leakage_ratio = 0.0;
  unsigned detector_array = 1;
  double detector_dark_rate = 1e12;
  double blocking_time_ns = 50.0;
  double jitter_time_ns = 240.0;
  bool apply_jitter_loss = false;
  JitterPolynomial jitter_polynomial = JitterPolynomial::linear;
  double atmospheric_transmittance = 0.943;
  double scintillation_loss_db = 0.01;
  double cirrus_loss_db = 0.5;
  PowerReference capacity_power = PowerReference::aperture;

  /// Applies overrides; unknown keys and out-of-domain values throw InvalidInput.
  void apply(const ConfigMap& config);
  void validate() const;

  /// Every key with its resolved value, in a fixed order.
  std::vector<std::pair<std::string, std::string>> resolved() const;

  LengthM wavelength() const { return LengthM::from_nm(wavelength_nm); }
  PhotonEnergyJ photon() const { return photon_energy(wavelength()); }
  Terminal transmitter() const;
  Terminal receiver(double diameter_m) const;
  PathEnvironment environment() const;
  LinkScenario scenario(LengthM range, double rx_diameter_m) const;
  BackgroundEnvironment background() const;
  ReceiverOptics optics(double rx_diameter_m) const;
  DetectorNoiseParams noise_params() const;
  PhotonCountingDetector detector() const;
};

/// The built-in Mars parameter set.
MissionPreset mars_preset();

}  // namespace dsoc
