#pragma once

#include "dsoc/quantities.hpp"

namespace dsoc {

/// Background radiance seen by the receiver. Radiances in W/m^2/sr/um,
/// star irradiance in W/m^2/um, filter width in um.
struct BackgroundEnvironment {
  double sky_radiance = 0.0;
  double planet_radiance = 0.0;
  double stray_factor = 0.0;
  double star_irradiance = 0.0;
  double filter_width_um = 0.2e-3;
  double background_reduction = 1.0;

  void validate() const;
};

struct ReceiverOptics {
  LengthM focal_length;
  LengthM detector_diameter;
  double receiver_area_m2 = 0.0;
  double receiver_efficiency = 1.0;

  /// Area taken as the full primary disc, pi D_r^2 / 4.
  static ReceiverOptics for_aperture(LengthM aperture_diameter, LengthM focal_length,
                                     LengthM detector_diameter, double receiver_efficiency);
  void validate() const;
};

struct DetectorNoiseParams {
  double dark_rate = 0.0;  // electrons / s / m^2
  unsigned array_count = 1;
  double leakage_ratio = 0.0;
  double quantum_efficiency = 1.0;

  void validate() const;
};

struct NoiseBreakdown {
  PowerW background;  // eta_det P_b K
  PowerW dark;        // d^2 i_d E K
  PowerW leakage;     // eta_leak P_r,ap eta_det
  PowerW total;
};

/// 2 pi (1 - cos(d / F)), steradians.
double field_of_view(const ReceiverOptics& optics);

/// Background power at one detector, after the background reduction factor.
PowerW background_power(const BackgroundEnvironment& env, const ReceiverOptics& optics);

NoiseBreakdown noise_power(PowerW background, const DetectorNoiseParams& detector,
                           const ReceiverOptics& optics, PhotonEnergyJ photon, PowerW pr_ap);

}  // namespace dsoc
