#include "dsoc/noise.hpp"

#include <cmath>
#include <numbers>

namespace dsoc {

void BackgroundEnvironment::validate() const {
  require(sky_radiance >= 0.0 && planet_radiance >= 0.0 && stray_factor >= 0.0 && star_irradiance >= 0.0,
          "background radiances must be >= 0");
  require(filter_width_um > 0.0, "filter width must be > 0");
  require(background_reduction > 0.0 && background_reduction <= 1.0, "background reduction must lie in (0, 1]");
}

ReceiverOptics ReceiverOptics::for_aperture(LengthM aperture_diameter, LengthM focal_length,
                                            LengthM detector_diameter, double receiver_efficiency) {
  const double d = aperture_diameter.value();
  return {focal_length, detector_diameter, std::numbers::pi * d * d / 4.0, receiver_efficiency};
}

void ReceiverOptics::validate() const {
  require(focal_length.value() > 0.0, "focal length must be > 0");
  require(detector_diameter.value() / focal_length.value() < std::numbers::pi,
          "detector half-angle must be < pi");
  require(receiver_area_m2 >= 0.0, "receiver area must be >= 0");
  require(receiver_efficiency > 0.0 && receiver_efficiency <= 1.0, "receiver efficiency must lie in (0, 1]");
}

void DetectorNoiseParams::validate() const {
  require(dark_rate >= 0.0, "dark rate must be >= 0");
  require(array_count >= 1, "detector array count must be >= 1");
  require(leakage_ratio >= 0.0, "leakage ratio must be >= 0");
  require(quantum_efficiency > 0.0 && quantum_efficiency <= 1.0, "quantum efficiency must lie in (0, 1]");
}

double field_of_view(const ReceiverOptics& optics) {
  require(optics.focal_length.value() > 0.0, "focal length must be > 0");
  const double half_angle = optics.detector_diameter.value() / optics.focal_length.value();
  require(half_angle < std::numbers::pi, "detector half-angle must be < pi");
  // 1 - cos(x) == 2 sin^2(x/2) without cancellation for tiny x.
  const double s = std::sin(half_angle / 2.0);
  return 2.0 * std::numbers::pi * 2.0 * s * s;
}

PowerW background_power(const BackgroundEnvironment& env, const ReceiverOptics& optics) {
  env.validate();
  optics.validate();
  const double collecting = optics.receiver_efficiency * optics.receiver_area_m2;
  const double extended = field_of_view(optics) * collecting *
                          (env.sky_radiance + env.planet_radiance * env.stray_factor) * env.filter_width_um;
  const double point = env.star_irradiance * collecting * env.filter_width_um;
  return PowerW((extended + point) * env.background_reduction);
}

NoiseBreakdown noise_power(PowerW background, const DetectorNoiseParams& detector,
                           const ReceiverOptics& optics, PhotonEnergyJ photon, PowerW pr_ap) {
  detector.validate();
  const double k = static_cast<double>(detector.array_count);
  const double d = optics.detector_diameter.value();
  const PowerW bg(detector.quantum_efficiency * background.value() * k);
  const PowerW dark(d * d * detector.dark_rate * photon.value() * k);
  const PowerW leak(detector.leakage_ratio * pr_ap.value() * detector.quantum_efficiency);
  return {bg, dark, leak, PowerW(bg.value() + dark.value() + leak.value())};
}

}  // namespace dsoc
