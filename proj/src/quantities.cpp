#include "dsoc/quantities.hpp"

namespace dsoc {

double db_to_linear(DecibelLoss loss) { return std::pow(10.0, -loss.value() / 10.0); }

DecibelLoss linear_to_db(double factor) {
  require(std::isfinite(factor) && factor > 0.0, "linear factor must be > 0");
  return DecibelLoss(-10.0 * std::log10(factor));
}

PhotonEnergyJ photon_energy(LengthM wavelength) {
  require(wavelength.value() > 0.0, "wavelength must be > 0");
  return PhotonEnergyJ(kPlanck * kSpeedOfLight / wavelength.value());
}

double to_dbw(PowerW power) {
  require(power.value() > 0.0, "dBW undefined for zero power");
  return 10.0 * std::log10(power.value());
}

}  // namespace dsoc
