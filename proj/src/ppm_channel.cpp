#include "dsoc/ppm_channel.hpp"

#include <bit>
#include <cmath>

namespace dsoc {

bool is_ppm_order(unsigned order) { return order >= 2 && std::has_single_bit(order); }

double PpmConfig::bits_per_symbol() const { return std::log2(static_cast<double>(order)); }

void PpmConfig::validate() const {
  require(is_ppm_order(order), "PPM order must be a power of two >= 2");
  require(std::isfinite(slot_time_s) && slot_time_s > 0.0, "slot time must be > 0");
  require(code_rate > 0.0 && code_rate <= 1.0, "code rate must lie in (0, 1]");
}

void PoissonSlotModel::validate() const {
  require(std::isfinite(signal_per_pulse) && signal_per_pulse >= 0.0, "Ks must be >= 0");
  require(std::isfinite(noise_per_slot) && noise_per_slot >= 0.0, "Kb must be >= 0");
}

double data_rate(const PpmConfig& cfg) {
  cfg.validate();
  return cfg.code_rate * cfg.bits_per_symbol() / (cfg.order * cfg.slot_time_s);
}

double poisson_pmf(unsigned k, double mean) {
  require(std::isfinite(mean) && mean >= 0.0, "Poisson mean must be >= 0");
  if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
}

double symbol_error_probability(unsigned order, double signal_per_pulse) {
  require(order >= 2, "PPM order must be >= 2");
  require(signal_per_pulse >= 0.0, "Ks must be >= 0");
  const double m = static_cast<double>(order);
  return (m - 1.0) * std::exp(-signal_per_pulse) / m;
}

PoissonSlotModel slot_model_from_detected(PowerW p_det, PowerW pn, PhotonEnergyJ photon, const PpmConfig& cfg) {
  cfg.validate();
  const double e = photon.value();
  return {p_det.value() / e * cfg.order * cfg.slot_time_s, pn.value() / e * cfg.slot_time_s};
}

PoissonSlotModel slot_model_from_incident(PowerW p_incident, PowerW p_background, double quantum_efficiency,
                                          PhotonEnergyJ photon, const PpmConfig& cfg) {
  cfg.validate();
  require(quantum_efficiency > 0.0 && quantum_efficiency <= 1.0, "quantum efficiency must lie in (0, 1]");
  const double e = photon.value();
  return {quantum_efficiency * p_incident.value() / e * cfg.order * cfg.slot_time_s,
          quantum_efficiency * p_background.value() / e * cfg.slot_time_s};
}

}  // namespace dsoc
