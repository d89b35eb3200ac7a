#pragma once

#include "dsoc/quantities.hpp"

namespace dsoc {

/// M-ary PPM signaling: one pulse in one of `order` slots of `slot_time_s`.
struct PpmConfig {
  unsigned order = 16;
  double slot_time_s = 0.25e-9;
  double code_rate = 1.0;

  double bits_per_symbol() const;
  double symbol_time_s() const { return order * slot_time_s; }
  void validate() const;
};

/// Mean detected photons: Ks in the pulsed slot, Kb in every slot.
struct PoissonSlotModel {
  double signal_per_pulse = 0.0;
  double noise_per_slot = 0.0;

  void validate() const;
};

bool is_ppm_order(unsigned order);

/// code_rate log2(M) / (M T_slot), bits/s.
double data_rate(const PpmConfig& cfg);

double poisson_pmf(unsigned k, double mean);

/// Zero-background ML symbol error probability (M-1) e^{-Ks} / M.
double symbol_error_probability(unsigned order, double signal_per_pulse);

/// Slot model from powers already at the detector output (eta_det applied):
/// Ks = P_det M T / E, Kb = P_n T / E.
PoissonSlotModel slot_model_from_detected(PowerW p_det, PowerW pn, PhotonEnergyJ photon, const PpmConfig& cfg);

/// Slot model from incident powers; eta_det is applied once here:
/// Ks = eta l_s M T, Kb = eta l_b T.
PoissonSlotModel slot_model_from_incident(PowerW p_incident, PowerW p_background, double quantum_efficiency,
                                          PhotonEnergyJ photon, const PpmConfig& cfg);

}  // namespace dsoc
