#pragma once

#include <string_view>

#include "dsoc/ppm_channel.hpp"
#include "dsoc/quantities.hpp"

namespace dsoc {

enum class Regime { noise_limited, quantum_limited, bandwidth_limited };

/// Which point of the receive chain the signal power was taken from.
enum class PowerReference { aperture, detected };

std::string_view to_string(Regime regime);
std::string_view to_string(PowerReference reference);

struct OperatingPoint {
  PowerW received;
  PowerW noise;
  PhotonEnergyJ photon_energy;
  PpmConfig ppm;
  PowerReference reference = PowerReference::aperture;
};

/// Soft capacity of the PPM photon-counting channel together with the three
/// watt-valued denominator terms that set the operating regime.
struct CapacityReport {
  double capacity_bps = 0.0;
  Regime regime = Regime::noise_limited;
  double term_noise = 0.0;      // 2 P_n / (M - 1)
  double term_quantum = 0.0;    // P_r / ln M
  double term_bandwidth = 0.0;  // P_r^2 M T / (E ln M)
  PowerReference reference = PowerReference::aperture;
};

CapacityReport ppm_pc_capacity(const OperatingPoint& op);

/// Capacity value only; convenience for sweeps and solvers.
double ppm_pc_capacity_bps(PowerW pr, PowerW pn, PhotonEnergyJ photon, unsigned order, double slot_time_s);

/// Capacity as P_r grows without bound: log2(M) / (M T).
double saturation_rate(unsigned order, double slot_time_s);

double holevo_limit(double pc_capacity_bps);

/// Reference curve c_d = e c_p 2^{-c_p} (dimensional vs photon efficiency).
double holevo_dimensional_efficiency(double photon_efficiency);

enum class NsScheme { ook, ppm };
enum class OokBranch { automatic, low_transmittivity, near_unity };

struct NsFactor {
  double factor = 0.0;
  double exponent = 0.0;        // f(eta) for OOK, unused for PPM
  bool exceeds_holevo = false;  // factor > 1
};

/// Number-state multiplicative factor F relative to Holevo.
NsFactor ns_dimensional_factor(double transmittivity, NsScheme scheme, OokBranch branch = OokBranch::automatic,
                               double near_unity_threshold = 0.9);

}  // namespace dsoc
