#pragma once

#include <vector>

#include "dsoc/capacity.hpp"
#include "dsoc/designer.hpp"
#include "dsoc/detector.hpp"
#include "dsoc/link_budget.hpp"
#include "dsoc/noise.hpp"
#include "dsoc/preset.hpp"

namespace dsoc {

/// Every intermediate of the link budget -> noise -> detector -> capacity chain.
struct LinkEvaluation {
  ReceivedPowerReport budget;
  PowerW background;
  NoiseBreakdown noise;
  FluxPair flux;
  double blocking = 1.0;
  double jitter_psi = 0.0;
  DecibelLoss jitter_loss;        // always computed
  bool jitter_applied = false;    // whether it entered P_det
  PowerW detected;
  PowerW required_with_coding;
  CapacityReport capacity;        // fed with the preset's capacity_power reference

  PowerW capacity_input() const {
    return capacity.reference == PowerReference::aperture ? budget.received : detected;
  }
};

LinkEvaluation evaluate_link(const MissionPreset& preset, LengthM range, double rx_diameter_m, const PpmConfig& ppm);

/// Channel powers for the designer at a fixed range and aperture.
ChannelModel preset_channel(const MissionPreset& preset, LengthM range, double rx_diameter_m);

struct SweepRow {
  double distance_m = 0.0;
  double rx_diameter_m = 0.0;
  unsigned order = 0;
  double slot_time_s = 0.0;
  double pr_w = 0.0;
  double pn_w = 0.0;
  double capacity_bps = 0.0;
  Regime regime = Regime::noise_limited;
};

struct SweepGrid {
  std::vector<double> distances_m;
  std::vector<double> rx_diameters_m;
  std::vector<unsigned> orders;
  std::vector<double> slot_times_s;
};

/// n points from `first` to `last`, inclusive; geometric when `logarithmic`.
std::vector<double> make_grid(double first, double last, std::size_t n, bool logarithmic);

/// Rows in distance, diameter, order, slot order (outermost first).
std::vector<SweepRow> capacity_vs_distance_sweep(const MissionPreset& preset, const SweepGrid& grid,
                                                 unsigned threads = 0);

/// Order with the highest capacity for each (distance, diameter, slot);
/// ties go to the smaller order. Same iteration order as the sweep.
struct SweepLeader {
  double distance_m;
  double rx_diameter_m;
  double slot_time_s;
  unsigned order;
  double capacity_bps;
};
std::vector<SweepLeader> sweep_leaders(const std::vector<SweepRow>& rows);

}  // namespace dsoc
