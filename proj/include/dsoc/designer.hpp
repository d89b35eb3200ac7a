#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dsoc/capacity.hpp"
#include "dsoc/ppm_channel.hpp"
#include "dsoc/quantities.hpp"

namespace dsoc {

/// argmax over `orders` of the soft capacity at (pr, pn); ties go to the smaller M.
unsigned optimal_order(PowerW pr, PowerW pn, double slot_time_s, PhotonEnergyJ photon,
                       std::span<const unsigned> orders);

/// Code rate that lands exactly on `target_bps`. Throws Infeasible above 1.
double ecc_rate_for_target(double target_bps, unsigned order, double slot_time_s);

struct SolverOptions {
  double lower_w = 1e-20;
  double upper_w = 1e-3;
  double relative_tolerance = 1e-9;
};

/// Unique P_r whose capacity equals `target_bps`, by bisection in log space.
/// Throws Infeasible when the target is at or above saturation.
PowerW required_power(double target_bps, unsigned order, double slot_time_s, PowerW pn, PhotonEnergyJ photon,
                      const SolverOptions& options = {});

/// Target-driven design: the highest order whose uncoded peak still reaches
/// the target, the code rate that hits it, and the power that makes the soft
/// capacity equal it. The lowest-power order is reported for comparison.
struct TargetDesign {
  unsigned order = 0;
  double slot_time_s = 0.0;
  double code_rate = 0.0;
  PowerW required_power;
  PowerW required_power_coded;  // required_power with the coding gap paid
  unsigned min_power_order = 0;
  PowerW min_power;
};

TargetDesign design_for_target(double target_bps, double slot_time_s, PowerW pn, PhotonEnergyJ photon,
                               std::span<const unsigned> orders, DecibelLoss coding_gap = DecibelLoss{});

struct DesignConstraints {
  double target_rate = 1.0;
  std::vector<unsigned> orders;
  std::vector<double> slot_times_s;
  std::vector<double> code_rates;  // empty: continuous rate in (0, 1]
  DecibelLoss coding_efficiency{};
  DecibelLoss link_margin{};

  bool continuous_rate() const { return code_rates.empty(); }
  /// Linear factor applied to capacity before the feasibility comparison.
  double capacity_discount() const;
  void validate() const;
};

struct DesignSolution {
  unsigned order = 0;
  double slot_time_s = 0.0;
  double code_rate = 0.0;
  double achieved_rate = 0.0;
  double capacity_at_point = 0.0;
  double discounted_capacity = 0.0;
  std::optional<PowerW> required_power;  // P_r at which discounted capacity == achieved_rate
  bool feasible = false;
  bool meets_target = false;
};

struct SearchResult {
  std::optional<DesignSolution> best;  // empty when nothing is feasible
  std::vector<DesignSolution> evaluated;
};

struct ChannelPowers {
  PowerW received;
  PowerW noise;
};

/// Channel powers may depend on the PPM choice (e.g. jitter loss).
using ChannelModel = std::function<ChannelPowers(const PpmConfig&)>;

/// Exhaustive search over every (M, T_slot, R_ecc) combination. Picks the
/// feasible combination with the highest rate; ties go to the smaller M,
/// then to the longer slot.
SearchResult ccsds_search(const ChannelModel& channel, PhotonEnergyJ photon, const DesignConstraints& constraints);
SearchResult ccsds_search(PowerW pr, PowerW pn, PhotonEnergyJ photon, const DesignConstraints& constraints);

/// Total order used to rank feasible solutions: true if `a` beats `b`.
bool better_solution(const DesignSolution& a, const DesignSolution& b);

}  // namespace dsoc
