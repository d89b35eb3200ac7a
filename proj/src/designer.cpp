#include "dsoc/designer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dsoc/errors.hpp"

namespace dsoc {

namespace {

void require_orders(std::span<const unsigned> orders) {
  require(!orders.empty(), "order set must not be empty");
  for (unsigned m : orders) require(is_ppm_order(m), "PPM order must be a power of two >= 2");
}

}  // namespace

unsigned optimal_order(PowerW pr, PowerW pn, double slot_time_s, PhotonEnergyJ photon,
                       std::span<const unsigned> orders) {
  require_orders(orders);
  unsigned best = 0;
  double best_c = -1.0;
  for (unsigned m : orders) {
    const double c = ppm_pc_capacity_bps(pr, pn, photon, m, slot_time_s);
    if (c > best_c || (c == best_c && m < best)) {
      best = m;
      best_c = c;
    }
  }
  return best;
}

double ecc_rate_for_target(double target_bps, unsigned order, double slot_time_s) {
  require(target_bps > 0.0, "target rate must be > 0");
  const double peak = saturation_rate(order, slot_time_s);
  const double rate = target_bps / peak;
  if (rate > 1.0) throw Infeasible("target rate exceeds the uncoded peak rate of this PPM order");
  return rate;
}

PowerW required_power(double target_bps, unsigned order, double slot_time_s, PowerW pn, PhotonEnergyJ photon,
                      const SolverOptions& options) {
  require(target_bps >= 0.0, "target rate must be >= 0");
  require(options.lower_w > 0.0 && options.upper_w > options.lower_w, "invalid solver bracket");
  if (target_bps >= saturation_rate(order, slot_time_s)) {
    throw Infeasible("target rate is at or above the saturation rate of this PPM order");
  }
  if (target_bps == 0.0) return PowerW{};

  auto capacity = [&](double p) { return ppm_pc_capacity_bps(PowerW(p), pn, photon, order, slot_time_s); };
  double lo = options.lower_w;
  double hi = options.upper_w;
  while (capacity(lo) >= target_bps && lo > std::numeric_limits<double>::min() * 1e10) lo *= 1e-3;
  while (capacity(hi) < target_bps) hi *= 1e3;

  while (hi / lo > 1.0 + options.relative_tolerance) {
    const double mid = std::sqrt(lo * hi);
    if (capacity(mid) < target_bps) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return PowerW(std::sqrt(lo * hi));
}

TargetDesign design_for_target(double target_bps, double slot_time_s, PowerW pn, PhotonEnergyJ photon,
                               std::span<const unsigned> orders, DecibelLoss coding_gap) {
  require_orders(orders);
  require(target_bps > 0.0, "target rate must be > 0");
  require(coding_gap.value() >= 0.0, "coding gap must be >= 0 dB");

  TargetDesign d;
  d.slot_time_s = slot_time_s;
  double min_power = std::numeric_limits<double>::infinity();
  for (unsigned m : orders) {
    if (saturation_rate(m, slot_time_s) <= target_bps) continue;
    const PowerW p = required_power(target_bps, m, slot_time_s, pn, photon);
    if (m > d.order) {
      d.order = m;
      d.required_power = p;
    }
    if (p.value() < min_power || (p.value() == min_power && m < d.min_power_order)) {
      min_power = p.value();
      d.min_power_order = m;
      d.min_power = p;
    }
  }
  if (d.order == 0) throw Infeasible("no PPM order in the set reaches the target rate");
  d.code_rate = ecc_rate_for_target(target_bps, d.order, slot_time_s);
  d.required_power_coded = PowerW(d.required_power.value() / db_to_linear(coding_gap));
  return d;
}

double DesignConstraints::capacity_discount() const {
  return db_to_linear(coding_efficiency) * db_to_linear(link_margin);
}

void DesignConstraints::validate() const {
  require(target_rate > 0.0, "target rate must be > 0");
  require_orders(orders);
  require(!slot_times_s.empty(), "slot set must not be empty");
  for (double t : slot_times_s) require(std::isfinite(t) && t > 0.0, "slot times must be > 0");
  for (double r : code_rates) require(r > 0.0 && r <= 1.0, "code rates must lie in (0, 1]");
  require(coding_efficiency.value() >= 0.0, "coding efficiency must be >= 0 dB");
  require(link_margin.value() >= 0.0, "link margin must be >= 0 dB");
}

bool better_solution(const DesignSolution& a, const DesignSolution& b) {
  if (a.achieved_rate != b.achieved_rate) return a.achieved_rate > b.achieved_rate;
  if (a.order != b.order) return a.order < b.order;
  if (a.slot_time_s != b.slot_time_s) return a.slot_time_s > b.slot_time_s;
  return a.code_rate > b.code_rate;
}

SearchResult ccsds_search(const ChannelModel& channel, PhotonEnergyJ photon, const DesignConstraints& constraints) {
  constraints.validate();
  const double discount = constraints.capacity_discount();

  SearchResult result;
  auto evaluate = [&](unsigned m, double slot, double code_rate, const ChannelPowers& powers, double capacity) {
    DesignSolution s;
    s.order = m;
    s.slot_time_s = slot;
    s.code_rate = code_rate;
    s.achieved_rate = code_rate * saturation_rate(m, slot);
    s.capacity_at_point = capacity;
    s.discounted_capacity = capacity * discount;
    s.feasible = code_rate > 0.0 && s.achieved_rate <= s.discounted_capacity;
    s.meets_target = s.feasible && s.achieved_rate >= constraints.target_rate;
    const double needed = s.achieved_rate / discount;
    if (needed > 0.0 && needed < saturation_rate(m, slot)) {
      s.required_power = required_power(needed, m, slot, powers.noise, photon);
    }
    result.evaluated.push_back(s);
    if (s.feasible && (!result.best || better_solution(s, *result.best))) result.best = s;
  };

  for (unsigned m : constraints.orders) {
    for (double slot : constraints.slot_times_s) {
      if (constraints.continuous_rate()) {
        // Channel evaluated at rate 1, the largest jitter penalty a continuous rate can incur.
        const ChannelPowers powers = channel(PpmConfig{m, slot, 1.0});
        const double capacity = ppm_pc_capacity_bps(powers.received, powers.noise, photon, m, slot);
        const double rate = std::min(1.0, capacity * discount / saturation_rate(m, slot));
        evaluate(m, slot, rate, powers, capacity);
      } else {
        for (double r : constraints.code_rates) {
          // Rate-dependent channels (jitter) see the actual code rate.
          const ChannelPowers at_rate = channel(PpmConfig{m, slot, r});
          evaluate(m, slot, r, at_rate, ppm_pc_capacity_bps(at_rate.received, at_rate.noise, photon, m, slot));
        }
      }
    }
  }
  return result;
}

SearchResult ccsds_search(PowerW pr, PowerW pn, PhotonEnergyJ photon, const DesignConstraints& constraints) {
  return ccsds_search([=](const PpmConfig&) { return ChannelPowers{pr, pn}; }, photon, constraints);
}

}  // namespace dsoc
