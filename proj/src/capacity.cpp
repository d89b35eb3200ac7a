#include "dsoc/capacity.hpp"

#include <cmath>
#include <numbers>

namespace dsoc {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::noise_limited: return "noise_limited";
    case Regime::quantum_limited: return "quantum_limited";
    case Regime::bandwidth_limited: return "bandwidth_limited";
  }
  return "unknown";
}

std::string_view to_string(PowerReference reference) {
  return reference == PowerReference::aperture ? "aperture" : "detected";
}

CapacityReport ppm_pc_capacity(const OperatingPoint& op) {
  require(is_ppm_order(op.ppm.order), "PPM order must be a power of two >= 2");
  require(std::isfinite(op.ppm.slot_time_s) && op.ppm.slot_time_s > 0.0, "slot time must be > 0");

  const double m = static_cast<double>(op.ppm.order);
  const double ln_m = std::log(m);
  const double e = op.photon_energy.value();
  const double pr = op.received.value();
  const double pn = op.noise.value();

  CapacityReport r;
  r.reference = op.reference;
  r.term_noise = pn * 2.0 / (m - 1.0);
  r.term_quantum = pr / ln_m;
  r.term_bandwidth = pr * pr * m * op.ppm.slot_time_s / (ln_m * e);

  // Largest term wins; ties resolve toward the lower-power regime.
  if (r.term_noise >= r.term_quantum && r.term_noise >= r.term_bandwidth) {
    r.regime = Regime::noise_limited;
  } else if (r.term_quantum >= r.term_bandwidth) {
    r.regime = Regime::quantum_limited;
  } else {
    r.regime = Regime::bandwidth_limited;
  }

  if (pr == 0.0) return r;
  // Divide through by P_r^2 so the expression stays finite as P_r grows.
  const double denom = r.term_noise / (pr * pr) + 1.0 / (pr * ln_m) + m * op.ppm.slot_time_s / (ln_m * e);
  r.capacity_bps = 1.0 / (std::numbers::ln2 * e * denom);
  return r;
}

double ppm_pc_capacity_bps(PowerW pr, PowerW pn, PhotonEnergyJ photon, unsigned order, double slot_time_s) {
  return ppm_pc_capacity({pr, pn, photon, PpmConfig{order, slot_time_s, 1.0}}).capacity_bps;
}

double saturation_rate(unsigned order, double slot_time_s) {
  require(is_ppm_order(order), "PPM order must be a power of two >= 2");
  require(slot_time_s > 0.0, "slot time must be > 0");
  return std::log2(static_cast<double>(order)) / (order * slot_time_s);
}

double holevo_limit(double pc_capacity_bps) {
  require(pc_capacity_bps >= 0.0, "capacity must be >= 0");
  return 2.561 * pc_capacity_bps;
}

double holevo_dimensional_efficiency(double photon_efficiency) {
  require(photon_efficiency >= 0.0, "photon efficiency must be >= 0");
  return std::numbers::e * photon_efficiency * std::exp2(-photon_efficiency);
}

NsFactor ns_dimensional_factor(double eta, NsScheme scheme, OokBranch branch, double near_unity_threshold) {
  require(eta > 0.0 && eta <= 1.0, "transmittivity must lie in (0, 1]");
  NsFactor out;
  if (scheme == NsScheme::ppm) {
    out.factor = eta / std::numbers::e;
  } else {
    const bool near_unity = branch == OokBranch::near_unity ||
                            (branch == OokBranch::automatic && eta >= near_unity_threshold);
    if (near_unity) {
      // (eta-1)^(eta-1) is evaluated as |eta-1|^(eta-1); the base is
      // non-positive on (0, 1] and 0^0 = 1 at eta = 1.
      const double gap = 1.0 - eta;
      const double power = gap == 0.0 ? 1.0 : std::pow(gap, eta - 1.0);
      out.exponent = power / std::exp(1.0 - eta);
    } else {
      out.exponent = eta / std::numbers::e;
    }
    out.factor = std::exp2(out.exponent);
  }
  out.exceeds_holevo = out.factor > 1.0;
  return out;
}

}  // namespace dsoc
