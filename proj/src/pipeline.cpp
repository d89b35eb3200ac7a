#include "dsoc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>
#include <tuple>

namespace dsoc {

LinkEvaluation evaluate_link(const MissionPreset& preset, LengthM range, double rx_diameter_m, const PpmConfig& ppm) {
  ppm.validate();
  LinkEvaluation ev;
  const PhotonEnergyJ photon = preset.photon();
  ev.budget = received_power(preset.scenario(range, rx_diameter_m));
  const PowerW pr_ap = ev.budget.received;

  const ReceiverOptics optics = preset.optics(rx_diameter_m);
  ev.background = background_power(preset.background(), optics);
  ev.noise = noise_power(ev.background, preset.noise_params(), optics, photon, pr_ap);

  const PhotonCountingDetector det = preset.detector();
  ev.flux = photon_flux(pr_ap, ev.noise.total, det.quantum_efficiency, photon);
  ev.blocking = blocking_loss(ev.flux, det.dead_time_s);
  ev.jitter_psi = jitter_psi(det.jitter_sigma_s, ppm.slot_time_s, ppm.code_rate, ppm.order);
  ev.jitter_loss = jitter_loss(ev.jitter_psi, det.jitter);
  ev.jitter_applied = preset.apply_jitter_loss;
  ev.detected = detected_power(pr_ap, det, {ev.blocking, ev.jitter_applied ? ev.jitter_loss : DecibelLoss{}});
  ev.required_with_coding = required_power_with_coding(ev.detected, DecibelLoss(preset.coding_efficiency_db));

  const PowerW signal = preset.capacity_power == PowerReference::aperture ? pr_ap : ev.detected;
  ev.capacity = ppm_pc_capacity({signal, ev.noise.total, photon, ppm, preset.capacity_power});
  return ev;
}

ChannelModel preset_channel(const MissionPreset& preset, LengthM range, double rx_diameter_m) {
  return [preset, range, rx_diameter_m](const PpmConfig& ppm) {
    const LinkEvaluation ev = evaluate_link(preset, range, rx_diameter_m, ppm);
    return ChannelPowers{ev.capacity_input(), ev.noise.total};
  };
}

std::vector<double> make_grid(double first, double last, std::size_t n, bool logarithmic) {
  require(n >= 1, "grid needs at least one point");
  require(std::isfinite(first) && std::isfinite(last), "grid bounds must be finite");
  if (logarithmic) require(first > 0.0 && last > 0.0, "logarithmic grid bounds must be > 0");
  std::vector<double> out(n, first);
  if (n == 1) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    out[i] = logarithmic ? first * std::pow(last / first, t) : first + (last - first) * t;
  }
  out.back() = last;
  return out;
}

std::vector<SweepRow> capacity_vs_distance_sweep(const MissionPreset& preset, const SweepGrid& grid,
                                                 unsigned threads) {
  preset.validate();
  for (double d : grid.distances_m) require(d > 0.0, "sweep distances must be > 0");
  for (double d : grid.rx_diameters_m) require(d > 0.0, "receiver diameters must be > 0");
  for (unsigned m : grid.orders) require(is_ppm_order(m), "PPM order must be a power of two >= 2");
  for (double t : grid.slot_times_s) require(t > 0.0, "slot times must be > 0");

  std::vector<SweepRow> rows;
  for (double d : grid.distances_m)
    for (double dr : grid.rx_diameters_m)
      for (unsigned m : grid.orders)
        for (double t : grid.slot_times_s) rows.push_back({d, dr, m, t});

  auto fill = [&](SweepRow& row) {
    const LinkEvaluation ev =
        evaluate_link(preset, LengthM(row.distance_m), row.rx_diameter_m, {row.order, row.slot_time_s, preset.coding_ratio});
    row.pr_w = ev.capacity_input().value();
    row.pn_w = ev.noise.total.value();
    row.capacity_bps = ev.capacity.capacity_bps;
    row.regime = ev.capacity.regime;
  };

  unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(rows.size(), 1)));
  if (workers <= 1) {
    for (auto& row : rows) fill(row);
    return rows;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < rows.size(); i += workers) fill(rows[i]);
    });
  }
  pool.clear();
  return rows;
}

std::vector<SweepLeader> sweep_leaders(const std::vector<SweepRow>& rows) {
  std::vector<SweepLeader> out;
  std::map<std::tuple<double, double, double>, std::size_t> index;
  for (const auto& row : rows) {
    const auto key = std::make_tuple(row.distance_m, row.rx_diameter_m, row.slot_time_s);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, out.size());
      out.push_back({row.distance_m, row.rx_diameter_m, row.slot_time_s, row.order, row.capacity_bps});
      continue;
    }
    SweepLeader& lead = out[it->second];
    if (row.capacity_bps > lead.capacity_bps || (row.capacity_bps == lead.capacity_bps && row.order < lead.order)) {
      lead.order = row.order;
      lead.capacity_bps = row.capacity_bps;
    }
  }
  return out;
}

}  // namespace dsoc
