// Command-line front end: link budget, capacity, design, sweeps, OAM profiles,
// and Monte Carlo checks. CSV goes to --out (default stdout); the resolved
// parameter set is echoed to stderr as `# key = value` lines first.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "dsoc/dsoc.hpp"

namespace {

using namespace dsoc;

constexpr int kExitInfeasible = 1;
constexpr int kExitInvalid = 2;

struct Common {
  std::string config_path;
  std::string out = "stdout";
  std::uint64_t seed = 1;
};

class Output {
 public:
  explicit Output(const std::string& target) {
    if (target != "stdout" && target != "-") {
      file_ = std::make_unique<std::ofstream>(target);
      if (!*file_) throw InvalidInput("cannot open output file " + target);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

MissionPreset load_preset(const Common& common) {
  MissionPreset preset = mars_preset();
  if (!common.config_path.empty()) preset.apply(ConfigMap::load(common.config_path));
  preset.validate();
  return preset;
}

void echo(const std::string& key, const std::string& value) { std::cerr << "# " << key << " = " << value << '\n'; }

void echo_preset(const MissionPreset& preset) {
  for (const auto& [k, v] : preset.resolved()) echo(k, v);
}

/// Echoes every option of a subcommand, defaults included.
void echo_options(const CLI::App& sub, const Common& common) {
  echo("command", sub.get_name());
  echo("out", common.out);
  echo("seed", std::to_string(common.seed));
  if (!common.config_path.empty()) echo("config", common.config_path);
  std::istringstream lines(sub.config_to_str(true, false));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string value = line.substr(eq + 1);
    if (value == "\"\"" || value == "[]") value = "(preset)";
    echo(line.substr(0, eq), value);
  }
}

std::vector<double> ns_to_s(const std::vector<double>& ns) {
  std::vector<double> out;
  for (double v : ns) out.push_back(v * 1e-9);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deep-space optical link engineering: budgets, PPM capacity, design, OAM beams"};
  app.require_subcommand(1);
  // Global options are accepted after the subcommand too.
  app.fallthrough();
  Common common;
  app.add_option("--config", common.config_path, "key = value parameter file overriding the Mars preset")
      ->check(CLI::ExistingFile);
  app.add_option("--out", common.out, "output path, or stdout")->capture_default_str();
  app.add_option("--seed", common.seed, "random seed")->capture_default_str();

  // budget
  auto* budget = app.add_subcommand("budget", "end-to-end link budget breakdown at one range");
  double budget_range_km = 0.0;
  double budget_rx = 0.0;
  unsigned budget_order = 0;
  double budget_slot_ns = 0.0;
  budget->add_option("--range-km", budget_range_km, "range in km (default: preset range_km)");
  budget->add_option("--rx-diameter", budget_rx, "receiver diameter in m (default: first preset value)");
  budget->add_option("--order", budget_order, "PPM order (default: first preset value)");
  budget->add_option("--slot-ns", budget_slot_ns, "slot time in ns (default: first preset value)");

  // capacity
  auto* capacity = app.add_subcommand("capacity", "soft PPM photon-counting capacity at given powers");
  std::vector<double> cap_pr;
  double cap_pn = 1.1620e-16;
  unsigned cap_order = 16;
  double cap_slot_ns = 0.25;
  double cap_wavelength_nm = 1550.0;
  std::vector<double> ns_eta;
  capacity->add_option("--pr", cap_pr, "received power(s) in W")->required()->delimiter(',');
  capacity->add_option("--pn", cap_pn, "noise power in W")->capture_default_str();
  capacity->add_option("--order", cap_order, "PPM order")->capture_default_str();
  capacity->add_option("--slot-ns", cap_slot_ns, "slot time in ns")->capture_default_str();
  capacity->add_option("--wavelength-nm", cap_wavelength_nm, "wavelength in nm")->capture_default_str();
  capacity->add_option("--ns-eta", ns_eta, "also report number-state factors at these transmittivities")
      ->delimiter(',');

  // ser
  auto* ser = app.add_subcommand("ser", "uncoded zero-background PPM symbol error probability");
  std::vector<unsigned> ser_orders{2, 4, 8, 16, 32, 64, 128, 256};
  double ser_from_db = -15.0;
  double ser_to_db = 0.0;
  std::size_t ser_points = 16;
  ser->add_option("--orders", ser_orders, "PPM orders")->delimiter(',')->capture_default_str();
  ser->add_option("--from-db", ser_from_db, "lowest Ks/M in dB")->capture_default_str();
  ser->add_option("--to-db", ser_to_db, "highest Ks/M in dB")->capture_default_str();
  ser->add_option("--points", ser_points, "grid points")->capture_default_str();

  // design
  auto* design = app.add_subcommand("design", "target-driven design or exhaustive parameter search");
  double design_target_mbps = 56.0;
  double design_pn = 2.1e-14;
  double design_pr = 0.0;
  double design_slot_ns = 1.0;
  std::vector<unsigned> design_orders{2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  bool design_search = false;
  double design_range_km = 0.0;
  double design_rx = 0.0;
  std::vector<double> design_rates;
  double design_coding_db = -1.0;
  double design_margin_db = -1.0;
  design->add_option("--target-mbps", design_target_mbps, "target data rate in Mbps")->capture_default_str();
  design->add_option("--pn", design_pn, "noise power in W (fixed-power modes)")->capture_default_str();
  design->add_option("--pr", design_pr, "received power in W (search mode; 0 = from preset link)");
  design->add_option("--slot-ns", design_slot_ns, "slot time(s) in ns")->capture_default_str();
  design->add_option("--orders", design_orders, "allowed PPM orders")->delimiter(',')->capture_default_str();
  design->add_flag("--search", design_search, "run the exhaustive (M, T_slot, R_ecc) search");
  design->add_option("--range-km", design_range_km, "search: range for the preset link");
  design->add_option("--rx-diameter", design_rx, "search: receiver diameter for the preset link");
  design->add_option("--rates", design_rates, "search: allowed code rates (empty = continuous)")->delimiter(',');
  design->add_option("--coding-db", design_coding_db, "search: coding efficiency gap (default preset)");
  design->add_option("--margin-db", design_margin_db, "search: link margin (default preset)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "capacity versus distance through the full link chain");
  double sweep_from_km = 500e6;
  double sweep_to_km = 10e9;
  std::size_t sweep_points = 40;
  bool sweep_log = false;
  std::vector<double> sweep_rx;
  std::vector<unsigned> sweep_orders;
  std::vector<double> sweep_slots_ns;
  sweep->add_option("--from-km", sweep_from_km, "nearest distance in km")->capture_default_str();
  sweep->add_option("--to-km", sweep_to_km, "farthest distance in km")->capture_default_str();
  sweep->add_option("--points", sweep_points, "distance points")->capture_default_str();
  sweep->add_flag("--log", sweep_log, "geometric distance spacing");
  sweep->add_option("--rx-diameters", sweep_rx, "receiver diameters in m (default preset)")->delimiter(',');
  sweep->add_option("--orders", sweep_orders, "PPM orders (default preset)")->delimiter(',');
  sweep->add_option("--slots-ns", sweep_slots_ns, "slot times in ns (default: first preset value)")->delimiter(',');

  // planets
  auto* planets = app.add_subcommand("planets", "capacity and light time for the planet catalog");
  double planets_pn = 1.1620e-16;
  unsigned planets_order = 16;
  double planets_slot_ns = 0.25;
  double planets_wavelength_nm = 1550.0;
  planets->add_option("--pn", planets_pn, "noise power in W")->capture_default_str();
  planets->add_option("--order", planets_order, "PPM order")->capture_default_str();
  planets->add_option("--slot-ns", planets_slot_ns, "slot time in ns")->capture_default_str();
  planets->add_option("--wavelength-nm", planets_wavelength_nm, "wavelength in nm")->capture_default_str();

  // oam
  auto* oam = app.add_subcommand("oam", "Laguerre-Gaussian beam profile at a distance");
  int oam_l = 1;
  unsigned oam_p = 0;
  double oam_tx_diameter = 1.0;
  double oam_waist = 0.0;
  double oam_distance = 4.01e11;
  double oam_wavelength_nm = 1550.0;
  std::size_t oam_points = 401;
  std::size_t oam_angles = 0;
  double oam_extent = 4.0;
  oam->add_option("--l", oam_l, "azimuthal index")->capture_default_str();
  oam->add_option("--p", oam_p, "radial index")->capture_default_str();
  oam->add_option("--tx-diameter", oam_tx_diameter, "transmitter diameter in m; waist = D/2")->capture_default_str();
  oam->add_option("--waist", oam_waist, "beam waist in m (overrides --tx-diameter)");
  oam->add_option("--distance", oam_distance, "propagation distance in m")->capture_default_str();
  oam->add_option("--wavelength-nm", oam_wavelength_nm, "wavelength in nm")->capture_default_str();
  oam->add_option("--points", oam_points, "radial samples")->capture_default_str();
  oam->add_option("--angles", oam_angles, "angular samples; > 0 emits a polar raster")->capture_default_str();
  oam->add_option("--extent", oam_extent, "sampled radius in units of w(z)")->capture_default_str();

  // fom
  auto* fom = app.add_subcommand("fom", "distance^2 x rate / (aperture x power) figure of merit");
  double fom_au = 1.0;
  std::string fom_planet;
  double fom_rate = 1.0;
  double fom_aperture = 1.0;
  double fom_power = 1.0;
  fom->add_option("--distance-au", fom_au, "distance in AU")->capture_default_str();
  fom->add_option("--planet", fom_planet, "use this catalog body's average distance");
  fom->add_option("--rate", fom_rate, "data rate in bits/s")->capture_default_str();
  fom->add_option("--aperture", fom_aperture, "aperture diameter in m")->capture_default_str();
  fom->add_option("--power", fom_power, "transmit power in W")->capture_default_str();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo checks of the analytic channel formulas");
  simulate->require_subcommand(1);
  auto* sim_ser = simulate->add_subcommand("ser", "PPM symbol errors over Poisson slot counts");
  std::vector<unsigned> sim_orders{2, 4, 16, 64, 256};
  std::vector<double> sim_ks{0.5, 1.0, 2.0, 3.0, 5.0};
  double sim_kb = 0.0;
  std::uint64_t sim_trials = 1'000'000;
  unsigned sim_threads = 0;
  sim_ser->add_option("--orders", sim_orders, "PPM orders")->delimiter(',')->capture_default_str();
  sim_ser->add_option("--ks", sim_ks, "mean signal photons per pulse")->delimiter(',')->capture_default_str();
  sim_ser->add_option("--kb", sim_kb, "mean noise photons per slot")->capture_default_str();
  sim_ser->add_option("--trials", sim_trials, "trials per point")->capture_default_str();
  sim_ser->add_option("--threads", sim_threads, "worker threads (0 = all cores)")->capture_default_str();
  auto* sim_block = simulate->add_subcommand("blocking", "non-paralyzable dead-time throughput");
  double block_flux = 1e7;
  std::vector<double> block_load{0.1, 0.5, 1.0, 2.0, 5.0};
  double block_arrivals = 2e6;
  sim_block->add_option("--flux", block_flux, "photon arrival rate, photons/s")->capture_default_str();
  sim_block->add_option("--load", block_load, "flux x dead time values")->delimiter(',')->capture_default_str();
  sim_block->add_option("--arrivals", block_arrivals, "expected arrivals per point")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    Output output(common.out);
    std::ostream& out = output.stream();

    if (*budget) {
      const MissionPreset preset = load_preset(common);
      echo_preset(preset);
      echo_options(*budget, common);
      const double range_km = budget_range_km > 0.0 ? budget_range_km : preset.range_km;
      const double rx = budget_rx > 0.0 ? budget_rx : preset.receiver_diameters_m.front();
      const PpmConfig ppm{budget_order ? budget_order : preset.modulation_numbers.front(),
                          (budget_slot_ns > 0.0 ? budget_slot_ns : preset.slot_time_ns.front()) * 1e-9,
                          preset.coding_ratio};
      const LinkEvaluation ev = evaluate_link(preset, LengthM::from_km(range_km), rx, ppm);
      out << "quantity,value,db\n";
      auto row = [&](const std::string& name, double value, double db) {
        out << name << ',' << format_csv(value) << ',' << format_csv(db) << '\n';
      };
      auto plain_row = [&](const std::string& name, double value) {
        out << name << ',' << format_csv(value) << ",\n";
      };
      auto power_row = [&](const std::string& name, PowerW p) {
        row(name, p.value(), p.value() > 0.0 ? to_dbw(p) : -std::numeric_limits<double>::infinity());
      };
      power_row("transmit_power_w", ev.budget.transmit);
      for (const auto& t : ev.budget.terms) row(t.name, t.factor, t.db());
      power_row("received_power_aperture_w", ev.budget.received);
      row("link_margin", db_to_linear(ev.budget.link_margin), -ev.budget.link_margin.value());
      power_row("background_power_w", ev.background);
      power_row("noise_background_w", ev.noise.background);
      power_row("noise_dark_w", ev.noise.dark);
      power_row("noise_leakage_w", ev.noise.leakage);
      power_row("noise_total_w", ev.noise.total);
      row("blocking_loss", ev.blocking, 10.0 * std::log10(ev.blocking));
      plain_row("jitter_psi", ev.jitter_psi);
      row(ev.jitter_applied ? "jitter_loss" : "jitter_loss_not_applied", db_to_linear(ev.jitter_loss),
          -ev.jitter_loss.value());
      power_row("detected_power_w", ev.detected);
      power_row("required_power_with_coding_w", ev.required_with_coding);
      plain_row("capacity_bps", ev.capacity.capacity_bps);
      std::cerr << "# capacity_input = " << to_string(ev.capacity.reference) << ", regime = "
                << to_string(ev.capacity.regime) << '\n';
    } else if (*capacity) {
      echo_options(*capacity, common);
      const PhotonEnergyJ photon = photon_energy(LengthM::from_nm(cap_wavelength_nm));
      const PpmConfig ppm{cap_order, cap_slot_ns * 1e-9, 1.0};
      if (!ns_eta.empty()) {
        out << "scheme,eta,exponent,factor,exceeds_holevo\n";
        for (double eta : ns_eta) {
          for (auto scheme : {NsScheme::ook, NsScheme::ppm}) {
            const NsFactor f = ns_dimensional_factor(eta, scheme);
            out << (scheme == NsScheme::ook ? "ook" : "ppm") << ',' << format_csv(eta) << ','
                << format_csv(f.exponent) << ',' << format_csv(f.factor) << ',' << (f.exceeds_holevo ? 1 : 0)
                << '\n';
            if (f.exceeds_holevo) {
              std::cerr << "warning: number-state factor " << f.factor << " > 1 at eta = " << eta << '\n';
            }
          }
        }
      } else {
        out << "pr_w,pn_w,order,slot_time_s,capacity_bps,holevo_bps,regime,term_noise_w,term_quantum_w,"
               "term_bandwidth_w\n";
        for (double pr : cap_pr) {
          const CapacityReport r = ppm_pc_capacity({PowerW(pr), PowerW(cap_pn), photon, ppm});
          out << format_csv(pr) << ',' << format_csv(cap_pn) << ',' << cap_order << ',' << format_csv(ppm.slot_time_s)
              << ',' << format_csv(r.capacity_bps) << ',' << format_csv(holevo_limit(r.capacity_bps)) << ','
              << to_string(r.regime) << ',' << format_csv(r.term_noise) << ',' << format_csv(r.term_quantum) << ','
              << format_csv(r.term_bandwidth) << '\n';
        }
      }
    } else if (*ser) {
      echo_options(*ser, common);
      out << "order,ks_over_m_db,ks,ser\n";
      for (unsigned m : ser_orders) {
        require(is_ppm_order(m), "PPM order must be a power of two >= 2");
        for (double db : make_grid(ser_from_db, ser_to_db, ser_points, false)) {
          const double ks = m * std::pow(10.0, db / 10.0);
          out << m << ',' << format_csv(db) << ',' << format_csv(ks) << ','
              << format_csv(symbol_error_probability(m, ks)) << '\n';
        }
      }
    } else if (*design) {
      const MissionPreset preset = load_preset(common);
      const double target = design_target_mbps * 1e6;
      if (!design_search) {
        echo_options(*design, common);
        const TargetDesign d =
            design_for_target(target, design_slot_ns * 1e-9, PowerW(design_pn), preset.photon(), design_orders,
                              DecibelLoss(preset.coding_efficiency_db));
        out << "order,slot_time_s,code_rate,target_bps,required_power_w,required_power_coded_w,min_power_order,"
               "min_power_w\n";
        out << d.order << ',' << format_csv(d.slot_time_s) << ',' << format_csv(d.code_rate) << ','
            << format_csv(target) << ',' << format_csv(d.required_power.value()) << ','
            << format_csv(d.required_power_coded.value()) << ',' << d.min_power_order << ','
            << format_csv(d.min_power.value()) << '\n';
      } else {
        echo_preset(preset);
        echo_options(*design, common);
        DesignConstraints c;
        c.target_rate = target;
        c.orders = design_orders;
        c.slot_times_s = {design_slot_ns * 1e-9};
        c.code_rates = design_rates;
        c.coding_efficiency = DecibelLoss(design_coding_db >= 0.0 ? design_coding_db : preset.coding_efficiency_db);
        c.link_margin = DecibelLoss(design_margin_db >= 0.0 ? design_margin_db : preset.link_margin_db);
        const SearchResult result =
            design_pr > 0.0
                ? ccsds_search(PowerW(design_pr), PowerW(design_pn), preset.photon(), c)
                : ccsds_search(preset_channel(preset, LengthM::from_km(design_range_km > 0 ? design_range_km : preset.range_km),
                                              design_rx > 0.0 ? design_rx : preset.receiver_diameters_m.front()),
                               preset.photon(), c);
        out << "order,slot_time_s,code_rate,achieved_bps,capacity_bps,discounted_capacity_bps,required_power_w,"
               "feasible,meets_target,selected\n";
        for (const auto& s : result.evaluated) {
          const bool selected = result.best && s.order == result.best->order &&
                                s.slot_time_s == result.best->slot_time_s && s.code_rate == result.best->code_rate;
          out << s.order << ',' << format_csv(s.slot_time_s) << ',' << format_csv(s.code_rate) << ','
              << format_csv(s.achieved_rate) << ',' << format_csv(s.capacity_at_point) << ','
              << format_csv(s.discounted_capacity) << ','
              << (s.required_power ? format_csv(s.required_power->value()) : std::string("nan")) << ','
              << (s.feasible ? 1 : 0) << ',' << (s.meets_target ? 1 : 0) << ',' << (selected ? 1 : 0) << '\n';
        }
        if (!result.best) {
          std::cerr << "infeasible: no combination satisfies the capacity constraint\n";
          return kExitInfeasible;
        }
        if (!result.best->meets_target) {
          std::cerr << "infeasible: best rate " << result.best->achieved_rate << " bps is below the target\n";
          return kExitInfeasible;
        }
      }
    } else if (*sweep) {
      const MissionPreset preset = load_preset(common);
      echo_preset(preset);
      echo_options(*sweep, common);
      SweepGrid grid;
      for (double km : make_grid(sweep_from_km, sweep_to_km, sweep_points, sweep_log)) {
        grid.distances_m.push_back(km * 1e3);
      }
      grid.rx_diameters_m = sweep_rx.empty() ? preset.receiver_diameters_m : sweep_rx;
      grid.orders = sweep_orders.empty() ? preset.modulation_numbers : sweep_orders;
      grid.slot_times_s = ns_to_s(sweep_slots_ns.empty() ? std::vector<double>{preset.slot_time_ns.front()}
                                                         : sweep_slots_ns);
      write_sweep_csv(out, capacity_vs_distance_sweep(preset, grid));
    } else if (*planets) {
      echo_options(*planets, common);
      echo("distance", "average");
      const PhotonEnergyJ photon = photon_energy(LengthM::from_nm(planets_wavelength_nm));
      write_planets_csv(out, planets_table(PowerW(planets_pn), planets_order, planets_slot_ns * 1e-9, photon,
                                           reference_planet_powers()));
    } else if (*oam) {
      echo_options(*oam, common);
      LgBeamSpec spec;
      spec.azimuthal_index = oam_l;
      spec.radial_index = oam_p;
      spec.waist_m = oam_waist > 0.0 ? oam_waist : oam_tx_diameter / 2.0;
      spec.wavelength = LengthM::from_nm(oam_wavelength_nm);
      echo("waist_m", format_value(spec.waist_m));
      echo("rayleigh_range_m", format_value(spec.rayleigh_range()));
      echo("beam_radius_m", format_value(beam_radius(spec, oam_distance)));
      if (oam_angles > 0) {
        const PolarRaster raster = sample_polar(spec, oam_distance, oam_points, oam_angles, oam_extent);
        out << "r_m,phi_rad,intensity_normalized,phase_rad\n";
        for (std::size_t i = 0; i < raster.radii.size(); ++i) {
          for (std::size_t j = 0; j < raster.angles.size(); ++j) {
            out << format_csv(raster.radii[i]) << ',' << format_csv(raster.angles[j]) << ','
                << format_csv(raster.at(i, j)) << ',' << format_csv(raster.phase[i * raster.angles.size() + j])
                << '\n';
          }
        }
      } else {
        const BeamProfile profile = sample_profile(spec, oam_distance, oam_points, oam_extent);
        echo("sampled_ring_radius_m", format_value(profile.ring_radius));
        out << "r_m,intensity_normalized\n";
        for (const auto& [r, v] : profile.samples) out << format_csv(r) << ',' << format_csv(v) << '\n';
      }
    } else if (*fom) {
      echo_options(*fom, common);
      const double au = fom_planet.empty() ? fom_au : find_planet(fom_planet).average_distance.au();
      out << "distance_au,rate_bps,aperture_m,power_w,fom\n";
      out << format_csv(au) << ',' << format_csv(fom_rate) << ',' << format_csv(fom_aperture) << ','
          << format_csv(fom_power) << ',' << format_csv(figure_of_merit(au, fom_rate, fom_aperture, fom_power))
          << '\n';
    } else if (*simulate) {
      if (*sim_ser) {
        echo_options(*sim_ser, common);
        out << "order,ks,kb,estimate,stderr,analytic,trials,seed\n";
        for (unsigned m : sim_orders) {
          for (double ks : sim_ks) {
            SimConfig cfg;
            cfg.trials = sim_trials;
            cfg.seed = common.seed;
            cfg.ppm = PpmConfig{m, 1e-9, 1.0};
            cfg.slot_model = {ks, sim_kb};
            cfg.threads = sim_threads;
            const Estimate est = simulate_ser(cfg);
            const std::string analytic = sim_kb == 0.0 ? format_csv(symbol_error_probability(m, ks)) : "nan";
            out << m << ',' << format_csv(ks) << ',' << format_csv(sim_kb) << ',' << format_csv(est.value) << ','
                << format_csv(est.standard_error) << ',' << analytic << ',' << est.trials << ',' << common.seed
                << '\n';
          }
        }
      } else {
        echo_options(*sim_block, common);
        out << "flux,dead_time_s,load,ratio,analytic,horizon_s,seed\n";
        const double horizon = block_arrivals / block_flux;
        for (double load : block_load) {
          const double tau = load / block_flux;
          const double ratio = simulate_blocking(block_flux, tau, horizon, common.seed);
          out << format_csv(block_flux) << ',' << format_csv(tau) << ',' << format_csv(load) << ','
              << format_csv(ratio) << ',' << format_csv(blocking_loss({block_flux, 0.0}, tau)) << ','
              << format_csv(horizon) << ',' << common.seed << '\n';
        }
      }
    }
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
