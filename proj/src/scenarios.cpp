#include "dsoc/scenarios.hpp"

#include "dsoc/config.hpp"
#include "dsoc/errors.hpp"

namespace dsoc {

const std::vector<PlanetEntry>& planet_catalog() {
  static const std::vector<PlanetEntry> catalog = {
      {"Mercury", LengthM::from_km(58e6), std::nullopt, std::nullopt},
      {"Mars", LengthM::from_km(225e6), LengthM::from_km(50e6), LengthM::from_km(401e6)},
      {"Jupiter", LengthM::from_km(778e6), std::nullopt, std::nullopt},
      {"Saturn", LengthM::from_km(1.2e9), std::nullopt, std::nullopt},
      {"Neptune", LengthM::from_km(4.5e9), std::nullopt, std::nullopt},
      {"Pluto", LengthM::from_km(5.9e9), std::nullopt, std::nullopt},
  };
  return catalog;
}

const PlanetEntry& find_planet(const std::string& name) {
  for (const auto& p : planet_catalog()) {
    if (p.name == name) return p;
  }
  throw InvalidInput("unknown planet: " + name);
}

const std::vector<PlanetPower>& reference_planet_powers() {
  static const std::vector<PlanetPower> powers = {
      {"Mercury", PowerW(5.1856e-12)}, {"Mars", PowerW(4.5053e-12)},  {"Jupiter", PowerW(1.7741e-12)},
      {"Saturn", PowerW(9.2772e-13)},  {"Neptune", PowerW(7.8951e-14)}, {"Pluto", PowerW(4.6219e-14)},
  };
  return powers;
}

double one_way_delay(LengthM distance) { return distance.value() / kSpeedOfLight; }

double figure_of_merit(double distance_au, double rate_bps, double aperture_m, double power_w) {
  require(aperture_m > 0.0, "aperture must be > 0");
  require(power_w > 0.0, "power must be > 0");
  require(distance_au >= 0.0 && rate_bps >= 0.0, "distance and rate must be >= 0");
  return 10.0 * distance_au * distance_au * rate_bps / (aperture_m * power_w);
}

std::vector<PlanetRow> planets_table(PowerW pn, unsigned order, double slot_time_s, PhotonEnergyJ photon,
                                     std::span<const PlanetPower> inputs) {
  std::vector<PlanetRow> rows;
  for (const auto& in : inputs) {
    const PlanetEntry& planet = find_planet(in.name);
    const CapacityReport c = ppm_pc_capacity({in.received, pn, photon, PpmConfig{order, slot_time_s, 1.0}});
    rows.push_back({planet.name, planet.average_distance.value(), in.received.value(), c.capacity_bps,
                    one_way_delay(planet.average_distance), c.regime});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "distance_m,rx_diameter_m,order,slot_time_s,pr_w,pn_w,capacity_bps,regime\n";
  for (const auto& r : rows) {
    out << format_csv(r.distance_m) << ',' << format_csv(r.rx_diameter_m) << ',' << r.order << ','
        << format_csv(r.slot_time_s) << ',' << format_csv(r.pr_w) << ',' << format_csv(r.pn_w) << ','
        << format_csv(r.capacity_bps) << ',' << to_string(r.regime) << '\n';
  }
}

void write_planets_csv(std::ostream& out, const std::vector<PlanetRow>& rows) {
  out << "planet,distance_m,pr_w,capacity_bps,delay_s,delay_min,regime\n";
  for (const auto& r : rows) {
    out << r.name << ',' << format_csv(r.distance_m) << ',' << format_csv(r.pr_w) << ','
        << format_csv(r.capacity_bps) << ',' << format_csv(r.delay_s) << ',' << format_csv(r.delay_s / 60.0) << ','
        << to_string(r.regime) << '\n';
  }
}

}  // namespace dsoc
