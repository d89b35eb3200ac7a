#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dsoc/capacity.hpp"
#include "dsoc/pipeline.hpp"
#include "dsoc/quantities.hpp"

namespace dsoc {

struct PlanetEntry {
  std::string name;
  LengthM average_distance;
  std::optional<LengthM> min_distance;
  std::optional<LengthM> max_distance;
};

/// Mercury through Pluto, Earth-relative average distances.
const std::vector<PlanetEntry>& planet_catalog();
const PlanetEntry& find_planet(const std::string& name);

/// Reference received powers for the catalog bodies at average distance.
struct PlanetPower {
  std::string name;
  PowerW received;
};
const std::vector<PlanetPower>& reference_planet_powers();

/// Light time, seconds.
double one_way_delay(LengthM distance);

/// 10 Dis^2 R / (Dia P), distance in AU.
double figure_of_merit(double distance_au, double rate_bps, double aperture_m, double power_w);

struct PlanetRow {
  std::string name;
  double distance_m = 0.0;
  double pr_w = 0.0;
  double capacity_bps = 0.0;
  double delay_s = 0.0;
  Regime regime = Regime::noise_limited;
};

/// Capacity at each supplied received power, at a fixed (Pn, M, T_slot).
std::vector<PlanetRow> planets_table(PowerW pn, unsigned order, double slot_time_s, PhotonEnergyJ photon,
                                     std::span<const PlanetPower> inputs);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_planets_csv(std::ostream& out, const std::vector<PlanetRow>& rows);

}  // namespace dsoc
