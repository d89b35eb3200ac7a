#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "dsoc/pipeline.hpp"
#include "dsoc/scenarios.hpp"

using namespace dsoc;
using doctest::Approx;

namespace {

const PhotonEnergyJ kE = photon_energy(LengthM::from_nm(1550));

struct TableRow {
  const char* name;
  double capacity_mbps;
  double delay_min;
};

constexpr std::array<TableRow, 6> kTable{{
    {"Mercury", 139.45, 3.22},
    {"Mars", 123.42, 12.5},
    {"Jupiter", 52.527, 43.22},
    {"Saturn", 28.173, 66.66},
    {"Neptune", 2.4598, 250.0},
    {"Pluto", 1.4409, 327.77},
}};

ConfigMap parse(const std::string& text) {
  std::istringstream in(text);
  return ConfigMap::parse(in);
}

}  // namespace

TEST_CASE("one-way delay") {
  CHECK(one_way_delay(LengthM::from_km(225e6)) / 60 == Approx(12.5).epsilon(0.1 / 12.5));
  CHECK(one_way_delay(LengthM(0.0)) == 0.0);
  CHECK(one_way_delay(LengthM::from_km(5.9e9)) / 60 == Approx(327.8).epsilon(0.5 / 327.8));
  CHECK(one_way_delay(LengthM(299'792'458.0)) == 1.0);
}

TEST_CASE("figure of merit") {
  CHECK(figure_of_merit(1, 1, 1, 1) == 10.0);
  CHECK(figure_of_merit(2, 1, 1, 1) == 40.0);
  const double mars = LengthM::from_km(225e6).au();
  const double moon = LengthM::from_km(384'400).au();
  CHECK(figure_of_merit(mars, 1e6, 0.22, 4) / figure_of_merit(moon, 1e6, 0.22, 4) ==
        Approx(std::pow(225e6 / 384'400, 2)).epsilon(1e-12));
  CHECK_THROWS_AS(figure_of_merit(1, 1, 0, 1), InvalidInput);
  CHECK_THROWS_AS(figure_of_merit(1, 1, 1, 0), InvalidInput);
}

TEST_CASE("planet catalog") {
  CHECK(planet_catalog().size() == 6);
  CHECK(find_planet("Mars").min_distance.has_value());
  CHECK(find_planet("Mars").max_distance->value() == Approx(401e9));
  CHECK_THROWS_AS(find_planet("Vulcan"), InvalidInput);
}

TEST_CASE("planet table reproduces capacities and delays") {
  const auto rows = planets_table(PowerW(1.162e-16), 16, 0.25e-9, kE, reference_planet_powers());
  REQUIRE(rows.size() == kTable.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].name == kTable[i].name);
    CHECK(rows[i].capacity_bps / 1e6 == Approx(kTable[i].capacity_mbps).epsilon(0.005));
    CHECK(std::abs(rows[i].delay_s / 60 - kTable[i].delay_min) < 0.5);
    if (i > 0) CHECK(rows[i].capacity_bps < rows[i - 1].capacity_bps);
  }
  CHECK(planets_table(PowerW(1.162e-16), 16, 0.25e-9, kE, std::span<const PlanetPower>{}).empty());
}

TEST_CASE("planet CSV") {
  std::ostringstream out;
  write_planets_csv(out, planets_table(PowerW(1.162e-16), 16, 0.25e-9, kE, reference_planet_powers()));
  const std::string csv = out.str();
  CHECK(csv.rfind("planet,distance_m,pr_w,capacity_bps,delay_s,delay_min,regime\n", 0) == 0);
  CHECK(csv.find("Mars,2.250000000e+11,") != std::string::npos);
}

TEST_CASE("config parsing") {
  const auto c = parse("# comment\nrange_km = 1e8  # trailing\n\nsky=day\n");
  CHECK(c.entries().size() == 2);
  CHECK(c.entries().at("range_km") == "1e8");
  CHECK(c.entries().at("sky") == "day");
  CHECK_THROWS_AS(parse("range_km = 1\nrange_km = 2\n"), InvalidInput);
  CHECK_THROWS_AS(parse("no equals sign\n"), InvalidInput);
  CHECK_THROWS_AS(parse(" = 3\n"), InvalidInput);
  CHECK_THROWS_AS(ConfigMap::load("/nonexistent/file.cfg"), InvalidInput);

  CHECK(parse_double("k", "1.5e-3") == 1.5e-3);
  CHECK_THROWS_AS(parse_double("k", "1.5x"), InvalidInput);
  CHECK_THROWS_AS(parse_double("k", "nan"), InvalidInput);
  CHECK(parse_unsigned("k", "42") == 42);
  CHECK_THROWS_AS(parse_unsigned("k", "-1"), InvalidInput);
  CHECK(parse_bool("k", "true"));
  CHECK_FALSE(parse_bool("k", "false"));
  CHECK_THROWS_AS(parse_bool("k", "maybe"), InvalidInput);
  CHECK(parse_double_list("k", "4, 6,8") == std::vector<double>{4, 6, 8});
  CHECK(parse_unsigned_list("k", "16,64") == std::vector<unsigned>{16, 64});
  CHECK(format_value(0.1) == "0.1");
  CHECK(format_value(1550) == "1550");
  CHECK(format_value(3e-5) == "0.00003");
  CHECK(format_value(1e12) == "1e+12");
  CHECK(format_value(0.0) == "0");
  for (double v : {1.0 / 3, 225e6, 6.62607015e-34, -0.943, 123456.789, 2e-9}) {
    CHECK(std::strtod(format_value(v).c_str(), nullptr) == v);
  }
  CHECK(format_csv(1e9) == "1.000000000e+09");
}

TEST_CASE("preset overrides and validation") {
  MissionPreset p = mars_preset();
  p.apply(parse("range_km = 1e8\nmodulation_numbers = 16,1024\nsky = day\n"));
  CHECK(p.range_km == 1e8);
  CHECK(p.modulation_numbers == std::vector<unsigned>{16, 1024});
  CHECK(p.sky == SkyCondition::day);
  CHECK(p.background().sky_radiance == 85.0);

  MissionPreset q = mars_preset();
  CHECK_THROWS_AS(q.apply(parse("bogus_key = 1\n")), InvalidInput);
  CHECK_THROWS_AS(q.apply(parse("modulation_numbers = 16,48\n")), InvalidInput);
  CHECK_THROWS_AS(q.apply(parse("coding_ratio = 0\n")), InvalidInput);
  CHECK_THROWS_AS(q.apply(parse("sky = dusk\n")), InvalidInput);
  CHECK_THROWS_AS(q.apply(parse("receiver_quantum_efficiency = 1.2\n")), InvalidInput);
}

TEST_CASE("resolved parameters round-trip") {
  MissionPreset p = mars_preset();
  p.apply(parse("wavelength_nm = 1064\npointing_model = computed\nslot_time_ns = 1,2\n"));
  ConfigMap all;
  for (const auto& [k, v] : p.resolved()) all.set(k, v);
  MissionPreset q = mars_preset();
  q.apply(all);
  CHECK(q.resolved() == p.resolved());
}

TEST_CASE("pipeline at Mars with the built-in preset") {
  const MissionPreset p = mars_preset();
  const auto eval = evaluate_link(p, LengthM::from_km(225e6), 4.0, PpmConfig{16, 0.25e-9, 1.0});
  CHECK(eval.budget.received.value() == Approx(4.036e-12).epsilon(1e-3));
  CHECK(eval.noise.dark.value() == Approx(1.1535e-16).epsilon(1e-3));
  CHECK(eval.noise.total.value() == Approx(1.1620e-16).epsilon(0.01));
  CHECK(eval.background.value() == Approx(5.5e-20).epsilon(0.01));
  CHECK(eval.blocking > 0.5);
  CHECK(eval.blocking < 0.6);
  CHECK_FALSE(eval.jitter_applied);
  CHECK(eval.capacity_input().value() == eval.budget.received.value());
  CHECK(eval.detected.value() < eval.budget.received.value());
  CHECK(eval.required_with_coding.value() > eval.detected.value());
}

TEST_CASE("jitter loss enters detected power only when enabled") {
  MissionPreset p = mars_preset();
  p.apply(parse("apply_jitter_loss = true\njitter_time_ns = 0.25\ncapacity_power = detected\n"));
  const auto with = evaluate_link(p, LengthM::from_km(225e6), 4.0, PpmConfig{16, 0.25e-9, 0.5});
  CHECK(with.jitter_applied);
  CHECK(with.jitter_psi == Approx(0.4096).epsilon(1e-9));
  CHECK(with.jitter_loss.value() == Approx(5.87).epsilon(1e-3));
  CHECK(with.capacity.reference == PowerReference::detected);
  CHECK(with.capacity_input().value() == with.detected.value());
  CHECK(with.detected.value() ==
        Approx(with.budget.received.value() * with.blocking * 0.5 * std::pow(10.0, -with.jitter_loss.value() / 10))
            .epsilon(1e-12));
}

TEST_CASE("grid helper") {
  const auto lin = make_grid(0, 10, 11, false);
  CHECK(lin.size() == 11);
  CHECK(lin[3] == Approx(3.0));
  const auto lg = make_grid(1, 1000, 4, true);
  CHECK(lg[1] == Approx(10.0));
  CHECK(lg.back() == 1000.0);
  CHECK(make_grid(5, 9, 1, false) == std::vector<double>{5});
  CHECK_THROWS_AS(make_grid(0, 10, 3, true), InvalidInput);
  CHECK_THROWS_AS(make_grid(0, 10, 0, false), InvalidInput);
}

TEST_CASE("sweep ordering, monotonicity and determinism") {
  const MissionPreset p = mars_preset();
  SweepGrid g;
  g.distances_m = make_grid(50e9, 401e9, 12, false);
  g.rx_diameters_m = {4, 6, 8, 10};
  g.orders = {16, 64, 256, 1024};
  g.slot_times_s = {2e-9};
  const auto rows = capacity_vs_distance_sweep(p, g, 1);
  REQUIRE(rows.size() == 12 * 4 * 4);
  CHECK(rows[0].distance_m == g.distances_m[0]);
  CHECK(rows[1].order == 64);
  CHECK(rows[4].rx_diameter_m == 6.0);

  // Larger aperture always yields more capacity at the same point.
  for (std::size_t i = 0; i + 4 < rows.size(); ++i) {
    if (rows[i].rx_diameter_m < 10.0 && rows[i].distance_m == rows[i + 4].distance_m) {
      CHECK(rows[i + 4].capacity_bps > rows[i].capacity_bps);
    }
  }

  // M = 16 leads across the Mars range at a 2 ns slot.
  for (const auto& l : sweep_leaders(rows)) CHECK(l.order == 16);

  std::ostringstream a, b;
  write_sweep_csv(a, rows);
  write_sweep_csv(b, capacity_vs_distance_sweep(p, g, 3));
  CHECK(a.str() == b.str());
}
