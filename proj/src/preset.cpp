#include "dsoc/preset.hpp"

#include <functional>
#include <sstream>

#include "dsoc/errors.hpp"

namespace dsoc {

namespace {

template <class T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    if constexpr (std::is_floating_point_v<T>) {
      out += format_value(values[i]);
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

struct Field {
  std::string key;
  std::function<void(MissionPreset&, const std::string&)> set;
  std::function<std::string(const MissionPreset&)> get;
};

Field number(std::string key, double MissionPreset::*member) {
  return {key, [member, key](MissionPreset& p, const std::string& v) { p.*member = parse_double(key, v); },
          [member](const MissionPreset& p) { return format_value(p.*member); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = {
      number("wavelength_nm", &MissionPreset::wavelength_nm),
      number("range_km", &MissionPreset::range_km),
      number("transmit_power_w", &MissionPreset::transmit_power_w),
      number("transmitter_diameter_m", &MissionPreset::transmitter_diameter_m),
      number("transmitter_secondary_diameter_m", &MissionPreset::transmitter_secondary_diameter_m),
      number("transmitter_efficiency", &MissionPreset::transmitter_efficiency),
      {"receiver_diameter_m",
       [](MissionPreset& p, const std::string& v) { p.receiver_diameters_m = parse_double_list("receiver_diameter_m", v); },
       [](const MissionPreset& p) { return join(p.receiver_diameters_m); }},
      number("receiver_secondary_aperture_m", &MissionPreset::receiver_secondary_aperture_m),
      number("receiver_efficiency", &MissionPreset::receiver_efficiency),
      number("receiver_quantum_efficiency", &MissionPreset::receiver_quantum_efficiency),
      number("focal_length_m", &MissionPreset::focal_length_m),
      number("detector_diameter_m", &MissionPreset::detector_diameter_m),
      number("optical_filter_um", &MissionPreset::optical_filter_um),
      number("link_margin_db", &MissionPreset::link_margin_db),
      {"pointing_model",
       [](MissionPreset& p, const std::string& v) {
         if (v == "fixed") p.pointing_model = PointingMode::fixed;
         else if (v == "computed") p.pointing_model = PointingMode::computed;
         else throw InvalidInput("pointing_model must be fixed or computed");
       },
       [](const MissionPreset& p) { return std::string(p.pointing_model == PointingMode::fixed ? "fixed" : "computed"); }},
      number("pointing_loss_db", &MissionPreset::pointing_loss_db),
      number("pointing_rms_error_urad", &MissionPreset::pointing_rms_error_urad),
      number("probability_level", &MissionPreset::probability_level),
      {"modulation_numbers",
       [](MissionPreset& p, const std::string& v) { p.modulation_numbers = parse_unsigned_list("modulation_numbers", v); },
       [](const MissionPreset& p) { return join(p.modulation_numbers); }},
      {"slot_time_ns",
       [](MissionPreset& p, const std::string& v) { p.slot_time_ns = parse_double_list("slot_time_ns", v); },
       [](const MissionPreset& p) { return join(p.slot_time_ns); }},
      number("coding_ratio", &MissionPreset::coding_ratio),
      number("coding_efficiency_db", &MissionPreset::coding_efficiency_db),
      number("background_noise_reduction", &MissionPreset::background_noise_reduction),
      {"sky",
       [](MissionPreset& p, const std::string& v) {
         if (v == "night") p.sky = SkyCondition::night;
         else if (v == "day") p.sky = SkyCondition::day;
         else throw InvalidInput("sky must be night or day");
       },
       [](const MissionPreset& p) { return std::string(p.sky == SkyCondition::night ? "night" : "day"); }},
      number("radiance_planets_sky", &MissionPreset::radiance_planets_sky),
      number("night_sky_radiance", &MissionPreset::night_sky_radiance),
      number("planet_radiance", &MissionPreset::planet_radiance),
      number("stray_factor", &MissionPreset::stray_factor),
      number("star_irradiance", &MissionPreset::star_irradiance),
      number("leakage_ratio", &MissionPreset::leakage_ratio),
      {"detector_array",
       [](MissionPreset& p, const std::string& v) { p.detector_array = parse_unsigned("detector_array", v); },
       [](const MissionPreset& p) { return std::to_string(p.detector_array); }},
      number("detector_dark_rate", &MissionPreset::detector_dark_rate),
      number("blocking_time_ns", &MissionPreset::blocking_time_ns),
      number("jitter_time_ns", &MissionPreset::jitter_time_ns),
      {"apply_jitter_loss",
       [](MissionPreset& p, const std::string& v) { p.apply_jitter_loss = parse_bool("apply_jitter_loss", v); },
       [](const MissionPreset& p) { return std::string(p.apply_jitter_loss ? "true" : "false"); }},
      {"jitter_polynomial",
       [](MissionPreset& p, const std::string& v) {
         if (v == "linear") p.jitter_polynomial = JitterPolynomial::linear;
         else if (v == "quadratic") p.jitter_polynomial = JitterPolynomial::quadratic;
         else throw InvalidInput("jitter_polynomial must be linear or quadratic");
       },
       [](const MissionPreset& p) {
         return std::string(p.jitter_polynomial == JitterPolynomial::linear ? "linear" : "quadratic");
       }},
      number("atmospheric_transmittance", &MissionPreset::atmospheric_transmittance),
      number("scintillation_loss_db", &MissionPreset::scintillation_loss_db),
      number("cirrus_loss_db", &MissionPreset::cirrus_loss_db),
      {"capacity_power",
       [](MissionPreset& p, const std::string& v) {
         if (v == "aperture") p.capacity_power = PowerReference::aperture;
         else if (v == "detected") p.capacity_power = PowerReference::detected;
         else throw InvalidInput("capacity_power must be aperture or detected");
       },
       [](const MissionPreset& p) { return std::string(to_string(p.capacity_power)); }},
  };
  return table;
}

}  // namespace

void MissionPreset::apply(const ConfigMap& config) {
  for (const auto& [key, value] : config.entries()) {
    bool known = false;
    for (const auto& f : fields()) {
      if (f.key == key) {
        f.set(*this, value);
        known = true;
        break;
      }
    }
    if (!known) throw InvalidInput("unknown config key: " + key);
  }
  validate();
}

void MissionPreset::validate() const {
  require(wavelength_nm > 0.0, "wavelength_nm must be > 0");
  require(range_km > 0.0, "range_km must be > 0");
  require(transmit_power_w > 0.0, "transmit_power_w must be > 0");
  require(!receiver_diameters_m.empty(), "receiver_diameter_m must not be empty");
  require(!modulation_numbers.empty(), "modulation_numbers must not be empty");
  for (unsigned m : modulation_numbers) require(is_ppm_order(m), "modulation_numbers must be powers of two >= 2");
  require(!slot_time_ns.empty(), "slot_time_ns must not be empty");
  for (double t : slot_time_ns) require(t > 0.0, "slot_time_ns entries must be > 0");
  require(coding_ratio > 0.0 && coding_ratio <= 1.0, "coding_ratio must lie in (0, 1]");
  require(coding_efficiency_db >= 0.0, "coding_efficiency_db must be >= 0");
  require(blocking_time_ns >= 0.0 && jitter_time_ns >= 0.0, "detector times must be >= 0");
  transmitter().validate();
  for (double d : receiver_diameters_m) {
    receiver(d).validate();
    optics(d).validate();
  }
  environment().validate();
  background().validate();
  noise_params().validate();
  detector().validate();
}

std::vector<std::pair<std::string, std::string>> MissionPreset::resolved() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : fields()) out.emplace_back(f.key, f.get(*this));
  return out;
}

Terminal MissionPreset::transmitter() const {
  return {LengthM(transmitter_diameter_m), LengthM(transmitter_secondary_diameter_m), transmitter_efficiency};
}

Terminal MissionPreset::receiver(double diameter_m) const {
  return {LengthM(diameter_m), LengthM(receiver_secondary_aperture_m), receiver_efficiency};
}

PathEnvironment MissionPreset::environment() const {
  PathEnvironment env;
  env.atmospheric_transmittance = atmospheric_transmittance;
  env.cirrus_loss = DecibelLoss(cirrus_loss_db);
  env.scintillation_loss = DecibelLoss(scintillation_loss_db);
  env.link_margin = DecibelLoss(link_margin_db);
  if (pointing_model == PointingMode::fixed) {
    env.pointing = FixedPointingLoss{DecibelLoss(pointing_loss_db)};
  } else {
    env.pointing = ComputedPointingLoss{pointing_rms_error_urad * 1e-6, probability_level};
  }
  return env;
}

LinkScenario MissionPreset::scenario(LengthM range, double rx_diameter_m) const {
  return {transmitter(), receiver(rx_diameter_m), environment(), range, wavelength(), PowerW(transmit_power_w)};
}

BackgroundEnvironment MissionPreset::background() const {
  BackgroundEnvironment env;
  env.sky_radiance = sky == SkyCondition::night ? night_sky_radiance : radiance_planets_sky;
  env.planet_radiance = planet_radiance;
  env.stray_factor = stray_factor;
  env.star_irradiance = star_irradiance;
  env.filter_width_um = optical_filter_um;
  env.background_reduction = background_noise_reduction;
  return env;
}

ReceiverOptics MissionPreset::optics(double rx_diameter_m) const {
  return ReceiverOptics::for_aperture(LengthM(rx_diameter_m), LengthM(focal_length_m), LengthM(detector_diameter_m),
                                      receiver_efficiency);
}

DetectorNoiseParams MissionPreset::noise_params() const {
  return {detector_dark_rate, detector_array, leakage_ratio, receiver_quantum_efficiency};
}

PhotonCountingDetector MissionPreset::detector() const {
  PhotonCountingDetector det;
  det.quantum_efficiency = receiver_quantum_efficiency;
  det.dead_time_s = blocking_time_ns * 1e-9;
  det.jitter_sigma_s = jitter_time_ns * 1e-9;
  det.jitter.form = jitter_polynomial;
  return det;
}

MissionPreset mars_preset() { return MissionPreset{}; }

}  // namespace dsoc
