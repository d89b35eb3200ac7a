#include "dsoc/link_budget.hpp"

#include <cmath>
#include <numbers>

namespace dsoc {

using std::numbers::pi;

double Terminal::obscuration_ratio() const {
  require(aperture_diameter.value() > 0.0, "aperture diameter must be > 0");
  return secondary_diameter.value() / aperture_diameter.value();
}

void Terminal::validate() const {
  require(aperture_diameter.value() > 0.0, "aperture diameter must be > 0");
  require(secondary_diameter < aperture_diameter, "secondary diameter must be smaller than the aperture");
  require(optics_efficiency > 0.0 && optics_efficiency <= 1.0, "optics efficiency must lie in (0, 1]");
}

void PathEnvironment::validate() const {
  require(atmospheric_transmittance > 0.0 && atmospheric_transmittance <= 1.0,
          "atmospheric transmittance must lie in (0, 1]");
  require(cirrus_loss.value() >= 0.0, "cirrus loss must be >= 0 dB");
  require(scintillation_loss.value() >= 0.0, "scintillation loss must be >= 0 dB");
  require(link_margin.value() >= 0.0, "link margin must be >= 0 dB");
  if (const auto* fixed = std::get_if<FixedPointingLoss>(&pointing)) {
    require(fixed->loss.value() >= 0.0, "pointing loss must be >= 0 dB");
  } else {
    const auto& computed = std::get<ComputedPointingLoss>(pointing);
    require(std::isfinite(computed.sigma_rad) && computed.sigma_rad >= 0.0, "pointing sigma must be >= 0");
    require(computed.probability_level > 0.0 && computed.probability_level < 1.0,
            "pointing probability level must lie in (0, 1)");
  }
}

void LinkScenario::validate() const {
  tx.validate();
  rx.validate();
  env.validate();
  require(range.value() > 0.0, "range must be > 0");
  require(wavelength.value() > 0.0, "wavelength must be > 0");
  require(tx_power.value() > 0.0, "transmit power must be > 0");
}

double free_space_loss(LengthM range, LengthM wavelength) {
  require(range.value() > 0.0, "range must be > 0");
  require(wavelength.value() > 0.0, "wavelength must be > 0");
  const double ratio = wavelength.value() / (4.0 * pi * range.value());
  return ratio * ratio;
}

double tx_gain(const Terminal& tx, LengthM wavelength) {
  require(tx.aperture_diameter.value() > 0.0, "transmitter diameter must be > 0");
  require(wavelength.value() > 0.0, "wavelength must be > 0");
  const double x = pi * tx.aperture_diameter.value() / wavelength.value();
  return 2.0 * x * x;
}

double rx_gain(const Terminal& rx, LengthM wavelength) {
  require(wavelength.value() > 0.0, "wavelength must be > 0");
  const double gamma = rx.obscuration_ratio();
  require(gamma < 1.0, "receiver fully obscured (gamma_r >= 1)");
  const double x = pi * rx.aperture_diameter.value() / wavelength.value();
  return x * x * (1.0 - gamma * gamma);
}

double gaussian_half_beamwidth(const Terminal& tx, LengthM wavelength) {
  require(tx.aperture_diameter.value() > 0.0, "transmitter diameter must be > 0");
  return 2.0 * wavelength.value() / (pi * tx.aperture_diameter.value());
}

double pointing_loss(const PathEnvironment& env, const Terminal& tx, LengthM wavelength) {
  return std::visit(
      [&](const auto& model) -> double {
        using Model = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<Model, FixedPointingLoss>) {
          require(model.loss.value() >= 0.0, "pointing loss must be >= 0 dB");
          return db_to_linear(model.loss);
        } else {
          require(model.probability_level > 0.0 && model.probability_level < 1.0,
                  "pointing probability level must lie in (0, 1)");
          require(model.sigma_rad >= 0.0, "pointing sigma must be >= 0");
          const double w0 = gaussian_half_beamwidth(tx, wavelength);
          const double exponent = 4.0 * model.sigma_rad * model.sigma_rad / (w0 * w0);
          return std::pow(model.probability_level, exponent);
        }
      },
      env.pointing);
}

double BudgetTerm::db() const { return 10.0 * std::log10(factor); }

double ReceivedPowerReport::total_db() const {
  double sum = 0.0;
  for (const auto& t : terms) sum += t.db();
  return sum;
}

ReceivedPowerReport received_power(const LinkScenario& s) {
  s.validate();
  ReceivedPowerReport report{s.tx_power, PowerW{}, {}, s.env.link_margin};
  report.terms = {
      {"tx_gain", tx_gain(s.tx, s.wavelength)},
      {"rx_gain", rx_gain(s.rx, s.wavelength)},
      {"free_space_loss", free_space_loss(s.range, s.wavelength)},
      {"atmospheric_transmittance", s.env.atmospheric_transmittance},
      {"cirrus_loss", db_to_linear(s.env.cirrus_loss)},
      {"scintillation_loss", db_to_linear(s.env.scintillation_loss)},
      {"pointing_loss", pointing_loss(s.env, s.tx, s.wavelength)},
      {"tx_efficiency", s.tx.optics_efficiency},
      {"rx_efficiency", s.rx.optics_efficiency},
  };
  double p = s.tx_power.value();
  for (const auto& t : report.terms) p *= t.factor;
  report.received = PowerW(p);
  return report;
}

}  // namespace dsoc
