#pragma once

#include <cmath>
#include <compare>

#include "dsoc/errors.hpp"

namespace dsoc {

inline constexpr double kPlanck = 6.62607015e-34;         // J s
inline constexpr double kSpeedOfLight = 299'792'458.0;    // m/s
inline constexpr double kAstronomicalUnit = 149'597'870'700.0;  // m

/// Optical power in watts. Non-negative and finite.
class PowerW {
 public:
  constexpr PowerW() = default;
  explicit PowerW(double watts) : value_(watts) {
    require(std::isfinite(watts) && watts >= 0.0, "power must be finite and >= 0 W");
  }
  constexpr double value() const { return value_; }
  friend constexpr auto operator<=>(PowerW, PowerW) = default;

 private:
  double value_ = 0.0;
};

/// Length in metres. Non-negative and finite.
class LengthM {
 public:
  constexpr LengthM() = default;
  explicit LengthM(double meters) : value_(meters) {
    require(std::isfinite(meters) && meters >= 0.0, "length must be finite and >= 0 m");
  }
  static LengthM from_km(double km) { return LengthM(km * 1e3); }
  static LengthM from_nm(double nm) { return LengthM(nm * 1e-9); }
  static LengthM from_um(double um) { return LengthM(um * 1e-6); }
  static LengthM from_au(double au) { return LengthM(au * kAstronomicalUnit); }

  constexpr double value() const { return value_; }
  double au() const { return value_ / kAstronomicalUnit; }
  friend constexpr auto operator<=>(LengthM, LengthM) = default;

 private:
  double value_ = 0.0;
};

/// Attenuation in dB; positive values attenuate.
class DecibelLoss {
 public:
  constexpr DecibelLoss() = default;
  explicit DecibelLoss(double db) : value_(db) {
    require(std::isfinite(db), "dB value must be finite");
  }
  constexpr double value() const { return value_; }
  friend constexpr auto operator<=>(DecibelLoss, DecibelLoss) = default;

 private:
  double value_ = 0.0;
};

/// Energy of a single photon in joules. Strictly positive.
class PhotonEnergyJ {
 public:
  explicit PhotonEnergyJ(double joules) : value_(joules) {
    require(std::isfinite(joules) && joules > 0.0, "photon energy must be > 0 J");
  }
  constexpr double value() const { return value_; }
  friend constexpr auto operator<=>(PhotonEnergyJ, PhotonEnergyJ) = default;

 private:
  double value_;
};

/// 10^(-dB/10).
double db_to_linear(DecibelLoss loss);

/// Inverse of db_to_linear; factor must be > 0.
DecibelLoss linear_to_db(double factor);

/// h c / lambda.
PhotonEnergyJ photon_energy(LengthM wavelength);

/// Power expressed in dBW.
double to_dbw(PowerW power);

namespace literals {

inline PowerW operator""_W(long double v) { return PowerW(static_cast<double>(v)); }
inline LengthM operator""_m(long double v) { return LengthM(static_cast<double>(v)); }
inline LengthM operator""_km(long double v) { return LengthM::from_km(static_cast<double>(v)); }
inline LengthM operator""_nm(long double v) { return LengthM::from_nm(static_cast<double>(v)); }
inline LengthM operator""_um(long double v) { return LengthM::from_um(static_cast<double>(v)); }
inline DecibelLoss operator""_dB(long double v) { return DecibelLoss(static_cast<double>(v)); }

}  // namespace literals

}  // namespace dsoc
