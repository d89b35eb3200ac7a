#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "dsoc/quantities.hpp"

namespace dsoc {

/// Laguerre-Gaussian mode LG_p^l with waist w0 at z = 0.
struct LgBeamSpec {
  int azimuthal_index = 0;      // l; sign gives the twist direction
  unsigned radial_index = 0;    // p
  double waist_m = 0.5;
  LengthM wavelength = LengthM(1550e-9);

  double rayleigh_range() const;  // pi w0^2 / lambda
  void validate() const;
};

double beam_radius(const LgBeamSpec& spec, double z);

/// Generalized Laguerre polynomial L_p^alpha(x) by the three-term recurrence.
double generalized_laguerre(unsigned p, double alpha, double x);

/// Complex field, normalized so that the integral of |E|^2 over a transverse
/// plane is 1 at every z.
std::complex<double> lg_field(const LgBeamSpec& spec, double r, double phi, double z);

double lg_intensity(const LgBeamSpec& spec, double r, double z);

/// Radius of peak intensity for single-ring (p = 0) modes: w(z) sqrt(|l| / 2).
double ring_radius(const LgBeamSpec& spec, double z);

struct BeamProfile {
  double distance = 0.0;
  double radius_at_z = 0.0;
  double ring_radius = 0.0;  // radius of the largest sampled intensity
  double step = 0.0;
  std::vector<std::pair<double, double>> samples;  // (r, intensity / peak)

  /// Trapezoidal integral of the unnormalized intensity, 2 pi r dr.
  double total_power = 0.0;
};

/// `count` radial samples uniformly spaced on [0, extent_in_radii * w(z)].
BeamProfile sample_profile(const LgBeamSpec& spec, double z, std::size_t count, double extent_in_radii = 4.0);

/// Intensity on an (r, phi) grid, row-major by r, normalized to the peak.
struct PolarRaster {
  std::vector<double> radii;
  std::vector<double> angles;
  std::vector<double> intensity;  // radii.size() * angles.size()
  std::vector<double> phase;      // arg(E), radians

  double at(std::size_t ir, std::size_t ia) const { return intensity[ir * angles.size() + ia]; }
};

PolarRaster sample_polar(const LgBeamSpec& spec, double z, std::size_t radial_count, std::size_t angular_count,
                         double extent_in_radii = 4.0);

/// Bits per symbol when N OAM modes each carry an M-PPM symbol: log2 M + log2 N.
double mm_bits_per_symbol(unsigned mode_count, unsigned ppm_order);

/// Gain over plain PPM: 1 + log2 N / log2 M.
double mm_spectral_multiplier(unsigned mode_count, unsigned ppm_order);

}  // namespace dsoc
