#include "dsoc/oam.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "dsoc/ppm_channel.hpp"

namespace dsoc {

using std::numbers::pi;

double LgBeamSpec::rayleigh_range() const { return pi * waist_m * waist_m / wavelength.value(); }

void LgBeamSpec::validate() const {
  require(std::isfinite(waist_m) && waist_m > 0.0, "beam waist must be > 0");
  require(wavelength.value() > 0.0, "wavelength must be > 0");
}

double beam_radius(const LgBeamSpec& spec, double z) {
  spec.validate();
  require(z >= 0.0, "propagation distance must be >= 0");
  const double ratio = z / spec.rayleigh_range();
  return spec.waist_m * std::sqrt(1.0 + ratio * ratio);
}

double generalized_laguerre(unsigned p, double alpha, double x) {
  if (p == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + alpha - x;
  for (unsigned k = 1; k < p; ++k) {
    const double kd = static_cast<double>(k);
    const double next = ((2.0 * kd + 1.0 + alpha - x) * curr - (kd + alpha) * prev) / (kd + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

namespace {

double normalization(unsigned p, unsigned abs_l) {
  // sqrt(2 p! / (pi (p + |l|)!))
  return std::sqrt(2.0 / pi * std::exp(std::lgamma(p + 1.0) - std::lgamma(p + abs_l + 1.0)));
}

double envelope(const LgBeamSpec& spec, double r, double w) {
  const unsigned abs_l = static_cast<unsigned>(std::abs(spec.azimuthal_index));
  const double rho = std::sqrt(2.0) * r / w;
  const double x = rho * rho;
  return normalization(spec.radial_index, abs_l) / w * std::pow(rho, abs_l) * std::exp(-r * r / (w * w)) *
         generalized_laguerre(spec.radial_index, abs_l, x);
}

}  // namespace

std::complex<double> lg_field(const LgBeamSpec& spec, double r, double phi, double z) {
  require(r >= 0.0, "radius must be >= 0");
  const double w = beam_radius(spec, z);
  const double zr = spec.rayleigh_range();
  const double k = 2.0 * pi / spec.wavelength.value();
  const int l = spec.azimuthal_index;
  const double gouy = (2.0 * spec.radial_index + std::abs(l) + 1.0) * std::atan(z / zr);
  const double curvature = -k * r * r * z / (2.0 * (z * z + zr * zr));
  const double phase = curvature + l * phi + gouy;
  return envelope(spec, r, w) * std::polar(1.0, phase);
}

double lg_intensity(const LgBeamSpec& spec, double r, double z) {
  require(r >= 0.0, "radius must be >= 0");
  const double a = envelope(spec, r, beam_radius(spec, z));
  return a * a;
}

double ring_radius(const LgBeamSpec& spec, double z) {
  require(spec.radial_index == 0, "ring radius is closed-form only for p = 0; sample the profile instead");
  return beam_radius(spec, z) * std::sqrt(std::abs(spec.azimuthal_index) / 2.0);
}

BeamProfile sample_profile(const LgBeamSpec& spec, double z, std::size_t count, double extent_in_radii) {
  require(count >= 2, "profile needs at least two samples");
  require(extent_in_radii > 0.0, "profile extent must be > 0");
  BeamProfile out;
  out.distance = z;
  out.radius_at_z = beam_radius(spec, z);
  out.step = extent_in_radii * out.radius_at_z / static_cast<double>(count - 1);

  std::vector<double> raw(count);
  double peak = 0.0;
  std::size_t peak_index = 0;
  for (std::size_t i = 0; i < count; ++i) {
    raw[i] = lg_intensity(spec, out.step * static_cast<double>(i), z);
    if (raw[i] > peak) {
      peak = raw[i];
      peak_index = i;
    }
  }
  out.ring_radius = out.step * static_cast<double>(peak_index);

  out.samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = out.step * static_cast<double>(i);
    out.samples.emplace_back(r, peak > 0.0 ? raw[i] / peak : 0.0);
    if (i > 0) {
      const double r0 = r - out.step;
      out.total_power += 0.5 * out.step * 2.0 * pi * (raw[i - 1] * r0 + raw[i] * r);
    }
  }
  return out;
}

PolarRaster sample_polar(const LgBeamSpec& spec, double z, std::size_t radial_count, std::size_t angular_count,
                         double extent_in_radii) {
  require(radial_count >= 2 && angular_count >= 1, "raster needs at least 2 radii and 1 angle");
  PolarRaster out;
  const double step = extent_in_radii * beam_radius(spec, z) / static_cast<double>(radial_count - 1);
  for (std::size_t i = 0; i < radial_count; ++i) out.radii.push_back(step * static_cast<double>(i));
  for (std::size_t j = 0; j < angular_count; ++j) {
    out.angles.push_back(2.0 * pi * static_cast<double>(j) / static_cast<double>(angular_count));
  }
  out.intensity.reserve(radial_count * angular_count);
  out.phase.reserve(radial_count * angular_count);
  double peak = 0.0;
  for (double r : out.radii) {
    for (double phi : out.angles) {
      const auto e = lg_field(spec, r, phi, z);
      out.intensity.push_back(std::norm(e));
      out.phase.push_back(std::arg(e));
      peak = std::max(peak, out.intensity.back());
    }
  }
  if (peak > 0.0) {
    for (double& v : out.intensity) v /= peak;
  }
  return out;
}

double mm_bits_per_symbol(unsigned mode_count, unsigned ppm_order) {
  require(mode_count >= 1 && std::has_single_bit(mode_count), "mode count must be a power of two");
  require(is_ppm_order(ppm_order), "PPM order must be a power of two >= 2");
  return std::log2(static_cast<double>(ppm_order)) + std::log2(static_cast<double>(mode_count));
}

double mm_spectral_multiplier(unsigned mode_count, unsigned ppm_order) {
  return mm_bits_per_symbol(mode_count, ppm_order) / std::log2(static_cast<double>(ppm_order));
}

}  // namespace dsoc
