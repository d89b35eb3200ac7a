#pragma once

#include <cstdint>

#include "dsoc/ppm_channel.hpp"

namespace dsoc {

struct SimConfig {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  PpmConfig ppm;
  PoissonSlotModel slot_model;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const;
};

struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t events = 0;
};

/// Trials are processed in fixed blocks with per-block seeds, so results
/// depend only on (seed, trials), never on the thread count.
inline constexpr std::uint64_t kTrialsPerBlock = 65'536;

std::uint64_t splitmix64(std::uint64_t x);

/// ML detection over Poisson slot counts with uniform tie-breaking.
Estimate simulate_ser(const SimConfig& cfg);

/// Fraction of Poisson arrivals counted by a non-paralyzable detector with
/// the given dead time over [0, horizon).
double simulate_blocking(double flux, double dead_time_s, double horizon_s, std::uint64_t seed);

}  // namespace dsoc
