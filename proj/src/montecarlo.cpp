#include "dsoc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "dsoc/errors.hpp"

namespace dsoc {

void SimConfig::validate() const {
  require(trials >= 1, "trials must be >= 1");
  ppm.validate();
  slot_model.validate();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

std::uint64_t run_block(const SimConfig& cfg, std::uint64_t block, std::uint64_t trials) {
  std::mt19937_64 rng(splitmix64(cfg.seed + block));
  const double ks = cfg.slot_model.signal_per_pulse;
  const double kb = cfg.slot_model.noise_per_slot;
  std::poisson_distribution<std::uint64_t> pulsed(ks + kb);
  std::poisson_distribution<std::uint64_t> empty(kb > 0.0 ? kb : 1.0);
  const unsigned m = cfg.ppm.order;

  std::uint64_t errors = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    // Slot 0 carries the pulse; the decision is correct only if slot 0 is
    // among the maxima and wins the uniform draw among ties.
    const std::uint64_t signal = ks + kb > 0.0 ? pulsed(rng) : 0;
    std::uint64_t best = signal;
    std::uint64_t ties = 1;
    bool pulse_in_max = true;
    if (kb > 0.0) {
      for (unsigned s = 1; s < m; ++s) {
        const std::uint64_t c = empty(rng);
        if (c > best) {
          best = c;
          ties = 1;
          pulse_in_max = false;
        } else if (c == best) {
          ++ties;
        }
      }
    } else if (signal == 0) {
      ties = m;  // every empty slot counts exactly zero
    }
    bool correct = false;
    if (pulse_in_max) {
      correct = ties == 1 || std::uniform_int_distribution<std::uint64_t>(0, ties - 1)(rng) == 0;
    }
    if (!correct) ++errors;
  }
  return errors;
}

}  // namespace

Estimate simulate_ser(const SimConfig& cfg) {
  cfg.validate();
  const std::uint64_t blocks = (cfg.trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  std::vector<std::uint64_t> errors(blocks, 0);

  unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) {
          const std::uint64_t n = std::min(kTrialsPerBlock, cfg.trials - b * kTrialsPerBlock);
          errors[b] = run_block(cfg, b, n);
        }
      });
    }
  }

  Estimate est;
  est.trials = cfg.trials;
  for (auto e : errors) est.events += e;
  const double n = static_cast<double>(cfg.trials);
  est.value = static_cast<double>(est.events) / n;
  est.standard_error = std::sqrt(est.value * (1.0 - est.value) / n);
  return est;
}

double simulate_blocking(double flux, double dead_time_s, double horizon_s, std::uint64_t seed) {
  require(flux > 0.0, "photon flux must be > 0");
  require(dead_time_s >= 0.0, "dead time must be >= 0");
  require(horizon_s > 0.0, "horizon must be > 0");
  std::mt19937_64 rng(splitmix64(seed));
  std::exponential_distribution<double> gap(flux);

  std::uint64_t arrived = 0;
  std::uint64_t counted = 0;
  double t = gap(rng);
  double blind_until = -1.0;
  while (t < horizon_s) {
    ++arrived;
    if (t >= blind_until) {
      ++counted;
      blind_until = t + dead_time_s;
    }
    t += gap(rng);
  }
  return arrived == 0 ? 1.0 : static_cast<double>(counted) / static_cast<double>(arrived);
}

}  // namespace dsoc
