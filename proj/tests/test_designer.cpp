#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "dsoc/designer.hpp"

using namespace dsoc;
using doctest::Approx;

namespace {

const PhotonEnergyJ kE = photon_energy(LengthM::from_nm(1550));
const std::array<unsigned, 10> kOrders{2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};

double oracle_capacity(double pr, double pn, unsigned m, double t) {
  const double e = kE.value();
  const double lm = std::log(static_cast<double>(m));
  return pr * pr / (std::log(2.0) * e * (2 * pn / (m - 1.0) + pr / lm + pr * pr * m * t / (lm * e)));
}

DesignConstraints example_constraints() {
  DesignConstraints c;
  c.target_rate = 56e6;
  c.orders = {16, 32, 64, 128};
  c.slot_times_s = {1e-9};
  c.code_rates = {1.0 / 3, 0.5, 0.6, 2.0 / 3};
  return c;
}

}  // namespace

TEST_CASE("optimal order agrees with a brute-force argmax") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double pr = std::pow(10.0, -18 + 10 * u(rng));
    const double pn = std::pow(10.0, -19 + 6 * u(rng));
    const double t = std::pow(10.0, -10 + 1.5 * u(rng));
    std::vector<double> c;
    for (unsigned m : kOrders) c.push_back(oracle_capacity(pr, pn, m, t));
    const auto it = std::max_element(c.begin(), c.end());
    const unsigned expected = kOrders[static_cast<std::size_t>(it - c.begin())];
    const unsigned got = optimal_order(PowerW(pr), PowerW(pn), t, kE, kOrders);
    // Allow a last-bit disagreement only when two capacities tie to rounding.
    if (got != expected) {
      const auto g = static_cast<std::size_t>(std::find(kOrders.begin(), kOrders.end(), got) - kOrders.begin());
      CHECK(c[g] == Approx(*it).epsilon(1e-12));
    }
  }
}

TEST_CASE("optimal order extremes and staircase") {
  // M = 2 and M = 4 share one saturation rate; M = 4 approaches it faster.
  CHECK(optimal_order(PowerW(1e-3), PowerW(1e-16), 0.25e-9, kE, kOrders) == 4);
  const std::array<unsigned, 3> upper{8, 16, 32};
  CHECK(optimal_order(PowerW(1e-3), PowerW(1e-16), 0.25e-9, kE, upper) == 8);
  CHECK(optimal_order(PowerW(1e-19), PowerW(1e-16), 0.25e-9, kE, kOrders) == 1024);
  unsigned prev = 1u << 20;
  for (double lp = -20; lp <= -3; lp += 0.05) {
    const unsigned m = optimal_order(PowerW(std::pow(10.0, lp)), PowerW(1e-16), 0.25e-9, kE, kOrders);
    CHECK(m <= prev);
    prev = m;
  }
  const std::array<unsigned, 1> single{64};
  CHECK(optimal_order(PowerW(1e-12), PowerW(1e-16), 1e-9, kE, single) == 64);
  CHECK_THROWS_AS(optimal_order(PowerW(1e-12), PowerW(1e-16), 1e-9, kE, std::span<const unsigned>{}), InvalidInput);
}

TEST_CASE("code rate for a target") {
  CHECK(ecc_rate_for_target(56e6, 64, 1e-9) == Approx(0.597).epsilon(1e-3));
  CHECK(ecc_rate_for_target(93.75e6, 64, 1e-9) == Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(ecc_rate_for_target(187.5e6, 64, 1e-9), Infeasible);
  CHECK_THROWS_AS(ecc_rate_for_target(0.0, 64, 1e-9), InvalidInput);
}

TEST_CASE("required power inverts the Mars row") {
  const PowerW p = required_power(123.42e6, 16, 0.25e-9, PowerW(1.162e-16), kE);
  CHECK(p.value() == Approx(4.5053e-12).epsilon(0.005));
  CHECK(required_power(0.0, 16, 0.25e-9, PowerW(1.162e-16), kE).value() == 0.0);
  CHECK_THROWS_AS(required_power(1e9, 16, 0.25e-9, PowerW(1.162e-16), kE), Infeasible);
  CHECK_THROWS_AS(required_power(2e9, 16, 0.25e-9, PowerW(1.162e-16), kE), Infeasible);
}

TEST_CASE("bisection root is bracketed by a dense grid scan") {
  const double pn = 2.1e-14;
  const double t = 1e-9;
  const unsigned m = 64;
  const double target = 56e6;
  const double root = required_power(target, m, t, PowerW(pn), kE).value();

  const int n = 1'000'000;
  const double lo = std::log(1e-20);
  const double hi = std::log(1e-3);
  int first = -1;
  for (int i = 0; i <= n; ++i) {
    if (oracle_capacity(std::exp(lo + (hi - lo) * i / n), pn, m, t) >= target) {
      first = i;
      break;
    }
  }
  REQUIRE(first > 0);
  CHECK(root >= std::exp(lo + (hi - lo) * (first - 1) / n) * (1 - 1e-9));
  CHECK(root <= std::exp(lo + (hi - lo) * first / n) * (1 + 1e-9));
}

TEST_CASE("required power round trip") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const unsigned m = kOrders[static_cast<std::size_t>(u(rng) * kOrders.size())];
    const double t = std::pow(10.0, -10 + u(rng));
    const double pn = std::pow(10.0, -18 + 5 * u(rng));
    const double target = saturation_rate(m, t) * (0.001 + 0.99 * u(rng));
    const double p = required_power(target, m, t, PowerW(pn), kE).value();
    CHECK(ppm_pc_capacity_bps(PowerW(p), PowerW(pn), kE, m, t) == Approx(target).epsilon(1e-8));
  }
}

TEST_CASE("bracket widens when the root lies outside the default range") {
  // Enormous noise pushes the root above the default upper bound.
  const double p = required_power(1e3, 16, 1e-9, PowerW(1.0), kE).value();
  CHECK(ppm_pc_capacity_bps(PowerW(p), PowerW(1.0), kE, 16, 1e-9) == Approx(1e3).epsilon(1e-8));
  const double tiny = required_power(1e-9, 1024, 1e-9, PowerW(1e-25), kE).value();
  CHECK(ppm_pc_capacity_bps(PowerW(tiny), PowerW(1e-25), kE, 1024, 1e-9) == Approx(1e-9).epsilon(1e-7));
}

TEST_CASE("target-driven design reproduces the 56 Mbps example") {
  const auto d = design_for_target(56e6, 1e-9, PowerW(2.1e-14), kE, kOrders);
  CHECK(d.order == 64);
  CHECK(d.code_rate == Approx(0.597).epsilon(0.01 / 0.597));
  CHECK(ppm_pc_capacity_bps(d.required_power, PowerW(2.1e-14), kE, 64, 1e-9) == Approx(56e6).epsilon(1e-8));
  CHECK(d.min_power.value() <= d.required_power.value());
  CHECK(d.required_power_coded.value() == d.required_power.value());

  const auto coded = design_for_target(56e6, 1e-9, PowerW(2.1e-14), kE, kOrders, DecibelLoss(0.5));
  CHECK(coded.required_power_coded.value() == Approx(coded.required_power.value() * 1.122).epsilon(1e-3));

  const std::array<unsigned, 2> too_big{512, 1024};
  CHECK_THROWS_AS(design_for_target(56e6, 1e-9, PowerW(2.1e-14), kE, too_big), Infeasible);
}

TEST_CASE("exhaustive search picks (64, 0.6) on the worked example") {
  const auto c = example_constraints();
  const PowerW pr = required_power(58e6, 64, 1e-9, PowerW(2.1e-14), kE);
  const auto r = ccsds_search(pr, PowerW(2.1e-14), kE, c);
  REQUIRE(r.best);
  CHECK(r.best->order == 64);
  CHECK(r.best->code_rate == Approx(0.6));
  CHECK(r.best->achieved_rate == Approx(56.25e6));
  CHECK(r.best->meets_target);
  CHECK(r.evaluated.size() == 16);
  for (const auto& s : r.evaluated) {
    if (s.feasible) CHECK(s.achieved_rate <= s.discounted_capacity);
  }
  // The winner is optimal among feasible candidates.
  for (const auto& s : r.evaluated) {
    if (s.feasible) CHECK_FALSE(better_solution(s, *r.best));
  }
}

TEST_CASE("search result is independent of candidate order") {
  auto c = example_constraints();
  const PowerW pr = required_power(58e6, 64, 1e-9, PowerW(2.1e-14), kE);
  const auto base = ccsds_search(pr, PowerW(2.1e-14), kE, c);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(c.orders.begin(), c.orders.end(), rng);
    std::shuffle(c.code_rates.begin(), c.code_rates.end(), rng);
    const auto r = ccsds_search(pr, PowerW(2.1e-14), kE, c);
    REQUIRE(r.best);
    CHECK(r.best->order == base.best->order);
    CHECK(r.best->code_rate == base.best->code_rate);
  }
}

TEST_CASE("removing the winner promotes the runner-up") {
  auto c = example_constraints();
  const PowerW pr = required_power(58e6, 64, 1e-9, PowerW(2.1e-14), kE);
  c.code_rates = {1.0 / 3, 0.5, 2.0 / 3};
  const auto r = ccsds_search(pr, PowerW(2.1e-14), kE, c);
  // C(32) is about 72 Mbps here, so 156.25/3 Mbps at M = 32 edges out 46.9 Mbps at M = 64.
  REQUIRE(r.best);
  CHECK(r.best->order == 32);
  CHECK(r.best->code_rate == Approx(1.0 / 3));
  CHECK(r.best->achieved_rate == Approx(156.25e6 / 3));
  CHECK_FALSE(r.best->meets_target);
}

TEST_CASE("single-element sets and infeasible searches") {
  DesignConstraints c;
  c.target_rate = 1e6;
  c.orders = {64};
  c.slot_times_s = {1e-9};
  c.code_rates = {0.5};
  const auto weak = ccsds_search(PowerW(1e-18), PowerW(2.1e-14), kE, c);
  CHECK_FALSE(weak.best);
  CHECK(weak.evaluated.size() == 1);

  const auto strong = ccsds_search(PowerW(1e-6), PowerW(2.1e-14), kE, c);
  REQUIRE(strong.best);
  CHECK(strong.best->order == 64);
}

TEST_CASE("continuous rate search") {
  DesignConstraints c;
  c.target_rate = 56e6;
  c.orders = {16, 32, 64, 128};
  c.slot_times_s = {1e-9};
  const PowerW pr = required_power(58e6, 64, 1e-9, PowerW(2.1e-14), kE);
  const auto r = ccsds_search(pr, PowerW(2.1e-14), kE, c);
  REQUIRE(r.best);
  for (const auto& s : r.evaluated) {
    CHECK(s.code_rate <= 1.0);
    CHECK(s.achieved_rate <= s.discounted_capacity * (1 + 1e-12));
  }
  // Continuous rate rides the capacity of whichever order offers the most.
  double most = 0.0;
  for (unsigned m : c.orders) {
    most = std::max(most, std::min(oracle_capacity(pr.value(), 2.1e-14, m, 1e-9), saturation_rate(m, 1e-9)));
  }
  CHECK(r.best->achieved_rate == Approx(most).epsilon(1e-9));
}

TEST_CASE("coding and margin discount shrink the feasible set") {
  auto c = example_constraints();
  const PowerW pr = required_power(58e6, 64, 1e-9, PowerW(2.1e-14), kE);
  c.coding_efficiency = DecibelLoss(0.8);
  c.link_margin = DecibelLoss(4.0);
  CHECK(c.capacity_discount() == Approx(std::pow(10.0, -0.48)).epsilon(1e-12));
  // 4.8 dB of discount leaves every discrete candidate above capacity.
  CHECK_FALSE(ccsds_search(pr, PowerW(2.1e-14), kE, c).best);
  c.code_rates.clear();
  const auto r = ccsds_search(pr, PowerW(2.1e-14), kE, c);
  REQUIRE(r.best);
  CHECK(r.best->achieved_rate == Approx(r.best->capacity_at_point * c.capacity_discount()).epsilon(1e-12));

  c.orders = {3};
  CHECK_THROWS_AS(ccsds_search(pr, PowerW(2.1e-14), kE, c), InvalidInput);
}
