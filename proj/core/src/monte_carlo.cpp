#include "jamopt/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <thread>

#include "jamopt/closed_form.hpp"
#include "jamopt/errors.hpp"

namespace jamopt {

namespace rng {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double unit_open_closed(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>((splitmix64_at(seed, counter) >> 11) + 1) * 0x1.0p-53;
}

double exponential(double lambda, std::uint64_t seed, std::uint64_t counter) {
  return -std::log(unit_open_closed(seed, counter)) / lambda;
}

}  // namespace rng

namespace {

std::atomic<unsigned> g_max_threads{0};

unsigned worker_count(std::uint64_t n) {
  unsigned hw = g_max_threads.load();
  if (hw == 0) hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  // keep blocks large enough that spawning threads pays off
  const std::uint64_t max_useful = n / 65536 + 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(hw, max_useful));
}

// Splits [0, n) into contiguous blocks and folds the per-block results in
// block order. Accumulators are integer counts, so the total is identical
// for any worker count.
template <class Acc, class BlockFn>
Acc parallel_reduce(std::uint64_t n, BlockFn block) {
  const unsigned workers = worker_count(n);
  if (workers <= 1) return block(std::uint64_t{0}, n);
  std::vector<Acc> partial(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = n / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = (t + 1 == workers) ? n : lo + chunk;
    threads.emplace_back([&partial, &block, t, lo, hi] { partial[t] = block(lo, hi); });
  }
  for (auto& th : threads) th.join();
  Acc total{};
  for (const Acc& acc : partial) total = total + acc;
  return total;
}

MonteCarloEstimate binomial_estimate(std::uint64_t count, std::uint64_t n,
                                     std::uint64_t seed) {
  const double mean = static_cast<double>(count) / static_cast<double>(n);
  const double se = std::sqrt(mean * (1.0 - mean) / static_cast<double>(n));
  return MonteCarloEstimate{mean, se, n, seed};
}

struct CountPair {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  CountPair operator+(const CountPair& o) const { return CountPair{a + o.a, b + o.b}; }
};

struct CountOne {
  std::uint64_t a = 0;
  CountOne operator+(const CountOne& o) const { return CountOne{a + o.a}; }
};

}  // namespace

void set_estimator_threads(unsigned n) { g_max_threads.store(n); }

std::vector<ChannelDraw> sample_gains(const SystemParams& params, std::uint64_t n,
                                      std::uint64_t seed) {
  ensure_valid(params);
  assert(n >= 1);
  const GainSampler sampler(params, seed);
  std::vector<ChannelDraw> draws;
  draws.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) draws.push_back(sampler.at(i));
  return draws;
}

OutagePair estimate_outages(const SystemParams& params, RateBpsHz r, PowerLinear q,
                            std::uint64_t n, std::uint64_t seed) {
  assert(r.value > 0.0 && q.value >= 0.0 && n >= 1);
  const GainSampler sampler(params, seed);
  const CountPair counts = parallel_reduce<CountPair>(
      n, [&params, &sampler, r, q](std::uint64_t lo, std::uint64_t hi) {
        CountPair c;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const ChannelDraw d = sampler.at(i);
          const ChannelRealizationRates rates =
              instantaneous_rates(params, d.g0, d.g1, d.g2, q);
          c.a += rates.r0.value < r.value;
          c.b += rates.r1.value < r.value;
        }
        return c;
      });
  return OutagePair{binomial_estimate(counts.a, n, seed),
                    binomial_estimate(counts.b, n, seed)};
}

MonteCarloEstimate estimate_avg_rate(const SystemParams& params, RateBpsHz r,
                                     PowerLinear q, std::uint64_t n,
                                     std::uint64_t seed) {
  assert(r.value >= 0.0 && n >= 1);
  const GainSampler sampler(params, seed);
  const CountOne decoded = parallel_reduce<CountOne>(
      n, [&params, &sampler, r, q](std::uint64_t lo, std::uint64_t hi) {
        CountOne c;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const ChannelDraw d = sampler.at(i);
          const ChannelRealizationRates rates =
              instantaneous_rates(params, d.g0, d.g1, d.g2, q);
          c.a += rates.r1.value >= r.value;
        }
        return c;
      });
  MonteCarloEstimate est = binomial_estimate(decoded.a, n, seed);
  est.mean *= r.value;
  est.std_error *= r.value;
  return est;
}

Probability cdf_exp_difference(double tl1, double tl2, double z) {
  if (!(tl1 > 0.0) || !(tl2 > 0.0) || !std::isfinite(tl1) || !std::isfinite(tl2)) {
    throw DomainError("cdf_exp_difference: rates must be finite and > 0");
  }
  if (!(z >= 0.0)) throw DomainError("cdf_exp_difference: z must be >= 0");
  return Probability{1.0 - tl2 / (tl1 + tl2) * std::exp(-tl1 * z)};
}

MonteCarloEstimate estimate_cdf_exp_difference(double tl1, double tl2, double z,
                                               std::uint64_t n, std::uint64_t seed) {
  assert(tl1 > 0.0 && tl2 > 0.0 && z >= 0.0 && n >= 1);
  const CountOne below = parallel_reduce<CountOne>(
      n, [tl1, tl2, z, seed](std::uint64_t lo, std::uint64_t hi) {
        CountOne c;
        for (std::uint64_t i = lo; i < hi; ++i) {
          const double x1 = rng::exponential(tl1, seed, 2 * i);
          const double x2 = rng::exponential(tl2, seed, 2 * i + 1);
          c.a += (x1 - x2) < z;
        }
        return c;
      });
  return binomial_estimate(below.a, n, seed);
}

GridSearchResult grid_search_optimal(const SystemParams& params,
                                     std::uint64_t n_grid) {
  if (n_grid < 100) throw DomainError("grid_search_optimal: n_grid must be >= 100");
  ensure_valid(params);

  const std::uint64_t n_lin = n_grid / 2;
  const std::uint64_t n_log = n_grid - n_lin;
  std::vector<double> grid;
  grid.reserve(n_grid);
  for (std::uint64_t i = 0; i < n_lin; ++i) {
    grid.push_back(params.q_max * static_cast<double>(i) /
                   static_cast<double>(n_lin - 1));
  }
  const double q_lo = 1e-6;
  const double span = std::log(params.q_max / q_lo);
  for (std::uint64_t i = 0; i < n_log; ++i) {
    grid.push_back(q_lo *
                   std::exp(span * static_cast<double>(i) / static_cast<double>(n_log - 1)));
  }
  std::sort(grid.begin(), grid.end());

  GridSearchResult best{PowerLinear{0.0}, RateBpsHz{0.0}, RateBpsHz{-1.0}};
  for (const double q : grid) {
    const RateBpsHz r = psi_inv(params, PowerLinear{q});
    const RateBpsHz avg = avg_rate(params, r);
    if (avg.value > best.avg_best.value) {
      best = GridSearchResult{PowerLinear{q}, r, avg};
    }
  }
  return best;
}

}  // namespace jamopt
