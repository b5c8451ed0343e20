#pragma once

#include <cstdint>
#include <vector>

#include "jamopt/params.hpp"
#include "jamopt/units.hpp"

namespace jamopt {

// One realization of the three channel power gains.
struct ChannelDraw {
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
};

// Empirical estimate with its standard error. For probability estimates
// std_error = sqrt(mean*(1-mean)/n); estimate_avg_rate scales both by r.
struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

struct OutagePair {
  MonteCarloEstimate p0;
  MonteCarloEstimate p1;
};

struct GridSearchResult {
  PowerLinear q_best;
  RateBpsHz r_best;
  RateBpsHz avg_best;
};

// Deterministic random-access uniforms: counter-mode SplitMix64. Sample k
// is a pure function of (seed, k), so shards of any size reproduce the
// sequential stream bit for bit.
namespace rng {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter);

// Uniform on (0, 1]; never returns 0, so -log(u) is always finite.
double unit_open_closed(std::uint64_t seed, std::uint64_t counter);

// Inverse-transform Exp(lambda) draw at the given counter.
double exponential(double lambda, std::uint64_t seed, std::uint64_t counter);

}  // namespace rng

// Random-access sampler of i.i.d. Exp(lambda_i) gain triples.
class GainSampler {
 public:
  GainSampler(const SystemParams& params, std::uint64_t seed)
      : lambda0_(params.lambda0),
        lambda1_(params.lambda1),
        lambda2_(params.lambda2),
        seed_(seed) {}

  ChannelDraw at(std::uint64_t index) const {
    return ChannelDraw{rng::exponential(lambda0_, seed_, 3 * index),
                       rng::exponential(lambda1_, seed_, 3 * index + 1),
                       rng::exponential(lambda2_, seed_, 3 * index + 2)};
  }

 private:
  double lambda0_;
  double lambda1_;
  double lambda2_;
  std::uint64_t seed_;
};

// Materializes the first n draws of the stream.
std::vector<ChannelDraw> sample_gains(const SystemParams& params, std::uint64_t n,
                                      std::uint64_t seed);

// Empirical outage probabilities at (r, q): fractions of draws whose
// instantaneous rate falls below r. Requires r > 0, q >= 0, n >= 1.
OutagePair estimate_outages(const SystemParams& params, RateBpsHz r, PowerLinear q,
                            std::uint64_t n, std::uint64_t seed);

// Empirical average eavesdropping rate r * P(r1 >= r). Requires r >= 0.
MonteCarloEstimate estimate_avg_rate(const SystemParams& params, RateBpsHz r,
                                     PowerLinear q, std::uint64_t n,
                                     std::uint64_t seed);

// CDF of Z = X1 - X2 with X1 ~ Exp(tl1), X2 ~ Exp(tl2) at z >= 0:
// 1 - tl2/(tl1+tl2) * exp(-tl1*z). Throws DomainError for z < 0 or
// nonpositive rates (the z < 0 branch is out of scope).
Probability cdf_exp_difference(double tl1, double tl2, double z);

// Empirical counterpart of cdf_exp_difference over n paired draws.
MonteCarloEstimate estimate_cdf_exp_difference(double tl1, double tl2, double z,
                                               std::uint64_t n, std::uint64_t seed);

// Brute-force maximizer of avg_rate(psi_inv(q)) over a merged linear grid
// on [0, q_max] and log grid on [1e-6, q_max]; ties break toward smaller q.
// Requires n_grid >= 100. The closed form must dominate this oracle.
GridSearchResult grid_search_optimal(const SystemParams& params, std::uint64_t n_grid);

// Worker-count override for the estimators; 0 restores hardware default.
// Results are bit-identical for any setting; exposed so tests can prove it.
void set_estimator_threads(unsigned n);

}  // namespace jamopt
