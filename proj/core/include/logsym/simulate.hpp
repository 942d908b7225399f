#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "logsym/distributions.hpp"

namespace logsym {

// How the symmetry point is chosen for each simulated sample.
struct ThetaPolicy {
    enum class Kind {
        fixed,               // test about a given theta
        lognormal_known_mu,  // theta = exp(mu) with mu treated as known
        transform_estimated  // fit (mu, sigma), standardize, test about 1
    };

    Kind kind = Kind::fixed;
    double value = 1.0;  // theta for `fixed`, mu for `lognormal_known_mu`

    static ThetaPolicy fixed_theta(double theta) { return {Kind::fixed, theta}; }
    static ThetaPolicy known_mu(double mu) { return {Kind::lognormal_known_mu, mu}; }
    static ThetaPolicy transform_estimated_fit() { return {Kind::transform_estimated, 0.0}; }
};

struct SimConfig {
    DistributionSpec spec;
    std::vector<std::size_t> n_values;
    std::vector<int> betas;
    std::size_t reps = 10000;
    double alpha = 0.05;
    std::uint64_t seed = 0;
    ThetaPolicy theta_policy = ThetaPolicy::fixed_theta(1.0);
};

struct SimRow {
    std::string family;
    std::string params;
    std::size_t n = 0;
    int beta = 0;
    std::size_t reps = 0;
    double alpha = 0.0;
    std::uint64_t seed = 0;
    double rejection_rate = 0.0;
};

struct SimResult {
    std::vector<SimRow> rows;

    void append(const SimResult& other) {
        rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    }
};

// Empirical type-I error: draws `reps` samples per (n, beta) cell from
// a log-symmetric family, applies the theta policy, runs the JEL test,
// and records the rejection frequency. Replication r always uses RNG
// substream r, and per-thread rejection counts are integers summed in
// chunk order, so the result is identical for any `threads` value
// (0 = hardware concurrency).
SimResult run_type1(const SimConfig& config, unsigned threads = 0);

// Empirical power: same loop for an alternative family, theta fixed.
SimResult run_power(const SimConfig& config, unsigned threads = 0);

// CSV with header family,params,n,beta,reps,alpha,seed,rejection_rate,
// full-precision decimals, rows ordered by (family, params, n, beta).
void emit_csv(const SimResult& result, const std::string& path);

// Sanity check on a power table: power should be non-decreasing in n
// for each (family, params, beta) up to Monte Carlo noise. Returns one
// message per violation; empty means clean.
std::vector<std::string> power_monotonicity_violations(const SimResult& result,
                                                       double noise = 0.03);

}  // namespace logsym
