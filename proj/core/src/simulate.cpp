#include "logsym/simulate.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>
#include <tuple>

#include "logsym/errors.hpp"
#include "logsym/jel.hpp"

namespace logsym {

namespace {

void validate_config(const SimConfig& config) {
    validate_spec(config.spec);
    if (config.reps < 1) throw ConfigError("simulate: reps must be >= 1");
    if (!(config.alpha > 0.0) || !(config.alpha < 1.0))
        throw ConfigError("simulate: alpha must lie in (0, 1)");
    if (config.n_values.empty()) throw ConfigError("simulate: no sample sizes given");
    if (config.betas.empty()) throw ConfigError("simulate: no beta values given");
    for (int beta : config.betas) {
        if (beta < 1) throw ConfigError("simulate: beta must be >= 1");
        for (std::size_t n : config.n_values)
            if (n < static_cast<std::size_t>(beta) + 2)
                throw ConfigError("simulate: n = " + std::to_string(n) +
                                  " is below beta + 2 for beta = " + std::to_string(beta));
    }
    if (config.theta_policy.kind == ThetaPolicy::Kind::fixed &&
        !(config.theta_policy.value > 0.0))
        throw ConfigError("simulate: fixed theta must be positive");
}

// One replication: draw, apply the theta policy, run the JEL decision.
bool replicate_rejects(const SimConfig& config, std::size_t n, int beta, double threshold,
                       std::uint64_t rep) {
    Rng rng(config.seed, rep);
    Sample s = validate_sample(sample(config.spec, n, rng));

    double theta = 1.0;
    switch (config.theta_policy.kind) {
        case ThetaPolicy::Kind::fixed:
            theta = config.theta_policy.value;
            break;
        case ThetaPolicy::Kind::lognormal_known_mu:
            theta = theta_for_lognormal(config.theta_policy.value);
            break;
        case ThetaPolicy::Kind::transform_estimated:
            s = transform_unit_symmetry(s, fit_lognormal(s));
            theta = 1.0;
            break;
    }

    const KernelConfig kc(beta, theta);
    const auto pv = pseudo_values(s, kc);
    const auto sol = jel_log_ratio(pv.values);
    return sol.stat > threshold;
}

std::size_t count_rejections(const SimConfig& config, std::size_t n, int beta,
                             double threshold, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.reps));

    std::vector<std::size_t> counts(threads, 0);
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);

    const std::size_t chunk = (config.reps + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = static_cast<std::size_t>(t) * chunk;
        const std::size_t end = std::min(config.reps, begin + chunk);
        pool.emplace_back([&, t, begin, end] {
            try {
                std::size_t local = 0;
                for (std::size_t rep = begin; rep < end; ++rep)
                    if (replicate_rejects(config, n, beta, threshold, rep)) ++local;
                counts[t] = local;
            } catch (...) {
                failures[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);

    std::size_t total = 0;
    for (std::size_t c : counts) total += c;
    return total;
}

SimResult run_cells(const SimConfig& config, unsigned threads) {
    validate_config(config);
    const double threshold = chi2_quantile(1.0 - config.alpha, 1);

    SimResult result;
    for (std::size_t n : config.n_values) {
        for (int beta : config.betas) {
            const std::size_t rejections = count_rejections(config, n, beta, threshold, threads);
            SimRow row;
            row.family = family_name(config.spec);
            row.params = params_string(config.spec);
            row.n = n;
            row.beta = beta;
            row.reps = config.reps;
            row.alpha = config.alpha;
            row.seed = config.seed;
            row.rejection_rate =
                static_cast<double>(rejections) / static_cast<double>(config.reps);
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

}  // namespace

SimResult run_type1(const SimConfig& config, unsigned threads) {
    if (!is_log_symmetric(config.spec))
        throw ConfigError("run_type1: " + family_name(config.spec) +
                          " is not a log-symmetric (null) family");
    if (config.theta_policy.kind == ThetaPolicy::Kind::lognormal_known_mu &&
        !std::holds_alternative<LogNormalSpec>(config.spec))
        throw ConfigError("run_type1: known-mu theta policy requires the lognormal family");
    return run_cells(config, threads);
}

SimResult run_power(const SimConfig& config, unsigned threads) {
    if (is_log_symmetric(config.spec))
        throw ConfigError("run_power: " + family_name(config.spec) +
                          " is a null family; use run_type1");
    if (config.theta_policy.kind != ThetaPolicy::Kind::fixed)
        throw ConfigError("run_power: power runs test about a fixed theta");
    return run_cells(config, threads);
}

void emit_csv(const SimResult& result, const std::string& path) {
    auto rows = result.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const SimRow& a, const SimRow& b) {
        return std::tie(a.family, a.params, a.n, a.beta) <
               std::tie(b.family, b.params, b.n, b.beta);
    });

    std::ofstream out(path);
    if (!out) throw IoError("emit_csv: cannot open " + path + " for writing");
    out << "family,params,n,beta,reps,alpha,seed,rejection_rate\n";
    out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& r : rows)
        out << r.family << ',' << r.params << ',' << r.n << ',' << r.beta << ',' << r.reps
            << ',' << r.alpha << ',' << r.seed << ',' << r.rejection_rate << '\n';
    if (!out) throw IoError("emit_csv: write failure on " + path);
}

std::vector<std::string> power_monotonicity_violations(const SimResult& result, double noise) {
    // group rows by (family, params, beta), then scan rates by n
    auto rows = result.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const SimRow& a, const SimRow& b) {
        return std::tie(a.family, a.params, a.beta, a.n) <
               std::tie(b.family, b.params, b.beta, b.n);
    });

    std::vector<std::string> violations;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& prev = rows[i - 1];
        const auto& cur = rows[i];
        const bool same_group = prev.family == cur.family && prev.params == cur.params &&
                                prev.beta == cur.beta;
        if (same_group && cur.rejection_rate < prev.rejection_rate - noise) {
            std::ostringstream os;
            os << cur.family << '(' << cur.params << ") beta=" << cur.beta << ": power "
               << cur.rejection_rate << " at n=" << cur.n << " dropped below "
               << prev.rejection_rate << " at n=" << prev.n << " by more than " << noise;
            violations.push_back(os.str());
        }
    }
    return violations;
}

}  // namespace logsym
