// Acceptance suite: one check per release criterion, each printing a
// single PASS/FAIL line. Run with no arguments for the whole battery,
// or with a criterion number (1-10) to run one.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "logsym/distributions.hpp"
#include "logsym/errors.hpp"
#include "logsym/jel.hpp"
#include "logsym/rng.hpp"
#include "logsym/sample.hpp"
#include "logsym/simulate.hpp"
#include "logsym/special_functions.hpp"
#include "logsym/ustat.hpp"
#include "support/oracles.hpp"
#include "support/subprocess.hpp"

using namespace logsym;
using json = nlohmann::json;

namespace {

std::vector<double> lognormal_draws(Rng& rng, std::size_t n, double sigma) {
    std::vector<double> out(n);
    for (auto& v : out) v = std::exp(sigma * rng.normal());
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --- criterion 1: ustat_fast equals ustat_naive -----------------------

bool criterion_fast_equals_naive(std::string& detail) {
    Rng rng(1001, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int beta = 1 + static_cast<int>(rng.next_u64() % 3);
        const std::size_t span = 12 - (beta + 2);
        const std::size_t n = beta + 2 + rng.next_u64() % (span + 1);
        const double sigma = 0.3 + 1.7 * rng.uniform();
        const auto s = validate_sample(lognormal_draws(rng, n, sigma));
        const KernelConfig kc(beta);
        const double fast = ustat_fast(s, kc).delta_hat;
        const double naive = ustat_naive(s, kc).delta_hat;
        worst = std::max(worst,
                         std::fabs(fast - naive) / std::max(1.0, std::fabs(naive)));
    }
    std::ostringstream os;
    os << "worst relative error " << worst << " (limit 1e-10)";
    detail = os.str();
    return worst <= 1e-10;
}

// --- criterion 2: reciprocal antisymmetry and closed-multiset zero ----

bool criterion_reciprocal_properties(std::string& detail) {
    Rng rng(1002, 0);
    double worst_anti = 0.0, worst_zero = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int beta = 1 + static_cast<int>(rng.next_u64() % 3);

        // antisymmetry on a free sample
        const std::size_t n = beta + 2 + rng.next_u64() % 30;
        const auto raw = lognormal_draws(rng, n, 1.0);
        std::vector<double> rec(raw);
        for (auto& v : rec) v = 1.0 / v;
        const KernelConfig kc(beta);
        const double plus = ustat_fast(validate_sample(raw), kc).delta_hat;
        const double minus = ustat_fast(validate_sample(rec), kc).delta_hat;
        worst_anti = std::max(
            worst_anti, std::fabs(plus + minus) / std::max(1.0, std::fabs(plus)));

        // a closed multiset: pairs {c, 1/c}, sometimes with a fixed 1
        std::vector<double> closed;
        const std::size_t pairs = 2 + rng.next_u64() % 8;
        for (std::size_t i = 0; i < pairs; ++i) {
            const double c = std::exp(1.2 * rng.normal());
            closed.push_back(c);
            closed.push_back(1.0 / c);
        }
        if (rng.uniform() < 0.5) closed.push_back(1.0);
        if (closed.size() >= static_cast<std::size_t>(beta) + 1)
            worst_zero = std::max(
                worst_zero,
                std::fabs(ustat_fast(validate_sample(closed), kc).delta_hat));
    }
    std::ostringstream os;
    os << "antisymmetry " << worst_anti << ", closed-multiset |delta| " << worst_zero
       << " (limits 1e-10)";
    detail = os.str();
    return worst_anti <= 1e-10 && worst_zero <= 1e-10;
}

// --- criterion 3: jackknife identity ----------------------------------

bool criterion_jackknife_identity(std::string& detail) {
    Rng rng(1003, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int beta = 1 + static_cast<int>(rng.next_u64() % 3);
        const std::size_t n = beta + 2 + rng.next_u64() % 60;
        const double sigma = 0.3 + 1.2 * rng.uniform();
        const auto s = validate_sample(lognormal_draws(rng, n, sigma));
        const KernelConfig kc(beta);
        const double delta = ustat_fast(s, kc).delta_hat;
        const double pv_mean = pseudo_values(s, kc).mean();
        worst = std::max(worst, std::fabs(pv_mean - delta));
    }
    std::ostringstream os;
    os << "worst |mean(V) - delta| " << worst << " (limit 1e-10)";
    detail = os.str();
    return worst <= 1e-10;
}

// --- criterion 4: EL solver -------------------------------------------

bool criterion_el_solver(std::string& detail) {
    Rng rng(1004, 0);
    double worst_resid = 0.0, worst_wsum = 0.0, worst_cons = 0.0, worst_grid = 0.0;
    int mixed_done = 0;
    bool weights_ok = true;

    while (mixed_done < 500) {
        const std::size_t n = 2 + rng.next_u64() % 80;
        const double scale = std::exp(14.0 * (rng.uniform() - 0.5));
        std::vector<double> nu(n);
        double mx = -1e308, mn = 1e308, mabs = 0.0;
        for (auto& v : nu) {
            v = scale * (rng.normal() + 0.3);
            mx = std::max(mx, v);
            mn = std::min(mn, v);
            mabs = std::max(mabs, std::fabs(v));
        }
        if (!(mn < 0.0 && mx > 0.0)) continue;
        ++mixed_done;

        const auto lam = el_lambda(nu);
        if (!lam) {
            detail = "mixed-sign vector reported infeasible";
            return false;
        }
        double resid = 0.0;
        for (double v : nu) resid += v / (1.0 + *lam * v);
        worst_resid = std::max(worst_resid, std::fabs(resid / static_cast<double>(n)) /
                                                (1e-10 * (1.0 + mabs)));

        const auto sol = jel_log_ratio(nu);
        double wsum = 0.0, cons = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            weights_ok = weights_ok && sol.weights[i] > 0.0;
            wsum += sol.weights[i];
            cons += sol.weights[i] * nu[i];
        }
        worst_wsum = std::max(worst_wsum, std::fabs(wsum - 1.0));
        worst_cons = std::max(worst_cons, std::fabs(cons) / (1e-8 * mabs));
    }

    // one-signed vectors (at least one strict) must be infeasible
    bool infeasible_ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 40;
        std::vector<double> nu(n);
        for (auto& v : nu) v = std::fabs(rng.normal()) + 1e-6;
        if (trial % 2) {
            for (auto& v : nu) v = -v;
        }
        if (trial % 5 == 0 && n >= 2) nu[rng.next_u64() % n] = 0.0;  // boundary case
        infeasible_ok = infeasible_ok && !el_lambda(nu).has_value();
    }

    // 3-point statistics against the simplex-grid maximizer
    int grid_done = 0;
    while (grid_done < 100) {
        std::vector<double> nu{rng.normal(), rng.normal(), rng.normal()};
        const double mx = std::max({nu[0], nu[1], nu[2]});
        const double mn = std::min({nu[0], nu[1], nu[2]});
        if (!(mn < 0.0 && mx > 0.0)) continue;
        ++grid_done;
        const double lib = jel_log_ratio(nu).stat;
        const double grid = testsupport::simplex_grid_stat3(nu);
        worst_grid = std::max(worst_grid, std::fabs(lib - grid));
    }

    std::ostringstream os;
    os << "residual/tolerance " << worst_resid << ", |sum p - 1| " << worst_wsum
       << ", constraint/tolerance " << worst_cons << ", grid gap " << worst_grid
       << " (limit 1e-4), one-signed infeasible " << (infeasible_ok ? "yes" : "NO");
    detail = os.str();
    return worst_resid <= 1.0 && weights_ok && worst_wsum <= 1e-10 && worst_cons <= 1.0 &&
           infeasible_ok && worst_grid <= 1e-4;
}

// --- criterion 5: type-I error against reference rates ----------------

SimConfig table1_config() {
    SimConfig cfg;
    cfg.spec = LogNormalSpec{0.0, 1.0};
    cfg.n_values = {25, 50, 100, 200, 500};
    cfg.betas = {1};
    cfg.reps = 10000;
    cfg.alpha = 0.05;
    cfg.seed = 42;
    cfg.theta_policy = ThetaPolicy::known_mu(0.0);
    return cfg;
}

bool criterion_type1_reproduction(std::string& detail) {
    const std::vector<std::pair<std::size_t, double>> targets{
        {25, 0.118}, {50, 0.091}, {100, 0.065}, {200, 0.055}, {500, 0.051}};
    const auto result = run_type1(table1_config(), 0);

    std::ostringstream os;
    bool ok = true;
    for (const auto& [n, target] : targets) {
        double rate = -1.0;
        for (const auto& row : result.rows)
            if (row.n == n) rate = row.rejection_rate;
        const bool cell_ok = std::fabs(rate - target) <= 0.012;
        ok = ok && cell_ok;
        os << "n=" << n << ": " << rate << " vs " << target << (cell_ok ? " ok; " : " OFF; ");
    }
    detail = os.str() + "(tolerance 0.012)";
    return ok;
}

// --- criterion 6: power against reference rates ------------------------

bool criterion_power_reproduction(std::string& detail) {
    auto cell = [](const DistributionSpec& spec, std::size_t n) {
        SimConfig cfg;
        cfg.spec = spec;
        cfg.n_values = {n};
        cfg.betas = {1};
        cfg.reps = 10000;
        cfg.alpha = 0.05;
        cfg.seed = 42;
        cfg.theta_policy = ThetaPolicy::fixed_theta(1.0);
        return run_power(cfg, 0).rows[0].rejection_rate;
    };

    const double pareto = cell(ParetoSpec{2.0, 1.0}, 25);
    const double weibull = cell(WeibullSpec{1.0, 0.5}, 25);  // exponential, mean 1/2
    const double gamma = cell(GammaSpec{2.0, 1.0}, 200);
    const double halfnormal = cell(HalfNormalSpec{1.0}, 50);

    const bool ok = pareto >= 0.99 && weibull >= 0.99 && std::fabs(gamma - 0.869) <= 0.03 &&
                    halfnormal >= 0.99;
    std::ostringstream os;
    os << "Pareto(2,1) n=25: " << pareto << " (>=0.99); Weibull(shape 1, scale 0.5) n=25: "
       << weibull << " (>=0.99); Gamma(2,1) n=200: " << gamma
       << " (0.869 +- 0.03); HalfNormal(1) n=50: " << halfnormal << " (>=0.99)";
    detail = os.str();
    return ok;
}

// --- criterion 7: Wilks calibration ------------------------------------

bool criterion_wilks_calibration(std::string& detail) {
    const std::size_t reps = 2000, n = 500;
    std::vector<double> stats;
    stats.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r) {
        Rng rng(777, r);
        const auto s = validate_sample(sample(LogNormalSpec{0.0, 1.0}, n, rng));
        stats.push_back(jel_log_ratio(pseudo_values(s, KernelConfig(1)).values).stat);
    }
    const double ks = testsupport::ks_distance(
        stats, [](double x) { return regularized_lower_gamma(0.5, 0.5 * x); });
    std::ostringstream os;
    os << "KS distance to chi-square(1): " << ks << " (limit 0.05)";
    detail = os.str();
    return ks < 0.05;
}

// --- criterion 8: welding-gap case study through the CLI ---------------

bool criterion_case_study(std::string& detail) {
    const std::string command = std::string(LOGSYM_CLI_PATH) + " test " + LOGSYM_DATA_DIR +
                                "/welding_gap.txt --transform lognormal --beta 1 --json";
    const auto run = testsupport::run_command(command);
    if (run.exit_code != 0) {
        detail = "CLI exited with " + std::to_string(run.exit_code);
        return false;
    }
    const auto parsed = json::parse(run.output, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("statistic")) {
        detail = "unparseable CLI output";
        return false;
    }
    const double stat = parsed["statistic"];
    const std::string decision = parsed["decision"];
    const bool ok = stat < 3.8415 && std::fabs(stat - 0.233) <= 0.15 &&
                    decision == "fail_to_reject";
    std::ostringstream os;
    os << "statistic " << stat << " (< 3.8415, within 0.233 +- 0.15), decision " << decision;
    detail = os.str();
    return ok;
}

// --- criterion 9: chi-square quantile ----------------------------------

bool criterion_chi2_quantile(std::string& detail) {
    const double q = chi2_quantile(0.95, 1);
    const double round_trip = regularized_lower_gamma(0.5, 0.5 * q);
    std::ostringstream os;
    os << "quantile " << q << " (3.841459 +- 1e-5), forward CDF " << round_trip
       << " (0.95 +- 1e-10)";
    detail = os.str();
    return std::fabs(q - 3.841459) <= 1e-5 && std::fabs(round_trip - 0.95) <= 1e-10;
}

// --- criterion 10: determinism under parallelism ------------------------

bool criterion_determinism(std::string& detail) {
    const auto cfg = table1_config();
    const auto serial = run_type1(cfg, 1);
    const auto parallel = run_type1(cfg, 0);
    emit_csv(serial, "acceptance_serial.csv");
    emit_csv(parallel, "acceptance_parallel.csv");
    const std::string a = slurp("acceptance_serial.csv");
    const std::string b = slurp("acceptance_parallel.csv");
    std::remove("acceptance_serial.csv");
    std::remove("acceptance_parallel.csv");
    const bool ok = !a.empty() && a == b;
    detail = ok ? "serial and parallel CSV outputs are byte-identical"
                : "CSV outputs differ between thread counts";
    return ok;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

const std::vector<Criterion> kCriteria{
    {1, "fast statistic equals exact enumeration", criterion_fast_equals_naive},
    {2, "reciprocal antisymmetry and closed-multiset zero", criterion_reciprocal_properties},
    {3, "jackknife identity", criterion_jackknife_identity},
    {4, "EL inner solver", criterion_el_solver},
    {5, "type-I error reproduction", criterion_type1_reproduction},
    {6, "power reproduction", criterion_power_reproduction},
    {7, "Wilks calibration", criterion_wilks_calibration},
    {8, "welding-gap case study via CLI", criterion_case_study},
    {9, "chi-square quantile", criterion_chi2_quantile},
    {10, "determinism under parallelism", criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
    int requested = 0;
    if (argc > 1) requested = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& criterion : kCriteria) {
        if (requested != 0 && criterion.id != requested) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d: %s - %s (%s)\n", criterion.id, ok ? "PASS" : "FAIL",
                    criterion.name, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
