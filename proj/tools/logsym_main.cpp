// Command-line front end: run the log-symmetry test on a data file,
// compute the raw departure statistic, or drive Monte Carlo
// simulations of the test's size and power.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logsym/distributions.hpp"
#include "logsym/errors.hpp"
#include "logsym/jel.hpp"
#include "logsym/sample.hpp"
#include "logsym/simulate.hpp"
#include "logsym/ustat.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitData = 2;
constexpr int kExitConfig = 3;

// Reads one value per line (or column `column` of a comma-separated
// file when column >= 1). Lines starting with '#' and blank lines are
// ignored; anything else that fails to parse is reported with its line
// number.
std::vector<double> load_values(const std::string& path, int column) {
    std::ifstream in(path);
    if (!in) throw logsym::IoError("cannot open " + path);

    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++lineno;
        std::string field = line;
        if (column >= 1) {
            std::stringstream ss(line);
            std::string cell;
            int c = 0;
            field.clear();
            while (std::getline(ss, cell, ',')) {
                if (++c == column) {
                    field = cell;
                    break;
                }
            }
            if (c < column) {
                if (first_data_line) continue;  // short header row
                throw logsym::IoError(path + ":" + std::to_string(lineno) + ": fewer than " +
                                      std::to_string(column) + " columns");
            }
        }
        // trim whitespace
        const auto begin = field.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = field.find_last_not_of(" \t\r");
        field = field.substr(begin, end - begin + 1);
        if (field.empty() || field[0] == '#') continue;

        try {
            std::size_t used = 0;
            const double v = std::stod(field, &used);
            if (used != field.size()) throw std::invalid_argument(field);
            values.push_back(v);
        } catch (const std::exception&) {
            if (column >= 1 && first_data_line) {
                first_data_line = false;  // tolerate a CSV header
                continue;
            }
            throw logsym::IoError(path + ":" + std::to_string(lineno) +
                                  ": cannot parse value '" + field + "'");
        }
        first_data_line = false;
    }
    if (values.empty()) throw logsym::IoError(path + ": no data values found");
    return values;
}

struct TestReport {
    std::size_t n = 0;
    int beta = 1;
    double theta = 1.0;
    bool transformed = false;
    double mu_hat = 0.0;
    double sigma_hat = 0.0;
    double delta_hat = 0.0;
    logsym::ElSolution el;
    double threshold = 0.0;
    double alpha = 0.05;
    bool reject = false;
};

void print_test_text(const TestReport& r) {
    std::cout.precision(10);
    std::cout << "n:          " << r.n << "\n"
              << "beta:       " << r.beta << "\n";
    if (r.transformed)
        std::cout << "transform:  lognormal (mu_hat=" << r.mu_hat
                  << ", sigma_hat=" << r.sigma_hat << ")\n";
    std::cout << "theta:      " << r.theta << "\n"
              << "delta_hat:  " << r.delta_hat << "\n"
              << "lambda:     " << r.el.lambda << "\n"
              << "statistic:  " << r.el.stat << "  (-2 log R)\n"
              << "threshold:  " << r.threshold << "  (chi-square, 1 df, alpha=" << r.alpha
              << ")\n"
              << "decision:   "
              << (r.reject ? "reject log-symmetry" : "fail to reject log-symmetry") << "\n";
}

json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

void print_test_json(const TestReport& r) {
    json out{{"command", "test"},
             {"n", r.n},
             {"beta", r.beta},
             {"theta", r.theta},
             {"delta_hat", r.delta_hat},
             {"lambda", finite_or_null(r.el.lambda)},
             {"feasible", r.el.feasible},
             {"statistic", finite_or_null(r.el.stat)},
             {"threshold", r.threshold},
             {"alpha", r.alpha},
             {"reject", r.reject},
             {"decision", r.reject ? "reject" : "fail_to_reject"}};
    if (r.transformed) {
        out["transform"] = "lognormal";
        out["mu_hat"] = r.mu_hat;
        out["sigma_hat"] = r.sigma_hat;
    }
    std::cout << out.dump() << "\n";
}

int run_test_command(const std::string& path, int column, int beta, double theta, double alpha,
                     const std::string& transform, std::optional<double> mu_override,
                     std::optional<double> sigma_override, bool as_json) {
    logsym::Sample s = logsym::validate_sample(load_values(path, column));

    TestReport report;
    report.beta = beta;
    report.alpha = alpha;

    if (!transform.empty()) {
        if (transform != "lognormal")
            throw logsym::ConfigError("unknown transform '" + transform + "'");
        logsym::LogNormalFit fit;
        if (mu_override && sigma_override) {
            fit = logsym::LogNormalFit{*mu_override, *sigma_override};
        } else {
            fit = logsym::fit_lognormal(s);
            if (mu_override) fit.mu_hat = *mu_override;
            if (sigma_override) fit.sigma_hat = *sigma_override;
        }
        s = logsym::transform_unit_symmetry(s, fit);
        report.transformed = true;
        report.mu_hat = fit.mu_hat;
        report.sigma_hat = fit.sigma_hat;
        theta = 1.0;
    }

    const logsym::KernelConfig kc(beta, theta);
    report.n = s.size();
    report.theta = theta;
    report.delta_hat = logsym::ustat_fast(s, kc).delta_hat;
    report.el = logsym::jel_log_ratio(logsym::pseudo_values(s, kc).values);
    report.threshold = logsym::chi2_quantile(1.0 - alpha, 1);
    report.reject = report.el.stat > report.threshold;

    if (as_json)
        print_test_json(report);
    else
        print_test_text(report);
    return kExitOk;
}

int run_ustat_command(const std::string& path, int column, int beta, double theta, bool naive,
                      bool jackknife, bool as_json) {
    const logsym::Sample s = logsym::validate_sample(load_values(path, column));
    const logsym::KernelConfig kc(beta, theta);

    if (naive && s.size() > 20)
        throw logsym::ConfigError(
            "--naive enumerates all C(n, beta+1) subsets and is limited to n <= 20; got n = " +
            std::to_string(s.size()) + " (use the default order-statistic form instead)");

    const double delta =
        naive ? logsym::ustat_naive(s, kc).delta_hat : logsym::ustat_fast(s, kc).delta_hat;

    std::vector<double> loo;
    if (jackknife) loo = logsym::leave_one_out(s, kc);

    if (as_json) {
        json out{{"command", "ustat"}, {"n", s.size()}, {"beta", beta},
                 {"theta", theta},    {"naive", naive}, {"delta_hat", delta}};
        if (jackknife) out["delta_loo"] = loo;
        std::cout << out.dump() << "\n";
    } else {
        std::cout.precision(12);
        std::cout << "delta_hat: " << delta << "\n";
        if (jackknife) {
            std::cout << "delta_loo:";
            for (double v : loo) std::cout << ' ' << v;
            std::cout << "\n";
        }
    }
    return kExitOk;
}

logsym::DistributionSpec build_spec(const std::string& family, double mu, double sigma,
                                    double shape, double scale) {
    if (family == "lognormal") return logsym::LogNormalSpec{mu, sigma};
    if (family == "loglogistic") return logsym::LogLogisticSpec{scale, shape};
    if (family == "loglaplace") return logsym::LogLaplaceSpec{mu, scale};
    if (family == "logcauchy") return logsym::LogCauchySpec{mu, scale};
    if (family == "birnbaum-saunders" || family == "bs")
        return logsym::BirnbaumSaundersSpec{shape, scale};
    if (family == "weibull") return logsym::WeibullSpec{shape, scale};
    if (family == "gamma") return logsym::GammaSpec{shape, scale};
    if (family == "pareto") return logsym::ParetoSpec{shape, scale};
    if (family == "halfnormal" || family == "half-normal")
        return logsym::HalfNormalSpec{sigma};
    throw logsym::ConfigError("unknown family '" + family + "'");
}

// Flat key=value config file; CLI flags take precedence.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw logsym::IoError("cannot open config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        if (line[begin] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw logsym::ConfigError(path + ":" + std::to_string(lineno) +
                                      ": expected key=value");
        auto trim = [](std::string v) {
            const auto b = v.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            const auto e = v.find_last_not_of(" \t\r");
            return v.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (cell.empty()) continue;
        std::stringstream cs(cell);
        T v;
        if (!(cs >> v)) throw logsym::ConfigError("cannot parse list element '" + cell + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goodness-of-fit testing for log-symmetric distributions"};
    app.require_subcommand(1);

    // --- test ---------------------------------------------------------
    std::string test_file;
    int test_column = 0, test_beta = 1;
    double test_theta = 1.0, test_alpha = 0.05;
    std::string test_transform;
    double test_mu = 0.0, test_sigma = 0.0;
    bool test_json = false;

    auto* cmd_test = app.add_subcommand("test", "JEL ratio test of log-symmetry on a data file");
    cmd_test->add_option("file", test_file, "data file, one value per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_test->add_option("--beta", test_beta, "PWM order (kernel degree beta+1)")
        ->check(CLI::PositiveNumber);
    cmd_test->add_option("--theta", test_theta, "symmetry point to test about");
    cmd_test->add_option("--alpha", test_alpha, "significance level");
    cmd_test->add_option("--transform", test_transform,
                         "standardize first: 'lognormal' fits (mu, sigma) and tests about 1");
    auto* mu_opt = cmd_test->add_option("--mu", test_mu, "override the fitted mu");
    auto* sigma_opt = cmd_test->add_option("--sigma", test_sigma, "override the fitted sigma");
    cmd_test->add_option("--column", test_column, "read column K of a comma-separated file");
    cmd_test->add_flag("--json", test_json, "emit a single JSON object");

    // --- ustat --------------------------------------------------------
    std::string ustat_file;
    int ustat_column = 0, ustat_beta = 1;
    double ustat_theta = 1.0;
    bool ustat_naive = false, ustat_jackknife = false, ustat_json = false;

    auto* cmd_ustat = app.add_subcommand("ustat", "departure statistic only");
    cmd_ustat->add_option("file", ustat_file, "data file, one value per line")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_ustat->add_option("--beta", ustat_beta, "PWM order")->check(CLI::PositiveNumber);
    cmd_ustat->add_option("--theta", ustat_theta, "symmetry point");
    cmd_ustat->add_flag("--naive", ustat_naive,
                        "exact subset enumeration (reference path, n <= 20)");
    cmd_ustat->add_flag("--jackknife", ustat_jackknife, "also print leave-one-out values");
    cmd_ustat->add_option("--column", ustat_column, "read column K of a comma-separated file");
    cmd_ustat->add_flag("--json", ustat_json, "emit a single JSON object");

    // --- simulate -----------------------------------------------------
    std::string sim_mode, sim_family, sim_out = "results.csv", sim_config_path,
                               sim_theta_policy = "auto";
    double sim_mu = 0.0, sim_sigma = 1.0, sim_shape = 1.0, sim_scale = 1.0;
    double sim_alpha = 0.05, sim_theta = 1.0;
    std::vector<std::size_t> sim_n;
    std::vector<int> sim_betas = {1};
    std::uint64_t sim_reps = 10000, sim_seed = 0;
    unsigned sim_threads = 0;

    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo type-I error / power study");
    cmd_sim->add_option("--config", sim_config_path, "key=value config file (flags override)");
    auto* mode_opt = cmd_sim->add_option("--mode", sim_mode, "type1 | power");
    auto* family_opt = cmd_sim->add_option("--family", sim_family,
                                           "lognormal loglogistic loglaplace logcauchy "
                                           "birnbaum-saunders weibull gamma pareto halfnormal");
    auto* mu_sim = cmd_sim->add_option("--mu", sim_mu, "location parameter (log scale)");
    auto* sigma_sim = cmd_sim->add_option("--sigma", sim_sigma, "sigma parameter");
    auto* shape_sim = cmd_sim->add_option("--shape", sim_shape, "shape parameter");
    auto* scale_sim = cmd_sim->add_option("--scale", sim_scale, "scale parameter");
    auto* n_opt = cmd_sim->add_option("--n", sim_n, "sample sizes (repeatable)");
    auto* beta_opt = cmd_sim->add_option("--beta", sim_betas, "PWM orders (repeatable)");
    auto* reps_opt = cmd_sim->add_option("--reps", sim_reps, "replications per cell");
    auto* alpha_opt = cmd_sim->add_option("--alpha", sim_alpha, "significance level");
    auto* seed_opt = cmd_sim->add_option("--seed", sim_seed, "RNG seed");
    auto* out_opt = cmd_sim->add_option("--out", sim_out, "CSV output path");
    auto* theta_opt = cmd_sim->add_option("--theta", sim_theta, "theta for the fixed policy");
    auto* policy_opt = cmd_sim->add_option("--theta-policy", sim_theta_policy,
                                           "auto | fixed | known-mu | transform");
    cmd_sim->add_option("--threads", sim_threads, "worker threads (0 = hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_test->parsed()) {
            std::optional<double> mu_ov, sigma_ov;
            if (mu_opt->count()) mu_ov = test_mu;
            if (sigma_opt->count()) sigma_ov = test_sigma;
            return run_test_command(test_file, test_column, test_beta, test_theta, test_alpha,
                                    test_transform, mu_ov, sigma_ov, test_json);
        }
        if (cmd_ustat->parsed())
            return run_ustat_command(ustat_file, ustat_column, ustat_beta, ustat_theta,
                                     ustat_naive, ustat_jackknife, ustat_json);

        // simulate
        if (!sim_config_path.empty()) {
            const auto kv = read_config_file(sim_config_path);
            auto take = [&](const char* key, auto* opt, auto& var, auto parse) {
                auto it = kv.find(key);
                if (it != kv.end() && opt->count() == 0) var = parse(it->second);
            };
            auto as_string = [](const std::string& v) { return v; };
            auto as_double = [](const std::string& v) { return std::stod(v); };
            auto as_u64 = [](const std::string& v) { return std::stoull(v); };
            take("mode", mode_opt, sim_mode, as_string);
            take("family", family_opt, sim_family, as_string);
            take("mu", mu_sim, sim_mu, as_double);
            take("sigma", sigma_sim, sim_sigma, as_double);
            take("shape", shape_sim, sim_shape, as_double);
            take("scale", scale_sim, sim_scale, as_double);
            take("n", n_opt, sim_n, parse_list<std::size_t>);
            take("beta", beta_opt, sim_betas, parse_list<int>);
            take("reps", reps_opt, sim_reps, as_u64);
            take("alpha", alpha_opt, sim_alpha, as_double);
            take("seed", seed_opt, sim_seed, as_u64);
            take("out", out_opt, sim_out, as_string);
            take("theta", theta_opt, sim_theta, as_double);
            take("theta_policy", policy_opt, sim_theta_policy, as_string);
        }
        if (sim_mode.empty()) throw logsym::ConfigError("simulate: --mode is required");
        if (sim_family.empty()) throw logsym::ConfigError("simulate: --family is required");
        if (sim_n.empty()) throw logsym::ConfigError("simulate: at least one --n is required");

        logsym::SimConfig config;
        config.spec = build_spec(sim_family, sim_mu, sim_sigma, sim_shape, sim_scale);
        config.n_values = sim_n;
        config.betas = sim_betas;
        config.reps = sim_reps;
        config.alpha = sim_alpha;
        config.seed = sim_seed;

        if (sim_theta_policy == "auto")
            sim_theta_policy = (sim_mode == "type1" &&
                                std::holds_alternative<logsym::LogNormalSpec>(config.spec))
                                   ? "known-mu"
                                   : "fixed";
        if (sim_theta_policy == "fixed")
            config.theta_policy = logsym::ThetaPolicy::fixed_theta(sim_theta);
        else if (sim_theta_policy == "known-mu")
            config.theta_policy = logsym::ThetaPolicy::known_mu(sim_mu);
        else if (sim_theta_policy == "transform")
            config.theta_policy = logsym::ThetaPolicy::transform_estimated_fit();
        else
            throw logsym::ConfigError("unknown theta policy '" + sim_theta_policy + "'");

        logsym::SimResult result;
        if (sim_mode == "type1")
            result = logsym::run_type1(config, sim_threads);
        else if (sim_mode == "power")
            result = logsym::run_power(config, sim_threads);
        else
            throw logsym::ConfigError("unknown --mode '" + sim_mode + "'");

        logsym::emit_csv(result, sim_out);

        std::cout << "wrote " << result.rows.size() << " rows to " << sim_out << "\n";
        std::cout.precision(4);
        for (const auto& r : result.rows)
            std::cout << "  " << r.family << "(" << r.params << ") n=" << r.n
                      << " beta=" << r.beta << " rejection_rate=" << r.rejection_rate << "\n";
        if (sim_mode == "power")
            for (const auto& warning : logsym::power_monotonicity_violations(result))
                std::cout << "warning: " << warning << "\n";
        return kExitOk;
    } catch (const logsym::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const logsym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
