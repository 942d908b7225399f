#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "logsym/sample.hpp"
#include "logsym/ustat.hpp"

namespace logsym {

// Jackknife pseudo-values V_k = n*delta_hat - (n-1)*delta_hat_k. Their
// mean reproduces the full-sample statistic exactly (up to rounding).
struct PseudoValues {
    std::vector<double> values;

    std::size_t n() const { return values.size(); }
    double mean() const;
};

// Solution of the inner empirical-likelihood maximization over
// probability weights p with sum(p) = 1 and sum(p * nu) = 0.
struct ElSolution {
    double lambda = 0.0;      // Lagrange multiplier (NaN when infeasible)
    double log_ratio = 0.0;   // log R <= 0 (-inf when infeasible)
    double stat = 0.0;        // -2 log R, +inf when infeasible
    bool feasible = false;
    std::vector<double> weights;  // p_i, empty when infeasible
};

struct SigmaEstimate {
    double sigma2_hat = 0.0;
};

enum class TestMethod { jel, normal };

struct TestResult {
    double statistic = 0.0;
    double threshold = 0.0;
    double alpha = 0.0;
    bool reject = false;
    TestMethod method = TestMethod::jel;
};

// Pseudo-values from the fast statistic plus its leave-one-out sweep.
// Requires n >= beta + 2.
PseudoValues pseudo_values(const Sample& sample, const KernelConfig& config);

// Solves (1/n) sum nu_i / (1 + lambda nu_i) = 0 for the unique lambda
// keeping every 1 + lambda nu_i positive. The left side is strictly
// decreasing between its poles, so a Newton iteration safeguarded by
// bisection converges from lambda = 0. Returns nullopt when zero is
// not interior to the hull of nu (all nu_i >= 0 or <= 0 with one
// strict); the all-zero vector is feasible with lambda = 0.
std::optional<double> el_lambda(std::span<const double> nu);

// Full EL solution: log R = -sum log(1 + lambda nu_i), weights
// p_i = (1/n) / (1 + lambda nu_i). Infeasible constraint vectors map
// to stat = +inf (maximal evidence against the constraint), not an
// error.
ElSolution jel_log_ratio(std::span<const double> nu);

// JEL ratio test of log-symmetry about config.theta: rejects when
// -2 log R exceeds the chi-square(1) upper-alpha quantile.
TestResult jel_test(const Sample& sample, const KernelConfig& config, double alpha);

// Inverse chi-square CDF via bisection on the regularized lower
// incomplete gamma function, absolute tolerance 1e-10.
double chi2_quantile(double p, int df);

// Jackknife plug-in estimate of the asymptotic variance of
// sqrt(n) * delta_hat: the sample variance of the pseudo-values
// (divisor n - 1).
SigmaEstimate jackknife_variance(const PseudoValues& pv);

// Normal-approximation test: sqrt(n) |delta_hat| / sigma_hat against
// the standard normal upper alpha/2 quantile. Kept for completeness;
// the JEL route avoids estimating sigma. Throws
// DegenerateVarianceError when the pseudo-values have zero spread.
TestResult normal_test(const Sample& sample, const KernelConfig& config, double alpha);

}  // namespace logsym
