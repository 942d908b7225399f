#include "logsym/jel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "logsym/errors.hpp"
#include "logsym/special_functions.hpp"

namespace logsym {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw DomainError("significance level must lie in (0, 1), got " +
                          std::to_string(alpha));
}

// Root of sum(nu / (1 + lambda nu)) = 0 for a scaled vector with
// max |nu_i| = 1. Assumes mixed signs. The bracket is the interval
// between the poles, shrunk by a relative margin so no term is ever
// evaluated at a pole.
double solve_lambda_scaled(std::span<const double> nu, double max_nu, double min_nu) {
    const double margin = 1e-12;
    double lo = (-1.0 / max_nu) * (1.0 - margin);
    double hi = (-1.0 / min_nu) * (1.0 - margin);

    auto residual = [&](double lam, double& slope) {
        double f = 0.0;
        slope = 0.0;
        for (double v : nu) {
            const double d = 1.0 + lam * v;
            const double t = v / d;
            f += t;
            slope -= t * t;
        }
        return f;
    };

    double slope;
    if (residual(lo, slope) <= 0.0) return lo;  // root crowded against the pole
    if (residual(hi, slope) >= 0.0) return hi;

    double lambda = 0.0;  // always interior: lo < 0 < hi
    for (int iter = 0; iter < 200; ++iter) {
        const double f = residual(lambda, slope);
        if (f == 0.0) break;
        if (f > 0.0)
            lo = lambda;  // residual is decreasing: root lies to the right
        else
            hi = lambda;
        double next = slope < 0.0 ? lambda - f / slope : kNaN;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - lambda) <= 1e-16 * (1.0 + std::fabs(next)) || hi - lo <= 1e-14) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return lambda;
}

}  // namespace

double PseudoValues::mean() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

PseudoValues pseudo_values(const Sample& sample, const KernelConfig& config) {
    const auto loo = leave_one_out(sample, config);  // enforces n >= beta + 2
    const double delta = ustat_fast(sample, config).delta_hat;
    const double n = static_cast<double>(sample.size());

    PseudoValues pv;
    pv.values.resize(loo.size());
    for (std::size_t k = 0; k < loo.size(); ++k)
        pv.values[k] = n * delta - (n - 1.0) * loo[k];
    return pv;
}

std::optional<double> el_lambda(std::span<const double> nu) {
    if (nu.empty()) throw DomainError("el_lambda: empty constraint vector");
    double max_nu = -kInf, min_nu = kInf, max_abs = 0.0;
    for (double v : nu) {
        if (!std::isfinite(v)) throw DomainError("el_lambda: non-finite constraint value");
        max_nu = std::max(max_nu, v);
        min_nu = std::min(min_nu, v);
        max_abs = std::max(max_abs, std::fabs(v));
    }
    if (max_abs == 0.0) return 0.0;  // constraint holds for any weights
    if (min_nu >= 0.0 || max_nu <= 0.0) return std::nullopt;

    // Solve on nu / max|nu| to keep every intermediate bounded; the EL
    // equation is scale-equivariant, so lambda just scales back.
    std::vector<double> scaled(nu.begin(), nu.end());
    for (double& v : scaled) v /= max_abs;
    const double lam = solve_lambda_scaled(scaled, max_nu / max_abs, min_nu / max_abs);
    return lam / max_abs;
}

ElSolution jel_log_ratio(std::span<const double> nu) {
    ElSolution sol;
    const auto lambda = el_lambda(nu);
    if (!lambda) {
        sol.lambda = kNaN;
        sol.log_ratio = -kInf;
        sol.stat = kInf;
        sol.feasible = false;
        return sol;
    }
    const double n = static_cast<double>(nu.size());
    sol.lambda = *lambda;
    sol.feasible = true;
    sol.weights.resize(nu.size());
    double log_sum = 0.0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        const double t = sol.lambda * nu[i];
        log_sum += std::log1p(t);
        sol.weights[i] = 1.0 / (n * (1.0 + t));
    }
    sol.log_ratio = -log_sum;
    sol.stat = std::max(0.0, 2.0 * log_sum);
    return sol;
}

TestResult jel_test(const Sample& sample, const KernelConfig& config, double alpha) {
    require_alpha(alpha);
    const auto pv = pseudo_values(sample, config);
    const auto sol = jel_log_ratio(pv.values);

    TestResult result;
    result.statistic = sol.stat;
    result.threshold = chi2_quantile(1.0 - alpha, 1);
    result.alpha = alpha;
    result.reject = result.statistic > result.threshold;
    result.method = TestMethod::jel;
    return result;
}

double chi2_quantile(double p, int df) {
    if (!(p > 0.0) || !(p < 1.0))
        throw DomainError("chi2_quantile: p must lie in (0, 1), got " + std::to_string(p));
    if (df < 1) throw DomainError("chi2_quantile: df must be >= 1");

    const double s = 0.5 * static_cast<double>(df);
    auto cdf = [&](double q) { return regularized_lower_gamma(s, 0.5 * q); };

    double hi = static_cast<double>(df) + 10.0;
    while (cdf(hi) < p) hi *= 2.0;
    double lo = 0.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SigmaEstimate jackknife_variance(const PseudoValues& pv) {
    const std::size_t n = pv.n();
    if (n < 2) throw TooFewObservationsError("jackknife_variance: need n >= 2");
    const double mean = pv.mean();
    double ss = 0.0;
    for (double v : pv.values) {
        const double d = v - mean;
        ss += d * d;
    }
    return SigmaEstimate{ss / static_cast<double>(n - 1)};
}

TestResult normal_test(const Sample& sample, const KernelConfig& config, double alpha) {
    require_alpha(alpha);
    const auto pv = pseudo_values(sample, config);
    const double sigma2 = jackknife_variance(pv).sigma2_hat;
    // pseudo-values whose spread is pure rounding noise count as constant
    double max_abs = 0.0;
    for (double v : pv.values) max_abs = std::max(max_abs, std::fabs(v));
    const double floor = 1e-12 * std::max(1.0, max_abs);
    if (sigma2 <= floor * floor)
        throw DegenerateVarianceError("normal_test: pseudo-values have zero variance");

    const double delta = ustat_fast(sample, config).delta_hat;
    const double n = static_cast<double>(sample.size());

    TestResult result;
    result.statistic = std::sqrt(n) * std::fabs(delta) / std::sqrt(sigma2);
    result.threshold = inverse_normal_cdf(1.0 - 0.5 * alpha);
    result.alpha = alpha;
    result.reject = result.statistic > result.threshold;
    result.method = TestMethod::normal;
    return result;
}

}  // namespace logsym
