#include "logsym/ustat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "logsym/errors.hpp"

namespace logsym {

namespace {

// C(n, k) as a double via the multiplicative form.
double binom(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (std::size_t j = 1; j <= k; ++j)
        result *= static_cast<double>(n - k + j) / static_cast<double>(j);
    return result;
}

// w[i-1] = C(i-1, beta) * scale for ranks i = 1..n, built with the
// ratio recurrence C(i, beta) = C(i-1, beta) * i / (i - beta).
std::vector<double> scaled_max_weights(std::size_t n, int beta, double scale) {
    std::vector<double> w(n, 0.0);
    const std::size_t b = static_cast<std::size_t>(beta);
    if (n <= b) return w;
    w[b] = scale;  // rank beta+1: C(beta, beta) = 1
    for (std::size_t rank = b + 2; rank <= n; ++rank)
        w[rank - 1] = w[rank - 2] * static_cast<double>(rank - 1) /
                      static_cast<double>(rank - 1 - b);
    return w;
}

void require_degree_fits(std::size_t n, const KernelConfig& config, const char* op) {
    if (n < static_cast<std::size_t>(config.degree()))
        throw SampleTooSmallError(std::string(op) + ": need n >= beta + 1 = " +
                                  std::to_string(config.degree()) + ", got n = " +
                                  std::to_string(n));
}

}  // namespace

KernelConfig::KernelConfig(int beta_, double theta_) : beta(beta_), theta(theta_) {
    if (beta < 1)
        throw InvalidParameterError("KernelConfig: beta must be >= 1, got " +
                                    std::to_string(beta));
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw InvalidParameterError("KernelConfig: theta must be a positive real");
}

double kernel_h(std::span<const double> points, const KernelConfig& config) {
    const std::size_t m = static_cast<std::size_t>(config.degree());
    if (points.size() != m)
        throw WrongArityError("kernel_h: expected " + std::to_string(m) + " points, got " +
                              std::to_string(points.size()));
    double lo = points[0], hi = points[0];
    for (double p : points) {
        if (!(p > 0.0))
            throw NonPositiveValueError("kernel_h: points must be strictly positive");
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return (hi / config.theta - config.theta / lo) / static_cast<double>(m);
}

UStatResult ustat_naive(const Sample& sample, const KernelConfig& config) {
    const std::size_t n = sample.size();
    const std::size_t m = static_cast<std::size_t>(config.degree());
    require_degree_fits(n, config, "ustat_naive");

    const auto& x = sample.values();
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> subset(m);

    double sum = 0.0;
    while (true) {
        // The sample is sorted, so the subset's extremes sit at its ends;
        // still go through kernel_h to keep this path definitional.
        for (std::size_t j = 0; j < m; ++j) subset[j] = x[idx[j]];
        sum += kernel_h(subset, config);

        // next combination in lexicographic order
        std::size_t j = m;
        while (j > 0 && idx[j - 1] == n - m + j - 1) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (std::size_t l = j; l < m; ++l) idx[l] = idx[l - 1] + 1;
    }
    return UStatResult{sum / binom(n, m), n, config};
}

UStatResult ustat_fast(const Sample& sample, const KernelConfig& config) {
    const std::size_t n = sample.size();
    const std::size_t m = static_cast<std::size_t>(config.degree());
    require_degree_fits(n, config, "ustat_fast");

    const auto& x = sample.values();
    const double theta = config.theta;
    const auto wmax = scaled_max_weights(n, config.beta, 1.0 / binom(n, m));

    // min-weight of rank i is the max-weight of rank n+1-i
    double sum = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
        sum += wmax[i - 1] * (x[i - 1] / theta) - wmax[n - i] * (theta / x[i - 1]);
    return UStatResult{sum / static_cast<double>(m), n, config};
}

std::vector<double> leave_one_out(const Sample& sample, const KernelConfig& config) {
    const std::size_t n = sample.size();
    const std::size_t m = static_cast<std::size_t>(config.degree());
    if (n < m + 1)
        throw SampleTooSmallError("leave_one_out: need n >= beta + 2 = " +
                                  std::to_string(m + 1) + ", got n = " + std::to_string(n));

    const auto& x = sample.values();
    const double theta = config.theta;
    // P[i] = C(i-1, beta) / C(n-1, beta+1), 1-based with P[0] = 0.
    const auto p = scaled_max_weights(n, config.beta, 1.0 / binom(n - 1, m));
    auto at_p = [&](std::size_t rank) { return rank >= 1 ? p[rank - 1] : 0.0; };

    // Reduced-sample weights: below the removed rank, X_(i) keeps
    // C(i-1, beta) and its reciprocal takes C(n-1-i, beta); above it,
    // X_(i) takes C(i-2, beta) and its reciprocal keeps C(n-i, beta).
    std::vector<double> pre_max(n + 2, 0.0), pre_min(n + 2, 0.0);
    std::vector<double> suf_max(n + 2, 0.0), suf_min(n + 2, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
        pre_max[i] = pre_max[i - 1] + at_p(i) * (x[i - 1] / theta);
        pre_min[i] = pre_min[i - 1] + at_p(n - i) * (theta / x[i - 1]);
    }
    for (std::size_t i = n; i >= 1; --i) {
        suf_max[i] = suf_max[i + 1] + at_p(i - 1) * (x[i - 1] / theta);
        suf_min[i] = suf_min[i + 1] + at_p(n + 1 - i) * (theta / x[i - 1]);
    }

    std::vector<double> out(n);
    for (std::size_t k = 1; k <= n; ++k)
        out[k - 1] = (pre_max[k - 1] + suf_max[k + 1] - pre_min[k - 1] - suf_min[k + 1]) /
                     static_cast<double>(m);
    return out;
}

double theta_for_lognormal(double mu) {
    if (!std::isfinite(mu)) throw InvalidParameterError("theta_for_lognormal: mu must be finite");
    return std::exp(mu);
}

}  // namespace logsym
