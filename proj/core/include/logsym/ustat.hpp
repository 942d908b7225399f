#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "logsym/sample.hpp"

namespace logsym {

// PWM order beta and symmetry point theta. The kernel built from this
// config takes beta + 1 arguments.
struct KernelConfig {
    int beta = 1;
    double theta = 1.0;

    KernelConfig() = default;
    // Throws InvalidParameterError unless beta >= 1 and theta > 0.
    explicit KernelConfig(int beta_, double theta_ = 1.0);

    int degree() const { return beta + 1; }
};

struct UStatResult {
    double delta_hat = 0.0;
    std::size_t n = 0;
    KernelConfig config;
};

// Symmetric kernel of the departure measure:
//   (1/(beta+1)) * (max(points)/theta - theta/min(points)).
// Throws WrongArityError unless points.size() == beta + 1, and
// NonPositiveValueError if any point is <= 0.
double kernel_h(std::span<const double> points, const KernelConfig& config);

// Exact U-statistic: averages kernel_h over every (beta+1)-subset of
// the sample. O(C(n, beta+1)); intended as the small-n reference for
// ustat_fast. Throws SampleTooSmallError when n < beta + 1.
UStatResult ustat_naive(const Sample& sample, const KernelConfig& config);

// Same value as ustat_naive in O(n) after sorting, via the
// order-statistic form: each X_(i) enters max-terms with weight
// C(i-1, beta) and min-terms with weight C(n-i, beta). Weights are
// accumulated as floating-point ratios already divided by
// C(n, beta+1), so no large integers are formed.
UStatResult ustat_fast(const Sample& sample, const KernelConfig& config);

// delta_hat of the sample with the k-th sorted observation deleted,
// for every k. Ranks below the removed one keep weight C(i-1, beta);
// ranks above shift to C(i-2, beta), mirrored for the reciprocal term,
// which lets all n values come out of one prefix/suffix sweep.
// Requires n >= beta + 2 so each reduced sample still admits the
// statistic.
std::vector<double> leave_one_out(const Sample& sample, const KernelConfig& config);

// Symmetry point of a log-normal(mu, sigma): exp(mu).
double theta_for_lognormal(double mu);

}  // namespace logsym
