#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "logsym/rng.hpp"
#include "logsym/sample.hpp"

namespace logsym {

// Null (log-symmetric) families.
struct LogNormalSpec {
    double mu = 0.0;
    double sigma = 1.0;
};
struct LogLogisticSpec {
    double scale = 1.0;
    double shape = 1.0;
};
struct LogLaplaceSpec {
    double mu = 0.0;
    double scale = 1.0;
};
struct LogCauchySpec {
    double mu = 0.0;
    double scale = 1.0;
};
struct BirnbaumSaundersSpec {
    double shape = 1.0;
    double scale = 1.0;
};

// Alternative families.
struct WeibullSpec {
    double shape = 1.0;
    double scale = 1.0;
};
struct GammaSpec {
    double shape = 1.0;
    double scale = 1.0;
};
struct ParetoSpec {
    double shape = 1.0;
    double scale = 1.0;
};
struct HalfNormalSpec {
    double sigma = 1.0;
};

using DistributionSpec =
    std::variant<LogNormalSpec, LogLogisticSpec, LogLaplaceSpec, LogCauchySpec,
                 BirnbaumSaundersSpec, WeibullSpec, GammaSpec, ParetoSpec, HalfNormalSpec>;

// Throws InvalidParameterError if any shape/scale parameter is not a
// positive finite real (location parameters mu only need to be finite).
void validate_spec(const DistributionSpec& spec);

// True for the five families that are log-symmetric about some point.
bool is_log_symmetric(const DistributionSpec& spec);

// The symmetry point theta of a log-symmetric family; nullopt for the
// alternatives.
std::optional<double> log_symmetry_point(const DistributionSpec& spec);

std::string family_name(const DistributionSpec& spec);
std::string params_string(const DistributionSpec& spec);

// n independent draws. Log-symmetric families are generated as exp(Z)
// with Z from the matching symmetric family (the log-scale draw is
// clamped to +-700 so exp stays finite and positive in double
// precision); Birnbaum-Saunders through its normal representation;
// Gamma by shape-robust rejection; Weibull, Pareto and half-normal by
// inverse CDF.
std::vector<double> sample(const DistributionSpec& spec, std::size_t n, Rng& rng);

// Quantile/CDF pairs for the inverse-CDF families (exposed so the
// round-trip property is checkable against the sampler's own math).
double weibull_quantile(double u, const WeibullSpec& spec);
double weibull_cdf(double x, const WeibullSpec& spec);
double pareto_quantile(double u, const ParetoSpec& spec);
double pareto_cdf(double x, const ParetoSpec& spec);
double half_normal_quantile(double u, const HalfNormalSpec& spec);
double half_normal_cdf(double x, const HalfNormalSpec& spec);

// Log-scale maximum likelihood fit of a log-normal:
// mu_hat = mean(log x), sigma_hat = sqrt(mean((log x - mu_hat)^2)).
struct LogNormalFit {
    double mu_hat = 0.0;
    double sigma_hat = 0.0;
};

// Throws DegenerateSampleError when all observations are equal.
LogNormalFit fit_lognormal(const Sample& sample);

// y_i = exp((log x_i - mu_hat) / sigma_hat); under a log-normal model
// the result is log-symmetric about 1. Re-validated and re-sorted.
Sample transform_unit_symmetry(const Sample& sample, const LogNormalFit& fit);

}  // namespace logsym
