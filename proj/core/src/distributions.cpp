#include "logsym/distributions.hpp"

#include <cmath>
#include <sstream>

#include "logsym/errors.hpp"
#include "logsym/special_functions.hpp"

namespace logsym {

namespace {

constexpr double kPi = 3.14159265358979323846;
// exp() overflows past ~709.78; clamping the symmetric log-scale draw
// keeps every generated value finite and strictly positive.
constexpr double kLogClamp = 700.0;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidParameterError(std::string(name) + " must be a positive finite real");
}

void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw InvalidParameterError(std::string(name) + " must be finite");
}

double clamped_exp(double z) {
    if (z > kLogClamp) z = kLogClamp;
    if (z < -kLogClamp) z = -kLogClamp;
    return std::exp(z);
}

// Marsaglia-Tsang: exact for shape >= 1; the shape < 1 case boosts a
// (shape + 1) draw by u^(1/shape).
double gamma_draw(double shape, Rng& rng) {
    if (shape < 1.0) {
        const double u = rng.uniform_open();
        return gamma_draw(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double z, v;
        do {
            z = rng.normal();
            v = 1.0 + c * z;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_open();
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
        if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

struct Sampler {
    std::size_t n;
    Rng& rng;

    std::vector<double> operator()(const LogNormalSpec& s) const {
        return fill([&] { return clamped_exp(s.mu + s.sigma * rng.normal()); });
    }
    std::vector<double> operator()(const LogLogisticSpec& s) const {
        // exp of a logistic: quantile scale * (u/(1-u))^(1/shape)
        return fill([&] {
            const double u = rng.uniform_open();
            return clamped_exp(std::log(s.scale) + std::log(u / (1.0 - u)) / s.shape);
        });
    }
    std::vector<double> operator()(const LogLaplaceSpec& s) const {
        return fill([&] {
            const double u = rng.uniform_open();
            const double z = u < 0.5 ? s.mu + s.scale * std::log(2.0 * u)
                                     : s.mu - s.scale * std::log(2.0 * (1.0 - u));
            return clamped_exp(z);
        });
    }
    std::vector<double> operator()(const LogCauchySpec& s) const {
        return fill([&] {
            const double u = rng.uniform_open();
            return clamped_exp(s.mu + s.scale * std::tan(kPi * (u - 0.5)));
        });
    }
    std::vector<double> operator()(const BirnbaumSaundersSpec& s) const {
        return fill([&] {
            const double w = 0.5 * s.shape * rng.normal();
            const double root = w + std::sqrt(w * w + 1.0);
            return s.scale * root * root;
        });
    }
    std::vector<double> operator()(const WeibullSpec& s) const {
        return fill([&] { return weibull_quantile(rng.uniform_open(), s); });
    }
    std::vector<double> operator()(const GammaSpec& s) const {
        return fill([&] { return s.scale * gamma_draw(s.shape, rng); });
    }
    std::vector<double> operator()(const ParetoSpec& s) const {
        return fill([&] { return pareto_quantile(rng.uniform_open(), s); });
    }
    std::vector<double> operator()(const HalfNormalSpec& s) const {
        return fill([&] { return half_normal_quantile(rng.uniform_open(), s); });
    }

    template <typename F>
    std::vector<double> fill(F&& draw) const {
        std::vector<double> out(n);
        for (double& v : out) v = draw();
        return out;
    }
};

struct Validator {
    void operator()(const LogNormalSpec& s) const {
        require_finite(s.mu, "lognormal mu");
        require_positive(s.sigma, "lognormal sigma");
    }
    void operator()(const LogLogisticSpec& s) const {
        require_positive(s.scale, "loglogistic scale");
        require_positive(s.shape, "loglogistic shape");
    }
    void operator()(const LogLaplaceSpec& s) const {
        require_finite(s.mu, "loglaplace mu");
        require_positive(s.scale, "loglaplace scale");
    }
    void operator()(const LogCauchySpec& s) const {
        require_finite(s.mu, "logcauchy mu");
        require_positive(s.scale, "logcauchy scale");
    }
    void operator()(const BirnbaumSaundersSpec& s) const {
        require_positive(s.shape, "birnbaum-saunders shape");
        require_positive(s.scale, "birnbaum-saunders scale");
    }
    void operator()(const WeibullSpec& s) const {
        require_positive(s.shape, "weibull shape");
        require_positive(s.scale, "weibull scale");
    }
    void operator()(const GammaSpec& s) const {
        require_positive(s.shape, "gamma shape");
        require_positive(s.scale, "gamma scale");
    }
    void operator()(const ParetoSpec& s) const {
        require_positive(s.shape, "pareto shape");
        require_positive(s.scale, "pareto scale");
    }
    void operator()(const HalfNormalSpec& s) const {
        require_positive(s.sigma, "halfnormal sigma");
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

void validate_spec(const DistributionSpec& spec) { std::visit(Validator{}, spec); }

bool is_log_symmetric(const DistributionSpec& spec) {
    return log_symmetry_point(spec).has_value();
}

std::optional<double> log_symmetry_point(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::optional<double> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LogNormalSpec> ||
                          std::is_same_v<T, LogLaplaceSpec> ||
                          std::is_same_v<T, LogCauchySpec>)
                return std::exp(s.mu);
            else if constexpr (std::is_same_v<T, LogLogisticSpec> ||
                               std::is_same_v<T, BirnbaumSaundersSpec>)
                return s.scale;
            else
                return std::nullopt;
        },
        spec);
}

std::string family_name(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LogNormalSpec>) return "lognormal";
            else if constexpr (std::is_same_v<T, LogLogisticSpec>) return "loglogistic";
            else if constexpr (std::is_same_v<T, LogLaplaceSpec>) return "loglaplace";
            else if constexpr (std::is_same_v<T, LogCauchySpec>) return "logcauchy";
            else if constexpr (std::is_same_v<T, BirnbaumSaundersSpec>) return "birnbaum-saunders";
            else if constexpr (std::is_same_v<T, WeibullSpec>) return "weibull";
            else if constexpr (std::is_same_v<T, GammaSpec>) return "gamma";
            else if constexpr (std::is_same_v<T, ParetoSpec>) return "pareto";
            else return "halfnormal";
        },
        spec);
}

std::string params_string(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, LogNormalSpec>)
                return "mu=" + fmt(s.mu) + ";sigma=" + fmt(s.sigma);
            else if constexpr (std::is_same_v<T, LogLogisticSpec>)
                return "scale=" + fmt(s.scale) + ";shape=" + fmt(s.shape);
            else if constexpr (std::is_same_v<T, LogLaplaceSpec>)
                return "mu=" + fmt(s.mu) + ";scale=" + fmt(s.scale);
            else if constexpr (std::is_same_v<T, LogCauchySpec>)
                return "mu=" + fmt(s.mu) + ";scale=" + fmt(s.scale);
            else if constexpr (std::is_same_v<T, BirnbaumSaundersSpec>)
                return "shape=" + fmt(s.shape) + ";scale=" + fmt(s.scale);
            else if constexpr (std::is_same_v<T, HalfNormalSpec>)
                return "sigma=" + fmt(s.sigma);
            else
                return "shape=" + fmt(s.shape) + ";scale=" + fmt(s.scale);
        },
        spec);
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, Rng& rng) {
    validate_spec(spec);
    if (n < 1) throw InvalidParameterError("sample: n must be >= 1");
    return std::visit(Sampler{n, rng}, spec);
}

double weibull_quantile(double u, const WeibullSpec& spec) {
    return spec.scale * std::pow(-std::log1p(-u), 1.0 / spec.shape);
}

double weibull_cdf(double x, const WeibullSpec& spec) {
    if (x <= 0.0) return 0.0;
    return -std::expm1(-std::pow(x / spec.scale, spec.shape));
}

double pareto_quantile(double u, const ParetoSpec& spec) {
    return spec.scale * std::pow(1.0 - u, -1.0 / spec.shape);
}

double pareto_cdf(double x, const ParetoSpec& spec) {
    if (x <= spec.scale) return 0.0;
    return 1.0 - std::pow(spec.scale / x, spec.shape);
}

double half_normal_quantile(double u, const HalfNormalSpec& spec) {
    return spec.sigma * inverse_normal_cdf(0.5 * (1.0 + u));
}

double half_normal_cdf(double x, const HalfNormalSpec& spec) {
    if (x <= 0.0) return 0.0;
    return erf(x / (spec.sigma * std::sqrt(2.0)));
}

LogNormalFit fit_lognormal(const Sample& sample) {
    const auto& x = sample.values();
    const double n = static_cast<double>(x.size());

    double mean_log = 0.0;
    for (double v : x) mean_log += std::log(v);
    mean_log /= n;

    double ss = 0.0;
    for (double v : x) {
        const double d = std::log(v) - mean_log;
        ss += d * d;
    }
    const double sigma = std::sqrt(ss / n);
    if (sigma == 0.0)
        throw DegenerateSampleError("fit_lognormal: all observations are equal");
    return LogNormalFit{mean_log, sigma};
}

Sample transform_unit_symmetry(const Sample& sample, const LogNormalFit& fit) {
    if (!(fit.sigma_hat > 0.0) || !std::isfinite(fit.sigma_hat) || !std::isfinite(fit.mu_hat))
        throw InvalidParameterError("transform_unit_symmetry: need finite mu_hat and sigma_hat > 0");
    std::vector<double> y;
    y.reserve(sample.size());
    for (double v : sample.values())
        y.push_back(std::exp((std::log(v) - fit.mu_hat) / fit.sigma_hat));
    return validate_sample(std::move(y));
}

}  // namespace logsym
