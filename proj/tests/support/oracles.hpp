#pragma once

// Independent reference computations used by the tests. Everything
// here deliberately avoids the library's solver paths: the lambda
// oracle is pure bisection, and the n=3 EL oracle maximizes over the
// probability simplex directly by grid refinement.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace testsupport {

// Pure-bisection root of sum(nu_i / (1 + lambda nu_i)) = 0 between the
// poles. Requires mixed signs.
inline double bisect_lambda(const std::vector<double>& nu) {
    double mx = -std::numeric_limits<double>::infinity();
    double mn = std::numeric_limits<double>::infinity();
    for (double v : nu) {
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    if (!(mn < 0.0 && mx > 0.0)) throw std::invalid_argument("bisect_lambda: need mixed signs");
    double lo = (-1.0 / mx) * (1.0 - 1e-9);
    double hi = (-1.0 / mn) * (1.0 - 1e-9);
    auto g = [&](double lam) {
        double f = 0.0;
        for (double v : nu) f += v / (1.0 + lam * v);
        return f;
    };
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// -2 log R for a 3-point constraint vector, by brute force: the
// feasible set {p > 0, sum p = 1, sum p nu = 0} is a segment; walk it
// with a refining grid and maximize sum log(3 p_i) (concave along the
// segment, so refinement around the grid argmax converges).
inline double simplex_grid_stat3(const std::vector<double>& nu) {
    if (nu.size() != 3) throw std::invalid_argument("simplex_grid_stat3: need exactly 3 values");
    const double s1 = nu[0] + nu[1] + nu[2];
    const double s2 = nu[0] * nu[0] + nu[1] * nu[1] + nu[2] * nu[2];

    // base point p0 = a*(1,1,1) + b*nu solving the two constraints
    const double det = 3.0 * s2 - s1 * s1;
    if (det == 0.0) throw std::invalid_argument("simplex_grid_stat3: degenerate nu");
    const double a = s2 / det;
    const double b = -s1 / det;
    double p0[3], d[3];
    for (int i = 0; i < 3; ++i) p0[i] = a + b * nu[i];
    // direction (1,1,1) x nu: orthogonal to both constraint normals
    d[0] = nu[2] - nu[1];
    d[1] = nu[0] - nu[2];
    d[2] = nu[1] - nu[0];

    // p0 + t d > 0 componentwise
    double t_lo = -std::numeric_limits<double>::infinity();
    double t_hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i) {
        if (d[i] > 0.0)
            t_lo = std::max(t_lo, -p0[i] / d[i]);
        else if (d[i] < 0.0)
            t_hi = std::min(t_hi, -p0[i] / d[i]);
        else if (p0[i] <= 0.0)
            throw std::invalid_argument("simplex_grid_stat3: empty feasible segment");
    }
    if (!(t_lo < t_hi)) throw std::invalid_argument("simplex_grid_stat3: empty feasible segment");

    auto objective = [&](double t) {
        double f = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double p = p0[i] + t * d[i];
            if (p <= 0.0) return -std::numeric_limits<double>::infinity();
            f += std::log(3.0 * p);
        }
        return f;
    };

    double lo = t_lo, hi = t_hi;
    double best_t = 0.5 * (lo + hi);
    const int points = 64;
    for (int round = 0; round < 60; ++round) {
        double best_f = -std::numeric_limits<double>::infinity();
        for (int j = 0; j <= points; ++j) {
            const double t = lo + (hi - lo) * j / points;
            const double f = objective(t);
            if (f > best_f) {
                best_f = f;
                best_t = t;
            }
        }
        const double w = (hi - lo) / points;
        lo = std::max(t_lo, best_t - w);
        hi = std::min(t_hi, best_t + w);
    }
    return -2.0 * objective(best_t);
}

// One-sample Kolmogorov-Smirnov distance of sorted data against a CDF.
inline double ks_distance(std::vector<double> data, const std::function<double(double)>& cdf) {
    std::sort(data.begin(), data.end());
    const double n = static_cast<double>(data.size());
    double d = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double f = cdf(data[i]);
        d = std::max(d, std::max((i + 1.0) / n - f, f - static_cast<double>(i) / n));
    }
    return d;
}

// Two-sample Kolmogorov-Smirnov distance.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

inline double sample_skewness(const std::vector<double>& xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double m2 = 0.0, m3 = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    return m3 / std::pow(m2, 1.5);
}

}  // namespace testsupport
