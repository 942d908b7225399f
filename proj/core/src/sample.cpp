#include "logsym/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logsym/errors.hpp"

namespace logsym {

Sample validate_sample(std::vector<double> raw) {
    if (raw.size() < 2)
        throw TooFewObservationsError("validate_sample: need at least 2 observations, got " +
                                      std::to_string(raw.size()));
    for (double v : raw) {
        if (!std::isfinite(v))
            throw NonFiniteValueError("validate_sample: non-finite observation");
        if (!(v > 0.0))
            throw NonPositiveValueError("validate_sample: observation " + std::to_string(v) +
                                        " is outside the positive support");
    }
    std::stable_sort(raw.begin(), raw.end());
    return Sample(std::move(raw));
}

}  // namespace logsym
