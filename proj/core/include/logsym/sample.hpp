#pragma once

#include <cstddef>
#include <vector>

namespace logsym {

// A validated sample of strictly positive observations, stored in
// ascending order so values()[i] is the (i+1)-th order statistic.
// Construct through validate_sample.
class Sample {
public:
    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }

private:
    explicit Sample(std::vector<double> sorted) : values_(std::move(sorted)) {}
    friend Sample validate_sample(std::vector<double> raw);

    std::vector<double> values_;
};

// Sorts a copy of the raw observations and checks the support
// invariants. Throws NonFiniteValueError, NonPositiveValueError, or
// TooFewObservationsError (fewer than 2 usable values).
Sample validate_sample(std::vector<double> raw);

}  // namespace logsym
