#include <doctest.h>

#include <cmath>
#include <vector>

#include "logsym/rng.hpp"

using namespace logsym;

TEST_CASE("identical (seed, stream) gives an identical sequence") {
    Rng a(12345, 7), b(12345, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(12345, 7), d(12345, 7);
    for (int i = 0; i < 200; ++i) CHECK(c.normal() == d.normal());
}

TEST_CASE("different streams or seeds diverge") {
    Rng a(12345, 0), b(12345, 1), c(54321, 0);
    int same_ab = 0, same_ac = 0;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u64();
        same_ab += va == b.next_u64();
        same_ac += va == c.next_u64();
    }
    CHECK(same_ab == 0);
    CHECK(same_ac == 0);
}

TEST_CASE("uniform_open stays strictly inside (0, 1)") {
    Rng rng(9, 0);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform_open();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("uniform covers [0, 1) with the right mean") {
    Rng rng(10, 0);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("normal draws have standard moments") {
    Rng rng(11, 3);
    const int n = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sum2 += z * z;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::fabs(mean) < 0.02);
    CHECK(std::fabs(var - 1.0) < 0.03);
}
