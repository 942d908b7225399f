#pragma once

#include <cmath>
#include <cstdint>

namespace logsym {

// SplitMix64 step; used for seeding and for hashing (seed, stream)
// pairs into xoshiro state.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++ with substream support. A substream is addressed by a
// 64-bit index; (seed, stream) fully determines the output sequence,
// using integer arithmetic only, so sequences are identical across
// platforms. Substreams are derived by hashing seed and stream
// separately through SplitMix64 before expanding the state.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        SplitMix64 h1(seed);
        SplitMix64 h2(~stream);
        SplitMix64 expand(h1.next() ^ (h2.next() + 0x632BE59BD9B4E019ULL));
        bool all_zero = true;
        for (auto& word : state_) {
            word = expand.next();
            all_zero = all_zero && word == 0;
        }
        if (all_zero) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on the open interval (0, 1); safe to feed to log or to
    // inverse CDFs with poles at the endpoints.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via the Marsaglia polar method; generates pairs
    // and caches the spare, so the sequence is still a pure function of
    // the state.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform_open() - 1.0;
            v = 2.0 * uniform_open() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace logsym
