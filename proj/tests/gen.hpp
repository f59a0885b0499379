#pragma once

// Small seeded generators for the property tests. Fixed seeds keep runs reproducible;
// every property prints the failing sample through doctest INFO/CAPTURE.

#include <cmath>
#include <cstdint>
#include <random>

namespace gen {

class Source {
public:
    explicit Source(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // Uniform on [lo, hi] but rejected while within `gap` of any 1/k, k <= r.
    double off_poles(double lo, double hi, int r, double gap)
    {
        for (;;) {
            const double s = uniform(lo, hi);
            bool ok = true;
            for (int k = 1; k <= r && ok; ++k) ok = std::fabs(s - 1.0 / k) >= gap;
            if (ok) return s;
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen
