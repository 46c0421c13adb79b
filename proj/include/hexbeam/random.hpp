#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hexbeam {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Seedable random stream. Substreams derived from (master, stream) are
// statistically independent, so Monte Carlo blocks can be distributed over
// threads without the thread count changing any draw.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    RandomStream(std::uint64_t master, std::uint64_t stream)
        : eng_(splitmix64(splitmix64(master) ^ splitmix64(stream ^ 0xD1B54A32D192ED03ull))) {}

    // uniform on [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    // standard normal, Box-Muller; always consumes exactly two uniforms
    double normal() {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hexbeam
