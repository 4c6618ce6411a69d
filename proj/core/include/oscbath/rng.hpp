// rng.hpp — deterministic random numbers: counter-based chunk seeding plus
// hand-rolled variate transforms so results do not depend on the standard
// library's unspecified distribution algorithms.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace oscbath::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for an independent stream: mixes a master seed, a per-operation tag and
// a chunk counter. Streams are independent of the worker-thread layout.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t chunk) {
    return splitmix64(splitmix64(master ^ (tag * 0x9e3779b97f4a7c15ULL)) + chunk);
}

// mt19937_64 has a standardized output sequence, so runs are reproducible
// across compilers as long as we transform the raw bits ourselves.
using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed) { return Engine(seed); }

// Uniform in [0, 1) with 53 random bits.
inline double uniform(Engine& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform in (0, 1]; safe as a log() argument.
inline double uniform_pos(Engine& eng) { return 1.0 - uniform(eng); }

inline double exponential(Engine& eng) { return -std::log(uniform_pos(eng)); }

// Box-Muller; the second variate is discarded to keep the draw count fixed.
inline double normal(Engine& eng) {
    const double u1 = uniform_pos(eng);
    const double u2 = uniform(eng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
}

// Marsaglia-Tsang for shape a >= 1, boosted by Stuart's theorem for a < 1.
inline double gamma_variate(Engine& eng, double a) {
    if (a < 1.0) {
        const double u = uniform_pos(eng);
        return gamma_variate(eng, a + 1.0) * std::pow(u, 1.0 / a);
    }
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal(eng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_pos(eng);
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
}

}  // namespace oscbath::rng
