#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ardlkit {

/// Deterministic seeded RNG stream. Monte-Carlo code derives one stream per
/// replication / simulation draw from (base seed, stream index), so results
/// do not depend on execution order and identical seeds give bit-identical
/// output. Normal variates come from an explicit Box-Muller transform rather
/// than std::normal_distribution, whose algorithm is implementation-defined.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : engine_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

    explicit RngStream(std::uint64_t seed) : RngStream(seed, 0) {}

    /// Uniform draw in (0, 1].
    double uniform() {
        const std::uint64_t bits = engine_() >> 11;  // 53 random bits
        return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal draw (Box-Muller, pairwise cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    std::uint64_t next_u64() { return engine_(); }

private:
    static std::uint64_t mix(std::uint64_t x) {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ardlkit
