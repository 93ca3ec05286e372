#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ccca {

// Seeded generator used everywhere randomness is needed. Uniform and normal
// draws are derived from the raw 64-bit stream directly (instead of
// std::uniform_real_distribution and friends, whose output is
// implementation-defined) so that a given seed reproduces the same values on
// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform on the open interval (0, 1)
    double uniform() {
        const std::uint64_t bits = gen_();
        return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; one value per call, pair cached
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::uint64_t raw() { return gen_(); }

    // Derives an independent child seed; used to give grid points and trials
    // their own streams without coupling to evaluation order.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ccca
