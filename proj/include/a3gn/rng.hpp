#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "a3gn/common.hpp"

namespace a3gn {

// xoshiro256** with splitmix64 seeding. The standard library engines are
// portable but the *distributions* are implementation-defined, and training
// determinism (checkpoint resume, cross-run bit-equality) requires every
// draw to be reproducible from a serializable state. So both the engine and
// the distributions live here.
class Rng {
public:
    Rng() : Rng(0) {}

    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_int(std::uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // Standard normal via Box-Muller. No cached spare: two uniforms per
    // draw keeps the state a pure function of the draw count.
    double normal() {
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Derive an independent stream, e.g. one per network.
    Rng fork(const std::string& tag) const {
        std::uint64_t h = fnv1a(tag);
        h = fnv1a(s_.data(), sizeof(s_), h);
        return Rng(h);
    }

    std::array<std::uint64_t, 4> state() const { return s_; }
    void set_state(const std::array<std::uint64_t, 4>& s) { s_ = s; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> s_{};
};

}  // namespace a3gn
