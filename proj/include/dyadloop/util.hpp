// Small shared utilities: stable hashing for seed derivation, a
// reproducible normal sampler, and string/format helpers.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <string_view>

namespace dyadloop {

// FNV-1a, 64-bit. Used to derive per-run and per-agent seeds so results do
// not depend on scheduling order, platform, or standard-library internals.
class StableHash {
public:
    StableHash& mix(std::string_view s) {
        for (unsigned char c : s) step(c);
        return *this;
    }
    StableHash& mix(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) step(static_cast<unsigned char>(v >> (8 * i)));
        return *this;
    }
    std::uint64_t value() const { return h_; }

private:
    void step(unsigned char c) {
        h_ ^= c;
        h_ *= 1099511628211ULL;
    }
    std::uint64_t h_ = 14695981039346656037ULL;
};

inline std::uint64_t stable_hash(std::uint64_t seed, std::string_view tag, std::uint64_t k = 0) {
    return StableHash{}.mix(seed).mix(tag).mix(k).value();
}

// Box-Muller normal sampler on top of mt19937_64. std::normal_distribution
// is implementation-defined, so transcripts would not be reproducible
// across standard libraries with it.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

    double next(double mean = 0.0, double sd = 1.0) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + sd * spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return mean + sd * r * std::cos(theta);
    }

private:
    double uniform01() {
        // in (0,1]: never 0, so log() is safe
        return (static_cast<double>(rng_() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
    }
    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline double clamp_belief(double b) { return b < 1.0 ? 1.0 : (b > 10.0 ? 10.0 : b); }

inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

} // namespace dyadloop
