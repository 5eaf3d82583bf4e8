// Copyright 2026 The BASS Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace bass {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Compensated (Neumaier) accumulator. Truncation decisions and norm checks
/// compare against 1e-12 tolerances, so plain summation error over ~1e5-entry
/// supports is not acceptable.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and stream tags.
inline uint64_t seed_mix(uint64_t base, uint64_t a, uint64_t b = 0, uint64_t c = 0,
                         uint64_t d = 0) {
    uint64_t s = splitmix64(base);
    s = splitmix64(s ^ splitmix64(a));
    s = splitmix64(s ^ splitmix64(b));
    s = splitmix64(s ^ splitmix64(c));
    s = splitmix64(s ^ splitmix64(d));
    return s;
}

/// Seedable RNG wrapper. mt19937_64 output is fully specified by the standard
/// and the double/Gaussian draws below avoid the implementation-defined
/// std::*_distribution adaptors, so streams are bit-identical across
/// platforms. Gaussians come from Box-Muller on canonical 53-bit doubles.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, n).
    uint64_t below(uint64_t n) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= lim);
        return x % n;
    }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] so the log is finite
        double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double th = 2.0 * kPi * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    template <typename T>
    void shuffle(T* data, size_t n) {
        for (size_t i = n; i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(data[i - 1], data[j]);
        }
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace bass
