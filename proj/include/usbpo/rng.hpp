#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "usbpo/errors.hpp"

namespace usbpo {

/// Seeded random source. All distributions are implemented in terms of the
/// raw 64-bit stream so that sequences are reproducible bit-for-bit on any
/// standard library (std::normal_distribution et al. are not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw UsageError("Rng::uniform_index: n must be positive");
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % n);
    }

    /// Standard normal via Marsaglia polar method (cached spare).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    double normal(double mean, double std) { return mean + std * normal(); }

    /// Normal truncated to [-2, 2] standard deviations (resampling).
    double truncated_normal() {
        double x;
        do {
            x = normal();
        } while (std::abs(x) > 2.0);
        return x;
    }

    /// Gamma(shape, 1) via Marsaglia-Tsang; shape > 0.
    double gamma(double shape) {
        if (shape <= 0.0) throw UsageError("Rng::gamma: shape must be positive");
        if (shape < 1.0) {
            const double u = uniform();
            return gamma(shape + 1.0) * std::pow(u > 0 ? u : 1e-300, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// Dirichlet draw with symmetric concentration alpha over n categories.
    std::vector<double> dirichlet(std::size_t n, double alpha) {
        std::vector<double> out(n);
        double total = 0.0;
        for (auto& x : out) {
            x = gamma(alpha);
            total += x;
        }
        if (total <= 0.0) {
            // All-zero draw is astronomically unlikely; fall back to uniform.
            for (auto& x : out) x = 1.0 / static_cast<double>(n);
            return out;
        }
        for (auto& x : out) x /= total;
        return out;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

    /// Derive an independent stream (e.g., one per ensemble member).
    Rng split(std::uint64_t stream) {
        return Rng(engine_() ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace usbpo
