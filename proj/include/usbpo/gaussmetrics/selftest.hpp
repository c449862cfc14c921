#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "usbpo/gaussmetrics/distances.hpp"
#include "usbpo/gaussmetrics/mc_oracle.hpp"
#include "usbpo/rng.hpp"

namespace usbpo::gaussmetrics {

struct SelfTestResult {
    bool pass = true;
    double max_mc_rel_err = 0.0;        // closed form vs quantile-coupling oracle
    double max_diag_consistency = 0.0;  // |w2_full - w2_diag| on diagonal inputs
    double max_triangle_violation = 0.0;
    std::vector<std::string> lines;     // human-readable report
};

inline DiagGaussian random_diag_gaussian(Rng& rng, int dim) {
    Vec mean(dim), std(dim);
    for (int i = 0; i < dim; ++i) {
        mean[i] = rng.uniform(-3.0, 3.0);
        std[i] = rng.uniform(0.2, 2.5);
    }
    return DiagGaussian(mean, std);
}

/// Oracle suite behind the `w2-selftest` command. `inject_trace_fault` is a
/// mutation canary: it flips the sign of the cross trace term inside the
/// full-covariance route, which the diagonal-consistency check must catch.
inline SelfTestResult run_w2_selftest(std::uint64_t seed = 20240901,
                                      bool inject_trace_fault = false) {
    SelfTestResult res;
    Rng rng(seed);
    char buf[160];

    // Closed form vs Monte-Carlo quantile coupling, 100 pairs over dims 1..8.
    std::vector<double> per_dim_max(9, 0.0);
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = 1 + static_cast<int>(rng.uniform_index(8));
        const DiagGaussian p = random_diag_gaussian(rng, dim);
        const DiagGaussian q = random_diag_gaussian(rng, dim);
        const double closed = w2_diag(p, q);
        const double mc = w2_monte_carlo_oracle(p, q, 100000, rng.next_u64());
        const double rel = std::abs(closed - mc) / std::max(closed, 1e-12);
        per_dim_max[dim] = std::max(per_dim_max[dim], rel);
        res.max_mc_rel_err = std::max(res.max_mc_rel_err, rel);
    }
    for (int dim = 1; dim <= 8; ++dim) {
        std::snprintf(buf, sizeof buf, "dim %d: max |closed - mc| / closed = %.3e", dim,
                      per_dim_max[dim]);
        res.lines.emplace_back(buf);
    }

    // Full-covariance route must agree with the diagonal specialization.
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 1 + static_cast<int>(rng.uniform_index(6));
        const DiagGaussian p = random_diag_gaussian(rng, dim);
        const DiagGaussian q = random_diag_gaussian(rng, dim);
        const FullGaussian fp(p.mean, p.std.cwiseAbs2().asDiagonal());
        const FullGaussian fq(q.mean, q.std.cwiseAbs2().asDiagonal());
        const double full = detail::w2_full_impl(fp, fq, inject_trace_fault);
        const double diag = w2_diag(p, q);
        res.max_diag_consistency = std::max(res.max_diag_consistency, std::abs(full - diag));
    }
    std::snprintf(buf, sizeof buf, "diagonal consistency: max |w2_full - w2_diag| = %.3e",
                  res.max_diag_consistency);
    res.lines.emplace_back(buf);

    // Triangle inequality on random triples.
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 1 + static_cast<int>(rng.uniform_index(4));
        const DiagGaussian a = random_diag_gaussian(rng, dim);
        const DiagGaussian b = random_diag_gaussian(rng, dim);
        const DiagGaussian c = random_diag_gaussian(rng, dim);
        const double v = w2_diag(a, c) - (w2_diag(a, b) + w2_diag(b, c));
        res.max_triangle_violation = std::max(res.max_triangle_violation, v);
    }
    std::snprintf(buf, sizeof buf, "triangle inequality: max violation = %.3e",
                  res.max_triangle_violation);
    res.lines.emplace_back(buf);

    res.pass = res.max_mc_rel_err <= 0.02 && res.max_diag_consistency <= 1e-9 &&
               res.max_triangle_violation <= 1e-9;
    return res;
}

} // namespace usbpo::gaussmetrics
