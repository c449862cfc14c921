#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "usbpo/gaussmetrics/types.hpp"

namespace usbpo::gaussmetrics {

/// Second-order Wasserstein distance between diagonal Gaussians.
/// Commuting covariances collapse the trace term, giving
///   W2^2 = ||mu_p - mu_q||^2 + ||sigma_p - sigma_q||^2.
inline double w2_diag(const DiagGaussian& p, const DiagGaussian& q) {
    if (p.dim() != q.dim())
        throw UsageError("w2_diag: dimension mismatch (" + std::to_string(p.dim()) + " vs " +
                         std::to_string(q.dim()) + ")");
    double sq = 0.0;
    for (Eigen::Index i = 0; i < p.dim(); ++i) {
        const double dm = p.mean[i] - q.mean[i];
        const double ds = p.std[i] - q.std[i];
        sq += dm * dm + ds * ds;
    }
    return std::sqrt(sq);
}

namespace detail {

/// Symmetric PSD square root via eigendecomposition; eigenvalues below zero
/// are clipped. Eigenvalues below -tol (relative to the largest) raise a
/// DataError: the matrix is not a covariance.
inline Mat psd_sqrt(const Mat& m, double tol = 1e-10) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.transpose()));
    if (es.info() != Eigen::Success) throw HardError("psd_sqrt: eigendecomposition failed");
    Vec ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < -tol * scale)
            throw DataError("psd_sqrt: eigenvalue " + std::to_string(ev[i]) +
                            " below PSD tolerance");
        ev[i] = ev[i] > 0.0 ? std::sqrt(ev[i]) : 0.0;
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

/// Full-covariance W2 with an optional fault switch used only by the
/// self-test mutation canary (flips the sign of the cross trace term).
inline double w2_full_impl(const FullGaussian& p, const FullGaussian& q, bool flip_trace_sign) {
    if (p.dim() != q.dim()) throw UsageError("w2_full: dimension mismatch");
    const Mat sq = psd_sqrt(q.cov);
    const Mat cross = psd_sqrt(sq * p.cov * sq);
    const double sign = flip_trace_sign ? 1.0 : -1.0;
    const double trace_term = p.cov.trace() + q.cov.trace() + sign * 2.0 * cross.trace();
    const double sq_dist = (p.mean - q.mean).squaredNorm() + trace_term;
    return std::sqrt(std::max(0.0, sq_dist));
}

} // namespace detail

/// Second-order Wasserstein distance between full-covariance Gaussians:
///   W2^2 = ||mu_1 - mu_2||^2 + tr(S1 + S2 - 2 (S2^{1/2} S1 S2^{1/2})^{1/2}).
inline double w2_full(const FullGaussian& p, const FullGaussian& q) {
    return detail::w2_full_impl(p, q, false);
}

/// Total variation distance between finite distributions on equal support.
inline double tvd(const Categorical& p, const Categorical& q) {
    if (p.size() != q.size()) throw UsageError("tvd: support size mismatch");
    return 0.5 * (p.probs - q.probs).cwiseAbs().sum();
}

/// TVD on raw probability rows (both assumed valid distributions).
inline double tvd_rows(const Vec& p, const Vec& q) {
    if (p.size() != q.size()) throw UsageError("tvd_rows: support size mismatch");
    return 0.5 * (p - q).cwiseAbs().sum();
}

} // namespace usbpo::gaussmetrics
