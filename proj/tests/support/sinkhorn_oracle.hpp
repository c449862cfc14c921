#pragma once

// Test-only Monte-Carlo oracle for the full-covariance W2 route: empirical
// measures from both Gaussians, entropic OT with annealed regularization,
// debiased via the Sinkhorn divergence S_e = OT_e(x,y) - (OT_e(x,x) +
// OT_e(y,y))/2, averaged over minibatches. Built and frozen before the
// closed-form implementation it validates.

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "usbpo/gaussmetrics/types.hpp"
#include "usbpo/rng.hpp"

namespace usbpo::testsupport {

using Eigen::MatrixXd;
using Eigen::VectorXd;

inline MatrixXd sample_gaussian(const gaussmetrics::FullGaussian& g, int n, Rng& rng) {
    Eigen::LLT<MatrixXd> llt(g.cov + 1e-12 * MatrixXd::Identity(g.dim(), g.dim()));
    const MatrixXd L = llt.matrixL();
    MatrixXd z(n, g.dim());
    for (int i = 0; i < n; ++i)
        for (int d = 0; d < g.dim(); ++d) z(i, d) = rng.normal();
    return (z * L.transpose()).rowwise() + g.mean.transpose();
}

inline MatrixXd pairwise_sq_dists(const MatrixXd& x, const MatrixXd& y) {
    const VectorXd xn = x.rowwise().squaredNorm();
    const VectorXd yn = y.rowwise().squaredNorm();
    MatrixXd c = -2.0 * x * y.transpose();
    c.colwise() += xn;
    c.rowwise() += yn.transpose();
    return c.cwiseMax(0.0);
}

/// Entropic OT cost <T, C> between uniform empirical measures, potentials
/// warm-started across an annealed epsilon schedule. Stabilized kernel
/// exp((f_i + g_j - C_ij)/eps) with absorption keeps small eps usable.
inline double sinkhorn_cost(const MatrixXd& c, const std::vector<double>& eps_schedule,
                            int iters_per_level) {
    const int n = static_cast<int>(c.rows());
    const int m = static_cast<int>(c.cols());
    const double a = 1.0 / n, b = 1.0 / m;
    VectorXd f = VectorXd::Zero(n), g = VectorXd::Zero(m);
    VectorXd u = VectorXd::Ones(n), v = VectorXd::Ones(m);
    MatrixXd k(n, m);

    auto rebuild_kernel = [&](double eps) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) k(i, j) = std::exp((f[i] + g[j] - c(i, j)) / eps);
    };

    for (double eps : eps_schedule) {
        rebuild_kernel(eps);
        u.setOnes();
        v.setOnes();
        for (int it = 0; it < iters_per_level; ++it) {
            u = (k * v).cwiseMax(1e-300).cwiseInverse() * a;
            v = (k.transpose() * u).cwiseMax(1e-300).cwiseInverse() * b;
            const double umax = u.cwiseAbs().maxCoeff();
            const double vmax = v.cwiseAbs().maxCoeff();
            if (umax > 1e30 || vmax > 1e30 || it == iters_per_level - 1) {
                f += eps * u.array().log().matrix();
                g += eps * v.array().log().matrix();
                rebuild_kernel(eps);
                u.setOnes();
                v.setOnes();
            }
        }
    }
    // Transport plan T_ij = u_i K_ij v_j (u = v = 1 after final absorption).
    double cost = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) cost += k(i, j) * c(i, j);
    return cost;
}

/// sqrt of the batch-averaged Sinkhorn divergence; estimates W2(p, q).
inline double w2_entropic_oracle(const gaussmetrics::FullGaussian& p,
                                 const gaussmetrics::FullGaussian& q, int batch_size,
                                 int n_batches, std::uint64_t seed) {
    Rng rng(seed);
    double acc = 0.0;
    for (int bi = 0; bi < n_batches; ++bi) {
        const MatrixXd x = sample_gaussian(p, batch_size, rng);
        const MatrixXd y = sample_gaussian(q, batch_size, rng);
        const MatrixXd cxy = pairwise_sq_dists(x, y);
        const double scale = cxy.mean();
        const std::vector<double> eps = {scale, 0.3 * scale, 0.1 * scale, 0.03 * scale};
        const double oxy = sinkhorn_cost(cxy, eps, 60);
        const double oxx = sinkhorn_cost(pairwise_sq_dists(x, x), eps, 60);
        const double oyy = sinkhorn_cost(pairwise_sq_dists(y, y), eps, 60);
        acc += oxy - 0.5 * (oxx + oyy);
    }
    return std::sqrt(std::max(0.0, acc / n_batches));
}

} // namespace usbpo::testsupport
