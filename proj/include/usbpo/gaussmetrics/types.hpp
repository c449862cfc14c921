#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <utility>

#include "usbpo/errors.hpp"

namespace usbpo::gaussmetrics {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Gaussian with diagonal covariance, stored as (mean, std).
struct DiagGaussian {
    Vec mean;
    Vec std;

    DiagGaussian(Vec mean_, Vec std_) : mean(std::move(mean_)), std(std::move(std_)) {
        if (mean.size() != std.size())
            throw UsageError("DiagGaussian: mean and std must have equal length");
        for (Eigen::Index i = 0; i < std.size(); ++i) {
            if (!(std[i] > 0.0))
                throw UsageError("DiagGaussian: std must be strictly positive (got " +
                                 std::to_string(std[i]) + " at index " + std::to_string(i) + ")");
        }
    }

    Eigen::Index dim() const { return mean.size(); }
};

/// Gaussian with full covariance. The covariance must be symmetric within
/// 1e-10 and positive semidefinite up to the same slack (small negative
/// eigenvalues are clipped to zero by consumers).
struct FullGaussian {
    Vec mean;
    Mat cov;

    FullGaussian(Vec mean_, Mat cov_) : mean(std::move(mean_)), cov(std::move(cov_)) {
        if (cov.rows() != cov.cols() || cov.rows() != mean.size())
            throw UsageError("FullGaussian: cov must be square and match mean length");
        const double asym = (cov - cov.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-10)
            throw DataError("FullGaussian: covariance asymmetry " + std::to_string(asym) +
                            " exceeds 1e-10");
    }

    Eigen::Index dim() const { return mean.size(); }
};

/// Finite distribution over {0..n-1}.
struct Categorical {
    Vec probs;

    explicit Categorical(Vec probs_) : probs(std::move(probs_)) {
        double total = 0.0;
        for (Eigen::Index i = 0; i < probs.size(); ++i) {
            if (probs[i] < 0.0)
                throw UsageError("Categorical: negative probability at index " + std::to_string(i));
            total += probs[i];
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw UsageError("Categorical: probabilities sum to " + std::to_string(total) +
                             ", expected 1 within 1e-12");
    }

    Eigen::Index size() const { return probs.size(); }
};

} // namespace usbpo::gaussmetrics
