#pragma once

#include <Eigen/Dense>

#include "maxstable/rng.hpp"

namespace maxstable {

/// Lower-triangular Cholesky factor with Sigma = L L^T.
struct CholeskyFactor {
    Eigen::MatrixXd L;

    int dim() const { return static_cast<int>(L.rows()); }

    /// log |Sigma|^{1/2} = sum of log diagonal entries.
    double half_log_det() const;

    /// Solve (L L^T) x = b.
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
    Eigen::MatrixXd solve(const Eigen::MatrixXd& B) const;

    /// L * xi for a vector of i.i.d. standard normals, drawn from rng.
    Eigen::VectorXd correlate(RandomStream& rng) const;
};

/// Dense Cholesky of a symmetric positive-definite matrix. An optional ridge
/// is added to the diagonal before factorization (off by default; enable only
/// through an explicit configuration flag). Throws SingularCovarianceError if
/// the factorization fails.
CholeskyFactor cholesky(const Eigen::MatrixXd& S, double ridge = 0.0);

/// mean + L * xi with xi i.i.d. standard normal.
Eigen::VectorXd gaussian_sample(const CholeskyFactor& factor, const Eigen::VectorXd& mean,
                                RandomStream& rng);

struct ConditionalMoments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
};

/// Gaussian conditional moments from a joint covariance S over (s, x) with
/// the trailing n_cond coordinates conditioned to the values z:
///   mean = S_{s:x} S_x^{-1} z,  cov = S_s - S_{s:x} S_x^{-1} S_{x:s}.
/// The covariance is symmetrized after computation.
ConditionalMoments schur_conditional(const Eigen::MatrixXd& S, int n_cond,
                                     const Eigen::VectorXd& z);

}  // namespace maxstable
