#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace maxstable {

/// Randomized quasi-Monte Carlo settings for rectangle probabilities.
struct QmcConfig {
    int n_points = 1024;   // lattice points per shift
    int n_shifts = 12;     // independent random shifts (error estimate)
    int max_dim = 100;
    std::uint64_t seed = 0;
};

/// A rectangle-probability estimate with a Monte Carlo error estimate.
/// std_error is the standard deviation of the shift means divided by
/// sqrt(n_shifts); it is 0 for dimensions evaluated in closed form.
struct RectProbEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
};

/// P(lower < X < upper) for X ~ N(mean, cov), by separation of variables with
/// greedy variable reordering, a randomly shifted Kronecker lattice and
/// antithetic sampling. Bounds may be -inf / +inf.
RectProbEstimate mvn_rect_prob(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov,
                               const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                               const QmcConfig& config);

/// P(lower < T < upper) for a multivariate Student vector with df degrees of
/// freedom, location loc and scale matrix scale. Uses the scale-mixture
/// extension of the normal algorithm (one extra radial variable on the cube).
RectProbEstimate mvt_rect_prob(int df, const Eigen::VectorXd& loc, const Eigen::MatrixXd& scale,
                               const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                               const QmcConfig& config);

}  // namespace maxstable
