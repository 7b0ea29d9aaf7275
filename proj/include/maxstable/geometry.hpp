#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace maxstable {

enum class ModelFamily { BrownResnick, Schlather };

/// Spatial dependence model: Brown-Resnick semivariogram gamma(h) =
/// (h/lambda)^kappa or Schlather powered-exponential correlation rho(h) =
/// exp{-(h/lambda)^kappa}.
struct DependenceModel {
    ModelFamily family = ModelFamily::BrownResnick;
    double lambda = 1.0;  // range, > 0
    double kappa = 1.0;   // shape, in (0, 2]

    void validate() const;
};

/// A finite set of d-dimensional sites with optional string labels.
class SiteSet {
public:
    SiteSet() = default;
    explicit SiteSet(Eigen::MatrixXd coords, std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(coords_.rows()); }
    int dim() const { return static_cast<int>(coords_.cols()); }
    const Eigen::MatrixXd& coords() const { return coords_; }
    Eigen::RowVectorXd coord(int i) const { return coords_.row(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int i) const;

    double distance(int i, int j) const { return (coords_.row(i) - coords_.row(j)).norm(); }
    /// Distance to the coordinate origin (the Brown-Resnick anchor point).
    double origin_distance(int i) const { return coords_.row(i).norm(); }

    SiteSet subset(const std::vector<int>& idx) const;
    static SiteSet concat(const SiteSet& a, const SiteSet& b);

private:
    Eigen::MatrixXd coords_;          // n x d
    std::vector<std::string> labels_; // empty or size n
};

/// Regular nx-by-ny grid on [xmin,xmax] x [ymin,ymax], row-major labels.
SiteSet make_grid(int nx, int ny, double xmin, double xmax, double ymin, double ymax);

/// gamma(h) = (h/lambda)^kappa. Brown-Resnick only.
double semivariogram(double h, const DependenceModel& model);

/// rho(h) = exp{-(h/lambda)^kappa}. Schlather only.
double correlation(double h, const DependenceModel& model);

/// Covariance matrix of the underlying Gaussian component over the sites.
/// Brown-Resnick: Cov{W(x_i),W(x_j)} = gamma(x_i) + gamma(x_j) - gamma(x_i-x_j)
/// with the anchor W(o) = 0 at the coordinate origin; Schlather: unit-diagonal
/// correlation matrix. Sites closer than dup_epsilon are rejected, as is a
/// Brown-Resnick site at the origin (zero variance).
Eigen::MatrixXd covariance_matrix(const SiteSet& sites, const DependenceModel& model,
                                  double dup_epsilon = 1e-8);

/// Pairwise extremal coefficient theta(h) in [1, 2].
/// Brown-Resnick: 2 Phi{(gamma(h)/2)^{1/2}}; Schlather: 1 + {(1-rho(h))/2}^{1/2}.
double extremal_coefficient(double h, const DependenceModel& model);

}  // namespace maxstable
