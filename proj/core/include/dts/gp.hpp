#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <map>
#include <vector>

#include "dts/kernel.hpp"
#include "dts/rng.hpp"

namespace dts {

// Ordered conditioning data. Insertion order matters: it defines the
// chain-rule conditioning sequence used by the information-theory routines.
struct Dataset {
    std::vector<Point> points;
    std::vector<double> observations;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    void add(Point x, double y) {
        points.push_back(std::move(x));
        observations.push_back(y);
    }
};

struct PosteriorMoments {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
};

// Cholesky of a symmetric matrix with escalating diagonal jitter:
// starts at 1e-10, grows by x10 up to 1e-4, then throws. Returns the
// factorization together with the jitter that was finally applied.
struct JitteredCholesky {
    Eigen::LLT<Eigen::MatrixXd> llt;
    double jitter = 0.0;
};
JitteredCholesky cholesky_with_jitter(const Eigen::MatrixXd& A);

// Exact GP posterior conditioned on a dataset. Immutable after construction.
class GpPosterior {
public:
    GpPosterior(Kernel kernel, double noise_var, Dataset data);

    // Same, with the prior Gram matrix of data.points supplied by the caller
    // (e.g. gathered from a precomputed grid Gram).
    GpPosterior(Kernel kernel, double noise_var, Dataset data, Eigen::MatrixXd prior_gram);

    const Kernel& kernel() const { return kernel_; }
    double noise_var() const { return noise_var_; }
    const Dataset& data() const { return data_; }
    double jitter() const { return jitter_; }

    // Solve (K + noise_var I) z = b with the cached factorization.
    Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
    Eigen::MatrixXd solve(const Eigen::MatrixXd& b) const;

    PosteriorMoments moments(const std::vector<Point>& queries) const;

    double mean_at(const Point& x) const;
    double var_at(const Point& x) const;

private:
    Kernel kernel_;
    double noise_var_;
    Dataset data_;
    Eigen::LLT<Eigen::MatrixXd> factor_;
    Eigen::VectorXd alpha_;  // (K + noise_var I)^{-1} y
    double jitter_ = 0.0;
};

PosteriorMoments posterior_moments(const GpPosterior& gp, const std::vector<Point>& queries);

// One joint draw from N(mean, cov) at the given grid, via a dense Cholesky of
// the posterior covariance. Exact but O(|grid|^3); use PathSampler in loops.
Eigen::VectorXd sample_posterior_path(const GpPosterior& gp, const std::vector<Point>& grid,
                                      RngStream& rng);

// Index of the maximal value; ties broken by lowest index.
std::size_t argmax_index(const Eigen::VectorXd& values);
Point argmax_on_grid(const Eigen::VectorXd& values, const std::vector<Point>& grid);

// Posterior path sampling over a fixed grid via a decoupled prior draw plus a
// data-dependent correction: f = u + K_{grid,X}(K_X + s^2 I)^{-1}(y - u_X - e),
// which has exactly the posterior mean and covariance. The grid prior Cholesky
// is computed once and shared; every conditioning point must lie on the grid.
class PathSampler {
public:
    PathSampler(Kernel kernel, std::vector<Point> grid);

    const std::vector<Point>& grid() const { return grid_; }
    const Eigen::MatrixXd& grid_gram() const { return prior_gram_; }

    // Grid index of a point previously produced by this grid (exact match).
    std::size_t grid_index(const Point& x) const;

    Eigen::VectorXd sample(const GpPosterior& gp, RngStream& rng) const;

    // Posterior construction with the data Gram gathered from the grid Gram,
    // avoiding per-round kernel re-evaluation.
    GpPosterior make_posterior(double noise_var, const Dataset& data) const;

private:
    Kernel kernel_;
    std::vector<Point> grid_;
    Eigen::MatrixXd prior_gram_;
    Eigen::MatrixXd prior_chol_;  // lower factor of prior_gram_ + jitter
    std::map<std::vector<double>, std::size_t> index_by_coords_;
};

}  // namespace dts
