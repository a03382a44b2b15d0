#include "dts/gp.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dts {

JitteredCholesky cholesky_with_jitter(const Eigen::MatrixXd& A) {
    JitteredCholesky out;
    out.llt.compute(A);
    if (out.llt.info() == Eigen::Success) return out;
    for (double jitter = 1e-10; jitter <= 1e-4; jitter *= 10.0) {
        Eigen::MatrixXd Aj = A;
        Aj.diagonal().array() += jitter;
        out.llt.compute(Aj);
        if (out.llt.info() == Eigen::Success) {
            out.jitter = jitter;
            return out;
        }
    }
    const double dmax = A.diagonal().maxCoeff();
    const double dmin = A.diagonal().minCoeff();
    std::ostringstream msg;
    msg << "cholesky_with_jitter: factorization failed after jitter escalation to 1e-4"
        << " (n=" << A.rows() << ", diag range [" << dmin << ", " << dmax
        << "], diag-based condition estimate " << (dmax / std::max(dmin, 1e-300)) << ")";
    throw std::runtime_error(msg.str());
}

GpPosterior::GpPosterior(Kernel kernel, double noise_var, Dataset data)
    : GpPosterior(kernel, noise_var, std::move(data), Eigen::MatrixXd()) {}

GpPosterior::GpPosterior(Kernel kernel, double noise_var, Dataset data,
                         Eigen::MatrixXd prior_gram)
    : kernel_(kernel), noise_var_(noise_var), data_(std::move(data)) {
    if (noise_var_ <= 0.0) throw std::invalid_argument("GpPosterior: noise_var must be > 0");
    const Eigen::Index n = static_cast<Eigen::Index>(data_.size());
    if (n == 0) return;
    Eigen::MatrixXd K =
        prior_gram.size() > 0 ? std::move(prior_gram) : gram_matrix(kernel_, data_.points);
    if (K.rows() != n || K.cols() != n)
        throw std::invalid_argument("GpPosterior: prior_gram size mismatch");
    K.diagonal().array() += noise_var_;
    auto fact = cholesky_with_jitter(K);
    factor_ = std::move(fact.llt);
    jitter_ = fact.jitter;
    Eigen::VectorXd y =
        Eigen::Map<const Eigen::VectorXd>(data_.observations.data(), n);
    alpha_ = factor_.solve(y);
}

Eigen::VectorXd GpPosterior::solve(const Eigen::VectorXd& b) const {
    if (data_.empty()) throw std::logic_error("GpPosterior::solve: empty dataset");
    return factor_.solve(b);
}

Eigen::MatrixXd GpPosterior::solve(const Eigen::MatrixXd& b) const {
    if (data_.empty()) throw std::logic_error("GpPosterior::solve: empty dataset");
    return factor_.solve(b);
}

PosteriorMoments GpPosterior::moments(const std::vector<Point>& queries) const {
    if (queries.empty()) throw std::invalid_argument("posterior_moments: empty query set");
    PosteriorMoments out;
    Eigen::MatrixXd Kqq = gram_matrix(kernel_, queries);
    if (data_.empty()) {
        out.mean = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(queries.size()));
        out.cov = std::move(Kqq);
        return out;
    }
    Eigen::MatrixXd Kdq = cross_gram(kernel_, data_.points, queries);  // n x q
    out.mean = Kdq.transpose() * alpha_;
    Eigen::MatrixXd V = factor_.solve(Kdq);
    out.cov = Kqq - Kdq.transpose() * V;
    out.cov = 0.5 * (out.cov + out.cov.transpose()).eval();
    return out;
}

double GpPosterior::mean_at(const Point& x) const {
    if (data_.empty()) return 0.0;
    Eigen::VectorXd kx(static_cast<Eigen::Index>(data_.size()));
    for (Eigen::Index i = 0; i < kx.size(); ++i)
        kx(i) = kernel_eval(kernel_, data_.points[i], x);
    return kx.dot(alpha_);
}

double GpPosterior::var_at(const Point& x) const {
    const double kxx = kernel_eval(kernel_, x, x);
    if (data_.empty()) return kxx;
    Eigen::VectorXd kx(static_cast<Eigen::Index>(data_.size()));
    for (Eigen::Index i = 0; i < kx.size(); ++i)
        kx(i) = kernel_eval(kernel_, data_.points[i], x);
    const double v = kxx - kx.dot(factor_.solve(kx));
    return std::max(v, 0.0);
}

PosteriorMoments posterior_moments(const GpPosterior& gp, const std::vector<Point>& queries) {
    return gp.moments(queries);
}

Eigen::VectorXd sample_posterior_path(const GpPosterior& gp, const std::vector<Point>& grid,
                                      RngStream& rng) {
    PosteriorMoments m = gp.moments(grid);
    auto fact = cholesky_with_jitter(m.cov);
    Eigen::VectorXd z(m.mean.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = rng.normal();
    return m.mean + fact.llt.matrixL() * z;
}

std::size_t argmax_index(const Eigen::VectorXd& values) {
    if (values.size() == 0) throw std::invalid_argument("argmax: empty input");
    std::size_t best = 0;
    for (Eigen::Index i = 1; i < values.size(); ++i)
        if (values(i) > values(static_cast<Eigen::Index>(best))) best = static_cast<std::size_t>(i);
    return best;
}

Point argmax_on_grid(const Eigen::VectorXd& values, const std::vector<Point>& grid) {
    if (grid.empty() || static_cast<std::size_t>(values.size()) != grid.size())
        throw std::invalid_argument("argmax_on_grid: values/grid size mismatch");
    return grid[argmax_index(values)];
}

PathSampler::PathSampler(Kernel kernel, std::vector<Point> grid)
    : kernel_(kernel), grid_(std::move(grid)) {
    if (grid_.empty()) throw std::invalid_argument("PathSampler: empty grid");
    prior_gram_ = gram_matrix(kernel_, grid_);
    auto fact = cholesky_with_jitter(prior_gram_);
    prior_chol_ = fact.llt.matrixL();
    for (std::size_t i = 0; i < grid_.size(); ++i)
        index_by_coords_.emplace(grid_[i].coords, i);
}

std::size_t PathSampler::grid_index(const Point& x) const {
    auto it = index_by_coords_.find(x.coords);
    if (it == index_by_coords_.end())
        throw std::invalid_argument("PathSampler: point not on sampler grid");
    return it->second;
}

Eigen::VectorXd PathSampler::sample(const GpPosterior& gp, RngStream& rng) const {
    const Eigen::Index g = static_cast<Eigen::Index>(grid_.size());
    Eigen::VectorXd z(g);
    for (Eigen::Index i = 0; i < g; ++i) z(i) = rng.normal();
    Eigen::VectorXd u = prior_chol_.triangularView<Eigen::Lower>() * z;

    const Dataset& data = gp.data();
    const Eigen::Index n = static_cast<Eigen::Index>(data.size());
    if (n == 0) return u;

    const double noise_sd = std::sqrt(gp.noise_var());
    std::vector<std::size_t> idx(data.size());
    Eigen::VectorXd resid(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        idx[static_cast<std::size_t>(i)] = grid_index(data.points[static_cast<std::size_t>(i)]);
        const double eps = noise_sd * rng.normal();
        resid(i) = data.observations[static_cast<std::size_t>(i)] -
                   u(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)])) - eps;
    }
    Eigen::VectorXd c = gp.solve(resid);
    Eigen::MatrixXd Kgx(g, n);
    for (Eigen::Index i = 0; i < n; ++i)
        Kgx.col(i) = prior_gram_.col(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]));
    return u + Kgx * c;
}

GpPosterior PathSampler::make_posterior(double noise_var, const Dataset& data) const {
    const Eigen::Index n = static_cast<Eigen::Index>(data.size());
    Eigen::MatrixXd K(n, n);
    std::vector<std::size_t> idx(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) idx[i] = grid_index(data.points[i]);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            K(i, j) = prior_gram_(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)]),
                                  static_cast<Eigen::Index>(idx[static_cast<std::size_t>(j)]));
    return GpPosterior(kernel_, noise_var, data, std::move(K));
}

}  // namespace dts
