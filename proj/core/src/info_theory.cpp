#include "dts/info_theory.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dts {

std::string to_string(InfoMethod m) {
    switch (m) {
        case InfoMethod::ExactLogDet: return "exact_logdet";
        case InfoMethod::ChainRule: return "chain_rule";
        case InfoMethod::GreedyLower: return "greedy_lower";
    }
    return "?";
}

double information_gain_logdet(const Kernel& kernel, double noise_var,
                               const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("information_gain: empty point set");
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd A = gram_matrix(kernel, points) / noise_var;
    A.diagonal().array() += 1.0;
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("information_gain: I + K/noise_var not positive definite");
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) logdet += std::log(llt.matrixLLT()(i, i));
    return logdet;  // (1/2) * 2 * sum log diag(L)
}

double information_gain_chain(const Kernel& kernel, double noise_var,
                              const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("information_gain: empty point set");
    double gain = 0.0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        Dataset prefix;
        for (std::size_t l = 0; l < j; ++l) prefix.add(points[l], 0.0);
        GpPosterior gp(kernel, noise_var, std::move(prefix));
        gain += 0.5 * std::log(1.0 + gp.var_at(points[j]) / noise_var);
    }
    return gain;
}

double information_gain(const Kernel& kernel, double noise_var,
                        const std::vector<Point>& points) {
    const double a = information_gain_logdet(kernel, noise_var, points);
    const double b = information_gain_chain(kernel, noise_var, points);
    if (std::abs(a - b) > std::max(1e-6, 1e-9 * std::abs(a)))
        throw std::runtime_error("information_gain: log-det and chain-rule routes disagree");
    return a;
}

double conditional_information(const Kernel& kernel, double noise_var,
                               const std::vector<Point>& A, const std::vector<Point>& B) {
    if (B.empty()) return 0.0;
    std::vector<Point> joint = A;
    joint.insert(joint.end(), B.begin(), B.end());
    const double joint_gain = information_gain_logdet(kernel, noise_var, joint);
    const double base_gain = A.empty() ? 0.0 : information_gain_logdet(kernel, noise_var, A);
    return joint_gain - base_gain;
}

VarianceRatioCheck conditional_variance_ratio_check(const Kernel& kernel, double noise_var,
                                                   const std::vector<Point>& A,
                                                   const std::vector<Point>& B, const Point& x) {
    VarianceRatioCheck out;
    if (B.empty()) return out;

    Dataset da;
    for (const auto& p : A) da.add(p, 0.0);
    GpPosterior gp_a(kernel, noise_var, std::move(da));

    Dataset dab;
    for (const auto& p : A) dab.add(p, 0.0);
    for (const auto& p : B) dab.add(p, 0.0);
    GpPosterior gp_ab(kernel, noise_var, std::move(dab));

    const double var_ab = gp_ab.var_at(x);
    if (var_ab < 1e-12)
        throw std::runtime_error("conditional_variance_ratio_check: degenerate variance at x");
    out.ratio = std::sqrt(gp_a.var_at(x) / var_ab);
    out.exp_info = std::exp(conditional_information(kernel, noise_var, A, B));
    return out;
}

namespace {

// Predictive variances var_{j-1}(x_j) in sequence order, from the Cholesky
// diagonal of K + noise_var I: L_jj^2 = var_{j-1}(x_j) + noise_var.
std::vector<double> chain_variances(const Kernel& kernel, double noise_var,
                                    const std::vector<Point>& points) {
    const Eigen::Index n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd K = gram_matrix(kernel, points);
    K.diagonal().array() += noise_var;
    Eigen::LLT<Eigen::MatrixXd> llt(K);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("chain_variances: factorization failed");
    std::vector<double> out(points.size());
    for (Eigen::Index j = 0; j < n; ++j) {
        const double d = llt.matrixLLT()(j, j);
        out[static_cast<std::size_t>(j)] = std::max(d * d - noise_var, 0.0);
    }
    return out;
}

}  // namespace

std::vector<double> estimate_mig_table(const Kernel& kernel, double noise_var,
                                       const std::vector<Point>& grid, int t_max) {
    if (t_max <= 0) throw std::invalid_argument("estimate_mig: t must be >= 1");
    if (static_cast<std::size_t>(t_max) > grid.size())
        throw std::invalid_argument("estimate_mig: t exceeds grid size");
    const std::size_t g = grid.size();
    std::vector<double> var(g);
    for (std::size_t i = 0; i < g; ++i) var[i] = kernel_eval(kernel, grid[i], grid[i]);
    // Distinct points only: noisy re-queries keep residual variance positive,
    // but the table is indexed by distinct grid points (and clamped past its
    // end), so each point is selected at most once.
    std::vector<bool> selected(g, false);

    // gammas[j][x] from the incremental rank-1 variance updates.
    std::vector<std::vector<double>> gammas;
    gammas.reserve(static_cast<std::size_t>(t_max));
    std::vector<double> table;
    table.reserve(static_cast<std::size_t>(t_max));
    double gain = 0.0;
    for (int step = 0; step < t_max; ++step) {
        std::size_t sel = g;
        for (std::size_t i = 0; i < g; ++i)
            if (!selected[i] && (sel == g || var[i] > var[sel])) sel = i;
        selected[sel] = true;
        const double v = std::max(var[sel], 0.0);
        gain += 0.5 * std::log(1.0 + v / noise_var);
        table.push_back(gain);

        std::vector<double> row(g);
        const double denom = std::sqrt(v + noise_var);
        for (std::size_t x = 0; x < g; ++x) {
            double cov = kernel_eval(kernel, grid[sel], grid[x]);
            for (const auto& gm : gammas) cov -= gm[sel] * gm[x];
            row[x] = cov / denom;
        }
        for (std::size_t x = 0; x < g; ++x) var[x] -= row[x] * row[x];
        gammas.push_back(std::move(row));
    }
    return table;
}

InfoEstimate estimate_mig(const Kernel& kernel, double noise_var, const std::vector<Point>& grid,
                          int t) {
    auto table = estimate_mig_table(kernel, noise_var, grid, t);
    return InfoEstimate{table.back(), InfoMethod::GreedyLower, static_cast<std::size_t>(t)};
}

std::vector<double> estimate_xi_table(const Kernel& kernel, double noise_var,
                                      const std::vector<Point>& grid, int n_max, int history_size,
                                      int trials, RngStream& rng) {
    if (n_max < 1) throw std::invalid_argument("estimate_xi: n must be >= 1");
    if (static_cast<std::size_t>(n_max) > grid.size())
        throw std::invalid_argument("estimate_xi: n exceeds grid size");
    if (history_size < 0 || trials < 1)
        throw std::invalid_argument("estimate_xi: bad history_size/trials");
    if (static_cast<std::size_t>(history_size + n_max - 1) > grid.size())
        throw std::invalid_argument("estimate_xi: history_size + n - 1 exceeds grid size");

    std::vector<double> max_info(static_cast<std::size_t>(n_max), 0.0);  // index a: |A| = a
    const int batch = n_max - 1;
    if (batch > 0) {
        for (int trial = 0; trial < trials; ++trial) {
            // Distinct draw of history_size + batch grid indices.
            std::vector<std::size_t> picks;
            picks.reserve(static_cast<std::size_t>(history_size + batch));
            std::vector<bool> used(grid.size(), false);
            while (picks.size() < static_cast<std::size_t>(history_size + batch)) {
                const std::size_t i = rng.uniform_index(grid.size());
                if (!used[i]) {
                    used[i] = true;
                    picks.push_back(i);
                }
            }
            std::vector<Point> seq;
            seq.reserve(picks.size());
            for (std::size_t i : picks) seq.push_back(grid[i]);
            const auto vars = chain_variances(kernel, noise_var, seq);
            double info = 0.0;
            for (int a = 1; a <= batch; ++a) {
                info += 0.5 * std::log(1.0 + vars[static_cast<std::size_t>(history_size + a - 1)] /
                                                 noise_var);
                max_info[static_cast<std::size_t>(a)] =
                    std::max(max_info[static_cast<std::size_t>(a)], info);
            }
        }
    }
    std::vector<double> xi(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        xi[static_cast<std::size_t>(n - 1)] = std::exp(2.0 * max_info[static_cast<std::size_t>(n - 1)]);
    return xi;
}

double estimate_xi(const Kernel& kernel, double noise_var, const std::vector<Point>& grid, int n,
                   int history_size, int trials, RngStream& rng) {
    return estimate_xi_table(kernel, noise_var, grid, n, history_size, trials, rng).back();
}

}  // namespace dts
