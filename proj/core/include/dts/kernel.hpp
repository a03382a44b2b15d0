#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace dts {

// A query location in the search domain.
struct Point {
    std::vector<double> coords;

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }

    bool operator==(const Point&) const = default;
};

enum class KernelFamily { SquaredExponential, Matern52, Linear };

KernelFamily kernel_family_from_string(const std::string& name);
std::string to_string(KernelFamily family);

// Covariance function family plus hyperparameters. output_scale <= 1 keeps
// k(x,x) <= 1, which the regret-bound formulas require.
struct Kernel {
    KernelFamily family = KernelFamily::Matern52;
    double lengthscale = 1.0;
    double output_scale = 1.0;
};

double kernel_eval(const Kernel& k, const Point& a, const Point& b);

// Gram matrix K[i][j] = k(pts[i], pts[j]).
Eigen::MatrixXd gram_matrix(const Kernel& k, const std::vector<Point>& pts);

// Cross-covariance, rows over `a`, columns over `b`.
Eigen::MatrixXd cross_gram(const Kernel& k, const std::vector<Point>& a,
                           const std::vector<Point>& b);

}  // namespace dts
