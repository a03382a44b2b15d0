#include "dts/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace dts {

KernelFamily kernel_family_from_string(const std::string& name) {
    if (name == "matern52" || name == "matern") return KernelFamily::Matern52;
    if (name == "se" || name == "squared_exponential" || name == "rbf")
        return KernelFamily::SquaredExponential;
    if (name == "linear") return KernelFamily::Linear;
    throw std::invalid_argument("unknown kernel family: " + name);
}

std::string to_string(KernelFamily family) {
    switch (family) {
        case KernelFamily::SquaredExponential: return "squared_exponential";
        case KernelFamily::Matern52: return "matern52";
        case KernelFamily::Linear: return "linear";
    }
    return "?";
}

double kernel_eval(const Kernel& k, const Point& a, const Point& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("kernel_eval: dimension mismatch");
    switch (k.family) {
        case KernelFamily::Linear: {
            double dot = 0.0;
            for (std::size_t i = 0; i < a.dim(); ++i) dot += a[i] * b[i];
            return k.output_scale * dot;
        }
        case KernelFamily::SquaredExponential: {
            double r2 = 0.0;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                const double d = a[i] - b[i];
                r2 += d * d;
            }
            return k.output_scale * std::exp(-0.5 * r2 / (k.lengthscale * k.lengthscale));
        }
        case KernelFamily::Matern52: {
            double r2 = 0.0;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                const double d = a[i] - b[i];
                r2 += d * d;
            }
            const double s = std::sqrt(5.0 * r2) / k.lengthscale;
            return k.output_scale * (1.0 + s + s * s / 3.0) * std::exp(-s);
        }
    }
    throw std::logic_error("kernel_eval: unreachable");
}

Eigen::MatrixXd gram_matrix(const Kernel& k, const std::vector<Point>& pts) {
    const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXd K(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double v = kernel_eval(k, pts[i], pts[j]);
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    return K;
}

Eigen::MatrixXd cross_gram(const Kernel& k, const std::vector<Point>& a,
                           const std::vector<Point>& b) {
    Eigen::MatrixXd K(a.size(), b.size());
    for (Eigen::Index i = 0; i < K.rows(); ++i)
        for (Eigen::Index j = 0; j < K.cols(); ++j)
            K(i, j) = kernel_eval(k, a[i], b[j]);
    return K;
}

}  // namespace dts
