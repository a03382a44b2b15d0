#include "dts/objectives.hpp"

#include <cmath>
#include <stdexcept>

namespace dts {

namespace {

double canonical_rosenbrock(const Point& p) {
    const double x = p[0], y = p[1];
    return (1.0 - x) * (1.0 - x) + 100.0 * (y - x * x) * (y - x * x);
}

double canonical_ackley(const Point& p) {
    const double x = p[0], y = p[1];
    return -20.0 * std::exp(-0.2 * std::sqrt((x * x + y * y) / 2.0)) -
           std::exp(0.5 * (std::cos(2.0 * M_PI * x) + std::cos(2.0 * M_PI * y))) + 20.0 +
           std::exp(1.0);
}

void check_in_domain(const Objective& obj, const Point& x) {
    if (x.dim() != obj.dim())
        throw std::invalid_argument("objective: dimension mismatch for " + obj.name);
    for (std::size_t i = 0; i < obj.dim(); ++i)
        if (x[i] < obj.lower[i] || x[i] > obj.upper[i])
            throw std::domain_error("objective: point outside domain of " + obj.name);
}

}  // namespace

Objective make_rosenbrock(double noise_var) {
    Objective obj;
    obj.name = "rosenbrock";
    obj.lower = {-2.0, -2.0};
    obj.upper = {2.0, 2.0};
    obj.noise_var = noise_var;
    obj.true_opt_value = 0.0;
    obj.true_opt_point = Point{{1.0, 1.0}};
    return obj;
}

Objective make_ackley(double noise_var) {
    Objective obj;
    obj.name = "ackley";
    obj.lower = {-5.0, -5.0};
    obj.upper = {5.0, 5.0};
    obj.noise_var = noise_var;
    obj.true_opt_value = 0.0;
    obj.true_opt_point = Point{{0.0, 0.0}};
    return obj;
}

Objective make_objective(const std::string& name, double noise_var) {
    if (name == "rosenbrock") return make_rosenbrock(noise_var);
    if (name == "ackley") return make_ackley(noise_var);
    throw std::invalid_argument("unknown objective: " + name);
}

double eval_noiseless(const Objective& obj, const Point& x) {
    check_in_domain(obj, x);
    double raw;
    if (obj.name == "rosenbrock")
        raw = -canonical_rosenbrock(x);
    else if (obj.name == "ackley")
        raw = -canonical_ackley(x);
    else
        throw std::invalid_argument("unknown objective: " + obj.name);
    return (raw - obj.offset) / obj.scale;
}

double eval_noisy(const Objective& obj, const Point& x, RngStream& rng) {
    return eval_noiseless(obj, x) + rng.normal(0.0, std::sqrt(obj.noise_var));
}

std::vector<Point> make_grid(const Objective& obj, int points_per_dim) {
    if (points_per_dim < 2) throw std::invalid_argument("make_grid: points_per_dim must be >= 2");
    const std::size_t d = obj.dim();
    std::vector<Point> grid;
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= static_cast<std::size_t>(points_per_dim);
    grid.reserve(total);
    std::vector<int> idx(d, 0);
    for (std::size_t n = 0; n < total; ++n) {
        Point p;
        p.coords.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            const double frac = static_cast<double>(idx[i]) / (points_per_dim - 1);
            p.coords[i] = obj.lower[i] + frac * (obj.upper[i] - obj.lower[i]);
        }
        grid.push_back(std::move(p));
        for (std::size_t i = d; i-- > 0;) {
            if (++idx[i] < points_per_dim) break;
            idx[i] = 0;
        }
    }
    return grid;
}

Objective normalized_on_grid(const Objective& obj, const std::vector<Point>& grid) {
    if (grid.empty()) throw std::invalid_argument("normalized_on_grid: empty grid");
    double gmax = -HUGE_VAL, gmin = HUGE_VAL;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = eval_noiseless(obj, grid[i]);
        if (v > gmax) {
            gmax = v;
            arg = i;
        }
        gmin = std::min(gmin, v);
    }
    const double range = gmax > gmin ? gmax - gmin : 1.0;
    Objective out = obj;
    // Compose with the existing affine map so eval stays a single raw-value rescale.
    out.offset = obj.offset + obj.scale * gmax;
    out.scale = obj.scale * range;
    out.true_opt_value = 0.0;
    out.true_opt_point = grid[arg];
    return out;
}

}  // namespace dts
