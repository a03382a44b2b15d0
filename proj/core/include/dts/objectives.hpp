#pragma once

#include <string>
#include <vector>

#include "dts/kernel.hpp"
#include "dts/rng.hpp"

namespace dts {

// A maximization test objective: the canonical test function negated, with an
// optional affine rescale (value -> (value - offset) / scale). Agents observe
// noisy evaluations; regret is computed from noiseless values.
struct Objective {
    std::string name;
    std::vector<double> lower;  // per-dimension domain bounds
    std::vector<double> upper;
    double noise_var = 0.01;
    double offset = 0.0;  // subtracted from the negated canonical value
    double scale = 1.0;   // divides the shifted value
    double true_opt_value = 0.0;
    Point true_opt_point;

    std::size_t dim() const { return lower.size(); }
};

// Negated Rosenbrock on [-2,2]^2; maximum 0 at (1,1).
Objective make_rosenbrock(double noise_var = 0.01);
// Negated Ackley on [-5,5]^2; maximum 0 at (0,0).
Objective make_ackley(double noise_var = 0.01);
Objective make_objective(const std::string& name, double noise_var = 0.01);

double eval_noiseless(const Objective& obj, const Point& x);
double eval_noisy(const Objective& obj, const Point& x, RngStream& rng);

// Uniform tensor grid over the domain bounds, row-major order.
std::vector<Point> make_grid(const Objective& obj, int points_per_dim);

// Affinely rescaled copy: grid max -> 0, grid range -> 1, with
// true_opt_value/true_opt_point taken from the grid (so regret >= 0 exactly).
Objective normalized_on_grid(const Objective& obj, const std::vector<Point>& grid);

}  // namespace dts
