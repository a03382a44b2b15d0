#pragma once

#include <vector>

#include "dts/graph.hpp"
#include "dts/kernel.hpp"

namespace dts {

// Constants in the regret-bound formulas.
double bound_c1();                       // sqrt(2) pi^{3/2} / 12
double bound_c2(double noise_var);       // 2 / log(1 + 1/noise_var)

// Inputs for evaluating the regret bounds. psi[s-1] estimates the maximum
// information gain from s samples (clamped to the table length, since gain
// saturates on a finite grid); xi[n-1] estimates xi_n.
struct BoundInputs {
    int t = 1;
    int m = 1;
    double domain_size = 1.0;  // |X|; grid cardinality in practice
    double noise_var = 1.0;
    std::vector<int> clique_sizes;
    std::vector<double> psi;
    std::vector<double> xi;

    double psi_at(std::size_t samples) const;
    double xi_at(std::size_t batch) const;
};

// beta_t = 2 log(t^2 * group * |X|); group = M for average regret,
// |V_s| for simple regret.
double beta_t(int t, double group, double domain_size);

// Average-regret bound over the given disjoint clique decomposition:
// (1/M) sum_k |V_k| ( C1/(t|V_k|) + sqrt(C2 xi_{|V_k|} beta_t Psi_{t|V_k|} / (t|V_k|)) ).
double bound_avg_regret(const BoundInputs& inputs);

// Average-regret bound in clique-cover form, with greedy cover size in place
// of theta(G) and the exact max-clique size as omega:
// C1 n/(M t) + sqrt(n) sqrt(C2 xi_w beta_t Psi_{tw}) / sqrt(M t).
double bound_avg_regret_clique_cover(const CommGraph& g, const BoundInputs& inputs);

// Simple-regret bound using the largest complete subgraph of g.
double bound_simple_regret(const CommGraph& g, const BoundInputs& inputs);

// Asymptotic-order shapes of Psi growth for reference plots only
// (unit constant; never used inside bound arithmetic).
std::vector<double> psi_growth_reference(KernelFamily family, int d,
                                         const std::vector<double>& t_values,
                                         double matern_nu = 2.5);

}  // namespace dts
