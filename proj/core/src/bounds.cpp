#include "dts/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace dts {

double bound_c1() { return std::sqrt(2.0) * std::pow(M_PI, 1.5) / 12.0; }

double bound_c2(double noise_var) {
    if (noise_var <= 0.0) throw std::invalid_argument("bound_c2: noise_var must be > 0");
    return 2.0 / std::log1p(1.0 / noise_var);
}

double BoundInputs::psi_at(std::size_t samples) const {
    if (psi.empty()) throw std::out_of_range("BoundInputs: psi table empty");
    if (samples < 1) throw std::out_of_range("BoundInputs: psi index must be >= 1");
    return psi[std::min(samples, psi.size()) - 1];
}

double BoundInputs::xi_at(std::size_t batch) const {
    if (xi.empty()) throw std::out_of_range("BoundInputs: xi table empty");
    if (batch < 1 || batch > xi.size())
        throw std::out_of_range("BoundInputs: xi index out of table range");
    return xi[batch - 1];
}

double beta_t(int t, double group, double domain_size) {
    return 2.0 * std::log(static_cast<double>(t) * t * group * domain_size);
}

double bound_avg_regret(const BoundInputs& in) {
    if (in.clique_sizes.empty())
        throw std::invalid_argument("bound_avg_regret: no clique sizes");
    const double c1 = bound_c1();
    const double c2 = bound_c2(in.noise_var);
    const double beta = beta_t(in.t, static_cast<double>(in.m), in.domain_size);
    double sum = 0.0;
    for (int vk : in.clique_sizes) {
        if (vk < 1) throw std::invalid_argument("bound_avg_regret: clique size must be >= 1");
        const double tvk = static_cast<double>(in.t) * vk;
        const double term =
            c1 / tvk + std::sqrt(c2 * in.xi_at(static_cast<std::size_t>(vk)) * beta *
                                 in.psi_at(static_cast<std::size_t>(in.t) * vk) / tvk);
        sum += vk * term;
    }
    return sum / in.m;
}

double bound_avg_regret_clique_cover(const CommGraph& g, const BoundInputs& in) {
    const auto cover = greedy_clique_cover(g);
    const auto omega = max_clique(g).size();
    const double n = static_cast<double>(cover.parts.size());
    const double c1 = bound_c1();
    const double c2 = bound_c2(in.noise_var);
    const double beta = beta_t(in.t, static_cast<double>(in.m), in.domain_size);
    const double mt = static_cast<double>(in.m) * in.t;
    return c1 * n / mt +
           std::sqrt(n) *
               std::sqrt(c2 * in.xi_at(omega) * beta *
                         in.psi_at(static_cast<std::size_t>(in.t) * omega)) /
               std::sqrt(mt);
}

double bound_simple_regret(const CommGraph& g, const BoundInputs& in) {
    const auto vmax = max_clique(g).size();
    const double c1 = bound_c1();
    const double c2 = bound_c2(in.noise_var);
    const double beta = beta_t(in.t, static_cast<double>(vmax), in.domain_size);
    const double tv = static_cast<double>(in.t) * vmax;
    return c1 / tv +
           std::sqrt(c2 * in.xi_at(vmax) * beta *
                     in.psi_at(static_cast<std::size_t>(in.t) * vmax) / tv);
}

std::vector<double> psi_growth_reference(KernelFamily family, int d,
                                         const std::vector<double>& t_values, double matern_nu) {
    std::vector<double> out;
    out.reserve(t_values.size());
    for (double tau : t_values) {
        const double lt = std::log(tau);
        switch (family) {
            case KernelFamily::Linear:
                out.push_back(d * lt);
                break;
            case KernelFamily::SquaredExponential:
                out.push_back(std::pow(lt, d + 1));
                break;
            case KernelFamily::Matern52: {
                if (matern_nu <= 1.0)
                    throw std::invalid_argument("psi_growth_reference: Matern requires nu > 1");
                const double dd1 = static_cast<double>(d) * (d + 1);
                const double expo = dd1 / (2.0 * matern_nu + dd1);
                out.push_back(std::pow(tau, expo) * lt);
                break;
            }
        }
    }
    return out;
}

}  // namespace dts
