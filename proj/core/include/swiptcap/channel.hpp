#ifndef SWIPTCAP_CHANNEL_HPP
#define SWIPTCAP_CHANNEL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "swiptcap/phys.hpp"

namespace swiptcap::channel {

/// Channel constants in the normalized inner domain.  The rectified output is
///   y = a2 H + a4 H^2 + n_rec,
/// where H = |sqrt(u) + n~_th|^2 / (G_LNA P_th / 2) is a unit-normalized
/// noncentral chi-squared variable with 2 dof and noncentrality s(u), and
///   a2 = k2 G_LNA P_th / 2,   a4 = k4 (G_LNA P_th / 2)^2.
/// half_noise == 0 selects the thermally noiseless limit (H degenerates),
/// kept only for oracle tests; the transition laws then reject evaluation.
struct ChannelConsts {
    double a2 = 0.0;
    double a4 = 0.0;           // exactly 0 in second-order-only mode
    double p_rec = 0.0;        // rectifier noise power [W]
    double half_noise = 0.0;   // G_LNA * P_th / 2 [W]
    double k2 = 0.0, k4 = 0.0; // unscaled coefficients (noiseless limit, reporting)

    /// Noncentrality of the inner chi-squared: s(u) = 2u / (G_LNA P_th).
    double s_of_u(double u) const;

    static ChannelConsts from_params(const phys::SystemParams& p,
                                     phys::DiodeOrder order = phys::DiodeOrder::fourth);
    void validate() const;
};

struct TransitionGaussian {
    double mu = 0.0;   // conditional mean of y given u [W]
    double var = 0.0;  // conditional variance [W^2]
};

/// Matched-normal moments of the inner variable: (mu_u, sigma_u^2) = (2 + s, 4 + 4 s).
std::pair<double, double> inner_moments(double u, const ChannelConsts& c);

/// Noncentrality of the completed square, (2 a4 mu_u + a2)^2 / (4 a4^2 sigma_u^2).
/// Requires a4 > 0 (the second-order path never calls this).
double outer_noncentrality(double u, const ChannelConsts& c);

/// Gaussian transition-law moments.  Evaluated through the direct moment
/// forms mu = a2 mu_u + a4 (mu_u^2 + sigma_u^2) and
/// var = sigma_u^2 (a2 + 2 a4 mu_u)^2 + 2 a4^2 sigma_u^4 + P_rec, which are
/// algebraically identical to the completed-square route but stable at small u.
TransitionGaussian transition_gaussian(double u, const ChannelConsts& c);

/// Gaussian-approximate conditional density of y given u.
double transition_pdf(double y, double u, const ChannelConsts& c);

/// Exact conditional mean/variance of y given u from the noncentral
/// chi-squared moments (no normal approximation).
std::pair<double, double> exact_conditional_moments(double u, const ChannelConsts& c);

/// Density of z = a2 H + a4 H^2 by change of variables (no rectifier noise).
/// Integrable sqrt-singularity at z = 0 when a2 == 0.
double z_pdf_exact(double z, double u, const ChannelConsts& c);

struct ExactDensity {
    double value = 0.0;
    double rel_err = 0.0;   // Richardson estimate of the convolution error
    bool converged = false;
};

/// Exact-oracle conditional density: the z law convolved numerically with
/// N(0, P_rec) (trapezoid with one Richardson halving; grid resolves both the
/// z spread and sqrt(P_rec)).  With p_rec == 0 this is z_pdf_exact, exact.
ExactDensity transition_pdf_exact(double y, double u, const ChannelConsts& c,
                                  double rel_tol = 1e-6);

/// Draws of y for fixed u: H from two unit normals around sqrt(s), plus the
/// rectifier noise.  Deterministic for a given seed.
std::vector<double> monte_carlo_samples(double u, const ChannelConsts& c,
                                        std::size_t count, std::uint64_t seed);

namespace detail {
/// Per-row exact-density tabulation used by the oracle transition matrix:
/// returns cell masses of the exact law over consecutive y-cell edges.
std::vector<double> exact_cell_masses(double u, const ChannelConsts& c,
                                      const double* y_edges, std::size_t n_cells);
}  // namespace detail

}  // namespace swiptcap::channel

#endif
