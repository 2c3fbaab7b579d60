#ifndef SWIPTCAP_STATS_HPP
#define SWIPTCAP_STATS_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace swiptcap::stats {

/// Noncentral chi-squared distribution.  This artifact only needs k = 1 and k = 2.
struct Ncx2 {
    int k = 2;       // degrees of freedom
    double s = 0.0;  // noncentrality, >= 0

    double mean() const { return k + s; }
    double variance() const { return 2.0 * (k + 2.0 * s); }
    double skewness() const;
};

/// Log-domain density.  Valid for arbitrarily large s (Bessel asymptotics);
/// the k = 1 density diverges at x = 0.
double ncx2_log_pdf(double x, const Ncx2& d);
double ncx2_pdf(double x, const Ncx2& d);

/// CDF via the Poisson mixture of central chi-squared CDFs, summed outward
/// from the Poisson mode; terms below 1e-18 of the running sum are dropped.
/// For s > 1e4 the far tails (|x - mean| > 8 sd) fall back to the matched
/// normal, whose error there is bounded by the vanishing skewness.
double ncx2_cdf(double x, const Ncx2& d);

/// Matched normal: (mean, variance) = (k + s, 2(k + 2s)).
std::pair<double, double> lemma1_normal(const Ncx2& d);

inline double ncx2_skewness(const Ncx2& d) { return d.skewness(); }

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
    bool converged = false;
};

/// integral over x >= 0 of |F_ncx2(x) - F_normal(x)|^2, the matched normal's
/// CDF discrepancy.  Upper limit mean + 12 sd; refined until the estimate is
/// stable to 1e-9 absolute, else converged = false.
QuadResult cdf_l2_distance(const Ncx2& d);

enum class InputKind { gamma, rayleigh, uniform, discrete };

/// Nonnegative input law for the squared amplitude u, with fixed mean.
/// gamma(alpha):  p(u) = alpha^alpha / (Gamma(alpha) m^alpha) u^(alpha-1) exp(-alpha u / m)
/// rayleigh:      scale sigma = m sqrt(2/pi) on u itself
/// uniform:       on [0, 2m], the zero-anchored uniform with mean m
/// discrete:      weighted atoms (weights sum to 1 within 1e-12)
class InputLaw {
  public:
    static InputLaw gamma(double alpha, double mean);
    static InputLaw rayleigh(double mean);
    static InputLaw uniform(double mean);
    static InputLaw discrete(std::vector<double> points, std::vector<double> weights);

    InputKind kind() const { return kind_; }
    double mean() const { return mean_; }
    /// Gamma shape parameter; throws unless kind() == gamma.
    double alpha() const;

    /// Density at u >= 0 (u < 0 rejected).  Not defined for discrete laws.
    double pdf(double u) const;
    double cdf(double u) const;

    const std::vector<double>& points() const;
    const std::vector<double>& weights() const;

    /// i.i.d. samples; deterministic for a given generator state.
    void sample(std::size_t count, std::mt19937_64& rng, std::vector<double>& out) const;

  private:
    InputLaw() = default;
    InputKind kind_ = InputKind::gamma;
    double mean_ = 1.0;
    double alpha_ = 1.0;
    std::vector<double> points_, weights_;
};

inline double input_pdf(double u, const InputLaw& law) { return law.pdf(u); }

/// Convenience sampler owning its seeded generator.
std::vector<double> input_sample(const InputLaw& law, std::size_t count, std::uint64_t seed);

namespace detail {
/// ln I0(z), z >= 0; series/std below z = 25, uniform asymptotic above.
double log_bessel_i0(double z);
/// ln I_{-1/2}(z) = 0.5 ln(2 / (pi z)) + ln cosh z, z > 0.
double log_bessel_i_m_half(double z);
/// Regularized incomplete gamma P(a, x) and Q(a, x) = 1 - P(a, x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);
/// Standard normal CDF.
double normal_cdf(double z);
}  // namespace detail

}  // namespace swiptcap::stats

#endif
