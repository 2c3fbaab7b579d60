#include "swiptcap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swiptcap::stats {

namespace detail {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double log_bessel_i0(double z) {
    if (z < 0.0) throw std::invalid_argument("log_bessel_i0: z must be >= 0");
    if (z == 0.0) return 0.0;
    if (z < 25.0) return std::log(std::cyl_bessel_i(0.0, z));
    // I0(z) ~ e^z / sqrt(2 pi z) * (1 + 1/(8z) + 9/(128 z^2) + 225/(3072 z^3) + 11025/(98304 z^4))
    const double iz = 1.0 / z;
    const double corr = iz * (0.125 + iz * (9.0 / 128.0 + iz * (225.0 / 3072.0 + iz * (11025.0 / 98304.0))));
    return z - 0.5 * std::log(2.0 * M_PI * z) + std::log1p(corr);
}

double log_bessel_i_m_half(double z) {
    if (z <= 0.0) throw std::invalid_argument("log_bessel_i_m_half: z must be > 0");
    // I_{-1/2}(z) = sqrt(2/(pi z)) cosh z
    return 0.5 * std::log(2.0 / (M_PI * z)) + z + std::log1p(std::exp(-2.0 * z)) - std::log(2.0);
}

namespace {

// lower incomplete gamma by series, x < a + 1
double gamma_p_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-16)
            return sum * std::exp(a * std::log(x) - x - std::lgamma(a));
    }
    return sum * std::exp(a * std::log(x) - x - std::lgamma(a));
}

// upper incomplete gamma by Lentz continued fraction, x >= a + 1
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(a * std::log(x) - x - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_p: a must be > 0");
    if (x < 0.0) throw std::invalid_argument("gamma_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_q: a must be > 0");
    if (x < 0.0) throw std::invalid_argument("gamma_q: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

}  // namespace detail

double Ncx2::skewness() const {
    const double kk = static_cast<double>(k);
    return std::pow(2.0, 1.5) * (kk + 3.0 * s) / std::pow(kk + 2.0 * s, 1.5);
}

static void check_dist(const Ncx2& d) {
    if (d.k != 1 && d.k != 2) throw std::invalid_argument("Ncx2: only k = 1, 2 supported");
    if (!(d.s >= 0.0)) throw std::invalid_argument("Ncx2: s must be >= 0");
}

double ncx2_log_pdf(double x, const Ncx2& d) {
    check_dist(d);
    if (x < 0.0) return -std::numeric_limits<double>::infinity();
    const double ln2 = std::log(2.0);
    if (d.s == 0.0) {
        // central chi-squared
        if (d.k == 2) return -ln2 - 0.5 * x;
        if (x == 0.0) return std::numeric_limits<double>::infinity();
        return -0.5 * std::log(2.0 * M_PI * x) - 0.5 * x;
    }
    if (x == 0.0) {
        if (d.k == 2) return -ln2 - 0.5 * d.s;  // I0(0) = 1
        return std::numeric_limits<double>::infinity();
    }
    const double z = std::sqrt(d.s * x);
    if (d.k == 2) return -ln2 - 0.5 * (x + d.s) + detail::log_bessel_i0(z);
    // k = 1: (x/s)^(-1/4) prefactor with I_{-1/2}
    return -ln2 - 0.5 * (x + d.s) - 0.25 * std::log(x / d.s) + detail::log_bessel_i_m_half(z);
}

double ncx2_pdf(double x, const Ncx2& d) { return std::exp(ncx2_log_pdf(x, d)); }

double ncx2_cdf(double x, const Ncx2& d) {
    check_dist(d);
    if (x < 0.0) throw std::invalid_argument("ncx2_cdf: x must be >= 0");
    if (x == 0.0) return 0.0;
    const double half_k = 0.5 * d.k;
    if (d.s == 0.0) return detail::gamma_p(half_k, 0.5 * x);

    if (d.s > 1e4) {
        // far tails: matched normal, error bounded by the vanishing skewness
        const double sd = std::sqrt(d.variance());
        const double zz = (x - d.mean()) / sd;
        if (std::abs(zz) > 8.0)
            return std::clamp(detail::normal_cdf(zz), 0.0, 1.0);
    }

    // Poisson(s/2) mixture of chi2_{k+2j} CDFs, summed outward from the mode.
    const double hl = 0.5 * d.s;  // Poisson rate
    const double hx = 0.5 * x;
    const long j0 = std::max(0L, static_cast<long>(hl));
    const double lw0 = j0 * std::log(hl) - hl - std::lgamma(j0 + 1.0);
    const double w0 = std::exp(lw0);
    const double g0 = detail::gamma_p(j0 + half_k, hx);
    // t_j = hx^(j+k/2) e^(-hx) / Gamma(j+k/2+1), the P(a,x) -> P(a+1,x) decrement
    const double lt0 = (j0 + half_k) * std::log(hx) - hx - std::lgamma(j0 + half_k + 1.0);
    const double t0 = std::exp(lt0);

    double sum = w0 * g0;
    double wsum = w0;
    // upward from the mode
    {
        double w = w0, g = g0, t = t0;
        for (long j = j0; ; ++j) {
            w *= hl / static_cast<double>(j + 1);
            g -= t;
            if (g < 0.0) g = 0.0;
            t *= hx / (static_cast<double>(j + 1) + half_k);
            sum += w * g;
            wsum += w;
            if (w <= 1e-18 * wsum && j > j0 + 2) break;
            if (j - j0 > 100000000L) break;
        }
    }
    // downward from the mode
    if (j0 > 0) {
        double w = w0, g = g0, t = t0;
        for (long j = j0; j > 0; --j) {
            w *= static_cast<double>(j) / hl;
            t *= (static_cast<double>(j) - 1.0 + half_k + 1.0) / hx;
            g += t;
            if (g > 1.0) g = 1.0;
            sum += w * g;
            wsum += w;
            if (w <= 1e-18 * wsum && j < j0 - 2) break;
        }
    }
    return std::clamp(sum, 0.0, 1.0);
}

std::pair<double, double> lemma1_normal(const Ncx2& d) {
    check_dist(d);
    return {d.mean(), d.variance()};
}

QuadResult cdf_l2_distance(const Ncx2& d) {
    check_dist(d);
    const double mean = d.mean();
    const double sd = std::sqrt(d.variance());
    const double upper = mean + 12.0 * sd;

    auto f = [&](double x) {
        const double diff = ncx2_cdf(x, d) - detail::normal_cdf((x - mean) / sd);
        return diff * diff;
    };

    // trapezoid doubling with Simpson extrapolation
    QuadResult r;
    double trap = 0.5 * upper * (f(0.0) + f(upper));
    double simpson_prev = trap;
    std::size_t n = 1;
    for (int level = 1; level <= 22; ++level) {
        const double h = upper / static_cast<double>(2 * n);
        double add = 0.0;
        for (std::size_t i = 0; i < n; ++i) add += f((2.0 * i + 1.0) * h);
        const double trap2 = 0.5 * trap + h * add;
        const double simpson = (4.0 * trap2 - trap) / 3.0;
        const double err = std::abs(simpson - simpson_prev);
        if (level >= 6 && err < 1e-9) {
            r.value = simpson;
            r.abs_err = err;
            r.converged = true;
            return r;
        }
        simpson_prev = simpson;
        trap = trap2;
        n *= 2;
    }
    r.value = simpson_prev;
    r.abs_err = std::numeric_limits<double>::quiet_NaN();
    r.converged = false;
    return r;
}

// ---------------------------------------------------------------------------
// input laws

InputLaw InputLaw::gamma(double alpha, double mean) {
    if (!(alpha > 0.0)) throw std::invalid_argument("InputLaw::gamma: alpha must be > 0");
    if (!(mean > 0.0)) throw std::invalid_argument("InputLaw::gamma: mean must be > 0");
    InputLaw law;
    law.kind_ = InputKind::gamma;
    law.mean_ = mean;
    law.alpha_ = alpha;
    return law;
}

InputLaw InputLaw::rayleigh(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("InputLaw::rayleigh: mean must be > 0");
    InputLaw law;
    law.kind_ = InputKind::rayleigh;
    law.mean_ = mean;
    return law;
}

InputLaw InputLaw::uniform(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("InputLaw::uniform: mean must be > 0");
    InputLaw law;
    law.kind_ = InputKind::uniform;
    law.mean_ = mean;
    return law;
}

InputLaw InputLaw::discrete(std::vector<double> points, std::vector<double> weights) {
    if (points.empty() || points.size() != weights.size())
        throw std::invalid_argument("InputLaw::discrete: points/weights size mismatch");
    double wsum = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 0.0) throw std::invalid_argument("InputLaw::discrete: support must be >= 0");
        if (weights[i] < 0.0) throw std::invalid_argument("InputLaw::discrete: weights must be >= 0");
        wsum += weights[i];
        mean += weights[i] * points[i];
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::invalid_argument("InputLaw::discrete: weights must sum to 1 within 1e-12");
    InputLaw law;
    law.kind_ = InputKind::discrete;
    law.mean_ = mean;
    law.points_ = std::move(points);
    law.weights_ = std::move(weights);
    return law;
}

double InputLaw::alpha() const {
    if (kind_ != InputKind::gamma) throw std::logic_error("InputLaw::alpha: not a gamma law");
    return alpha_;
}

const std::vector<double>& InputLaw::points() const {
    if (kind_ != InputKind::discrete) throw std::logic_error("InputLaw::points: not a discrete law");
    return points_;
}

const std::vector<double>& InputLaw::weights() const {
    if (kind_ != InputKind::discrete) throw std::logic_error("InputLaw::weights: not a discrete law");
    return weights_;
}

double InputLaw::pdf(double u) const {
    if (u < 0.0) throw std::invalid_argument("InputLaw::pdf: u must be >= 0");
    switch (kind_) {
        case InputKind::gamma: {
            if (u == 0.0) {
                if (alpha_ < 1.0) return std::numeric_limits<double>::infinity();
                if (alpha_ == 1.0) return 1.0 / mean_;
                return 0.0;
            }
            const double lp = alpha_ * std::log(alpha_) - std::lgamma(alpha_) - alpha_ * std::log(mean_) +
                              (alpha_ - 1.0) * std::log(u) - alpha_ * u / mean_;
            return std::exp(lp);
        }
        case InputKind::rayleigh: {
            const double sig = mean_ * std::sqrt(2.0 / M_PI);
            return u / (sig * sig) * std::exp(-u * u / (2.0 * sig * sig));
        }
        case InputKind::uniform:
            return (u <= 2.0 * mean_) ? 1.0 / (2.0 * mean_) : 0.0;
        case InputKind::discrete:
            throw std::logic_error("InputLaw::pdf: discrete law has atoms, no density");
    }
    return 0.0;
}

double InputLaw::cdf(double u) const {
    if (u < 0.0) throw std::invalid_argument("InputLaw::cdf: u must be >= 0");
    switch (kind_) {
        case InputKind::gamma:
            return detail::gamma_p(alpha_, alpha_ * u / mean_);
        case InputKind::rayleigh: {
            const double sig = mean_ * std::sqrt(2.0 / M_PI);
            return -std::expm1(-u * u / (2.0 * sig * sig));
        }
        case InputKind::uniform:
            return std::min(u / (2.0 * mean_), 1.0);
        case InputKind::discrete: {
            double acc = 0.0;
            for (std::size_t i = 0; i < points_.size(); ++i)
                if (points_[i] <= u) acc += weights_[i];
            return std::min(acc, 1.0);
        }
    }
    return 0.0;
}

void InputLaw::sample(std::size_t count, std::mt19937_64& rng, std::vector<double>& out) const {
    out.resize(count);
    switch (kind_) {
        case InputKind::gamma: {
            std::gamma_distribution<double> g(alpha_, mean_ / alpha_);
            for (auto& v : out) v = g(rng);
            break;
        }
        case InputKind::rayleigh: {
            const double sig = mean_ * std::sqrt(2.0 / M_PI);
            std::uniform_real_distribution<double> un(0.0, 1.0);
            for (auto& v : out) v = sig * std::sqrt(-2.0 * std::log1p(-un(rng)));
            break;
        }
        case InputKind::uniform: {
            std::uniform_real_distribution<double> un(0.0, 2.0 * mean_);
            for (auto& v : out) v = un(rng);
            break;
        }
        case InputKind::discrete: {
            std::discrete_distribution<std::size_t> d(weights_.begin(), weights_.end());
            for (auto& v : out) v = points_[d(rng)];
            break;
        }
    }
}

std::vector<double> input_sample(const InputLaw& law, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("input_sample: count must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    law.sample(count, rng, out);
    return out;
}

}  // namespace swiptcap::stats
