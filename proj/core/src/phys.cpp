#include "swiptcap/phys.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swiptcap::phys {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) {
    if (lin <= 0.0) throw std::invalid_argument("linear_to_db: value must be > 0");
    return 10.0 * std::log10(lin);
}

void SystemParams::validate() const {
    auto need_pos = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument(std::string("SystemParams: ") + name + " must be > 0");
    };
    need_pos(p_t_w, "p_t_w");
    need_pos(g_t, "g_t");
    need_pos(g_r, "g_r");
    need_pos(lambda_m, "lambda_m");
    need_pos(d_m, "d_m");
    need_pos(i_s_a, "i_s_a");
    need_pos(n_ideality, "n_ideality");
    need_pos(v_t_v, "v_t_v");
    need_pos(r_ant_ohm, "r_ant_ohm");
    need_pos(b_hz, "b_hz");
    need_pos(t_k, "t_k");
    need_pos(g_lna, "g_lna");
    // ratio 0 admits the noiseless-rectifier limit used by oracle tests
    if (!(rec_noise_ratio >= 0.0) || !std::isfinite(rec_noise_ratio))
        throw std::invalid_argument("SystemParams: rec_noise_ratio must be >= 0");
}

double received_power(const SystemParams& p) {
    p.validate();
    const double ratio = p.lambda_m / (4.0 * M_PI * p.d_m);
    return p.p_t_w * p.g_t * p.g_r * ratio * ratio;
}

double thermal_noise_power(const SystemParams& p) {
    p.validate();
    return k_boltzmann * p.t_k * p.b_hz;
}

double rec_noise_power(const SystemParams& p) {
    return p.rec_noise_ratio * thermal_noise_power(p);
}

DiodeCoeffs diode_coefficients(const SystemParams& p, DiodeOrder order) {
    p.validate();
    const double nvt = p.n_ideality * p.v_t_v;
    const double nvt2 = nvt * nvt;
    DiodeCoeffs c;
    c.k2 = p.i_s_a * p.r_ant_ohm / (2.0 * nvt2);
    c.k4 = p.i_s_a * p.r_ant_ohm * p.r_ant_ohm / (24.0 * nvt2 * nvt2);
    c.order = order;
    return c;
}

}  // namespace swiptcap::phys
