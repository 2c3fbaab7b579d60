#ifndef SWIPTCAP_PHYS_HPP
#define SWIPTCAP_PHYS_HPP

namespace swiptcap::phys {

/// Boltzmann constant, exact SI value [J/K].
inline constexpr double k_boltzmann = 1.380649e-23;

double db_to_linear(double db);
double linear_to_db(double lin);

/// Truncation order of the diode I-V Taylor expansion.
enum class DiodeOrder { second_only, fourth };

/// Link and hardware parameters.  All gains and ratios are linear here;
/// dB conversion happens at config load.
struct SystemParams {
    double p_t_w = 1.0;            // transmit power [W]
    double g_t = 100.0;            // transmit antenna gain (linear)
    double g_r = 1.9952623149688795;  // receive antenna gain (linear)
    double lambda_m = 0.1;         // wavelength [m]
    double d_m = 10.0;             // link distance [m]
    double i_s_a = 5e-6;           // diode saturation current [A]
    double n_ideality = 1.05;      // diode ideality factor
    double v_t_v = 25.86e-3;       // thermal voltage [V]
    double r_ant_ohm = 50.0;       // antenna impedance [ohm]
    double b_hz = 10e6;            // bandwidth [Hz]
    double t_k = 300.0;            // temperature [K]
    double rec_noise_ratio = 1e3;  // P_rec / P_th; 0 allowed for noiseless-rectifier oracle runs
    double g_lna = 1.0;            // LNA power gain (linear)

    /// Throws std::invalid_argument on non-physical values.
    void validate() const;
};

struct DiodeCoeffs {
    double k2;  // 2nd-order coefficient [A/W], antenna-referred
    double k4;  // 4th-order coefficient [A/W^2]
    DiodeOrder order = DiodeOrder::fourth;
};

/// Friis free-space received power P_t G_t G_r (lambda / 4 pi d)^2.
double received_power(const SystemParams& p);

/// Antenna thermal noise power k0 T B.
double thermal_noise_power(const SystemParams& p);

/// Rectifier noise power, rec_noise_ratio * P_th.
double rec_noise_power(const SystemParams& p);

/// Taylor coefficients of the rectifying diode: k_i = i_s R^(i/2) / (i! (n v_t)^i),
/// i in {2, 4}.  With order == second_only, k4 is still reported but must be
/// treated as zero by the channel evaluation.
DiodeCoeffs diode_coefficients(const SystemParams& p, DiodeOrder order = DiodeOrder::fourth);

}  // namespace swiptcap::phys

#endif
