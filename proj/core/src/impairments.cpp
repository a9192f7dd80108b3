#include "hcflink/impairments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hcflink/errors.hpp"

namespace hcflink {
namespace {

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw DomainError(message);
    }
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void validate(const FiberSpec& fiber) {
    require(std::isfinite(fiber.loss_db_per_km) && fiber.loss_db_per_km > 0.0,
            "fiber.loss_db_per_km must be positive");
    require(finite_nonneg(fiber.gamma_per_W_km), "fiber.gamma_per_W_km must be nonnegative");
    require(std::isfinite(fiber.dispersion_ps_nm_km) && fiber.dispersion_ps_nm_km != 0.0,
            "fiber.dispersion_ps_nm_km must be nonzero");
    require(std::isfinite(fiber.imi_db_per_km) && fiber.imi_db_per_km <= 0.0,
            "fiber.imi_db_per_km must be <= 0");
    require(std::isfinite(fiber.backscatter_db_per_km) && fiber.backscatter_db_per_km <= 0.0,
            "fiber.backscatter_db_per_km must be <= 0");
    require(std::isfinite(fiber.group_index) && fiber.group_index >= 1.0,
            "fiber.group_index must be >= 1");
}

void validate(const AmplifierSpec& amp) {
    require(std::isfinite(amp.noise_figure_db) && amp.noise_figure_db > 0.0,
            "amplifier.noise_figure_db must be positive");
    require(std::isfinite(amp.total_output_power_dbm), "amplifier.total_output_power_dbm must be finite");
    require(finite_nonneg(amp.pre_input_loss_db), "amplifier.pre_input_loss_db must be nonnegative");
    require(finite_nonneg(amp.post_output_loss_db), "amplifier.post_output_loss_db must be nonnegative");
}

double component_snr_db(double inv_snr) {
    if (inv_snr == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return units::linear_to_db(1.0 / inv_snr);
}

namespace impairments {

double ase_inv_snr(const AmplifierSpec& amp, double per_channel_output_w, double gain_db, int n_amps,
                   double noise_bw_hz, const units::PhysicalConstants& constants) {
    require(n_amps >= 0, "ase_inv_snr: amplifier count must be nonnegative");
    require(std::isfinite(gain_db) && gain_db > 0.0, "ase_inv_snr: gain must be positive (dB)");
    require(std::isfinite(per_channel_output_w) && per_channel_output_w > 0.0,
            "ase_inv_snr: per-channel output power must be positive");
    require(finite_nonneg(noise_bw_hz), "ase_inv_snr: noise bandwidth must be nonnegative");
    if (n_amps == 0) {
        return 0.0;
    }
    const double noise_factor = units::db_to_linear(amp.noise_figure_db);
    const double gain = units::db_to_linear(gain_db);
    const double photon_energy = constants.planck_J_s * constants.reference_frequency_Hz;
    const double ase_per_amp = noise_factor * photon_energy * (gain - 1.0) * noise_bw_hz;
    return n_amps * ase_per_amp / per_channel_output_w;
}

double gn_nli_psd_per_span(const FiberSpec& fiber, double launch_psd_w_hz, double span_km,
                           double comb_bw_hz, const units::PhysicalConstants& constants) {
    require(finite_nonneg(launch_psd_w_hz), "gn_nli_psd_per_span: launch PSD must be nonnegative");
    require(std::isfinite(span_km) && span_km > 0.0, "gn_nli_psd_per_span: span length must be positive");
    require(std::isfinite(comb_bw_hz) && comb_bw_hz > 0.0,
            "gn_nli_psd_per_span: comb bandwidth must be positive");
    require(std::isfinite(fiber.dispersion_ps_nm_km) && fiber.dispersion_ps_nm_km != 0.0,
            "gn_nli_psd_per_span: zero dispersion makes the GN closed form singular");
    require(std::isfinite(fiber.loss_db_per_km) && fiber.loss_db_per_km > 0.0,
            "gn_nli_psd_per_span: fiber loss must be positive");
    if (launch_psd_w_hz == 0.0) {
        return 0.0;
    }

    const double alpha = units::attenuation_db_to_per_km(fiber.loss_db_per_km);
    const double l_eff = -std::expm1(-alpha * span_km) / alpha;
    const double l_eff_asymptotic = 1.0 / alpha;

    // D [ps/(nm·km)] = 1e-6 s/m² per km of fiber; |β₂| = D·λ²/(2πc) in s²/km.
    const double dispersion_s_per_m2 = std::abs(fiber.dispersion_ps_nm_km) * 1e-6;
    const double lambda = constants.reference_wavelength_m;
    const double light_speed_m_s = constants.light_speed_km_s * 1e3;
    const double beta2_s2_per_km =
        dispersion_s_per_m2 * lambda * lambda / (2.0 * std::numbers::pi * light_speed_m_s) * 1e3;

    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double asinh_arg = 0.5 * pi2 * beta2_s2_per_km * l_eff_asymptotic * comb_bw_hz * comb_bw_hz;
    const double g = launch_psd_w_hz;
    return (8.0 / 27.0) * fiber.gamma_per_W_km * fiber.gamma_per_W_km * g * g * g * l_eff * l_eff *
           std::asinh(asinh_arg) / (std::numbers::pi * beta2_s2_per_km * l_eff_asymptotic);
}

double nli_inv_snr(double psd_per_span_w_hz, int n_spans, double channel_bw_hz,
                   double per_channel_launch_w) {
    require(finite_nonneg(psd_per_span_w_hz), "nli_inv_snr: PSD must be nonnegative");
    require(n_spans >= 0, "nli_inv_snr: span count must be nonnegative");
    require(finite_nonneg(channel_bw_hz), "nli_inv_snr: channel bandwidth must be nonnegative");
    require(std::isfinite(per_channel_launch_w) && per_channel_launch_w > 0.0,
            "nli_inv_snr: launch power must be positive");
    return n_spans * psd_per_span_w_hz * channel_bw_hz / per_channel_launch_w;
}

double imi_inv_snr(double imi_db_per_km, double total_length_km) {
    require(std::isfinite(imi_db_per_km) && imi_db_per_km <= 0.0,
            "imi_inv_snr: IMI coefficient must be <= 0 dB/km");
    require(finite_nonneg(total_length_km), "imi_inv_snr: length must be nonnegative");
    return total_length_km * units::db_to_linear(imi_db_per_km);
}

double rbs_enhancement(double span_loss_db) {
    require(finite_nonneg(span_loss_db), "rbs_enhancement: span loss must be nonnegative");
    return units::sinhc(span_loss_db / units::kDbPerNeper);
}

double rbs_power(double launch_w, double backscatter_db_per_km, double total_length_km,
                 double span_loss_db) {
    require(finite_nonneg(launch_w), "rbs_power: launch power must be nonnegative");
    return launch_w * rbs_inv_snr(backscatter_db_per_km, total_length_km, span_loss_db);
}

double rbs_inv_snr(double backscatter_db_per_km, double total_length_km, double span_loss_db) {
    require(std::isfinite(backscatter_db_per_km) && backscatter_db_per_km <= 0.0,
            "rbs_inv_snr: backscatter coefficient must be <= 0 dB/km");
    require(finite_nonneg(total_length_km), "rbs_inv_snr: length must be nonnegative");
    return total_length_km * units::db_to_linear(backscatter_db_per_km) * rbs_enhancement(span_loss_db);
}

SnrBudget combine_gsnr(std::span<const double> components) {
    require(!components.empty() && components.size() <= 4,
            "combine_gsnr: expected between one and four components");
    double sum = 0.0;
    for (double c : components) {
        require(finite_nonneg(c), "combine_gsnr: components must be finite and nonnegative");
        sum += c;
    }
    require(sum > 0.0, "combine_gsnr: all components are zero (infinite GSNR)");

    SnrBudget budget;
    double* slots[] = {&budget.inv_snr_ase, &budget.inv_snr_nli, &budget.inv_snr_imi, &budget.inv_snr_rbs};
    for (std::size_t i = 0; i < components.size(); ++i) {
        *slots[i] = components[i];
    }
    budget.gsnr_linear = 1.0 / sum;
    budget.gsnr_db = units::linear_to_db(budget.gsnr_linear);
    return budget;
}

double rbs_brute_force(double launch_w, double backscatter_db_per_km, double loss_db_per_km,
                       double span_km, int n_spans, double dz_km) {
    require(finite_nonneg(launch_w), "rbs_brute_force: launch power must be nonnegative");
    require(std::isfinite(span_km) && span_km > 0.0, "rbs_brute_force: span length must be positive");
    require(n_spans >= 0, "rbs_brute_force: span count must be nonnegative");
    require(std::isfinite(dz_km) && dz_km > 0.0, "rbs_brute_force: step must be positive");
    const double steps_real = span_km / dz_km;
    const long steps = std::lround(steps_real);
    require(steps >= 1 && std::abs(steps * dz_km - span_km) <= 1e-9 * span_km,
            "rbs_brute_force: step does not divide the span length");

    const double alpha = units::attenuation_db_to_per_km(loss_db_per_km);
    const double b = units::db_to_linear(backscatter_db_per_km);
    const double span_loss = std::exp(-alpha * span_km);
    const double span_gain = std::exp(alpha * span_km);

    // Backscatter collected at the start of one span (midpoint rule), then
    // amplified by the backward gain block.
    double single_span = 0.0;
    for (long k = 0; k < steps; ++k) {
        const double z = (static_cast<double>(k) + 0.5) * dz_km;
        const double forward = launch_w * std::exp(-alpha * z);
        single_span += forward * b * dz_km * std::exp(-alpha * z);
    }
    single_span *= span_gain;

    // Span k's contribution crosses k earlier spans on the way back, each
    // attenuating and then re-amplifying it.
    double total = 0.0;
    for (int k = 0; k < n_spans; ++k) {
        double returned = single_span;
        for (int back = 0; back < k; ++back) {
            returned = returned * span_loss * span_gain;
        }
        total += returned;
    }
    return total;
}

}  // namespace impairments
}  // namespace hcflink
