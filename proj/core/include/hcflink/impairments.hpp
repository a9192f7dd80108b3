#pragma once

#include <span>

#include "hcflink/units.hpp"

namespace hcflink {

struct FiberSpec {
    double loss_db_per_km = 0.06;
    double dispersion_ps_nm_km = 3.0;
    double gamma_per_W_km = 5e-4;
    double imi_db_per_km = -65.0;
    double backscatter_db_per_km = -70.0;
    double group_index = 1.0003;

    bool operator==(const FiberSpec&) const = default;
};

struct AmplifierSpec {
    double noise_figure_db = 4.6;
    /// Whole-comb output power at the EDFA, before the output circulator.
    double total_output_power_dbm = 20.3;
    double pre_input_loss_db = 2.0;
    double post_output_loss_db = 2.0;

    bool operator==(const AmplifierSpec&) const = default;
};

/// Per-channel noise budget. Each component is a linear 1/SNR; zero means the
/// impairment is absent.
struct SnrBudget {
    double inv_snr_ase = 0.0;
    double inv_snr_nli = 0.0;
    double inv_snr_imi = 0.0;
    double inv_snr_rbs = 0.0;
    double gsnr_linear = 0.0;
    double gsnr_db = 0.0;

    bool operator==(const SnrBudget&) const = default;
};

void validate(const FiberSpec& fiber);
void validate(const AmplifierSpec& amp);

/// SNR in dB of a single 1/SNR component; +inf for an absent component.
double component_snr_db(double inv_snr);

namespace impairments {

/// Accumulated dual-polarisation ASE over `n_amps` identical amplifiers,
/// relative to the per-channel power at the amplifier output.
double ase_inv_snr(const AmplifierSpec& amp, double per_channel_output_w, double gain_db, int n_amps,
                   double noise_bw_hz, const units::PhysicalConstants& constants = {});

/// Incoherent GN-model NLI power spectral density generated by one span at
/// the centre of a flat comb of width `comb_bw_hz`.
double gn_nli_psd_per_span(const FiberSpec& fiber, double launch_psd_w_hz, double span_km,
                           double comb_bw_hz, const units::PhysicalConstants& constants = {});

double nli_inv_snr(double psd_per_span_w_hz, int n_spans, double channel_bw_hz,
                   double per_channel_launch_w);

double imi_inv_snr(double imi_db_per_km, double total_length_km);

/// Lumped-amplification enhancement of accumulated backscatter,
/// sinhc(A_dB / (10·log10 e)). Equals 1 for a lossless span.
double rbs_enhancement(double span_loss_db);

double rbs_power(double launch_w, double backscatter_db_per_km, double total_length_km,
                 double span_loss_db);

/// Backscatter-only 1/SNR. Independent of launch power.
double rbs_inv_snr(double backscatter_db_per_km, double total_length_km, double span_loss_db);

/// Combines up to four 1/SNR terms, taken positionally as ASE, NLI, IMI, RBS.
SnrBudget combine_gsnr(std::span<const double> components);

/// Numerical integration of single-pass backscatter along each span, with
/// the per-span backward gain applied explicitly. Reference for rbs_power.
double rbs_brute_force(double launch_w, double backscatter_db_per_km, double loss_db_per_km,
                       double span_km, int n_spans, double dz_km);

}  // namespace impairments
}  // namespace hcflink
