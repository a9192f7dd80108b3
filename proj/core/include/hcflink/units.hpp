#pragma once

namespace hcflink::units {

/// 10·log10(e): dB per neper of power.
inline constexpr double kDbPerNeper = 4.342944819032518;

struct PhysicalConstants {
    double planck_J_s = 6.62607015e-34;
    double light_speed_km_s = 299792.458;
    double reference_frequency_Hz = 193.4e12;
    double reference_wavelength_m = 1550e-9;
};

/// Throws DomainError unless frequency × wavelength is within 0.3% of c.
void validate(const PhysicalConstants& constants);

double db_to_linear(double db);
double linear_to_db(double ratio);
double dbm_to_watt(double dbm);
double watt_to_dbm(double watts);

/// dB/km → linear power attenuation coefficient α in 1/km.
double attenuation_db_to_per_km(double db_per_km);

/// sinh(x)/x, with the removable singularity at 0 filled in.
double sinhc(double x);

}  // namespace hcflink::units
