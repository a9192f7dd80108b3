#include "hcflink/units.hpp"

#include <cmath>
#include <string>

#include "hcflink/errors.hpp"

namespace hcflink::units {
namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(what) + ": non-finite input");
    }
}

}  // namespace

void validate(const PhysicalConstants& constants) {
    if (!(constants.planck_J_s > 0.0) || !(constants.light_speed_km_s > 0.0) ||
        !(constants.reference_frequency_Hz > 0.0) || !(constants.reference_wavelength_m > 0.0)) {
        throw DomainError("physical constants must be positive");
    }
    const double c_from_reference =
        constants.reference_frequency_Hz * constants.reference_wavelength_m * 1e-3;
    if (std::abs(c_from_reference / constants.light_speed_km_s - 1.0) > 3e-3) {
        throw DomainError("reference frequency and wavelength disagree with light speed by more than 0.3%");
    }
}

double db_to_linear(double db) {
    require_finite(db, "db_to_linear");
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double ratio) {
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        throw DomainError("linear_to_db: ratio must be positive and finite");
    }
    return 10.0 * std::log10(ratio);
}

double dbm_to_watt(double dbm) {
    require_finite(dbm, "dbm_to_watt");
    return 1e-3 * std::pow(10.0, dbm / 10.0);
}

double watt_to_dbm(double watts) {
    if (!(watts > 0.0) || !std::isfinite(watts)) {
        throw DomainError("watt_to_dbm: power must be positive and finite");
    }
    return 10.0 * std::log10(watts * 1e3);
}

double attenuation_db_to_per_km(double db_per_km) {
    require_finite(db_per_km, "attenuation_db_to_per_km");
    if (db_per_km < 0.0) {
        throw DomainError("attenuation_db_to_per_km: attenuation must be nonnegative");
    }
    return db_per_km / kDbPerNeper;
}

double sinhc(double x) {
    require_finite(x, "sinhc");
    if (x < 0.0) {
        throw DomainError("sinhc: argument must be nonnegative");
    }
    if (x < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

}  // namespace hcflink::units
