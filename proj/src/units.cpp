#include "spdc/units.hpp"

#include <cmath>
#include <numbers>

namespace spdc {

namespace {
// 2 sqrt(2 ln 2): ratio between the intensity FWHM and sigma of a Gaussian.
const double kFwhmOverSigma = 2.0 * std::sqrt(2.0 * std::numbers::ln2);
} // namespace

double wavelength_to_angular_frequency(double wavelength_m) {
    if (!(wavelength_m > 0.0))
        throw DomainError("wavelength must be positive");
    return 2.0 * std::numbers::pi * kSpeedOfLight / wavelength_m;
}

double angular_frequency_to_wavelength(double omega_rad_s) {
    if (!(omega_rad_s > 0.0))
        throw DomainError("angular frequency must be positive");
    return 2.0 * std::numbers::pi * kSpeedOfLight / omega_rad_s;
}

SpectralWidth fwhm_to_sigma(double lambda0_m, double dlambda_fwhm_m) {
    if (!(lambda0_m > 0.0) || !(dlambda_fwhm_m > 0.0))
        throw DomainError("center wavelength and FWHM must be positive");
    const double dw_fwhm =
        2.0 * std::numbers::pi * kSpeedOfLight * dlambda_fwhm_m / (lambda0_m * lambda0_m);
    return SpectralWidth{dw_fwhm / kFwhmOverSigma};
}

double sigma_to_fwhm(double lambda0_m, SpectralWidth width) {
    if (!(lambda0_m > 0.0) || !(width.sigma > 0.0))
        throw DomainError("center wavelength and sigma must be positive");
    const double dw_fwhm = width.sigma * kFwhmOverSigma;
    return dw_fwhm * lambda0_m * lambda0_m / (2.0 * std::numbers::pi * kSpeedOfLight);
}

} // namespace spdc
