#pragma once

#include "spdc/errors.hpp"

namespace spdc {

/// Speed of light in vacuum, m/s (exact).
inline constexpr double kSpeedOfLight = 299792458.0;

/// Amplitude-Gaussian standard deviation in rad/s, as used in exp[-w^2/(4 sigma^2)].
/// The intensity profile of that amplitude is exp[-w^2/(2 sigma^2)], so an
/// intensity FWHM of dw corresponds to sigma = dw / (2 sqrt(2 ln 2)).
struct SpectralWidth {
    double sigma = 0.0; // rad/s
};

/// Inverse group velocity N = n_g / c, in s/m.
struct InverseGroupVelocity {
    double value = 0.0; // s/m
};

/// w = 2 pi c / lambda. Throws DomainError for lambda <= 0.
double wavelength_to_angular_frequency(double wavelength_m);

/// Inverse of wavelength_to_angular_frequency.
double angular_frequency_to_wavelength(double omega_rad_s);

/// Convert an intensity-FWHM bandwidth (both arguments in meters) centered at
/// lambda0 to the amplitude-Gaussian sigma:
///   dw_fwhm = 2 pi c dlambda / lambda0^2,  sigma = dw_fwhm / (2 sqrt(2 ln 2)).
SpectralWidth fwhm_to_sigma(double lambda0_m, double dlambda_fwhm_m);

/// Inverse of fwhm_to_sigma; returns the intensity FWHM in meters.
double sigma_to_fwhm(double lambda0_m, SpectralWidth width);

} // namespace spdc
