#pragma once

#include "spdc/dispersion.hpp"
#include "spdc/units.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace spdc {

/// Sinc-to-Gaussian replacement coefficient gamma, with the two documented
/// presets. kGammaAlpha (0.193, same amplitude FWHM for sinc and Gaussian)
/// is the default; it is the preset that reproduces the published visibility
/// for the reference source. kGammaAlphaSquared keeps the alternative reading
/// available.
inline constexpr double kGammaAlpha = 0.193;
inline constexpr double kGammaAlphaSquared = 0.193 * 0.193;

/// Full physical description of an SPDC source: pump, crystal, optional
/// spectral filters and the material behind the group velocities.
struct SourceConfig {
    std::shared_ptr<const MaterialDispersion> material;
    std::string pump_axis;
    std::string signal_axis;
    std::string idler_axis;

    double crystal_length = 0.0;          // m
    double pump_center_wavelength = 0.0;  // m
    SpectralWidth pump_sigma;             // rad/s
    double signal_center_wavelength = 0.0;
    double idler_center_wavelength = 0.0;
    std::optional<SpectralWidth> signal_filter_sigma; // empty = unfiltered
    std::optional<SpectralWidth> idler_filter_sigma;
    double temperature = 293.15;          // K
    double sinc_gaussian_coefficient = kGammaAlpha;

    /// Grid defaults carried from the config file; CLI flags override.
    int grid_points = 512;
    double grid_half_width_multiplier = 5.0;

    /// Throws ConfigError when energy conservation of the center wavelengths
    /// (1/lp = 1/ls + 1/li to 1e-9 relative) or a positivity constraint fails.
    void validate() const;

    InverseGroupVelocity pump_inverse_group_velocity() const;
    InverseGroupVelocity signal_inverse_group_velocity() const;
    InverseGroupVelocity idler_inverse_group_velocity() const;
};

/// Load a source config file (sections [pump], [crystal], [filters], [grid];
/// wavelengths in nm, bandwidths in nm intensity FWHM, lengths in mm). The
/// material path is resolved relative to the config file's directory.
SourceConfig load_source_config(const std::filesystem::path& path);

/// Parse a gamma spec: "alpha", "alpha2" or a positive decimal value.
double parse_gamma(const std::string& text);

} // namespace spdc
