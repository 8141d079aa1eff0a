#pragma once

#include "spdc/dip_curve.hpp"
#include "spdc/engineering.hpp"
#include "spdc/jsa.hpp"
#include "spdc/purity.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace spdc {

/// All CSV output is comma-separated with one header line and floats printed
/// to 9 significant digits; delays are written in femtoseconds.

void write_dip_curve_csv(std::ostream& out, const DipCurve& curve);
void write_dip_curve_csv(const std::filesystem::path& path, const DipCurve& curve);

/// Several curves over a shared delay axis, one column per model tag.
void write_dip_curves_csv(std::ostream& out, const std::vector<DipCurve>& curves);
void write_dip_curves_csv(const std::filesystem::path& path, const std::vector<DipCurve>& curves);

/// Tabular text dump: omega_s, omega_i, Re Phi, Im Phi.
void write_jsa_table(std::ostream& out, const JsaGrid& grid);
void write_jsa_table(const std::filesystem::path& path, const JsaGrid& grid);

/// Compact binary dump, little-endian 64-bit floats:
///   u64 n_s, u64 n_i, n_s axis values, n_i axis values,
///   then row-major (signal-major) Re/Im pairs.
void write_jsa_binary(const std::filesystem::path& path, const JsaGrid& grid);
JsaGrid read_jsa_binary(const std::filesystem::path& path);

/// CSV of (omega, omega', Re rho, Im rho).
void write_density_csv(std::ostream& out, const ReducedDensityGrid& rho);
void write_density_csv(const std::filesystem::path& path, const ReducedDensityGrid& rho);

/// Schmidt spectrum as (k, lambda_k).
void write_schmidt_csv(std::ostream& out, const Eigen::VectorXd& lambda);
void write_schmidt_csv(const std::filesystem::path& path, const Eigen::VectorXd& lambda);

/// Filter scan as (sigma_fwhm_nm, objective); needs the scanned photon's
/// center wavelength for the sigma -> nm conversion.
void write_scan_csv(std::ostream& out, const FilterScanResult& scan, double center_wavelength_m);
void write_scan_csv(const std::filesystem::path& path, const FilterScanResult& scan,
                    double center_wavelength_m);

/// Shared float formatting (9 significant digits).
std::string format_float(double value);

} // namespace spdc
