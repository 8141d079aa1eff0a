#include "spdc/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace spdc {

namespace {

std::ofstream open_text(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot open output file: " + path.string());
    return out;
}

void write_u64(std::ostream& out, std::uint64_t v) {
    unsigned char bytes[8];
    for (int k = 0; k < 8; ++k)
        bytes[k] = static_cast<unsigned char>((v >> (8 * k)) & 0xff);
    out.write(reinterpret_cast<const char*>(bytes), 8);
}

std::uint64_t read_u64(std::istream& in) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char*>(bytes), 8);
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k)
        v |= static_cast<std::uint64_t>(bytes[k]) << (8 * k);
    return v;
}

void write_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(v));
    std::memcpy(&bits, &v, 8);
    write_u64(out, bits);
}

double read_f64(std::istream& in) {
    const std::uint64_t bits = read_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

constexpr double kFemto = 1e15;

} // namespace

std::string format_float(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

void write_dip_curve_csv(std::ostream& out, const DipCurve& curve) {
    out << "delay_fs,r_cc_" << to_string(curve.model) << "\n";
    for (Eigen::Index k = 0; k < curve.delays.size(); ++k)
        out << format_float(curve.delays[k] * kFemto) << "," << format_float(curve.r_cc[k]) << "\n";
}

void write_dip_curves_csv(std::ostream& out, const std::vector<DipCurve>& curves) {
    if (curves.empty())
        throw DomainError("no curves to write");
    out << "delay_fs";
    for (const auto& c : curves) {
        out << ",r_cc_" << to_string(c.model);
        if (c.delays.size() != curves.front().delays.size()
            || (c.delays - curves.front().delays).cwiseAbs().maxCoeff() > 0.0)
            throw ShapeError("curves do not share a delay axis");
    }
    out << "\n";
    for (Eigen::Index k = 0; k < curves.front().delays.size(); ++k) {
        out << format_float(curves.front().delays[k] * kFemto);
        for (const auto& c : curves)
            out << "," << format_float(c.r_cc[k]);
        out << "\n";
    }
}

void write_jsa_table(std::ostream& out, const JsaGrid& grid) {
    out << "omega_s,omega_i,re_phi,im_phi\n";
    for (Eigen::Index j = 0; j < grid.omega_s_axis().size(); ++j)
        for (Eigen::Index k = 0; k < grid.omega_i_axis().size(); ++k)
            out << format_float(grid.omega_s_axis()[j]) << "," << format_float(grid.omega_i_axis()[k])
                << "," << format_float(grid.values()(j, k).real()) << ","
                << format_float(grid.values()(j, k).imag()) << "\n";
}

void write_jsa_binary(const std::filesystem::path& path, const JsaGrid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output file: " + path.string());
    write_u64(out, static_cast<std::uint64_t>(grid.omega_s_axis().size()));
    write_u64(out, static_cast<std::uint64_t>(grid.omega_i_axis().size()));
    for (Eigen::Index j = 0; j < grid.omega_s_axis().size(); ++j)
        write_f64(out, grid.omega_s_axis()[j]);
    for (Eigen::Index k = 0; k < grid.omega_i_axis().size(); ++k)
        write_f64(out, grid.omega_i_axis()[k]);
    for (Eigen::Index j = 0; j < grid.values().rows(); ++j)
        for (Eigen::Index k = 0; k < grid.values().cols(); ++k) {
            write_f64(out, grid.values()(j, k).real());
            write_f64(out, grid.values()(j, k).imag());
        }
}

JsaGrid read_jsa_binary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open file: " + path.string());
    const auto n_s = static_cast<Eigen::Index>(read_u64(in));
    const auto n_i = static_cast<Eigen::Index>(read_u64(in));
    if (n_s <= 0 || n_i <= 0 || n_s > (1 << 20) || n_i > (1 << 20))
        throw ConfigError("implausible grid dimensions in " + path.string());
    Eigen::VectorXd omega_s(n_s), omega_i(n_i);
    for (Eigen::Index j = 0; j < n_s; ++j)
        omega_s[j] = read_f64(in);
    for (Eigen::Index k = 0; k < n_i; ++k)
        omega_i[k] = read_f64(in);
    Eigen::MatrixXcd values(n_s, n_i);
    for (Eigen::Index j = 0; j < n_s; ++j)
        for (Eigen::Index k = 0; k < n_i; ++k) {
            const double re = read_f64(in);
            const double im = read_f64(in);
            values(j, k) = {re, im};
        }
    if (!in)
        throw ConfigError("truncated binary grid file: " + path.string());
    return JsaGrid(std::move(omega_s), std::move(omega_i), std::move(values));
}

void write_density_csv(std::ostream& out, const ReducedDensityGrid& rho) {
    out << "omega,omega_prime,re_rho,im_rho\n";
    for (Eigen::Index j = 0; j < rho.omega.size(); ++j)
        for (Eigen::Index k = 0; k < rho.omega.size(); ++k)
            out << format_float(rho.omega[j]) << "," << format_float(rho.omega[k]) << ","
                << format_float(rho.rho(j, k).real()) << "," << format_float(rho.rho(j, k).imag())
                << "\n";
}

void write_schmidt_csv(std::ostream& out, const Eigen::VectorXd& lambda) {
    out << "k,lambda\n";
    for (Eigen::Index k = 0; k < lambda.size(); ++k)
        out << k << "," << format_float(lambda[k]) << "\n";
}

void write_scan_csv(std::ostream& out, const FilterScanResult& scan, double center_wavelength_m) {
    out << "sigma_fwhm_nm,"
        << (scan.objective == ScanObjective::Indistinguishability ? "indistinguishability"
                                                                  : "purity")
        << "\n";
    for (size_t k = 0; k < scan.scanned_sigma.size(); ++k)
        out << format_float(sigma_to_fwhm(center_wavelength_m, scan.scanned_sigma[k]) * 1e9) << ","
            << format_float(scan.objective_values[k]) << "\n";
}

void write_dip_curve_csv(const std::filesystem::path& path, const DipCurve& curve) {
    auto out = open_text(path);
    write_dip_curve_csv(out, curve);
}

void write_dip_curves_csv(const std::filesystem::path& path, const std::vector<DipCurve>& curves) {
    auto out = open_text(path);
    write_dip_curves_csv(out, curves);
}

void write_jsa_table(const std::filesystem::path& path, const JsaGrid& grid) {
    auto out = open_text(path);
    write_jsa_table(out, grid);
}

void write_density_csv(const std::filesystem::path& path, const ReducedDensityGrid& rho) {
    auto out = open_text(path);
    write_density_csv(out, rho);
}

void write_schmidt_csv(const std::filesystem::path& path, const Eigen::VectorXd& lambda) {
    auto out = open_text(path);
    write_schmidt_csv(out, lambda);
}

void write_scan_csv(const std::filesystem::path& path, const FilterScanResult& scan,
                    double center_wavelength_m) {
    auto out = open_text(path);
    write_scan_csv(out, scan, center_wavelength_m);
}

} // namespace spdc
