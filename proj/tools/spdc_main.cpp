#include "spdc/engineering.hpp"
#include "spdc/interference.hpp"
#include "spdc/io.hpp"
#include "spdc/purity.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace spdc;

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
    std::string config_path;
    std::string out_path = "out";
    std::optional<int> grid_points;
    std::optional<double> half_width;
    std::optional<std::string> gamma;
    std::string delays_spec = "-10000:10000:201"; // fs
    bool multipair = false;
    bool strict = false;
    double detune = 0.0; // rad/s
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_delays) {
    cmd->add_option("--config", opt.config_path, "source config file")->required();
    cmd->add_option("--out", opt.out_path, "output path prefix");
    cmd->add_option("--grid", opt.grid_points, "grid points per axis");
    cmd->add_option("--half-width", opt.half_width, "grid half-width multiplier");
    cmd->add_option("--gamma", opt.gamma, "sinc-Gaussian coefficient: alpha | alpha2 | <float>");
    cmd->add_flag("--strict", opt.strict, "treat range warnings as errors");
    if (with_delays) {
        cmd->add_option("--delays", opt.delays_spec,
                        "delay range MIN:MAX:COUNT in femtoseconds (default auto-centers on the dip)");
        cmd->add_option("--detune", opt.detune,
                        "extra central-frequency offset between the photons, rad/s");
    }
}

SourceConfig load_config(const CommonOptions& opt) {
    SourceConfig cfg = load_source_config(opt.config_path);
    if (opt.gamma)
        cfg.sinc_gaussian_coefficient = parse_gamma(*opt.gamma);
    if (opt.grid_points)
        cfg.grid_points = *opt.grid_points;
    if (opt.half_width)
        cfg.grid_half_width_multiplier = *opt.half_width;
    return cfg;
}

GridSpec grid_spec(const SourceConfig& cfg) {
    return GridSpec{cfg.grid_points, cfg.grid_half_width_multiplier};
}

Eigen::VectorXd parse_delays(const std::string& spec) {
    double lo = 0, hi = 0;
    int count = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3)
        throw ConfigError("malformed --delays, expected MIN:MAX:COUNT, got '" + spec + "'");
    if (count < 1 || !(hi > lo))
        throw ConfigError("empty delay range: '" + spec + "'");
    Eigen::VectorXd delays(count);
    if (count == 1) {
        delays[0] = lo * 1e-15;
        return delays;
    }
    const double step = (hi - lo) / (count - 1);
    for (int k = 0; k < count; ++k)
        delays[k] = (lo + k * step) * 1e-15;
    return delays;
}

// Delay axis centered between the pair-dip shift and zero, wide enough for
// both dips when no explicit range is given on the command line.
Eigen::VectorXd default_or_parsed_delays(const CommonOptions& opt, const SourceConfig& cfg) {
    Eigen::VectorXd delays = parse_delays(opt.delays_spec);
    const double shift = dip_shift(cfg);
    if (opt.delays_spec == "-10000:10000:201" && std::abs(shift) > 2e-12) {
        const double half = std::max(1e-11, std::abs(shift) * 4.0);
        const int count = 201;
        for (int k = 0; k < count; ++k)
            delays[k] = shift - half + 2.0 * half * k / (count - 1);
    }
    return delays;
}

void print_params(const SourceConfig& cfg, const GaussianJsaParams& p) {
    std::cout << "gamma     " << format_float(cfg.sinc_gaussian_coefficient) << "\n"
              << "m         " << format_float(p.m) << " s\n"
              << "n         " << format_float(p.n) << " s\n"
              << "a         " << format_float(p.a) << " s^2\n"
              << "b         " << format_float(p.b) << " s^2\n"
              << "c         " << format_float(p.c) << " s^2\n"
              << "dip_shift " << format_float(p.dip_shift) << " s\n"
              << "I         " << format_float(indistinguishability_analytic(p).value) << "\n"
              << "P         " << format_float(purity_analytic(p).value) << "\n";
}

int cmd_jsa(const CommonOptions& opt) {
    const SourceConfig cfg = load_config(opt);
    const GaussianJsaParams p = gaussian_params(cfg);
    print_params(cfg, p);

    const JsaGrid exact = exact_jsa(cfg, grid_spec(cfg));
    const JsaGrid gauss = gaussian_jsa(p, grid_spec(cfg));
    write_jsa_table(opt.out_path + ".exact.csv", exact);
    write_jsa_table(opt.out_path + ".gaussian.csv", gauss);
    write_jsa_binary(opt.out_path + ".exact.jsa", exact);
    write_jsa_binary(opt.out_path + ".gaussian.jsa", gauss);
    std::cout << "wrote " << opt.out_path << ".{exact,gaussian}.{csv,jsa}\n";
    return 0;
}

int cmd_hom(const CommonOptions& opt) {
    const SourceConfig cfg = load_config(opt);
    const GaussianJsaParams p = gaussian_params(cfg);
    const Eigen::VectorXd delays = default_or_parsed_delays(opt, cfg);

    NumericCurveOptions numeric_options;
    numeric_options.detuning = opt.detune;

    const DipCurve analytic = hom_dip_analytic(p, delays);
    const DipCurve exact = indistinguishability_curve_numeric(
        exact_jsa(cfg, grid_spec(cfg)), delays, DipModel::NumericExact, numeric_options);
    const DipCurve gauss = indistinguishability_curve_numeric(
        gaussian_jsa(p, grid_spec(cfg)), delays, DipModel::NumericGaussian, numeric_options);
    write_dip_curves_csv(opt.out_path + ".hom.csv", {analytic, exact, gauss});

    std::cout << "V_analytic_gaussian " << format_float(visibility(analytic, BaselineMode::OuterMean, opt.strict))
              << "\nV_numeric_exact     " << format_float(visibility(exact, BaselineMode::OuterMean, opt.strict))
              << "\nV_numeric_gaussian  " << format_float(visibility(gauss, BaselineMode::OuterMean, opt.strict))
              << "\nwrote " << opt.out_path << ".hom.csv\n";
    return 0;
}

int cmd_purity(const CommonOptions& opt) {
    const SourceConfig cfg = load_config(opt);
    const GaussianJsaParams p = gaussian_params(cfg);
    // The independent-photon dip is wider than the pair dip; default to a
    // range that lets both recover to the 1/2 baseline.
    const Eigen::VectorXd delays =
        parse_delays(opt.delays_spec == "-10000:10000:201" ? "-25000:25000:201" : opt.delays_spec);

    const JsaGrid exact = exact_jsa(cfg, grid_spec(cfg));
    const JsaGrid gauss = gaussian_jsa(p, grid_spec(cfg));

    // Pair dip (exact numerics, centered at dip_shift) vs independent-photon
    // dip (analytic, width a, centered at zero), on one shared delay axis.
    const DipCurve pair_curve =
        indistinguishability_curve_numeric(exact, delays, DipModel::NumericExact);
    const DipCurve independent = purity_dip_analytic(p, delays, opt.multipair);
    write_dip_curves_csv(opt.out_path + ".purity.csv", {pair_curve, independent});
    write_schmidt_csv(opt.out_path + ".schmidt.csv", schmidt_coefficients(gauss));

    const ReducedDensityGrid rho = reduced_density_grid(gauss, Photon::Signal);
    const OverlapDecomposition dec = overlap_decomposition(rho, rho);

    std::cout << "P_analytic          " << format_float(purity_analytic(p).value)
              << "\nP_numeric_svd       " << format_float(purity_numeric(gauss).value)
              << "\nV_pair_exact        " << format_float(visibility(pair_curve, BaselineMode::OuterMean, opt.strict))
              << "\nV_independent       " << format_float(visibility(independent, BaselineMode::OuterMean, opt.strict))
              << "\ntr_rho1_rho2        " << format_float(dec.tr_rho1_rho2)
              << "\ntr_rho1_sq          " << format_float(dec.tr_rho1_sq)
              << "\ntr_rho2_sq          " << format_float(dec.tr_rho2_sq)
              << "\nhs_distance_sq      " << format_float(dec.hs_distance_sq)
              << "\nwrote " << opt.out_path << ".purity.csv, " << opt.out_path << ".schmidt.csv\n";
    return 0;
}

struct OptimizeOptions {
    std::string fixed_side = "idler";
    double fixed_fwhm_nm = 1.0;
    std::string scan_spec = "0.1:3.0:291"; // nm
    bool identical = false;
};

int cmd_optimize_filter(const CommonOptions& opt, const OptimizeOptions& oopt) {
    const SourceConfig cfg = load_config(opt);
    const FilterSide fixed_side =
        oopt.fixed_side == "signal" ? FilterSide::Signal : FilterSide::Idler;
    const double fixed_center = fixed_side == FilterSide::Signal ? cfg.signal_center_wavelength
                                                                 : cfg.idler_center_wavelength;
    const double scanned_center = fixed_side == FilterSide::Signal ? cfg.idler_center_wavelength
                                                                   : cfg.signal_center_wavelength;
    const SpectralWidth fixed_sigma = fwhm_to_sigma(fixed_center, oopt.fixed_fwhm_nm * 1e-9);

    double lo_nm = 0, hi_nm = 0;
    int count = 0;
    if (std::sscanf(oopt.scan_spec.c_str(), "%lf:%lf:%d", &lo_nm, &hi_nm, &count) != 3)
        throw ConfigError("malformed --scan, expected MIN:MAX:COUNT in nm");
    const ScanRange range{fwhm_to_sigma(scanned_center, lo_nm * 1e-9),
                          fwhm_to_sigma(scanned_center, hi_nm * 1e-9), count};

    const FilterScanResult scan =
        filter_scan(cfg, fixed_side, fixed_sigma, range, ScanObjective::Indistinguishability);
    write_scan_csv(opt.out_path + ".scan.csv", scan, scanned_center);

    std::cout << "argmax_fwhm_nm      "
              << format_float(sigma_to_fwhm(scanned_center, scan.argmax_sigma) * 1e9)
              << "\nobjective_at_argmax " << format_float(scan.objective_at_argmax) << "\n";

    const auto closed = perfect_indistinguishability_filter(cfg, fixed_sigma);
    if (closed)
        std::cout << "closed_form_fwhm_nm "
                  << format_float(sigma_to_fwhm(scanned_center, *closed) * 1e9) << "\n";
    else
        std::cout << "closed_form_fwhm_nm INFEASIBLE\n";

    if (oopt.identical) {
        SourceConfig same = cfg;
        same.signal_filter_sigma = fwhm_to_sigma(cfg.signal_center_wavelength, oopt.fixed_fwhm_nm * 1e-9);
        same.idler_filter_sigma = fwhm_to_sigma(cfg.idler_center_wavelength, oopt.fixed_fwhm_nm * 1e-9);
        std::cout << "identical_filters_I "
                  << format_float(indistinguishability_analytic(gaussian_params(same)).value)
                  << "\n";
    }
    std::cout << "wrote " << opt.out_path << ".scan.csv\n";
    return 0;
}

int cmd_conditions(const CommonOptions& opt) {
    const SourceConfig cfg = load_config(opt);
    const SpectralWidth sigma_i = cfg.idler_filter_sigma.value_or(
        fwhm_to_sigma(cfg.idler_center_wavelength, 1.0e-9));
    const auto solution = perfect_indistinguishability_filter(cfg, sigma_i);
    std::cout << "idler_filter_fwhm_nm  "
              << format_float(sigma_to_fwhm(cfg.idler_center_wavelength, sigma_i) * 1e9) << "\n";
    if (solution)
        std::cout << "signal_filter_fwhm_nm "
                  << format_float(sigma_to_fwhm(cfg.signal_center_wavelength, *solution) * 1e9)
                  << "\n";
    else
        std::cout << "signal_filter_fwhm_nm INFEASIBLE\n";

    const double residual = factorability_residual(cfg);
    std::cout << "factorability_residual " << format_float(residual) << "\n";
    if (residual == 0.0)
        std::cout << "# c = 0: factorable joint amplitude, unit heralded purity unfiltered\n";
    else if (residual >= 1.0)
        std::cout << "# same-sign group-delay walk-offs: no pump bandwidth reaches zero\n";
    else
        std::cout << "# opposite-sign walk-offs: zero reachable by tuning the pump bandwidth\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SPDC joint-spectrum, interference and source-engineering calculator"};
    app.require_subcommand(1);

    CommonOptions jsa_opt, hom_opt, purity_opt, optimize_opt, conditions_opt;
    OptimizeOptions oopt;

    auto* jsa = app.add_subcommand("jsa", "joint spectral amplitude grids and model parameters");
    add_common(jsa, jsa_opt, false);
    auto* hom = app.add_subcommand("hom", "pair interference dip, analytic and numeric");
    add_common(hom, hom_opt, true);
    auto* purity = app.add_subcommand("purity", "single-photon purity and two-source dip");
    add_common(purity, purity_opt, true);
    purity->add_flag("--multipair", purity_opt.multipair,
                     "rescale the independent-photon dip by 1/3");
    auto* optimize = app.add_subcommand("optimize-filter", "filter-bandwidth scan and closed form");
    add_common(optimize, optimize_opt, false);
    optimize->add_option("--fix", oopt.fixed_side, "which side stays fixed: signal | idler");
    optimize->add_option("--fixed-fwhm-nm", oopt.fixed_fwhm_nm, "fixed filter bandwidth, nm FWHM");
    optimize->add_option("--scan", oopt.scan_spec, "scan range MIN:MAX:COUNT in nm FWHM");
    optimize->add_flag("--identical", oopt.identical,
                       "also print I for identical filters at the fixed bandwidth");
    auto* conditions = app.add_subcommand("conditions", "perfect-filter and factorability conditions");
    add_common(conditions, conditions_opt, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (jsa->parsed())
            return cmd_jsa(jsa_opt);
        if (hom->parsed())
            return cmd_hom(hom_opt);
        if (purity->parsed())
            return cmd_purity(purity_opt);
        if (optimize->parsed())
            return cmd_optimize_filter(optimize_opt, oopt);
        if (conditions->parsed())
            return cmd_conditions(conditions_opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const RangeError& e) {
        std::cerr << "range error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
