#include "spdc/engineering.hpp"

#include <cmath>

namespace spdc {

namespace {

SourceConfig with_filters(const SourceConfig& cfg, SpectralWidth signal, SpectralWidth idler) {
    SourceConfig out = cfg;
    out.signal_filter_sigma = signal;
    out.idler_filter_sigma = idler;
    return out;
}

double evaluate_objective(const SourceConfig& cfg, FilterSide fixed, SpectralWidth fixed_sigma,
                          SpectralWidth scanned, ScanObjective objective) {
    const SpectralWidth signal = fixed == FilterSide::Signal ? fixed_sigma : scanned;
    const SpectralWidth idler = fixed == FilterSide::Idler ? fixed_sigma : scanned;
    const GaussianJsaParams p = gaussian_params(with_filters(cfg, signal, idler));
    return objective == ScanObjective::Indistinguishability
               ? indistinguishability_analytic(p).value
               : purity_analytic(p).value;
}

} // namespace

std::optional<SpectralWidth> perfect_indistinguishability_filter(const SourceConfig& cfg,
                                                                 SpectralWidth sigma_idler) {
    cfg.validate();
    if (!(sigma_idler.sigma > 0.0))
        throw DomainError("idler sigma must be positive");
    const double np = cfg.pump_inverse_group_velocity().value;
    const double ns = cfg.signal_inverse_group_velocity().value;
    const double ni = cfg.idler_inverse_group_velocity().value;
    const double length = cfg.crystal_length;
    const double gamma = cfg.sinc_gaussian_coefficient;
    const double m = length * (np - ns);
    const double n = length * (np - ni);
    const double bracket = 1.0 / (sigma_idler.sigma * sigma_idler.sigma) + gamma * (n * n - m * m);
    if (!(bracket > 0.0))
        return std::nullopt;
    return SpectralWidth{1.0 / std::sqrt(bracket)};
}

FilterScanResult filter_scan(const SourceConfig& cfg, FilterSide fixed, SpectralWidth fixed_sigma,
                             const ScanRange& range, ScanObjective objective,
                             std::optional<double> refine_tolerance) {
    cfg.validate();
    if (!(range.min.sigma > 0.0) || !(range.max.sigma > range.min.sigma))
        throw DomainError("scan range must be positive and increasing");
    if (range.count < 3)
        throw DomainError("scan needs at least 3 points");
    if (!(fixed_sigma.sigma > 0.0))
        throw DomainError("fixed filter sigma must be positive");

    FilterScanResult result;
    result.objective = objective;
    result.scanned_sigma.reserve(range.count);
    result.objective_values.reserve(range.count);

    const double step = (range.max.sigma - range.min.sigma) / (range.count - 1);
    int best = 0;
    for (int k = 0; k < range.count; ++k) {
        const SpectralWidth s{range.min.sigma + k * step};
        const double value = evaluate_objective(cfg, fixed, fixed_sigma, s, objective);
        if (!std::isfinite(value))
            throw NumericalError("objective is not finite at sigma = " + std::to_string(s.sigma));
        result.scanned_sigma.push_back(s);
        result.objective_values.push_back(value);
        if (value > result.objective_values[best])
            best = k;
    }

    // Golden-section refinement on the bracketing interval around the best sample.
    const double scanned_center = fixed == FilterSide::Idler ? cfg.signal_center_wavelength
                                                             : cfg.idler_center_wavelength;
    const double tol = refine_tolerance.value_or(fwhm_to_sigma(scanned_center, 1e-4 * 1e-9).sigma);
    double lo = result.scanned_sigma[std::max(0, best - 1)].sigma;
    double hi = result.scanned_sigma[std::min(range.count - 1, best + 1)].sigma;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = evaluate_objective(cfg, fixed, fixed_sigma, SpectralWidth{x1}, objective);
    double f2 = evaluate_objective(cfg, fixed, fixed_sigma, SpectralWidth{x2}, objective);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = evaluate_objective(cfg, fixed, fixed_sigma, SpectralWidth{x2}, objective);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = evaluate_objective(cfg, fixed, fixed_sigma, SpectralWidth{x1}, objective);
        }
    }
    const double refined = 0.5 * (lo + hi);
    result.argmax_sigma = SpectralWidth{refined};
    result.objective_at_argmax =
        evaluate_objective(cfg, fixed, fixed_sigma, SpectralWidth{refined}, objective);
    // Keep the raw sample if refinement did not improve on it.
    if (result.objective_values[best] > result.objective_at_argmax) {
        result.argmax_sigma = result.scanned_sigma[best];
        result.objective_at_argmax = result.objective_values[best];
    }
    return result;
}

double factorability_residual(const SourceConfig& cfg) {
    cfg.validate();
    const double np = cfg.pump_inverse_group_velocity().value;
    const double ns = cfg.signal_inverse_group_velocity().value;
    const double ni = cfg.idler_inverse_group_velocity().value;
    const double length = cfg.crystal_length;
    const double pump_term = 1.0 / (cfg.pump_sigma.sigma * cfg.pump_sigma.sigma);
    const double group_product =
        cfg.sinc_gaussian_coefficient * length * length * (np - ns) * (np - ni);
    return (pump_term + group_product) / pump_term;
}

} // namespace spdc
