#pragma once

#include "spdc/interference.hpp"
#include "spdc/purity.hpp"

#include <optional>
#include <vector>

namespace spdc {

/// Closed-form signal filter for perfect indistinguishability (a = b):
///   1/ss^2 = 1/si^2 + g L^2 [(Np - Ni)^2 - (Np - Ns)^2].
/// Returns nullopt when the bracket is non-positive (infeasible), a typed
/// outcome rather than an error.
std::optional<SpectralWidth> perfect_indistinguishability_filter(const SourceConfig& cfg,
                                                                 SpectralWidth sigma_idler);

enum class ScanObjective { Indistinguishability, Purity };
enum class FilterSide { Signal, Idler };

struct FilterScanResult {
    std::vector<SpectralWidth> scanned_sigma;
    std::vector<double> objective_values;
    SpectralWidth argmax_sigma;       // golden-section refined
    double objective_at_argmax = 0.0;
    ScanObjective objective = ScanObjective::Indistinguishability;
};

struct ScanRange {
    SpectralWidth min;
    SpectralWidth max;
    int count = 0;
};

/// Scan one filter bandwidth with the other held fixed, evaluating the
/// analytic objective at every point; the argmax is refined by golden-section
/// search on the bracketing interval.
///
/// `fixed` names the side that is held at `fixed_sigma`; the other side is
/// scanned. `refine_tolerance` is the absolute golden-section tolerance in
/// sigma units (defaults to the sigma equivalent of 1e-4 nm at the scanned
/// photon's center wavelength).
FilterScanResult filter_scan(const SourceConfig& cfg, FilterSide fixed, SpectralWidth fixed_sigma,
                             const ScanRange& range, ScanObjective objective,
                             std::optional<double> refine_tolerance = std::nullopt);

/// Signed relative residual of the spectral-factorability condition
///   [1/sp^2 + g L^2 (Np - Ns)(Np - Ni)] / (1/sp^2).
/// Zero means c = 0: a factorable joint amplitude, unit heralded purity with
/// no filters. Positive group-delay product makes zero unreachable.
double factorability_residual(const SourceConfig& cfg);

} // namespace spdc
