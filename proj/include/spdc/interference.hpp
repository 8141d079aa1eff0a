#pragma once

#include "spdc/dip_curve.hpp"
#include "spdc/jsa.hpp"

namespace spdc {

/// Exchange overlap of the two photons' spectral states, in [0, 1].
struct Indistinguishability {
    double value = 0.0;
};

/// Closed form for the Gaussian model:
///   I = sqrt[(4ab - 4c^2) / ((a+b)^2 - 4c^2)].
/// Equals 1 exactly when a = b. Requires a b > c^2.
Indistinguishability indistinguishability_analytic(const GaussianJsaParams& p);

/// Analytic pair-interference dip,
///   R_cc(dt) = 1/2 [1 - I exp(-2 (dt - dt')^2 / (a + b - 2c))],
/// with dt' = params.dip_shift. Requires a + b - 2c > 0.
DipCurve hom_dip_analytic(const GaussianJsaParams& p, const Eigen::VectorXd& delays);

struct NumericCurveOptions {
    /// Error threshold on the imaginary residual of the overlap integral.
    double max_imag_residual = 1e-6;
    /// Central-frequency offset between the interfering photons (rad/s),
    /// applied as a grid shift snapped to the nearest axis step. Exploration
    /// knob for extra distinguishability; 0 = none.
    double detuning = 0.0;
};

/// Quadrature of the exchange overlap
///   I(dt) = integral Phi(Ws,Wi) Phi*(Wi,Ws) exp[-i (Ws - Wi) dt]
/// on a square grid, per delay, giving R_cc = 1/2 [1 - Re I]. Throws
/// NumericalError when the imaginary residual exceeds the threshold.
DipCurve indistinguishability_curve_numeric(const JsaGrid& grid, const Eigen::VectorXd& delays,
                                            DipModel tag = DipModel::NumericGaussian,
                                            const NumericCurveOptions& options = {});

/// Single-point overlap I(dt) of the same integral (real part).
double exchange_overlap(const JsaGrid& grid, double delay);

enum class BaselineMode {
    OuterMean, // mean of the outer 10% of samples (default)
    RawMax,    // largest sample, for parity with naive lab practice
};

/// V = (baseline - min) / baseline. In strict mode, throws RangeError when
/// the sampled range spans fewer than 5 dip widths (baseline unreliable).
double visibility(const DipCurve& curve, BaselineMode mode = BaselineMode::OuterMean,
                  bool strict = false);

/// dt' = L (Ns - Ni) / 2.
double dip_shift(const SourceConfig& cfg);

} // namespace spdc
