#pragma once

#include "spdc/source_config.hpp"

#include <Eigen/Dense>

#include <complex>

namespace spdc {

/// The five scalars of the Gaussian joint-amplitude model
///   Phi = N exp[-(a/4) Ws^2 - (b/4) Wi^2 - (c/2) Ws Wi - (i/2)(m Ws + n Wi)]
/// with a = g m^2 + 1/sp^2 + 1/ss^2, b = g n^2 + 1/sp^2 + 1/si^2,
/// c = g m n + 1/sp^2, m = L (Np - Ns), n = L (Np - Ni).
///
/// dip_shift = L (Ns - Ni) / 2 travels alongside so analytic interference
/// curves never silently assume a centered dip.
struct GaussianJsaParams {
    double a = 0.0; // s^2
    double b = 0.0; // s^2
    double c = 0.0; // s^2
    double m = 0.0; // s
    double n = 0.0; // s
    double dip_shift = 0.0; // s

    /// Standard deviations of the |Phi|^2 marginals, from the inverse of the
    /// quadratic form: sigma_s = sqrt(b/(ab-c^2)), sigma_i = sqrt(a/(ab-c^2)).
    double signal_marginal_sigma() const;
    double idler_marginal_sigma() const;
};

/// Evaluate the Gaussian-model parameters for a source. Dispersion errors
/// propagate as RangeError.
GaussianJsaParams gaussian_params(const SourceConfig& cfg);

struct GridSpec {
    int points_per_axis = 512;
    double half_width_multiplier = 5.0;
};

/// Complex amplitude on a square detuning grid with uniform, strictly
/// increasing axes. Normalized so that the 2-D trapezoid of |Phi|^2 is 1.
class JsaGrid {
public:
    JsaGrid(Eigen::VectorXd omega_s_axis, Eigen::VectorXd omega_i_axis, Eigen::MatrixXcd values);

    const Eigen::VectorXd& omega_s_axis() const { return omega_s_; }
    const Eigen::VectorXd& omega_i_axis() const { return omega_i_; }
    const Eigen::MatrixXcd& values() const { return values_; }
    double step_s() const { return omega_s_[1] - omega_s_[0]; }
    double step_i() const { return omega_i_[1] - omega_i_[0]; }
    bool is_square() const;

    /// Trapezoid weights along one axis (h at interior points, h/2 at ends).
    static Eigen::VectorXd trapezoid_weights(const Eigen::VectorXd& axis);

    double norm_squared() const;
    /// Rescale so norm_squared() == 1. Idempotent.
    void normalize();

private:
    Eigen::VectorXd omega_s_;
    Eigen::VectorXd omega_i_;
    Eigen::MatrixXcd values_; // row: signal index, column: idler index
};

/// Exact mode function on a grid: pump envelope, sinc phase matching with the
/// first-order mismatch DkL/2 = (m Ws + n Wi)/2, phase exp[-i DkL/2] and
/// Gaussian filters. Grid extents are half_width_multiplier times the larger
/// Gaussian-model marginal. Throws ResolutionError when the norm is not
/// stable under 2x coarsening.
JsaGrid exact_jsa(const SourceConfig& cfg, const GridSpec& spec);

/// Gaussian-model amplitude on a grid with the same conventions as exact_jsa.
/// Requires a b > c^2.
JsaGrid gaussian_jsa(const GaussianJsaParams& params, const GridSpec& spec);

/// Phi(Wi, Ws): transposed values. Requires a square grid with equal axes.
JsaGrid swap_axes(const JsaGrid& grid);

} // namespace spdc
