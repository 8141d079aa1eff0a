#include "spdc/interference.hpp"

#include <cmath>
#include <complex>

namespace spdc {

using std::complex;

std::string to_string(DipModel model) {
    switch (model) {
    case DipModel::AnalyticGaussian: return "analytic-gaussian";
    case DipModel::NumericExact: return "numeric-exact";
    case DipModel::NumericGaussian: return "numeric-gaussian";
    }
    return "?";
}

Indistinguishability indistinguishability_analytic(const GaussianJsaParams& p) {
    const double det = p.a * p.b - p.c * p.c;
    if (!(det > 0.0))
        throw DomainError("indistinguishability undefined for a b <= c^2");
    const double sum = p.a + p.b;
    const double value = std::sqrt(4.0 * det / (sum * sum - 4.0 * p.c * p.c));
    return Indistinguishability{value};
}

DipCurve hom_dip_analytic(const GaussianJsaParams& p, const Eigen::VectorXd& delays) {
    if (delays.size() == 0)
        throw DomainError("empty delay array");
    const double width = p.a + p.b - 2.0 * p.c;
    if (!(width > 0.0))
        throw DomainError("dip width parameter a + b - 2c must be positive");
    const double ind = indistinguishability_analytic(p).value;
    DipCurve curve;
    curve.delays = delays;
    curve.r_cc.resize(delays.size());
    curve.model = DipModel::AnalyticGaussian;
    for (Eigen::Index k = 0; k < delays.size(); ++k) {
        const double d = delays[k] - p.dip_shift;
        curve.r_cc[k] = 0.5 * (1.0 - ind * std::exp(-2.0 * d * d / width));
    }
    return curve;
}

namespace {

// Core of the exchange integrand with trapezoid weights folded in:
//   core(j,l) = Phi(j-k, l+k) conj(Phi(l-k, j+k)) w_j w_l
// where k is the detuning shift in axis steps. The delay phase factors
// separate, so each delay costs one weighted bilinear form.
struct ExchangeCore {
    Eigen::MatrixXcd core;
    Eigen::VectorXd axis; // axis samples covered by the trimmed range
};

ExchangeCore build_exchange_core(const JsaGrid& grid, double detuning) {
    if (!grid.is_square())
        throw ShapeError("exchange overlap requires a square grid");
    const auto& v = grid.values();
    const int n = static_cast<int>(v.rows());
    const int shift = static_cast<int>(std::llround(0.5 * detuning / grid.step_s()));
    // j-shift and j+shift must both stay on the grid.
    const int first = std::abs(shift);
    const int last = n - 1 - std::abs(shift);
    if (first > last)
        throw DomainError("detuning exceeds the grid span");
    const int count = last - first + 1;

    const Eigen::VectorXd w = JsaGrid::trapezoid_weights(grid.omega_s_axis());
    ExchangeCore out;
    out.core.resize(count, count);
    out.axis.resize(count);
    for (int j = 0; j < count; ++j)
        out.axis[j] = grid.omega_s_axis()[first + j];
    for (int j = 0; j < count; ++j) {
        const int js = first + j;
        for (int l = 0; l < count; ++l) {
            const int ls = first + l;
            out.core(j, l) = v(js - shift, ls + shift) * std::conj(v(ls - shift, js + shift))
                             * w[js] * w[ls];
        }
    }
    return out;
}

complex<double> overlap_at(const ExchangeCore& ec, double delay) {
    const Eigen::Index n = ec.axis.size();
    Eigen::VectorXcd left(n), right(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const complex<double> ph = std::polar(1.0, -ec.axis[k] * delay);
        left[k] = ph;
        right[k] = std::conj(ph);
    }
    return left.transpose() * (ec.core * right);
}

} // namespace

DipCurve indistinguishability_curve_numeric(const JsaGrid& grid, const Eigen::VectorXd& delays,
                                            DipModel tag, const NumericCurveOptions& options) {
    if (delays.size() == 0)
        throw DomainError("empty delay array");
    const ExchangeCore ec = build_exchange_core(grid, options.detuning);
    DipCurve curve;
    curve.delays = delays;
    curve.r_cc.resize(delays.size());
    curve.model = tag;
    double residual = 0.0;
    for (Eigen::Index k = 0; k < delays.size(); ++k) {
        const complex<double> overlap = overlap_at(ec, delays[k]);
        residual = std::max(residual, std::abs(overlap.imag()));
        curve.r_cc[k] = 0.5 * (1.0 - overlap.real());
    }
    curve.max_imag_residual = residual;
    if (residual > options.max_imag_residual)
        throw NumericalError("imaginary residual of the overlap integral is "
                             + std::to_string(residual) + " (threshold "
                             + std::to_string(options.max_imag_residual) + ")");
    return curve;
}

double exchange_overlap(const JsaGrid& grid, double delay) {
    const ExchangeCore ec = build_exchange_core(grid, 0.0);
    return overlap_at(ec, delay).real();
}

double visibility(const DipCurve& curve, BaselineMode mode, bool strict) {
    const Eigen::Index n = curve.r_cc.size();
    if (n < 3)
        throw DomainError("curve too short for a visibility estimate");
    double baseline = 0.0;
    if (mode == BaselineMode::RawMax) {
        baseline = curve.r_cc.maxCoeff();
    } else {
        const Eigen::Index edge = std::max<Eigen::Index>(1, n / 20); // 5% per side
        double sum = 0.0;
        for (Eigen::Index k = 0; k < edge; ++k)
            sum += curve.r_cc[k] + curve.r_cc[n - 1 - k];
        baseline = sum / static_cast<double>(2 * edge);
    }
    if (!(baseline > 0.0))
        throw DomainError("curve baseline is not positive");
    Eigen::Index min_at = 0;
    const double min_value = curve.r_cc.minCoeff(&min_at);

    if (strict) {
        // Half-recovery points around the minimum give the dip width estimate.
        const double half = baseline - 0.5 * (baseline - min_value);
        Eigen::Index left = min_at, right = min_at;
        while (left > 0 && curve.r_cc[left] < half)
            --left;
        while (right < n - 1 && curve.r_cc[right] < half)
            ++right;
        const bool recovered = curve.r_cc[left] >= half && curve.r_cc[right] >= half;
        const double width = curve.delays[right] - curve.delays[left];
        const double span = curve.delays[n - 1] - curve.delays[0];
        if (!recovered || !(width > 0.0) || span < 5.0 * width)
            throw RangeError("delay range spans fewer than 5 dip widths; baseline unreliable");
    }
    return (baseline - min_value) / baseline;
}

double dip_shift(const SourceConfig& cfg) {
    const double ns = cfg.signal_inverse_group_velocity().value;
    const double ni = cfg.idler_inverse_group_velocity().value;
    return cfg.crystal_length * (ns - ni) / 2.0;
}

} // namespace spdc
