#include "spdc/jsa.hpp"

#include <cmath>
#include <complex>

namespace spdc {

namespace {

double sinc(double x) {
    if (x == 0.0)
        return 1.0;
    return std::sin(x) / x;
}

Eigen::VectorXd make_axis(double half_width, int points) {
    Eigen::VectorXd axis(points);
    // affine combination keeps the axis symmetric to the last ulp
    for (int k = 0; k < points; ++k)
        axis[k] = (-half_width * (points - 1 - k) + half_width * k) / (points - 1);
    return axis;
}

void check_grid_spec(const GridSpec& spec) {
    if (spec.points_per_axis < 64)
        throw DomainError("grid needs at least 64 points per axis");
    if (!(spec.half_width_multiplier >= 3.0))
        throw DomainError("half-width multiplier must be at least 3");
}

double grid_half_width(const GaussianJsaParams& p, const GridSpec& spec) {
    return spec.half_width_multiplier
           * std::max(p.signal_marginal_sigma(), p.idler_marginal_sigma());
}

// Norm drift between the full grid and its 2x-coarsened subsample. Trapezoid
// error scales as h^2, so an unstable norm shows up as a large difference.
void check_resolution(const JsaGrid& grid) {
    const auto& v = grid.values();
    const int n_s = static_cast<int>(v.rows());
    const int n_i = static_cast<int>(v.cols());
    Eigen::VectorXd ws = JsaGrid::trapezoid_weights(grid.omega_s_axis());
    Eigen::VectorXd wi = JsaGrid::trapezoid_weights(grid.omega_i_axis());
    double full = 0.0;
    for (int j = 0; j < n_s; ++j)
        for (int k = 0; k < n_i; ++k)
            full += ws[j] * wi[k] * std::norm(v(j, k));
    double coarse = 0.0;
    const int m_s = (n_s + 1) / 2, m_i = (n_i + 1) / 2;
    for (int j = 0; j < m_s; ++j) {
        const double wsj = (j == 0 || j == m_s - 1) ? 1.0 : 2.0;
        for (int k = 0; k < m_i; ++k) {
            const double wik = (k == 0 || k == m_i - 1) ? 1.0 : 2.0;
            coarse += wsj * wik * std::norm(v(2 * j, 2 * k));
        }
    }
    coarse *= grid.step_s() * grid.step_i(); // (2h/2)^2 per sample pair
    if (std::abs(full - coarse) > 1e-4 * full)
        throw ResolutionError("grid too coarse: norm drifts by "
                              + std::to_string(std::abs(full - coarse) / full)
                              + " under 2x coarsening");
}

} // namespace

double GaussianJsaParams::signal_marginal_sigma() const {
    const double det = a * b - c * c;
    if (!(det > 0.0))
        throw DomainError("quadratic form is not positive definite (a b <= c^2)");
    return std::sqrt(b / det);
}

double GaussianJsaParams::idler_marginal_sigma() const {
    const double det = a * b - c * c;
    if (!(det > 0.0))
        throw DomainError("quadratic form is not positive definite (a b <= c^2)");
    return std::sqrt(a / det);
}

GaussianJsaParams gaussian_params(const SourceConfig& cfg) {
    cfg.validate();
    const double np = cfg.pump_inverse_group_velocity().value;
    const double ns = cfg.signal_inverse_group_velocity().value;
    const double ni = cfg.idler_inverse_group_velocity().value;
    const double length = cfg.crystal_length;
    const double gamma = cfg.sinc_gaussian_coefficient;

    GaussianJsaParams p;
    p.m = length * (np - ns);
    p.n = length * (np - ni);
    const double pump_term = 1.0 / (cfg.pump_sigma.sigma * cfg.pump_sigma.sigma);
    const double signal_term =
        cfg.signal_filter_sigma
            ? 1.0 / (cfg.signal_filter_sigma->sigma * cfg.signal_filter_sigma->sigma)
            : 0.0;
    const double idler_term =
        cfg.idler_filter_sigma
            ? 1.0 / (cfg.idler_filter_sigma->sigma * cfg.idler_filter_sigma->sigma)
            : 0.0;
    p.a = gamma * p.m * p.m + pump_term + signal_term;
    p.b = gamma * p.n * p.n + pump_term + idler_term;
    p.c = gamma * p.m * p.n + pump_term;
    p.dip_shift = length * (ns - ni) / 2.0;
    return p;
}

JsaGrid::JsaGrid(Eigen::VectorXd omega_s_axis, Eigen::VectorXd omega_i_axis,
                 Eigen::MatrixXcd values)
    : omega_s_(std::move(omega_s_axis)), omega_i_(std::move(omega_i_axis)),
      values_(std::move(values)) {
    if (omega_s_.size() < 2 || omega_i_.size() < 2)
        throw ShapeError("grid axes need at least two points");
    if (values_.rows() != omega_s_.size() || values_.cols() != omega_i_.size())
        throw ShapeError("grid values do not match axis lengths");
    for (const auto* axis : {&omega_s_, &omega_i_}) {
        const double h = (*axis)[1] - (*axis)[0];
        if (!(h > 0.0))
            throw ShapeError("grid axes must be strictly increasing");
        for (Eigen::Index k = 1; k < axis->size(); ++k) {
            const double step = (*axis)[k] - (*axis)[k - 1];
            if (std::abs(step - h) > 1e-12 * std::abs(h))
                throw ShapeError("grid axes must be uniform");
        }
    }
}

bool JsaGrid::is_square() const {
    return omega_s_.size() == omega_i_.size()
           && (omega_s_ - omega_i_).cwiseAbs().maxCoeff() <= 1e-12 * std::abs(omega_s_[omega_s_.size() - 1]);
}

Eigen::VectorXd JsaGrid::trapezoid_weights(const Eigen::VectorXd& axis) {
    const double h = axis[1] - axis[0];
    Eigen::VectorXd w = Eigen::VectorXd::Constant(axis.size(), h);
    w[0] = h / 2.0;
    w[axis.size() - 1] = h / 2.0;
    return w;
}

double JsaGrid::norm_squared() const {
    const Eigen::VectorXd ws = trapezoid_weights(omega_s_);
    const Eigen::VectorXd wi = trapezoid_weights(omega_i_);
    return (ws.asDiagonal() * values_.cwiseAbs2() * wi.asDiagonal()).sum();
}

void JsaGrid::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0))
        throw NumericalError("cannot normalize a zero grid");
    values_ /= std::sqrt(n2);
}

JsaGrid exact_jsa(const SourceConfig& cfg, const GridSpec& spec) {
    check_grid_spec(spec);
    const GaussianJsaParams p = gaussian_params(cfg);
    const double half_width = grid_half_width(p, spec);
    const Eigen::VectorXd axis = make_axis(half_width, spec.points_per_axis);

    const double sp2 = cfg.pump_sigma.sigma * cfg.pump_sigma.sigma;
    const double inv_ss2 =
        cfg.signal_filter_sigma
            ? 1.0 / (cfg.signal_filter_sigma->sigma * cfg.signal_filter_sigma->sigma)
            : 0.0;
    const double inv_si2 =
        cfg.idler_filter_sigma
            ? 1.0 / (cfg.idler_filter_sigma->sigma * cfg.idler_filter_sigma->sigma)
            : 0.0;

    const int n = spec.points_per_axis;
    Eigen::MatrixXcd values(n, n);
    for (int j = 0; j < n; ++j) {
        const double ws = axis[j];
        for (int k = 0; k < n; ++k) {
            const double wi = axis[k];
            const double half_mismatch = 0.5 * (p.m * ws + p.n * wi); // Dk L / 2
            const double sum = ws + wi;
            // amplitude carries the sinc sign, so build the complex value
            // explicitly rather than through std::polar
            const double amplitude = std::exp(-sum * sum / (4.0 * sp2)
                                              - 0.25 * inv_ss2 * ws * ws
                                              - 0.25 * inv_si2 * wi * wi)
                                     * sinc(half_mismatch);
            values(j, k) = amplitude
                           * std::complex<double>(std::cos(half_mismatch), -std::sin(half_mismatch));
        }
    }
    JsaGrid grid(axis, axis, std::move(values));
    check_resolution(grid);
    grid.normalize();
    return grid;
}

JsaGrid gaussian_jsa(const GaussianJsaParams& params, const GridSpec& spec) {
    check_grid_spec(spec);
    if (!(params.a * params.b > params.c * params.c))
        throw DomainError("Gaussian model is not normalizable (a b <= c^2)");
    const double half_width = grid_half_width(params, spec);
    const Eigen::VectorXd axis = make_axis(half_width, spec.points_per_axis);

    const int n = spec.points_per_axis;
    Eigen::MatrixXcd values(n, n);
    for (int j = 0; j < n; ++j) {
        const double ws = axis[j];
        for (int k = 0; k < n; ++k) {
            const double wi = axis[k];
            const double magnitude = std::exp(-0.25 * params.a * ws * ws
                                              - 0.25 * params.b * wi * wi
                                              - 0.5 * params.c * ws * wi);
            values(j, k) = std::polar(magnitude, -0.5 * (params.m * ws + params.n * wi));
        }
    }
    JsaGrid grid(axis, axis, std::move(values));
    grid.normalize();
    return grid;
}

JsaGrid swap_axes(const JsaGrid& grid) {
    if (!grid.is_square())
        throw ShapeError("swap_axes requires a square grid with equal axes");
    return JsaGrid(grid.omega_s_axis(), grid.omega_i_axis(), grid.values().transpose());
}

} // namespace spdc
