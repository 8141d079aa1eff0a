#include "spdc/purity.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <complex>

namespace spdc {

namespace {

void check_matching_axes(const ReducedDensityGrid& r1, const ReducedDensityGrid& r2) {
    if (r1.omega.size() != r2.omega.size())
        throw ShapeError("density grids have different sizes");
    const double scale = std::max(std::abs(r1.omega[r1.omega.size() - 1]), 1.0);
    if ((r1.omega - r2.omega).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ShapeError("density grids have different axes");
}

// Weighted traces: Tr[A B] = sum_jk A(j,k) B(k,j) w_j w_k.
double weighted_product_trace(const ReducedDensityGrid& r1, const Eigen::MatrixXcd& m2) {
    const Eigen::VectorXd w = JsaGrid::trapezoid_weights(r1.omega);
    std::complex<double> acc = 0.0;
    const Eigen::Index n = r1.omega.size();
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
            acc += r1.rho(j, k) * m2(k, j) * w[j] * w[k];
    return acc.real();
}

} // namespace

double ReducedDensityGrid::trace() const {
    const Eigen::VectorXd w = JsaGrid::trapezoid_weights(omega);
    std::complex<double> acc = 0.0;
    for (Eigen::Index k = 0; k < omega.size(); ++k)
        acc += rho(k, k) * w[k];
    return acc.real();
}

double ReducedDensityGrid::hermiticity_defect() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

ReducedDensityGrid reduced_density_grid(const JsaGrid& grid, Photon which) {
    const auto& v = grid.values();
    ReducedDensityGrid out;
    if (which == Photon::Signal) {
        out.omega = grid.omega_s_axis();
        const Eigen::VectorXd w = JsaGrid::trapezoid_weights(grid.omega_i_axis());
        out.rho = v * w.asDiagonal() * v.adjoint();
    } else {
        out.omega = grid.omega_i_axis();
        const Eigen::VectorXd w = JsaGrid::trapezoid_weights(grid.omega_s_axis());
        out.rho = v.transpose() * w.asDiagonal() * v.conjugate();
    }
    const double raw_trace = out.trace();
    if (std::abs(raw_trace - 1.0) > 1e-4)
        throw ResolutionError("reduced density trace deviates from 1 by "
                              + std::to_string(std::abs(raw_trace - 1.0))
                              + " before renormalization");
    out.rho /= raw_trace;
    return out;
}

Eigen::VectorXd schmidt_coefficients(const JsaGrid& grid) {
    if (!grid.is_square())
        throw ShapeError("Schmidt decomposition requires a square grid");
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(grid.values());
    if (svd.info() != Eigen::Success)
        throw NumericalError("SVD did not converge");
    const double cell = grid.step_s() * grid.step_i();
    Eigen::VectorXd lambda = svd.singularValues().array().square() * cell;
    const double total = lambda.sum();
    if (!(total > 0.0))
        throw NumericalError("Schmidt spectrum is empty");
    return lambda / total;
}

Purity purity_numeric(const JsaGrid& grid) {
    const Eigen::VectorXd lambda = schmidt_coefficients(grid);
    return Purity{lambda.squaredNorm()};
}

Purity purity_analytic(const GaussianJsaParams& p) {
    if (!(p.a > 0.0) || !(p.b > 0.0))
        throw DomainError("a and b must be positive");
    const double ratio = p.c * p.c / (p.a * p.b);
    if (ratio > 1.0)
        throw DomainError("purity undefined for c^2 > a b");
    return Purity{std::sqrt(1.0 - ratio)};
}

DipCurve purity_dip_analytic(const GaussianJsaParams& p, const Eigen::VectorXd& delays,
                             bool multipair_floor) {
    if (delays.size() == 0)
        throw DomainError("empty delay array");
    if (!(p.a > 0.0))
        throw DomainError("width parameter a must be positive");
    const double amplitude = purity_analytic(p).value / (multipair_floor ? 3.0 : 1.0);
    DipCurve curve;
    curve.delays = delays;
    curve.r_cc.resize(delays.size());
    curve.model = DipModel::AnalyticGaussian;
    for (Eigen::Index k = 0; k < delays.size(); ++k) {
        const double dt = delays[k];
        curve.r_cc[k] = 0.5 * (1.0 - amplitude * std::exp(-dt * dt / p.a));
    }
    return curve;
}

DipCurve purity_curve_numeric(const ReducedDensityGrid& rho1, const ReducedDensityGrid& rho2,
                              const Eigen::VectorXd& delays, DipModel tag) {
    if (delays.size() == 0)
        throw DomainError("empty delay array");
    check_matching_axes(rho1, rho2);
    const Eigen::VectorXd w = JsaGrid::trapezoid_weights(rho1.omega);
    // core(j,k) = rho1(j,k) rho2(k,j) w_j w_k; the delay phase separates.
    const Eigen::Index n = rho1.omega.size();
    Eigen::MatrixXcd core(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
            core(j, k) = rho1.rho(j, k) * rho2.rho(k, j) * w[j] * w[k];

    DipCurve curve;
    curve.delays = delays;
    curve.r_cc.resize(delays.size());
    curve.model = tag;
    double residual = 0.0;
    for (Eigen::Index d = 0; d < delays.size(); ++d) {
        Eigen::VectorXcd left(n), right(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            const std::complex<double> ph = std::polar(1.0, -rho1.omega[k] * delays[d]);
            left[k] = ph;
            right[k] = std::conj(ph);
        }
        const std::complex<double> overlap = left.transpose() * (core * right);
        residual = std::max(residual, std::abs(overlap.imag()));
        curve.r_cc[d] = 0.5 * (1.0 - overlap.real());
    }
    curve.max_imag_residual = residual;
    return curve;
}

OverlapDecomposition overlap_decomposition(const ReducedDensityGrid& rho1,
                                           const ReducedDensityGrid& rho2) {
    check_matching_axes(rho1, rho2);
    OverlapDecomposition out;
    out.tr_rho1_rho2 = weighted_product_trace(rho1, rho2.rho);
    out.tr_rho1_sq = weighted_product_trace(rho1, rho1.rho);
    out.tr_rho2_sq = weighted_product_trace(rho2, rho2.rho);
    const Eigen::MatrixXcd diff = rho1.rho - rho2.rho;
    const Eigen::VectorXd w = JsaGrid::trapezoid_weights(rho1.omega);
    double hs = 0.0;
    const Eigen::Index n = rho1.omega.size();
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
            hs += std::norm(diff(j, k)) * w[j] * w[k];
    out.hs_distance_sq = hs;

    const double reconstructed = 0.5 * (out.tr_rho1_sq + out.tr_rho2_sq - out.hs_distance_sq);
    if (std::abs(reconstructed - out.tr_rho1_rho2) > 1e-8)
        throw NumericalError("overlap decomposition identity violated by "
                             + std::to_string(std::abs(reconstructed - out.tr_rho1_rho2)));
    return out;
}

} // namespace spdc
