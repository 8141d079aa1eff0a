#pragma once

#include <Eigen/Dense>

#include <string>

namespace spdc {

enum class DipModel { AnalyticGaussian, NumericExact, NumericGaussian };

std::string to_string(DipModel model);

/// Sampled coincidence-probability pattern R_cc(dt).
struct DipCurve {
    Eigen::VectorXd delays; // s
    Eigen::VectorXd r_cc;   // probabilities in [0, 1/2]
    DipModel model = DipModel::AnalyticGaussian;
    /// Largest |Im| of the overlap integral across delays (numeric curves only).
    double max_imag_residual = 0.0;
};

} // namespace spdc
