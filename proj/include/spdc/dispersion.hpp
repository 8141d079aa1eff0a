#pragma once

#include "spdc/units.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace spdc {

/// One refractive-index model for one polarization axis. Wavelengths are in
/// micrometers inside the model, as in standard Sellmeier tabulations.
///
/// Supported forms:
///   gayer08   n^2 = a1 + b1 f + (a2 + b2 f)/(l^2 - (a3 + b3 f)^2)
///                 + (a4 + b4 f)/(l^2 - a5^2) - a6 l^2
///             with f = (T_C - 24.5)(T_C + 570.82), T_C in Celsius.
///             Requires 6 a-coefficients; the 4 b-coefficients are optional
///             (omitted = temperature independent).
///   cauchy    n = a1 + a2 / l^2 + a3 l^2 (temperature independent)
///   constant  n = a1
struct SellmeierModel {
    enum class Form { Gayer08, Cauchy, Constant };

    Form form = Form::Constant;
    std::vector<double> a;
    std::vector<double> b; // temperature coefficients, gayer08 only

    double index(double lambda_um, double temperature_k) const;
    /// dn/dlambda in 1/um, by analytic differentiation of the model.
    double index_derivative(double lambda_um, double temperature_k) const;
};

/// Sellmeier-based dispersion for a named material with one model per
/// polarization axis. Immutable after load; safe to share across threads.
class MaterialDispersion {
public:
    MaterialDispersion(std::string name, std::map<std::string, SellmeierModel> axes,
                       double lambda_min_m, double lambda_max_m);

    const std::string& name() const { return name_; }
    double lambda_min() const { return lambda_min_; }
    double lambda_max() const { return lambda_max_; }
    bool has_axis(const std::string& axis) const { return axes_.count(axis) != 0; }
    std::vector<std::string> axis_names() const;

    /// Phase index n(lambda). Throws RangeError outside the validity window.
    double refractive_index(const std::string& axis, double lambda_m, double temperature_k) const;

    /// Group index n_g = n - lambda dn/dlambda.
    double group_index(const std::string& axis, double lambda_m, double temperature_k) const;

    /// Group index computed with a 5-point central difference of the phase
    /// index (step 0.1 nm). Cross-check for the analytic derivative path.
    double group_index_finite_difference(const std::string& axis, double lambda_m,
                                         double temperature_k) const;

private:
    const SellmeierModel& model(const std::string& axis) const;
    void check_range(double lambda_m) const;

    std::string name_;
    std::map<std::string, SellmeierModel> axes_;
    double lambda_min_;
    double lambda_max_;
};

/// N = n_g / c. Throws RangeError outside the material's validity window.
InverseGroupVelocity inverse_group_velocity(const MaterialDispersion& material,
                                            const std::string& axis, double lambda_m,
                                            double temperature_k);

/// Load a material file (sections [material], [sellmeier.<axis>], optional
/// [temperature]). See data/materials/ppln_mgo.mat for the schema.
MaterialDispersion load_material(const std::filesystem::path& path);

} // namespace spdc
