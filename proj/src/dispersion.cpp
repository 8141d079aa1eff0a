#include "spdc/dispersion.hpp"

#include "spdc/key_value_file.hpp"

#include <cmath>
#include <sstream>

namespace spdc {

namespace {

double gayer_temperature_factor(double temperature_k) {
    const double t_c = temperature_k - 273.15;
    return (t_c - 24.5) * (t_c + 570.82);
}

} // namespace

double SellmeierModel::index(double lambda_um, double temperature_k) const {
    const double l2 = lambda_um * lambda_um;
    switch (form) {
    case Form::Constant:
        return a[0];
    case Form::Cauchy:
        return a[0] + a[1] / l2 + a[2] * l2;
    case Form::Gayer08: {
        const double f = b.empty() ? 0.0 : gayer_temperature_factor(temperature_k);
        const double b1 = b.empty() ? 0.0 : b[0];
        const double b2 = b.empty() ? 0.0 : b[1];
        const double b3 = b.empty() ? 0.0 : b[2];
        const double b4 = b.empty() ? 0.0 : b[3];
        const double pole1 = a[2] + b3 * f;
        const double n2 = a[0] + b1 * f + (a[1] + b2 * f) / (l2 - pole1 * pole1)
                        + (a[3] + b4 * f) / (l2 - a[4] * a[4]) - a[5] * l2;
        if (!(n2 > 0.0))
            throw DomainError("refractive index model is non-physical at lambda = "
                              + std::to_string(lambda_um) + " um");
        return std::sqrt(n2);
    }
    }
    throw DomainError("unknown Sellmeier form");
}

double SellmeierModel::index_derivative(double lambda_um, double temperature_k) const {
    const double l2 = lambda_um * lambda_um;
    switch (form) {
    case Form::Constant:
        return 0.0;
    case Form::Cauchy:
        return -2.0 * a[1] / (l2 * lambda_um) + 2.0 * a[2] * lambda_um;
    case Form::Gayer08: {
        const double f = b.empty() ? 0.0 : gayer_temperature_factor(temperature_k);
        const double b2 = b.empty() ? 0.0 : b[1];
        const double b3 = b.empty() ? 0.0 : b[2];
        const double b4 = b.empty() ? 0.0 : b[3];
        const double pole1 = a[2] + b3 * f;
        const double d1 = l2 - pole1 * pole1;
        const double d2 = l2 - a[4] * a[4];
        // d(n^2)/dl, then dn/dl = (d n^2/dl) / (2 n)
        const double dn2 = -2.0 * lambda_um * (a[1] + b2 * f) / (d1 * d1)
                           - 2.0 * lambda_um * (a[3] + b4 * f) / (d2 * d2)
                           - 2.0 * a[5] * lambda_um;
        return dn2 / (2.0 * index(lambda_um, temperature_k));
    }
    }
    throw DomainError("unknown Sellmeier form");
}

MaterialDispersion::MaterialDispersion(std::string name, std::map<std::string, SellmeierModel> axes,
                                       double lambda_min_m, double lambda_max_m)
    : name_(std::move(name)), axes_(std::move(axes)), lambda_min_(lambda_min_m),
      lambda_max_(lambda_max_m) {
    if (axes_.empty())
        throw ConfigError("material '" + name_ + "' has no axes");
    if (!(lambda_min_ > 0.0) || !(lambda_max_ > lambda_min_))
        throw ConfigError("material '" + name_ + "' has an empty validity range");
}

std::vector<std::string> MaterialDispersion::axis_names() const {
    std::vector<std::string> names;
    for (const auto& [k, _] : axes_)
        names.push_back(k);
    return names;
}

const SellmeierModel& MaterialDispersion::model(const std::string& axis) const {
    const auto it = axes_.find(axis);
    if (it == axes_.end())
        throw ConfigError("material '" + name_ + "' has no axis '" + axis + "'");
    return it->second;
}

void MaterialDispersion::check_range(double lambda_m) const {
    if (!(lambda_m >= lambda_min_ && lambda_m <= lambda_max_)) {
        std::ostringstream msg;
        msg << "wavelength " << lambda_m * 1e9 << " nm outside validity range of '" << name_
            << "' (" << lambda_min_ * 1e6 << "-" << lambda_max_ * 1e6 << " um)";
        throw RangeError(msg.str());
    }
}

double MaterialDispersion::refractive_index(const std::string& axis, double lambda_m,
                                            double temperature_k) const {
    check_range(lambda_m);
    return model(axis).index(lambda_m * 1e6, temperature_k);
}

double MaterialDispersion::group_index(const std::string& axis, double lambda_m,
                                       double temperature_k) const {
    check_range(lambda_m);
    const double l_um = lambda_m * 1e6;
    const auto& mdl = model(axis);
    return mdl.index(l_um, temperature_k) - l_um * mdl.index_derivative(l_um, temperature_k);
}

double MaterialDispersion::group_index_finite_difference(const std::string& axis, double lambda_m,
                                                         double temperature_k) const {
    check_range(lambda_m);
    const double l_um = lambda_m * 1e6;
    const double h = 1e-4; // 0.1 nm in um
    const auto& mdl = model(axis);
    const double dn = (mdl.index(l_um - 2 * h, temperature_k) - 8.0 * mdl.index(l_um - h, temperature_k)
                       + 8.0 * mdl.index(l_um + h, temperature_k) - mdl.index(l_um + 2 * h, temperature_k))
                      / (12.0 * h);
    return mdl.index(l_um, temperature_k) - l_um * dn;
}

InverseGroupVelocity inverse_group_velocity(const MaterialDispersion& material,
                                            const std::string& axis, double lambda_m,
                                            double temperature_k) {
    return InverseGroupVelocity{material.group_index(axis, lambda_m, temperature_k) / kSpeedOfLight};
}

MaterialDispersion load_material(const std::filesystem::path& path) {
    const KeyValueFile kv = KeyValueFile::parse_file(path);
    const std::string name = kv.require("material", "name");
    const auto range = kv.require_doubles("material", "valid_range_um");
    if (range.size() != 2)
        throw ConfigError(kv.origin() + ": valid_range_um needs exactly two values");

    std::map<std::string, SellmeierModel> axes;
    for (const auto& section : kv.section_names()) {
        const std::string prefix = "sellmeier.";
        if (section.rfind(prefix, 0) != 0)
            continue;
        const std::string axis = section.substr(prefix.size());
        SellmeierModel model;
        const std::string form = kv.require(section, "form");
        if (form == "gayer08")
            model.form = SellmeierModel::Form::Gayer08;
        else if (form == "cauchy")
            model.form = SellmeierModel::Form::Cauchy;
        else if (form == "constant")
            model.form = SellmeierModel::Form::Constant;
        else
            throw ConfigError(kv.origin() + ": unknown sellmeier form '" + form + "'");
        model.a = kv.require_doubles(section, "a");
        const size_t need = model.form == SellmeierModel::Form::Gayer08 ? 6
                          : model.form == SellmeierModel::Form::Cauchy  ? 3
                                                                        : 1;
        if (model.a.size() != need)
            throw ConfigError(kv.origin() + ": [" + section + "] form '" + form + "' needs "
                              + std::to_string(need) + " a-coefficients, got "
                              + std::to_string(model.a.size()));
        if (kv.get(section, "b")) {
            if (model.form != SellmeierModel::Form::Gayer08)
                throw ConfigError(kv.origin() + ": [" + section
                                  + "] b-coefficients only apply to the gayer08 form");
            model.b = kv.require_doubles(section, "b");
            if (model.b.size() != 4)
                throw ConfigError(kv.origin() + ": [" + section + "] needs 4 b-coefficients");
            if (!kv.has_section("temperature") || kv.require("temperature", "model") != "gayer08")
                throw ConfigError(kv.origin()
                                  + ": b-coefficients require [temperature] model = gayer08");
        }
        axes.emplace(axis, std::move(model));
    }
    if (axes.empty())
        throw ConfigError(kv.origin() + ": no [sellmeier.<axis>] section found");
    return MaterialDispersion(name, std::move(axes), range[0] * 1e-6, range[1] * 1e-6);
}

} // namespace spdc
