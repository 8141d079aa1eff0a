#include "spdc/source_config.hpp"

#include "spdc/key_value_file.hpp"

#include <cmath>
#include <sstream>

namespace spdc {

void SourceConfig::validate() const {
    if (!material)
        throw ConfigError("source config has no material");
    if (!(crystal_length > 0.0))
        throw ConfigError("crystal length must be positive");
    if (!(pump_sigma.sigma > 0.0))
        throw ConfigError("pump sigma must be positive");
    if (signal_filter_sigma && !(signal_filter_sigma->sigma > 0.0))
        throw ConfigError("signal filter sigma must be positive");
    if (idler_filter_sigma && !(idler_filter_sigma->sigma > 0.0))
        throw ConfigError("idler filter sigma must be positive");
    if (!(temperature > 0.0))
        throw ConfigError("temperature must be positive");
    if (!(sinc_gaussian_coefficient > 0.0))
        throw ConfigError("sinc-Gaussian coefficient must be positive");
    const double lhs = 1.0 / pump_center_wavelength;
    const double rhs = 1.0 / signal_center_wavelength + 1.0 / idler_center_wavelength;
    if (std::abs(lhs - rhs) > 1e-9 * lhs) {
        std::ostringstream msg;
        msg << "center wavelengths violate energy conservation: 1/" << pump_center_wavelength
            << " != 1/" << signal_center_wavelength << " + 1/" << idler_center_wavelength;
        throw ConfigError(msg.str());
    }
}

InverseGroupVelocity SourceConfig::pump_inverse_group_velocity() const {
    return inverse_group_velocity(*material, pump_axis, pump_center_wavelength, temperature);
}

InverseGroupVelocity SourceConfig::signal_inverse_group_velocity() const {
    return inverse_group_velocity(*material, signal_axis, signal_center_wavelength, temperature);
}

InverseGroupVelocity SourceConfig::idler_inverse_group_velocity() const {
    return inverse_group_velocity(*material, idler_axis, idler_center_wavelength, temperature);
}

double parse_gamma(const std::string& text) {
    if (text == "alpha")
        return kGammaAlpha;
    if (text == "alpha2")
        return kGammaAlphaSquared;
    try {
        size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos == text.size() && v > 0.0)
            return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("gamma must be 'alpha', 'alpha2' or a positive number, got '" + text + "'");
}

SourceConfig load_source_config(const std::filesystem::path& path) {
    const KeyValueFile kv = KeyValueFile::parse_file(path);
    SourceConfig cfg;

    const std::filesystem::path material_path =
        path.parent_path() / kv.require("crystal", "material");
    if (!std::filesystem::exists(material_path))
        throw ConfigError(kv.origin() + ": material file not found: " + material_path.string());
    cfg.material = std::make_shared<MaterialDispersion>(load_material(material_path));

    cfg.pump_center_wavelength = kv.require_double("pump", "wavelength_nm") * 1e-9;
    cfg.pump_axis = kv.require("pump", "axis");
    cfg.pump_sigma =
        fwhm_to_sigma(cfg.pump_center_wavelength, kv.require_double("pump", "bandwidth_fwhm_nm") * 1e-9);

    cfg.crystal_length = kv.require_double("crystal", "length_mm") * 1e-3;
    cfg.temperature = kv.require_double("crystal", "temperature_k");
    if (auto g = kv.get("crystal", "gamma"))
        cfg.sinc_gaussian_coefficient = parse_gamma(*g);

    cfg.signal_center_wavelength = kv.require_double("filters", "signal_wavelength_nm") * 1e-9;
    cfg.idler_center_wavelength = kv.require_double("filters", "idler_wavelength_nm") * 1e-9;
    cfg.signal_axis = kv.require("filters", "signal_axis");
    cfg.idler_axis = kv.require("filters", "idler_axis");
    if (auto fwhm = kv.get_double("filters", "signal_fwhm_nm"))
        cfg.signal_filter_sigma = fwhm_to_sigma(cfg.signal_center_wavelength, *fwhm * 1e-9);
    if (auto fwhm = kv.get_double("filters", "idler_fwhm_nm"))
        cfg.idler_filter_sigma = fwhm_to_sigma(cfg.idler_center_wavelength, *fwhm * 1e-9);

    if (kv.has_section("grid")) {
        if (auto n = kv.get_double("grid", "points"))
            cfg.grid_points = static_cast<int>(*n);
        if (auto k = kv.get_double("grid", "half_width"))
            cfg.grid_half_width_multiplier = *k;
    }

    cfg.validate();
    return cfg;
}

} // namespace spdc
