#include "spdc/dispersion.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace spdc;
using namespace spdc::test;

namespace {

constexpr double kPaperTemperature = 333.15; // K, repo fixture constant

MaterialDispersion ppln() {
    return load_material(data_path("materials/ppln_mgo.mat"));
}

} // namespace

TEST_CASE("bundled PPLN fixture values at the operating temperature") {
    const auto mat = ppln();
    CHECK(mat.name() == "ppln_mgo_5pct_cln");

    // Phase and group indices, frozen repo fixtures for the reference source.
    CHECK(mat.refractive_index("o", 780e-9, kPaperTemperature)
          == doctest::Approx(2.259456986).epsilon(1e-7));
    CHECK(mat.refractive_index("o", 1560e-9, kPaperTemperature)
          == doctest::Approx(2.212663187).epsilon(1e-7));
    CHECK(mat.refractive_index("e", 1560e-9, kPaperTemperature)
          == doctest::Approx(2.140240183).epsilon(1e-7));
    CHECK(mat.group_index("o", 780e-9, kPaperTemperature)
          == doctest::Approx(2.367166817).epsilon(1e-7));
    CHECK(mat.group_index("e", 780e-9, kPaperTemperature)
          == doctest::Approx(2.272256447).epsilon(1e-7));
    CHECK(mat.group_index("o", 1560e-9, kPaperTemperature)
          == doctest::Approx(2.264694820).epsilon(1e-7));
    CHECK(mat.group_index("e", 1560e-9, kPaperTemperature)
          == doctest::Approx(2.184191738).epsilon(1e-7));

    // The two type-II polarizations walk off differently.
    const double ns = inverse_group_velocity(mat, "o", 1560e-9, kPaperTemperature).value;
    const double ni = inverse_group_velocity(mat, "e", 1560e-9, kPaperTemperature).value;
    CHECK(ns != ni);
    CHECK(ns > 0.0);
    CHECK(ni > 0.0);
}

TEST_CASE("group index dominates phase index in the normal-dispersion window") {
    const auto mat = ppln();
    for (const auto& axis : {"o", "e"})
        for (double lambda_nm = 700.0; lambda_nm <= 1700.0; lambda_nm += 50.0) {
            const double n = mat.refractive_index(axis, lambda_nm * 1e-9, kPaperTemperature);
            const double ng = mat.group_index(axis, lambda_nm * 1e-9, kPaperTemperature);
            CHECK(n > 1.0);
            CHECK(ng >= n);
        }
}

TEST_CASE("analytic derivative agrees with the finite-difference path") {
    const auto mat = ppln();
    for (const auto& axis : {"o", "e"})
        for (double lambda_nm : {700.0, 780.0, 1100.0, 1560.0, 1700.0}) {
            const double analytic = mat.group_index(axis, lambda_nm * 1e-9, kPaperTemperature);
            const double fd = mat.group_index_finite_difference(axis, lambda_nm * 1e-9, kPaperTemperature);
            CHECK(analytic == doctest::Approx(fd).epsilon(1e-6));
        }
}

TEST_CASE("constant-index toy gives N = n/c at any wavelength") {
    const auto mat = load_material(data_path("materials/constant_n2.mat"));
    for (double lambda : {500e-9, 780e-9, 1560e-9})
        CHECK(inverse_group_velocity(mat, "o", lambda, 293.15).value
              == doctest::Approx(2.0 / kSpeedOfLight).epsilon(1e-15));
}

TEST_CASE("temperature model moves the index") {
    const auto mat = ppln();
    const double cold = mat.refractive_index("e", 1560e-9, 293.15);
    const double hot = mat.refractive_index("e", 1560e-9, 373.15);
    CHECK(std::abs(hot - cold) > 1e-4);

    // cauchy toy has no temperature dependence
    const auto toy = load_material(data_path("materials/toy_dispersive.mat"));
    CHECK(toy.refractive_index("x", 1560e-9, 293.15)
          == toy.refractive_index("x", 1560e-9, 373.15));
}

TEST_CASE("no extrapolation outside the validity range") {
    const auto mat = ppln();
    CHECK_THROWS_AS(mat.refractive_index("o", 0.3e-6, 293.15), RangeError);
    CHECK_THROWS_AS(mat.refractive_index("o", 5.0e-6, 293.15), RangeError);
    CHECK_THROWS_AS(mat.group_index("e", 0.2e-6, 293.15), RangeError);
    CHECK_THROWS_AS(inverse_group_velocity(mat, "e", 4.5e-6, 293.15), RangeError);
}

TEST_CASE("material load errors are descriptive") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "spdc_material_tests";
    fs::create_directories(dir);

    CHECK_THROWS_AS(load_material(dir / "does_not_exist.mat"), ConfigError);

    auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream out(dir / name);
        out << text;
        return dir / name;
    };

    const auto bad_range = write("bad_range.mat",
                                 "[material]\nname = x\nvalid_range_um = 2.0 -1.0\n"
                                 "[sellmeier.o]\nform = constant\na = 2.0\n");
    CHECK_THROWS_AS(load_material(bad_range), ConfigError);

    const auto missing_coeff = write("missing_coeff.mat",
                                     "[material]\nname = x\nvalid_range_um = 0.5 2.0\n"
                                     "[sellmeier.o]\nform = gayer08\na = 5.7 0.09 0.2\n");
    CHECK_THROWS_AS(load_material(missing_coeff), ConfigError);

    const auto no_axes = write("no_axes.mat", "[material]\nname = x\nvalid_range_um = 0.5 2.0\n");
    CHECK_THROWS_AS(load_material(no_axes), ConfigError);

    const auto unknown_axis_ok = write("one_axis.mat",
                                       "[material]\nname = x\nvalid_range_um = 0.5 2.0\n"
                                       "[sellmeier.q]\nform = constant\na = 1.5\n");
    const auto mat = load_material(unknown_axis_ok);
    CHECK(mat.has_axis("q"));
    CHECK_THROWS_AS(mat.refractive_index("o", 1e-6, 293.15), ConfigError);
}
