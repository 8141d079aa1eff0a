#include "test_helpers.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

CliResult run_cli(const std::string& args, const fs::path& workdir) {
    const std::string command =
        "cd '" + workdir.string() + "' && '" + SPDC_CLI_PATH + "' " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "spdc_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string paper_cfg() {
    return spdc::test::data_path("configs/paper.cfg");
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

double printed_value(const std::string& output, const std::string& label) {
    const auto at = output.find(label);
    REQUIRE(at != std::string::npos);
    std::istringstream rest(output.substr(at + label.size()));
    double value = 0.0;
    rest >> value;
    REQUIRE(rest);
    return value;
}

} // namespace

TEST_CASE("jsa subcommand prints the model table") {
    const auto dir = scratch_dir("jsa");
    const auto result = run_cli("jsa --config '" + paper_cfg() + "' --out paper", dir);
    CHECK(result.exit_code == 0);
    CHECK(printed_value(result.output, "I         ") == doctest::Approx(0.90052).epsilon(1e-4));
    CHECK(printed_value(result.output, "P         ") == doctest::Approx(0.55586).epsilon(1e-4));
    CHECK(fs::exists(dir / "paper.exact.csv"));
    CHECK(fs::exists(dir / "paper.gaussian.jsa"));
}

TEST_CASE("jsa subcommand survives a coarse grid") {
    const auto dir = scratch_dir("jsa_coarse");
    const auto result = run_cli("jsa --config '" + paper_cfg() + "' --out coarse --grid 128", dir);
    CHECK(result.exit_code == 0);
}

TEST_CASE("hom subcommand prints the three visibilities") {
    const auto dir = scratch_dir("hom");
    const auto result = run_cli("hom --config '" + paper_cfg() + "' --out paper", dir);
    CHECK(result.exit_code == 0);
    CHECK(printed_value(result.output, "V_analytic_gaussian ")
          == doctest::Approx(0.9005).epsilon(1e-3));
    CHECK(printed_value(result.output, "V_numeric_exact     ")
          == doctest::Approx(0.8756).epsilon(1e-3));
    CHECK(printed_value(result.output, "V_numeric_gaussian  ")
          == doctest::Approx(0.9005).epsilon(1e-3));
    const std::string csv = slurp(dir / "paper.hom.csv");
    CHECK(contains(csv, "delay_fs,r_cc_analytic-gaussian,r_cc_numeric-exact,r_cc_numeric-gaussian"));
}

TEST_CASE("detune flag lowers the numeric visibilities") {
    const auto dir = scratch_dir("detune");
    const auto result =
        run_cli("hom --config '" + paper_cfg() + "' --out d --detune 2e11", dir);
    CHECK(result.exit_code == 0);
    CHECK(printed_value(result.output, "V_numeric_exact     ") < 0.87);
    // the analytic curve has no detuning model and stays put
    CHECK(printed_value(result.output, "V_analytic_gaussian ")
          == doctest::Approx(0.9005).epsilon(1e-3));
}

TEST_CASE("hom on the symmetric toy gives unit visibility three ways") {
    const auto dir = scratch_dir("hom_sym");
    const auto result =
        run_cli("hom --config '" + spdc::test::data_path("configs/symmetric.cfg") + "' --out sym", dir);
    CHECK(result.exit_code == 0);
    for (const auto* label :
         {"V_analytic_gaussian ", "V_numeric_exact     ", "V_numeric_gaussian  "})
        CHECK(printed_value(result.output, label) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("missing config and material produce exit code 2") {
    const auto dir = scratch_dir("errors");
    const auto missing = run_cli("hom --config does_not_exist.cfg", dir);
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "does_not_exist.cfg"));

    // config referencing a missing material names the resolved path
    std::ofstream bad(dir / "bad.cfg");
    bad << "[pump]\nwavelength_nm = 780\nbandwidth_fwhm_nm = 0.2\naxis = o\n"
           "[crystal]\nmaterial = nowhere.mat\nlength_mm = 20\ntemperature_k = 333.15\n"
           "[filters]\nsignal_wavelength_nm = 1560\nidler_wavelength_nm = 1560\n"
           "signal_axis = o\nidler_axis = e\n";
    bad.close();
    const auto no_material = run_cli("hom --config bad.cfg", dir);
    CHECK(no_material.exit_code == 2);
    CHECK(contains(no_material.output, "nowhere.mat"));
}

TEST_CASE("empty delay range produces exit code 2") {
    const auto dir = scratch_dir("delays");
    const auto result = run_cli("hom --config '" + paper_cfg() + "' --delays 5:5:0", dir);
    CHECK(result.exit_code == 2);
}

TEST_CASE("numerical failures produce exit code 3") {
    const auto dir = scratch_dir("numerical");
    // a huge half-width multiplier makes the sinc unresolvable at 64 points
    const auto result =
        run_cli("jsa --config '" + paper_cfg() + "' --out x --grid 64 --half-width 220", dir);
    CHECK(result.exit_code == 3);
    CHECK(contains(result.output, "numerical error"));
}

TEST_CASE("purity subcommand prints both purities and the decomposition") {
    const auto dir = scratch_dir("purity");
    const auto result = run_cli("purity --config '" + paper_cfg() + "' --out paper", dir);
    CHECK(result.exit_code == 0);
    const double analytic = printed_value(result.output, "P_analytic          ");
    const double svd = printed_value(result.output, "P_numeric_svd       ");
    CHECK(analytic == doctest::Approx(0.55586).epsilon(1e-4));
    CHECK(svd == doctest::Approx(analytic).epsilon(1e-3));
    CHECK(printed_value(result.output, "V_pair_exact        ")
          == doctest::Approx(0.8756).epsilon(2e-3));
    CHECK(printed_value(result.output, "V_independent       ")
          == doctest::Approx(analytic).epsilon(1e-3));
    CHECK(printed_value(result.output, "hs_distance_sq      ") == doctest::Approx(0.0));
    CHECK(fs::exists(dir / "paper.purity.csv"));
    CHECK(fs::exists(dir / "paper.schmidt.csv"));
}

TEST_CASE("multipair flag rescales the independent dip to P/3") {
    const auto dir = scratch_dir("multipair");
    const auto result =
        run_cli("purity --config '" + paper_cfg() + "' --out mp --multipair", dir);
    CHECK(result.exit_code == 0);
    const double analytic = printed_value(result.output, "P_analytic          ");
    CHECK(printed_value(result.output, "V_independent       ")
          == doctest::Approx(analytic / 3.0).epsilon(1e-3));
}

TEST_CASE("factorable toy reaches unit visibility in both dips") {
    const auto dir = scratch_dir("purity_fact");
    const auto result = run_cli(
        "purity --config '" + spdc::test::data_path("configs/factorable.cfg") + "' --out f", dir);
    CHECK(result.exit_code == 0);
    CHECK(printed_value(result.output, "P_analytic          ")
          == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(printed_value(result.output, "V_pair_exact        ")
          == doctest::Approx(1.0).epsilon(2e-2));
    CHECK(printed_value(result.output, "V_independent       ")
          == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("optimize-filter prints the scan argmax and the closed form") {
    const auto dir = scratch_dir("optimize");
    const auto result = run_cli("optimize-filter --config '" + paper_cfg()
                                    + "' --out scan --fix idler --fixed-fwhm-nm 1.0 --identical",
                                dir);
    CHECK(result.exit_code == 0);
    CHECK(printed_value(result.output, "argmax_fwhm_nm      ")
          == doctest::Approx(0.565).epsilon(2e-2));
    CHECK(printed_value(result.output, "closed_form_fwhm_nm ")
          == doctest::Approx(0.565).epsilon(1e-3));
    CHECK(printed_value(result.output, "identical_filters_I ")
          == doctest::Approx(0.9431).epsilon(1e-3));
    const std::string csv = slurp(dir / "scan.scan.csv");
    CHECK(contains(csv, "sigma_fwhm_nm,indistinguishability"));
}

TEST_CASE("optimize-filter on the symmetric toy peaks at the fixed bandwidth") {
    const auto dir = scratch_dir("optimize_sym");
    const auto result =
        run_cli("optimize-filter --config '" + spdc::test::data_path("configs/symmetric.cfg")
                    + "' --out s --fix idler --fixed-fwhm-nm 1.0",
                dir);
    CHECK(result.exit_code == 0);
    CHECK(printed_value(result.output, "argmax_fwhm_nm      ")
          == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("conditions subcommand reports the filter solution and the residual") {
    const auto dir = scratch_dir("conditions");
    const auto paper = run_cli("conditions --config '" + paper_cfg() + "'", dir);
    CHECK(paper.exit_code == 0);
    CHECK(printed_value(paper.output, "factorability_residual ")
          == doctest::Approx(2.1136).epsilon(1e-3));
    CHECK(contains(paper.output, "signal_filter_fwhm_nm 0.615"));
    CHECK(contains(paper.output, "same-sign group-delay walk-offs"));

    const auto toy = run_cli(
        "conditions --config '" + spdc::test::data_path("configs/factorable.cfg") + "'", dir);
    CHECK(toy.exit_code == 0);
    CHECK(std::abs(printed_value(toy.output, "factorability_residual ")) < 1e-6);
}

TEST_CASE("very narrow idler filter dominates the closed form") {
    // with 1/si^2 huge, the walk-off asymmetry is negligible: ss ~ si
    const auto dir = scratch_dir("narrow");
    const auto result = run_cli("conditions --config narrow.cfg", dir);
    CHECK(result.exit_code == 2); // config written below does not exist yet

    std::ofstream cfg(dir / "narrow.cfg");
    cfg << "[pump]\nwavelength_nm = 780\nbandwidth_fwhm_nm = 0.2\naxis = o\n"
           "[crystal]\nmaterial = " << spdc::test::data_path("materials/ppln_mgo.mat")
        << "\nlength_mm = 20\ntemperature_k = 333.15\n"
           "[filters]\nsignal_wavelength_nm = 1560\nidler_wavelength_nm = 1560\n"
           "signal_axis = o\nidler_axis = e\n"
           "signal_fwhm_nm = 0.01\nidler_fwhm_nm = 0.01\n";
    cfg.close();
    const auto narrow = run_cli("conditions --config narrow.cfg", dir);
    CHECK(narrow.exit_code == 0);
    const double solution = printed_value(narrow.output, "signal_filter_fwhm_nm ");
    CHECK(solution == doctest::Approx(0.01).epsilon(2e-2));
}

TEST_CASE("gamma flag switches between the documented presets") {
    const auto dir = scratch_dir("gamma");
    const auto alpha2 =
        run_cli("jsa --config '" + paper_cfg() + "' --out g --gamma alpha2", dir);
    CHECK(alpha2.exit_code == 0);
    CHECK(printed_value(alpha2.output, "I         ") == doctest::Approx(0.991426).epsilon(1e-3));
    const auto custom = run_cli("jsa --config '" + paper_cfg() + "' --out g --gamma 0.25", dir);
    CHECK(custom.exit_code == 0);
    CHECK(printed_value(custom.output, "gamma     ") == doctest::Approx(0.25));
}

TEST_CASE("subcommands are deterministic: identical CSV bytes on rerun") {
    const auto dir1 = scratch_dir("det1");
    const auto dir2 = scratch_dir("det2");
    const std::string args = "hom --config '" + paper_cfg()
                             + "' --out run --delays -8000:12000:101 --half-width 6";
    CHECK(run_cli(args, dir1).exit_code == 0);
    CHECK(run_cli(args, dir2).exit_code == 0);
    CHECK(slurp(dir1 / "run.hom.csv") == slurp(dir2 / "run.hom.csv"));
}
