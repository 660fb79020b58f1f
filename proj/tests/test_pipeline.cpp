#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ardlkit/artifact.hpp"
#include "ardlkit/bounds.hpp"
#include "ardlkit/csv.hpp"
#include "ardlkit/errors.hpp"
#include "ardlkit/pipeline.hpp"

using namespace ardlkit;
namespace fs = std::filesystem;

namespace {

Dataset logged_fixture() {
    Dataset d = load_csv(ARDLKIT_FIXTURE_CSV);
    for (const std::string name : {"CE", "NE", "REN", "ERT", "EP"})
        d = apply_transform(d, {Transform::Kind::NaturalLog, name, 1});
    return align(d);
}

ArdlEcmFit fixture_fit() {
    ModelSpec spec;
    spec.dependent = "logCE";
    spec.regressors = {"logNE", "logREN", "logERT", "logEP"};
    spec.p = 1;
    spec.q = {1, 1, 1, 1};
    return fit_ecm(logged_fixture(), spec);
}

nlohmann::json base_config(const std::string& out_dir) {
    nlohmann::json cfg;
    cfg["data"]["csv"] = ARDLKIT_FIXTURE_CSV;
    cfg["variables"]["dependent"] = "CE";
    cfg["variables"]["regressors"] = {"NE", "REN", "ERT", "EP"};
    cfg["ardl"] = {{"pmax", 2}, {"qmax", 2}, {"criterion", "bic"}};
    cfg["simulate"] = {{"target", "NE"}, {"magnitude", -0.21}, {"at", 5},
                       {"horizon", 20},  {"sims", 500},        {"burn_in", 20}};
    cfg["seed"] = 42;
    cfg["output_dir"] = out_dir;
    return cfg;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("fit artifact round-trips losslessly") {
    const ArdlEcmFit fit = fixture_fit();
    const fs::path path = fs::temp_directory_path() / "fit_roundtrip.json";
    save_fit(fit, path.string());
    const ArdlEcmFit back = load_fit(path.string());

    CHECK(back.ols.beta == fit.ols.beta);  // exact, not approximate
    CHECK(back.ols.cov == fit.ols.cov);
    CHECK(back.ols.sigma2 == fit.ols.sigma2);
    CHECK(back.ols.r2 == fit.ols.r2);
    CHECK(back.speed_of_adjustment == fit.speed_of_adjustment);
    REQUIRE(back.long_run.size() == fit.long_run.size());
    for (std::size_t i = 0; i < fit.long_run.size(); ++i) {
        CHECK(back.long_run[i].estimate == fit.long_run[i].estimate);
        CHECK(back.long_run[i].se == fit.long_run[i].se);
    }
    // a reloaded fit supports the bounds test identically
    const BoundsTestResult a = bounds_test(fit);
    const BoundsTestResult b = bounds_test(back);
    CHECK(a.f_stat == b.f_stat);
    CHECK(a.t_stat == b.t_stat);
    CHECK(a.decision == b.decision);
}

TEST_CASE("tampered artifacts are rejected by the content hash") {
    const ArdlEcmFit fit = fixture_fit();
    const fs::path path = fs::temp_directory_path() / "fit_tamper.json";
    save_fit(fit, path.string());

    nlohmann::json doc;
    {
        std::ifstream in(path);
        in >> doc;
    }
    doc["payload"]["sigma2"] = doc["payload"]["sigma2"].get<double>() * 1.000001;
    {
        std::ofstream out(path);
        out << doc.dump();
    }
    CHECK_THROWS_WITH_AS(load_fit(path.string()), doctest::Contains("hash mismatch"), DataError);
}

TEST_CASE("malformed artifact documents fail cleanly") {
    const fs::path path = fs::temp_directory_path() / "fit_bad.json";
    {
        std::ofstream out(path);
        out << "{\"format\": \"something-else\"}";
    }
    CHECK_THROWS_AS(load_fit(path.string()), DataError);
    {
        std::ofstream out(path);
        out << "not json at all";
    }
    CHECK_THROWS_AS(load_fit(path.string()), DataError);
}

TEST_CASE("config validation lists every problem at once") {
    nlohmann::json cfg;  // empty: missing everything
    cfg["simulate"] = {{"magnitude", -2.0}};
    try {
        PipelineConfig::from_json(cfg);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("data.csv") != std::string::npos);
        CHECK(msg.find("variables.dependent") != std::string::npos);
        CHECK(msg.find("variables.regressors") != std::string::npos);
        CHECK(msg.find("seed") != std::string::npos);
        CHECK(msg.find("simulate.magnitude") != std::string::npos);
    }
}

TEST_CASE("missing seed is called out by name") {
    nlohmann::json cfg = base_config("unused");
    cfg.erase("seed");
    CHECK_THROWS_WITH_AS(PipelineConfig::from_json(cfg), doctest::Contains("seed"),
                         ValidationError);
}

TEST_CASE("unknown regressor names the available series") {
    nlohmann::json cfg = base_config((fs::temp_directory_path() / "nope").string());
    cfg["variables"]["regressors"] = {"NE", "BOGUS"};
    const PipelineConfig parsed = PipelineConfig::from_json(cfg);
    try {
        run_pipeline(parsed);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("BOGUS") != std::string::npos);
        CHECK(msg.find("available") != std::string::npos);
        CHECK(msg.find("CE") != std::string::npos);
    }
}

TEST_CASE("pipeline produces the full report directory") {
    const fs::path out = fs::temp_directory_path() / "ardlkit_pipe_report";
    fs::remove_all(out);
    const PipelineConfig cfg = PipelineConfig::from_json(base_config(out.string()));
    const PipelineResult r = run_pipeline(cfg);

    for (const char* name :
         {"table1_unitroot.csv", "table2_bounds.csv", "table3_ecm.csv",
          "table4_diagnostics.csv", "table5_krls.csv", "fig1_series.svg", "fig2_simulation.svg",
          "fig3_cusum.svg", "fig4_coefficients.svg", "fig5_krls.svg", "fit.json", "results.json",
          "simulation.csv", "aligned_data.csv"})
        CHECK_MESSAGE(fs::exists(out / name), name);

    CHECK(r.cointegration_found);
    CHECK(r.fit.speed_of_adjustment < 0.0);
    CHECK(r.krls.r2 > 0.9);
    CHECK(r.unit_roots.size() == 10);  // five variables, level + difference
}

TEST_CASE("identical config and seed give byte-identical outputs") {
    const fs::path out1 = fs::temp_directory_path() / "ardlkit_det1";
    const fs::path out2 = fs::temp_directory_path() / "ardlkit_det2";
    fs::remove_all(out1);
    fs::remove_all(out2);
    run_pipeline(PipelineConfig::from_json(base_config(out1.string())));
    run_pipeline(PipelineConfig::from_json(base_config(out2.string())));
    for (const auto& entry : fs::directory_iterator(out1)) {
        const fs::path other = out2 / entry.path().filename();
        REQUIRE_MESSAGE(fs::exists(other), entry.path().filename().string());
        CHECK_MESSAGE(slurp(entry.path()) == slurp(other), entry.path().filename().string());
    }
}

TEST_CASE("pipeline respects an explicit shock target given as a raw name") {
    const fs::path out = fs::temp_directory_path() / "ardlkit_pipe_target";
    fs::remove_all(out);
    nlohmann::json cfg = base_config(out.string());
    cfg["simulate"]["target"] = "REN";  // raw name; mapped onto logREN
    const PipelineResult r = run_pipeline(PipelineConfig::from_json(cfg));
    CHECK(r.simulation.shock.target == "logREN");
}
