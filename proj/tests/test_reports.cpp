#include "test_helpers.hpp"

#include "qpv/report.hpp"

using namespace qpv;
using nlohmann::json;

namespace {

VerifyOptions quick_verify(ModelKind kind) {
    VerifyOptions options;
    options.kind = kind;
    options.dim = 3;
    options.trials = 50;
    options.seed = 11;
    return options;
}

} // namespace

TEST_CASE("verify reports pass for both concrete kinds") {
    for (ModelKind kind : {ModelKind::classical, ModelKind::quantum_complex}) {
        const Report report = run_verify(quick_verify(kind));
        CHECK(report.all_passed());
        CHECK(report.command() == "verify");
    }
    const Report real = run_verify(quick_verify(ModelKind::quantum_real));
    CHECK(real.all_passed());
}

TEST_CASE("reports are schema-valid") {
    const Report report = run_verify(quick_verify(ModelKind::quantum_complex));
    const json j = report.to_json();
    REQUIRE(j.contains("command"));
    REQUIRE(j.contains("config"));
    REQUIRE(j.contains("checks"));
    REQUIRE(j.contains("summary"));
    CHECK(j["summary"]["total"].get<int>() ==
          j["summary"]["pass"].get<int>() + j["summary"]["fail"].get<int>() +
              j["summary"]["skipped"].get<int>());
    std::string previous;
    for (const auto& check : j["checks"]) {
        for (const char* key : {"name", "anchor", "inputs", "expected", "observed", "status"})
            CHECK(check.contains(key));
        const auto status = check["status"].get<std::string>();
        CHECK((status == "pass" || status == "fail" || status == "skipped"));
        CHECK_FALSE(check["anchor"].get<std::string>().empty());
        // ordered deterministically by name
        CHECK(previous <= check["name"].get<std::string>());
        previous = check["name"].get<std::string>();
    }
}

TEST_CASE("fixed seeds give byte-identical renderings") {
    const Report a = run_verify(quick_verify(ModelKind::quantum_complex));
    const Report b = run_verify(quick_verify(ModelKind::quantum_complex));
    CHECK(a.render_json() == b.render_json());
    CHECK(a.render_markdown() == b.render_markdown());

    ZenoOptions zeno;
    zeno.seed = 3;
    const Report z1 = run_zeno(zeno);
    const Report z2 = run_zeno(zeno);
    CHECK(z1.render_json() == z2.render_json());
}

TEST_CASE("floats are canonicalized to 12 significant digits") {
    CHECK(rounded(1.0 / 3.0).dump() == "0.333333333333");
    CHECK(rounded(0.5).dump() == "0.5");
    CHECK(rounded(1e-9).dump() == "1e-09");
    CHECK(rounded(2.0).dump() == "2");
}

TEST_CASE("render rejects unknown formats") {
    const Report report = run_counterexamples();
    CHECK_THROWS_AS(report.render("xml"), Error);
    CHECK(report.render("json") == report.render_json());
    CHECK(report.render("md") == report.render_markdown());
}

TEST_CASE("classify, counterexamples, zeno and tomography reports all pass") {
    CHECK(run_classify(3, 8).all_passed());
    CHECK(run_counterexamples().all_passed());

    ZenoOptions zeno;
    CHECK(run_zeno(zeno).all_passed());

    CHECK(run_tomography(2, 2, 10, 19).all_passed());
}

TEST_CASE("verify rejects unusable parameters") {
    VerifyOptions options = quick_verify(ModelKind::quantum_complex);
    options.dim = 0;
    CHECK_THROWS_AS(run_verify(options), Error);
    options = quick_verify(ModelKind::quaternionic);
    CHECK_THROWS_AS(run_verify(options), Error);
    CHECK_THROWS_AS(run_classify(0, 8), Error);
    CHECK_THROWS_AS(run_tomography(1, 2, 10, 1), Error);
    ZenoOptions zeno;
    zeno.eps_grid.clear();
    CHECK_THROWS_AS(run_zeno(zeno), Error);
}

TEST_CASE("markdown rendering carries the summary") {
    const Report report = run_counterexamples();
    const std::string md = report.render_markdown();
    CHECK(md.find("# qpv counterexamples report") != std::string::npos);
    CHECK(md.find("| check | status |") != std::string::npos);
    CHECK(md.find("0 fail") != std::string::npos);
}
