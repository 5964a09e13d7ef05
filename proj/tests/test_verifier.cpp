#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "voachar/verifier.hpp"

#include <cstdio>
#include <fstream>

using namespace voachar;

TEST_CASE("single identity checks pass at small orders") {
    CHECK(verifyVerma(Rat(-3, 2), Rat(1, 3), 1, 10).passed);
    CHECK(verifyVerma(Rat(3), Rat(-2), -1, 10).passed);
    CHECK(verifyAdmissible(2, 3, 0, 1, 1, 12).passed);
    CHECK(verifyAdmissible(5, 2, 1, 0, -1, 12).passed);
    CHECK(verifyBoundary(5, 2, 1, 12).passed);
    CHECK(verifyNearWeyl(2, 3, -1, 12).passed);
    CHECK(verifyNearVerma(2, Rat(1, 3), 1, 10).passed);
    CHECK(verifyUniversal(1, 12).passed);
    CHECK(verifyUniversal(-1, 12).passed);
    CHECK(verifyFermion(1, Variant::Char, 12).passed);
    CHECK(verifyFermion(-1, Variant::SuperChar, 12).passed);
    CHECK(verifyVp(2, 1, Variant::Char, 10).passed);
    CHECK(verifySchur(1, 1, 12).passed);
}

TEST_CASE("reports carry identifiers, parameters and timings") {
    VerificationReport rep = verifyAdmissible(2, 3, 0, 1, 1, 8);
    CHECK(rep.checkId == "admissible q=2 p=3 r=0 s=1 sign=+");
    CHECK(rep.cutoff == Rat(8));
    CHECK(rep.params.size() == 5);
    CHECK(rep.elapsedMs >= 0);
    CHECK(!rep.firstMismatch.has_value());
}

TEST_CASE("a deliberately broken comparison reports its first mismatch") {
    VerificationReport rep = verifyAdmissible(2, 3, 0, 1, 1, 8);
    CHECK(rep.passed);
    auto controls = mutationControls(8);
    CHECK(controls.size() >= 5);
    for (const auto& c : controls) {
        CAPTURE(c.checkId);
        CHECK_FALSE(c.passed);
    }
}

TEST_CASE("parameter ledger checks") {
    auto reports = verifyParamsLedger(5, 2);
    CHECK(!reports.empty());
    bool sawNote = false;
    for (const auto& r : reports) {
        CAPTURE(r.checkId);
        CHECK(r.passed);
        if (!r.notes.empty()) sawNote = true;
    }
    CHECK(sawNote); // the informational note about the offset-(2) image
}

TEST_CASE("fusion suite") {
    for (const auto& r : verifyFusionSuite()) {
        CAPTURE(r.checkId);
        CHECK(r.passed);
    }
}

TEST_CASE("closed-form cross-checks") {
    for (const auto& r : verifyV2Closed(1, Variant::Char, 10, 8)) {
        CAPTURE(r.checkId);
        CHECK(r.passed);
    }
}

TEST_CASE("suite runner sorts reports and honors overrides") {
    SuiteConfig cfg;
    cfg.suite = "fusion";
    auto reports = runSuite(cfg);
    CHECK(!reports.empty());
    for (std::size_t i = 1; i < reports.size(); ++i)
        CHECK(reports[i - 1].checkId <= reports[i].checkId);
    for (const auto& r : reports) CHECK(r.passed);

    SuiteConfig small;
    small.suite = "universal";
    small.order = 8;
    auto uni = runSuite(small);
    CHECK(uni.size() == 2);
    for (const auto& r : uni) {
        CHECK(r.cutoff == Rat(8));
        CHECK(r.passed);
    }

    SuiteConfig bad;
    bad.suite = "no-such-suite";
    CHECK_THROWS_AS(runSuite(bad), SeriesError);
}

TEST_CASE("grid files drive a suite") {
    std::string path = "test_grid_boundary.txt";
    {
        std::ofstream out(path);
        out << "# p s sign\n";
        out << "3 0 +\n";
        out << "3 1 -\n";
        out << "5 2 +1\n";
    }
    SuiteConfig cfg;
    cfg.suite = "boundary";
    cfg.order = 10;
    cfg.gridFile = path;
    auto reports = runSuite(cfg);
    CHECK(reports.size() == 3);
    for (const auto& r : reports) {
        CAPTURE(r.checkId);
        CHECK(r.passed);
        CHECK(r.cutoff == Rat(10));
    }
    std::remove(path.c_str());

    SuiteConfig missing;
    missing.suite = "boundary";
    missing.gridFile = "no-such-file.txt";
    CHECK_THROWS_AS(runSuite(missing), SeriesError);
}
