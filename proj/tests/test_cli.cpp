#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polarsing/cli.hpp"
#include "polarsing/io.hpp"
#include "support.hpp"

using polarsing::run_cli;
using polarsing::testing::fixture_path;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "polarsing_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(Cli, ValidateClean) {
    const auto r = cli({"validate", fixture_path("pham_deformed_bp")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "ok\t10 points\n");
}

TEST(Cli, ValidateReportsEachProblem) {
    const auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"format_version":1,"weight_kind":"virtual","points":[
        {"id":"O","weight":1},{"id":"O2","weight":1},{"id":"x","parent":"nope","weight":1}]})";
    const auto r = cli({"validate", bad.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("DuplicateOrigin\tO2"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("UnknownParent\tx"), std::string::npos) << r.out;
}

TEST(Cli, RecoverTrace) {
    const auto r = cli({"recover", fixture_path("pham_deformed_bp"), "--trace"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("walk p8\np3 12/1 >I→first\np4 21/2 <I→second\np5 33/3 =I stop\n"), std::string::npos)
        << r.out;
    EXPECT_NE(r.out.find("d\tI_d\tp_d\tq_d\np8\t11\tp3\tp5\np9\t11\tp3\tp5\n"), std::string::npos) << r.out;
}

TEST(Cli, RecoverEmitsParsableDocument) {
    const auto r = cli({"recover", fixture_path("pham_deformed_bp"), "--emit", "multiplicities"});
    ASSERT_EQ(r.code, 0);
    const auto doc = r.out.substr(r.out.find('{'));
    const auto loaded = polarsing::parse(doc);
    EXPECT_EQ(loaded.cluster.kind(), polarsing::WeightKind::Multiplicity);
    EXPECT_EQ(loaded.cluster.size(), 6u);
    EXPECT_EQ(doc, polarsing::read_text_file(fixture_path("pham_deformed_S")));
}

TEST(Cli, RecoverBothWritesTwoFiles) {
    const auto out = scratch("multibranch.json");
    const auto r = cli({"recover", fixture_path("multibranch_b_bp"), "--algorithm", "grouped", "--emit", "both", "--out",
                        out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto values = polarsing::load_file(scratch("multibranch.values.json").string());
    const auto mults = polarsing::load_file(scratch("multibranch.multiplicities.json").string());
    EXPECT_EQ(values.cluster.kind(), polarsing::WeightKind::Value);
    EXPECT_EQ(mults.cluster.kind(), polarsing::WeightKind::Multiplicity);
    EXPECT_NE(r.out.find("p29\t543/4\tp10\tp13"), std::string::npos) << r.out;
}

TEST(Cli, RecoverRejectsCurves) {
    EXPECT_EQ(cli({"recover", fixture_path("pham_deformed_S")}).code, 2);
}

TEST(Cli, Invariants) {
    const auto r = cli({"invariants", fixture_path("multibranch_a_curve")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("polar_invariants\t72\t230/3\t694/9\t236/3\t79\n"), std::string::npos) << r.out;
    const auto local = cli({"invariants", fixture_path("multibranch_b_curve"), "--local", "p10"});
    EXPECT_NE(local.out.find("polar_invariants\t678/5\t543/4\n"), std::string::npos) << local.out;
}

TEST(Cli, Compare) {
    EXPECT_EQ(cli({"compare", fixture_path("pham_deformed_S"), fixture_path("pham_S")}).code, 0);
    EXPECT_EQ(cli({"compare", fixture_path("pham_deformed_bp"), fixture_path("pham_bp"), "--mode", "similar"}).code, 1);
    EXPECT_EQ(cli({"compare", fixture_path("pham_deformed_S"), fixture_path("pham_S"), "--mode", "equal"}).code, 0);
    EXPECT_EQ(cli({"compare", fixture_path("pham_deformed_S"), fixture_path("multibranch_a_curve"), "--mode", "equal"}).code, 1);
}

TEST(Cli, RenderWithOverlay) {
    const auto r = cli({"render", fixture_path("pham_deformed_bp"), "--overlay", fixture_path("pham_deformed_S"), "--annotate", "mn"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("21/2"), std::string::npos);
    EXPECT_NE(r.out.find("overlay_1"), std::string::npos);
}

TEST(Cli, BadInvocations) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"recover", fixture_path("pham_deformed_bp"), "--algorithm", "fast"}).code, 2);
    EXPECT_EQ(cli({"validate", "/nonexistent/file.json"}).code, 2);
}

TEST(Cli, RecoveredCurveReproducesTheTable) {
    for (const auto& name : {"multibranch_a_bp", "multibranch_b_bp"}) {
        const auto out = scratch(std::string(name) + ".S.json");
        const auto r = cli({"recover", fixture_path(name), "--emit", "multiplicities", "--out", out.string()});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(cli({"validate", out.string()}).code, 0);
        const auto inv = cli({"invariants", out.string()});
        ASSERT_EQ(inv.code, 0) << inv.err;
        std::istringstream table(r.out);
        std::string line;
        std::getline(table, line);  // header
        while (std::getline(table, line) && !line.empty()) {
            const auto a = line.find('\t'), b = line.find('\t', a + 1);
            const std::string invariant = line.substr(a + 1, b - a - 1);
            EXPECT_NE(inv.out.find("\t" + invariant), std::string::npos) << name << ": " << invariant;
        }
    }
}
