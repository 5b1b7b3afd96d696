#include "cli.hpp"

#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace perfclust::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("perfclust_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
        const auto gen = invoke({"gen", "--out", path("scores.csv")});
        ASSERT_EQ(gen.code, 0) << gen.err;
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    std::filesystem::path dir_;
};

TEST_F(CliTest, GenWritesPaperShapedMatrix) {
    const auto csv = slurp(path("scores.csv"));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "id,C1,C2,C3,C4,C5,C6,C7,C8,C9");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 9);
    }
    EXPECT_EQ(rows, 79);
    EXPECT_EQ(invoke({"gen"}).out, csv);
}

TEST_F(CliTest, AnalyzeDefaultsPrintThreeTables) {
    const auto r = invoke({"analyze", path("scores.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("K = 3\n"), std::string::npos);
    EXPECT_NE(r.out.find("K = 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("K = 5\n"), std::string::npos);
    EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, AnalyzeIsDeterministic) {
    for (const char* format : {"text", "csv", "json"}) {
        const std::vector<std::string> args{"analyze", path("scores.csv"), "--seed", "11", "--format", format,
                                            "--silhouette"};
        const auto a = invoke(args);
        const auto b = invoke(args);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST_F(CliTest, KLargerThanNIsValidationError) {
    const auto r = invoke({"analyze", path("scores.csv"), "--k", "100"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("k=100 exceeds n=79"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"analyze"}).code, 2);
    EXPECT_EQ(invoke({"analyze", path("scores.csv"), "--k", "4,3"}).code, 2);
    EXPECT_EQ(invoke({"analyze", path("scores.csv"), "--k", "0"}).code, 2);
    EXPECT_EQ(invoke({"analyze", path("scores.csv"), "--mode", "sloppy"}).code, 2);
    EXPECT_EQ(invoke({"analyze", path("scores.csv"), "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"gen", "--centers", "50,abc"}).code, 2);
}

TEST_F(CliTest, ValidationErrors) {
    EXPECT_EQ(invoke({"analyze", path("missing.csv")}).code, 1);
    std::ofstream(path("bad.csv")) << "id,a\nA,150\n";
    const auto r = invoke({"analyze", path("bad.csv"), "--k", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("row 2, column 2"), std::string::npos);
    EXPECT_EQ(invoke({"gen", "--n", "2", "--centers", "10,20,30"}).code, 1);
}

TEST_F(CliTest, BandCommand) {
    EXPECT_EQ(invoke({"band", "62.22"}).out, "Very Good\n");
    EXPECT_EQ(invoke({"band", "43.65"}).out, "Fair\n");
    EXPECT_EQ(invoke({"band", "70"}).out, "Excellent\n");
    EXPECT_EQ(invoke({"band", "--", "-1"}).code, 2);
    EXPECT_EQ(invoke({"band", "-1"}).code, 2);
    EXPECT_EQ(invoke({"band", "abc"}).code, 2);
}

TEST_F(CliTest, ClusterCommand) {
    const auto r = invoke({"cluster", path("scores.csv"), "--k", "3", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("id,cluster\nS0001,", 0), 0u);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 80);
    const auto j = invoke({"cluster", path("scores.csv"), "--k", "3", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_NE(j.out.find("\"assignments\""), std::string::npos);
    EXPECT_EQ(invoke({"cluster", path("scores.csv"), "--k", "80"}).code, 1);
}

TEST_F(CliTest, PlotFromJsonAndCsvReports) {
    for (const char* format : {"json", "csv"}) {
        const std::string report = path(std::string("report.") + format);
        ASSERT_EQ(invoke({"analyze", path("scores.csv"), "--format", format, "--out", report}).code, 0);
        const auto svg_path = path(std::string("k3_") + format + ".svg");
        const auto r = invoke({"plot", report, "--k", "3", "--out", svg_path});
        ASSERT_EQ(r.code, 0) << r.err;
        std::istringstream in(slurp(svg_path));
        boost::property_tree::ptree tree;
        EXPECT_NO_THROW(boost::property_tree::read_xml(in, tree));
        EXPECT_EQ(invoke({"plot", report, "--k", "9"}).code, 1);
    }
    EXPECT_EQ(slurp(path("k3_json.svg")), slurp(path("k3_csv.svg")));
}

TEST_F(CliTest, FaithfulModeAndFirstInit) {
    const auto r = invoke({"analyze", path("scores.csv"), "--init", "first", "--mode", "faithful", "--k", "2,6"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, HeaderlessInput) {
    std::ofstream(path("plain.csv")) << "50,60\n52,61\n90,95\n91,96\n";
    const auto r = invoke({"analyze", path("plain.csv"), "--no-header", "--no-ids", "--k", "2", "--init", "first"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\n1  2  55.75  Good\n"), std::string::npos);
    EXPECT_NE(r.out.find("\n2  2  93.00  Excellent\n"), std::string::npos);
}

}  // namespace
}  // namespace perfclust::cli
