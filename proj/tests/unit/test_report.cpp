#include "perfclust/error.hpp"
#include "perfclust/report.hpp"

#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#ifndef PERFCLUST_GOLDEN_DIR
#error "PERFCLUST_GOLDEN_DIR must point at tests/golden"
#endif

namespace perfclust {
namespace {

ClusterPerformance cluster(std::size_t index, std::size_t size, std::optional<double> overall) {
    ClusterPerformance c;
    c.cluster_index = index;
    c.size = size;
    c.overall = overall;
    if (overall)
        c.band = band_of(*overall);
    return c;
}

// Rows of the three published tables: sizes and overall performances.
AnalysisReport published_tables() {
    AnalysisReport r;
    r.n_students = 79;
    r.n_courses = 9;
    r.per_k.push_back({3, true, 6, 51.25, {cluster(0, 25, 62.22), cluster(1, 15, 45.73), cluster(2, 29, 53.03)}, {}});
    r.per_k.push_back({4, true, 8, 44.5,
                       {cluster(0, 24, 50.08), cluster(1, 16, 65.00), cluster(2, 30, 58.89), cluster(3, 9, 43.65)},
                       0.31});
    r.per_k.push_back({5, false, 300, 40.125,
                       {cluster(0, 19, 49.85), cluster(1, 17, 60.97), cluster(2, 9, 43.65), cluster(3, 14, 64.93),
                        cluster(4, 20, 55.79)},
                       0.2875});
    return r;
}

// Set PERFCLUST_UPDATE_GOLDEN=1 to rewrite the expected files.
void expect_golden(const std::string& name, const std::string& actual) {
    const std::string path = std::string(PERFCLUST_GOLDEN_DIR) + "/" + name;
    if (std::getenv("PERFCLUST_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path, std::ios::binary) << actual;
        return;
    }
    std::ifstream in(path, std::ios::binary);
    ASSERT_TRUE(in) << path;
    std::ostringstream s;
    s << in.rdbuf();
    EXPECT_EQ(actual, s.str()) << "golden mismatch: " << name;
}

TEST(FormatDisplay, RoundsHalfUpOnShortestDecimal) {
    EXPECT_EQ(format_display(50.0), "50.00");
    EXPECT_EQ(format_display(62.22), "62.22");
    EXPECT_EQ(format_display(62.225), "62.23");
    EXPECT_EQ(format_display(62.2249), "62.22");
    EXPECT_EQ(format_display(0.005), "0.01");
    EXPECT_EQ(format_display(0.004), "0.00");
    EXPECT_EQ(format_display(99.995), "100.00");
    EXPECT_EQ(format_display(9.999), "10.00");
    EXPECT_EQ(format_display(1.0 / 3.0), "0.33");
    EXPECT_EQ(format_display(2.0 / 3.0), "0.67");
    EXPECT_EQ(format_display(-1.005), "-1.01");
    EXPECT_EQ(format_display(-0.001), "0.00");
    EXPECT_EQ(format_display(1e-300), "0.00");
}

TEST(FormatExact, RoundTrips) {
    for (double v : {0.1, 62.22, 1.0 / 3.0, 1e-300, 100.0})
        EXPECT_EQ(std::stod(format_exact(v)), v);
}

TEST(RenderTable, TextRowFormat) {
    AnalysisReport r;
    r.n_students = 4;
    r.n_courses = 2;
    r.per_k.push_back({1, true, 2, 0.0, {cluster(0, 4, 50.0)}, {}});
    const auto text = render_table(r, TableFormat::Text);
    EXPECT_NE(text.find("K = 1\n"), std::string::npos);
    EXPECT_NE(text.find("Cluster #  Cluster size  Overall Performance  Band\n"), std::string::npos);
    EXPECT_NE(text.find("\n1  4  50.00  Good\n"), std::string::npos);
}

TEST(RenderTable, PublishedRowsBandAsDescribed) {
    const auto text = render_table(published_tables(), TableFormat::Text);
    EXPECT_NE(text.find("\n1  25  62.22  Very Good\n"), std::string::npos);
    EXPECT_NE(text.find("\n2  15  45.73  Very Fair\n"), std::string::npos);
    EXPECT_NE(text.find("\n3  29  53.03  Good\n"), std::string::npos);
    EXPECT_NE(text.find("\n2  16  65.00  Very Good\n"), std::string::npos);
    EXPECT_NE(text.find("\n4  9  43.65  Fair\n"), std::string::npos);
    expect_golden("published_tables.txt", text);
}

TEST(RenderTable, EveryRowBandMatchesBandOf) {
    const std::regex row(R"(^(\d+)  (\d+)  (\d+\.\d\d)  (.+)$)");
    std::istringstream in(render_table(published_tables(), TableFormat::Text));
    std::string line;
    int matched = 0;
    while (std::getline(in, line)) {
        std::smatch m;
        if (!std::regex_match(line, m, row))
            continue;
        ++matched;
        EXPECT_EQ(band_label(band_of(std::stod(m[3]))), m[4].str()) << line;
    }
    EXPECT_EQ(matched, 12);
}

TEST(RenderTable, EmptyClusterRow) {
    AnalysisReport r;
    r.n_students = 2;
    r.n_courses = 1;
    r.per_k.push_back({2, true, 1, 0.0, {cluster(0, 2, 40.0), cluster(1, 0, std::nullopt)}, {}});
    EXPECT_NE(render_table(r, TableFormat::Text).find("\n2  0  -  -\n"), std::string::npos);
    EXPECT_EQ(parse_report_json(render_table(r, TableFormat::Json)), r);
    EXPECT_EQ(parse_report_csv(render_table(r, TableFormat::Csv)), r);
}

TEST(RenderTable, JsonRoundTripIsByteIdentical) {
    const auto json = render_table(published_tables(), TableFormat::Json);
    const auto parsed = parse_report_json(json);
    EXPECT_EQ(parsed, published_tables());
    EXPECT_EQ(render_table(parsed, TableFormat::Json), json);
}

TEST(RenderTable, CsvParsesBackToEqualReport) {
    const auto csv = render_table(published_tables(), TableFormat::Csv);
    EXPECT_EQ(parse_report_csv(csv), published_tables());
    EXPECT_EQ(parse_report(csv), published_tables());
    EXPECT_NE(csv.find(",1,25,62.22,62.22,Very Good\n"), std::string::npos);
}

TEST(ParseReport, RejectsMalformed) {
    EXPECT_THROW(parse_report_json("{\"format\":\"other\"}"), InvalidInput);
    EXPECT_THROW(parse_report_json("{not json"), InvalidInput);
    EXPECT_THROW(parse_report_csv("a,b\n1,2\n"), InvalidInput);
    EXPECT_THROW(parse_report_csv(""), InvalidInput);
}

std::size_t count_bars(const std::string& svg) {
    std::size_t count = 0;
    for (auto pos = svg.find("class=\"bar\""); pos != std::string::npos; pos = svg.find("class=\"bar\"", pos + 1))
        ++count;
    return count;
}

TEST(RenderChart, OneBarPerCluster) {
    const auto report = published_tables();
    EXPECT_EQ(count_bars(render_chart(report, 3)), 3u);
    EXPECT_EQ(count_bars(render_chart(report, 4)), 4u);
    EXPECT_EQ(count_bars(render_chart(report, 5)), 5u);
}

TEST(RenderChart, SkipsEmptyClusters) {
    AnalysisReport r;
    r.n_students = 2;
    r.n_courses = 1;
    r.per_k.push_back({2, true, 1, 0.0, {cluster(0, 2, 40.0), cluster(1, 0, std::nullopt)}, {}});
    EXPECT_EQ(count_bars(render_chart(r, 2)), 1u);
}

TEST(RenderChart, DeterministicAndGolden) {
    const auto report = published_tables();
    const auto svg = render_chart(report, 3);
    EXPECT_EQ(svg, render_chart(report, 3));
    expect_golden("chart_k3.svg", svg);
}

TEST(RenderChart, WellFormedXml) {
    for (std::size_t k : {3u, 4u, 5u}) {
        std::istringstream in(render_chart(published_tables(), k));
        boost::property_tree::ptree tree;
        EXPECT_NO_THROW(boost::property_tree::read_xml(in, tree));
        EXPECT_EQ(tree.get<std::string>("svg.<xmlattr>.version"), "1.1");
    }
}

TEST(RenderChart, BarHeightProportionalToOverall) {
    const auto svg = render_chart(published_tables(), 3);
    const std::regex bar(R"re(<rect class="bar" x="[^"]+" y="([^"]+)" width="[^"]+" height="([^"]+)"[^>]*data-size="(\d+)")re");
    // The y axis spans from the plot bottom (value 0) to the top grid line (value 100).
    const std::regex grid(R"re(<line x1="[^"]+" y1="([^"]+)" x2="[^"]+" y2="[^"]+" stroke="#ddd"/>)re");
    std::vector<double> grid_y;
    for (std::sregex_iterator it(svg.begin(), svg.end(), grid), end; it != end; ++it)
        grid_y.push_back(std::stod((*it)[1]));
    ASSERT_EQ(grid_y.size(), 6u);
    const double axis_span = grid_y.front() - grid_y.back();

    const std::map<std::string, double> expected{{"25", 62.22}, {"15", 45.73}, {"29", 53.03}};
    int seen = 0;
    for (std::sregex_iterator it(svg.begin(), svg.end(), bar), end; it != end; ++it) {
        const double height = std::stod((*it)[2]);
        const double value = expected.at((*it)[3]);
        EXPECT_NEAR(height / axis_span, value / 100.0, 0.005 * value / 100.0);
        EXPECT_NEAR(std::stod((*it)[1]) + height, grid_y.front(), 1e-3);
        ++seen;
    }
    EXPECT_EQ(seen, 3);
}

TEST(RenderChart, MissingKRejected) { EXPECT_THROW(render_chart(published_tables(), 7), InvalidInput); }

}  // namespace
}  // namespace perfclust
