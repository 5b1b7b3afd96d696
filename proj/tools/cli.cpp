#include "cli.hpp"

#include "perfclust/analysis.hpp"
#include "perfclust/error.hpp"
#include "perfclust/performance.hpp"
#include "perfclust/report.hpp"
#include "perfclust/score_matrix.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>

namespace perfclust::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Invocation {
    std::string input;
    std::vector<std::size_t> k_list{3, 4, 5};
    std::string init = "random";
    std::uint64_t seed = 42;
    std::size_t max_iterations = 300;
    std::string mode = "robust";
    std::string format = "text";
    bool silhouette = false;
    bool no_header = false;
    bool no_ids = false;
    std::string out_path;
};

void add_clustering_flags(CLI::App& cmd, Invocation& inv) {
    cmd.add_option("input", inv.input, "Score CSV")->required();
    cmd.add_option("--init", inv.init, "Centroid initialization")
        ->check(CLI::IsMember({"first", "random"}))
        ->capture_default_str();
    cmd.add_option("--seed", inv.seed, "Seed for random initialization")->capture_default_str();
    cmd.add_option("--max-iter", inv.max_iterations, "Iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--mode", inv.mode, "Empty-cluster policy")
        ->check(CLI::IsMember({"faithful", "robust"}))
        ->capture_default_str();
    cmd.add_option("--format", inv.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    cmd.add_flag("--no-header", inv.no_header, "Input has no header row");
    cmd.add_flag("--no-ids", inv.no_ids, "Input has no leading id column");
    cmd.add_option("--out", inv.out_path, "Write output to this file instead of stdout");
}

void validate_k_list(const std::vector<std::size_t>& ks) {
    if (ks.empty())
        throw UsageError("--k needs at least one value");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] == 0)
            throw UsageError("--k values must be at least 1");
        if (i > 0 && ks[i] <= ks[i - 1])
            throw UsageError("--k values must be strictly increasing");
    }
}

AnalysisOptions to_options(const Invocation& inv) {
    AnalysisOptions options;
    options.k_list = inv.k_list;
    options.init = inv.init == "first" ? InitStrategy::FirstK : InitStrategy::RandomSample;
    options.seed = inv.seed;
    options.max_iterations = inv.max_iterations;
    options.policy = inv.mode == "faithful" ? EmptyClusterPolicy::Faithful : EmptyClusterPolicy::Robust;
    options.silhouette = inv.silhouette;
    return options;
}

TableFormat to_format(const std::string& name) {
    if (name == "csv")
        return TableFormat::Csv;
    if (name == "json")
        return TableFormat::Json;
    return TableFormat::Text;
}

ScoreMatrix load_input(const Invocation& inv) {
    return load_csv(std::filesystem::path(inv.input), CsvOptions{!inv.no_header, !inv.no_ids});
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw Error("cannot write '" + out_path + "'");
    file << text;
    if (!file)
        throw Error("failed writing '" + out_path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string cluster_output(const ScoreMatrix& scores, const ClusterModel& model, std::size_t k,
                           const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["k"] = k;
        doc["converged"] = model.converged;
        doc["iterations"] = model.iterations;
        doc["sse"] = model.sse;
        doc["mse"] = model.mse;
        auto& centroids = doc["centroids"] = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < model.centroids.rows(); ++j) {
            const auto row = model.centroids.row(j);
            centroids.push_back(std::vector<double>(row.begin(), row.end()));
        }
        auto& assignments = doc["assignments"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < model.assignments.size(); ++i)
            assignments.push_back({{"id", scores.student_ids()[i]}, {"cluster", model.assignments[i] + 1}});
        return doc.dump(2) + "\n";
    }
    std::string text = "id,cluster\n";
    for (std::size_t i = 0; i < model.assignments.size(); ++i)
        text += scores.student_ids()[i] + "," + std::to_string(model.assignments[i] + 1) + "\n";
    return text;
}

std::vector<double> parse_centers(const std::vector<std::string>& raw) {
    std::vector<double> centers;
    for (const auto& cell : raw) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (ec != std::errc() || ptr != cell.data() + cell.size())
            throw UsageError("--centers: '" + cell + "' is not a number");
        centers.push_back(v);
    }
    return centers;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cluster student score matrices and report per-cluster overall performance", "perfclust"};
    app.require_subcommand(1);

    Invocation inv;

    auto* analyze_cmd = app.add_subcommand("analyze", "Cluster for each k and report cluster performance");
    add_clustering_flags(*analyze_cmd, inv);
    analyze_cmd->add_option("--k", inv.k_list, "Comma-separated k values")->delimiter(',')->capture_default_str();
    analyze_cmd->add_flag("--silhouette", inv.silhouette, "Include mean silhouette width");

    std::size_t cluster_k = 3;
    auto* cluster_cmd = app.add_subcommand("cluster", "Cluster once and print each student's cluster");
    add_clustering_flags(*cluster_cmd, inv);
    cluster_cmd->add_option("--k", cluster_k, "Number of clusters")->capture_default_str();

    std::string band_score;
    auto* band_cmd = app.add_subcommand("band", "Print the performance band of a score");
    band_cmd->add_option("score", band_score, "Overall performance percentage")->required();

    SyntheticSpec spec;
    std::vector<std::string> centers_raw;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded synthetic score matrix as CSV");
    gen_cmd->add_option("--n", spec.students, "Students")->capture_default_str();
    gen_cmd->add_option("--m", spec.courses, "Courses")->capture_default_str();
    gen_cmd->add_option("--centers", centers_raw, "Comma-separated group centers (default 62,53,46)")
        ->delimiter(',');
    gen_cmd->add_option("--spread", spec.spread, "Per-score standard deviation")->capture_default_str();
    gen_cmd->add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "Write output to this file instead of stdout");

    std::string plot_input;
    std::size_t plot_k = 3;
    std::string plot_out;
    auto* plot_cmd = app.add_subcommand("plot", "Render an SVG bar chart from a saved JSON or CSV report");
    plot_cmd->add_option("report", plot_input, "Report written by 'analyze --format json|csv'")->required();
    plot_cmd->add_option("--k", plot_k, "Which k to chart")->capture_default_str();
    plot_cmd->add_option("--out", plot_out, "Write output to this file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "perfclust: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*analyze_cmd) {
            validate_k_list(inv.k_list);
            const auto scores = load_input(inv);
            const auto report = analyze(scores, to_options(inv));
            emit(render_table(report, to_format(inv.format)), inv.out_path, out);
        } else if (*cluster_cmd) {
            if (cluster_k == 0)
                throw UsageError("--k must be at least 1");
            const auto scores = load_input(inv);
            auto options = to_options(inv);
            KMeansConfig config{cluster_k, options.init, options.seed, options.max_iterations, options.policy};
            const auto model = run_kmeans(scores.scores(), config);
            emit(cluster_output(scores, model, cluster_k, inv.format), inv.out_path, out);
        } else if (*band_cmd) {
            double score = 0.0;
            const auto [ptr, ec] =
                std::from_chars(band_score.data(), band_score.data() + band_score.size(), score);
            if (ec != std::errc() || ptr != band_score.data() + band_score.size() || !std::isfinite(score))
                throw UsageError("score '" + band_score + "' is not a number");
            if (score < 0.0)
                throw UsageError("score must be non-negative");
            out << band_label(band_of(score)) << "\n";
        } else if (*gen_cmd) {
            if (!centers_raw.empty())
                spec.centers = parse_centers(centers_raw);
            emit(write_csv(generate_synthetic(spec)), gen_out, out);
        } else if (*plot_cmd) {
            const auto report = parse_report(read_file(plot_input));
            emit(render_chart(report, plot_k), plot_out, out);
        }
    } catch (const UsageError& e) {
        err << "perfclust: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "perfclust: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace perfclust::cli
