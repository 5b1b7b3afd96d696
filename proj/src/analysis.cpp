#include "perfclust/analysis.hpp"

#include "perfclust/error.hpp"

#include <algorithm>
#include <future>
#include <string>

namespace perfclust {
namespace {

KResult analyze_one(const ScoreMatrix& scores, const AnalysisOptions& options, std::size_t k) {
    KMeansConfig config;
    config.k = k;
    config.init = options.init;
    config.seed = options.seed;
    config.max_iterations = options.max_iterations;
    config.empty_cluster_policy = options.policy;

    const auto model = run_kmeans(scores.scores(), config);
    KResult result;
    result.k = k;
    result.converged = model.converged;
    result.iterations = model.iterations;
    result.mse = model.mse;
    result.clusters = evaluate_clusters(scores.scores(), model);
    if (options.silhouette && k >= 2)
        result.mean_silhouette = silhouette_width(scores.scores(), model.assignments, k).mean;
    return result;
}

}  // namespace

AnalysisReport analyze(const ScoreMatrix& scores, const AnalysisOptions& options) {
    if (options.k_list.empty())
        throw InvalidConfig("at least one k is required");
    for (std::size_t k : options.k_list) {
        if (k == 0)
            throw InvalidConfig("k must be at least 1");
        if (k > scores.students())
            throw InvalidConfig("k=" + std::to_string(k) + " exceeds n=" + std::to_string(scores.students()));
    }
    std::vector<std::size_t> ks = options.k_list;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    std::vector<std::future<KResult>> pending;
    pending.reserve(ks.size());
    for (std::size_t k : ks)
        pending.push_back(std::async(std::launch::async, analyze_one, std::cref(scores), std::cref(options), k));

    AnalysisReport report;
    report.n_students = scores.students();
    report.n_courses = scores.courses();
    for (auto& f : pending)
        report.per_k.push_back(f.get());
    return report;
}

}  // namespace perfclust
