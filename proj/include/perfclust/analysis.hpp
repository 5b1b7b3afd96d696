#pragma once

#include "perfclust/kmeans.hpp"
#include "perfclust/report.hpp"
#include "perfclust/score_matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace perfclust {

struct AnalysisOptions {
    std::vector<std::size_t> k_list{3, 4, 5};
    InitStrategy init = InitStrategy::RandomSample;
    std::uint64_t seed = 42;
    std::size_t max_iterations = 300;
    EmptyClusterPolicy policy = EmptyClusterPolicy::Robust;
    bool silhouette = false;
};

/// Clusters the scores once per k and evaluates every cluster. The k values
/// run concurrently; results are merged in ascending k. Throws InvalidConfig
/// naming the first k that exceeds the student count. Silhouette is skipped
/// for k = 1.
AnalysisReport analyze(const ScoreMatrix& scores, const AnalysisOptions& options);

}  // namespace perfclust
