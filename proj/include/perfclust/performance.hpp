#pragma once

// Deterministic overall-performance model and the qualitative banding of its
// result.

#include "perfclust/kmeans.hpp"
#include "perfclust/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace perfclust {

enum class Band { Excellent, VeryGood, Good, VeryFair, Fair, Poor };

/// Half-open interval [lower, upper); Excellent's upper bound is +infinity.
struct BandRange {
    Band band;
    double lower;
    double upper;
};

/// Highest band first. The ranges partition [0, inf) without gaps or overlap.
const std::array<BandRange, 6>& band_ranges() noexcept;

/// "Excellent", "Very Good", "Good", "Very Fair", "Fair", "Poor".
std::string_view band_label(Band band) noexcept;

/// Inverse of band_label. Returns nullopt for unknown text.
std::optional<Band> band_from_label(std::string_view label) noexcept;

/// Throws InvalidInput for negative or non-finite scores.
Band band_of(double overall);

/// Mean over students of each student's mean score. Throws InvalidInput when
/// members is empty.
double overall_performance(const Matrix& members);

/// Same, restricted to the listed rows of data.
double overall_performance(const Matrix& data, std::span<const std::size_t> rows);

struct ClusterPerformance {
    std::size_t cluster_index = 0;  ///< 0-based
    std::size_t size = 0;
    std::optional<double> overall;  ///< absent for an empty cluster
    std::optional<Band> band;

    bool operator==(const ClusterPerformance&) const = default;
};

/// One entry per cluster index in [0, k), empties included with size 0.
std::vector<ClusterPerformance> evaluate_clusters(const Matrix& data, const ClusterModel& model);

std::vector<ClusterPerformance> evaluate_clusters(const Matrix& data,
                                                  std::span<const std::size_t> labels,
                                                  std::size_t k);

}  // namespace perfclust
