#pragma once

// Traditional k-means (Lloyd iteration) minimizing the mean squared Euclidean
// distance between each point and its nearest centroid.

#include "perfclust/matrix.hpp"
#include "perfclust/simd/kernels.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace perfclust {

enum class InitStrategy {
    FirstK,        ///< rows 0..k-1 in row order
    RandomSample,  ///< k distinct rows drawn by a seeded Rng
};

enum class EmptyClusterPolicy {
    /// Empty cluster's centroid becomes the zero vector, the literal outcome of
    /// dividing a reset accumulator by max(n_j, 1).
    Faithful,
    /// Empty cluster is re-seeded at the point farthest from its own centroid.
    Robust,
};

struct KMeansConfig {
    std::size_t k = 3;
    InitStrategy init = InitStrategy::RandomSample;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 300;
    EmptyClusterPolicy empty_cluster_policy = EmptyClusterPolicy::Robust;
};

struct Assignment {
    std::vector<std::size_t> labels;
    double sse = 0.0;
};

struct ClusterModel {
    Matrix centroids;                     ///< k x d
    std::vector<std::size_t> assignments; ///< n labels in [0, k)
    std::size_t iterations = 0;           ///< assign/update passes executed
    double sse = 0.0;                     ///< against the final centroids
    double mse = 0.0;                     ///< sse / n
    bool converged = false;               ///< false when max_iterations stopped the loop
    /// SSE of each pass, measured against that pass's incoming centroids.
    std::vector<double> sse_trace;

    std::vector<std::size_t> cluster_sizes() const;

    bool operator==(const ClusterModel&) const = default;
};

/// Sum of squared coordinate differences. Throws DimensionMismatch.
double squared_euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Throws InvalidConfig when k is 0 or exceeds the row count.
Matrix initialize_centroids(const Matrix& data, const KMeansConfig& config);

/// Nearest-centroid labels (lowest index wins ties) and the sum of the
/// attained squared distances.
Assignment assign_points(const Matrix& data, const Matrix& centroids);
Assignment assign_points(const Matrix& data, const Matrix& centroids, const simd::Kernels& kernels);

/// New centroids from the current labels. Non-empty clusters take the mean of
/// their members; empty clusters follow the policy. previous supplies the
/// incoming centroids, which Robust uses to find the farthest point.
Matrix update_centroids(const Matrix& data, std::span<const std::size_t> labels, std::size_t k,
                        EmptyClusterPolicy policy, const Matrix& previous);
Matrix update_centroids(const Matrix& data, std::span<const std::size_t> labels, std::size_t k,
                        EmptyClusterPolicy policy, const Matrix& previous,
                        const simd::Kernels& kernels);

/// Iterates until a pass fails to strictly lower the SSE, or max_iterations.
ClusterModel run_kmeans(const Matrix& data, const KMeansConfig& config);
ClusterModel run_kmeans(const Matrix& data, const KMeansConfig& config, const simd::Kernels& kernels);

struct Silhouette {
    std::vector<double> per_point;
    double mean = 0.0;
};

/// Rousseeuw silhouette over plain Euclidean distances. Singleton clusters and
/// the a = b = 0 case score 0. Empty clusters are ignored. Throws InvalidInput
/// when k < 2 or a label is out of range.
Silhouette silhouette_width(const Matrix& data, std::span<const std::size_t> labels, std::size_t k);

}  // namespace perfclust
