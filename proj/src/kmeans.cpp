#include "perfclust/kmeans.hpp"

#include "perfclust/error.hpp"
#include "perfclust/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace perfclust {
namespace {

void require_same_dimension(const Matrix& data, const Matrix& centroids) {
    if (data.cols() != centroids.cols())
        throw DimensionMismatch(data.cols(), centroids.cols());
}

void validate_dataset(const Matrix& data) {
    if (data.rows() == 0)
        throw InvalidInput("dataset is empty");
    if (data.cols() == 0)
        throw InvalidInput("dataset has zero dimensions");
    for (std::size_t i = 0; i < data.rows(); ++i)
        for (double v : data.row(i))
            if (!std::isfinite(v))
                throw InvalidInput("non-finite value in row " + std::to_string(i + 1));
}

void validate_k(std::size_t k, std::size_t n) {
    if (k == 0)
        throw InvalidConfig("k must be at least 1");
    if (k > n)
        throw InvalidConfig("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
}

}  // namespace

std::vector<std::size_t> ClusterModel::cluster_sizes() const {
    std::vector<std::size_t> sizes(centroids.rows(), 0);
    for (std::size_t label : assignments)
        ++sizes[label];
    return sizes;
}

double squared_euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw DimensionMismatch(a.size(), b.size());
    return simd::active_kernels().squared_distance(a.data(), b.data(), a.size());
}

Matrix initialize_centroids(const Matrix& data, const KMeansConfig& config) {
    validate_k(config.k, data.rows());
    std::vector<std::size_t> chosen(config.k);
    if (config.init == InitStrategy::FirstK) {
        std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    } else {
        // Partial Fisher-Yates: the first k slots end up holding k distinct rows.
        std::vector<std::size_t> pool(data.rows());
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        Rng rng(config.seed);
        for (std::size_t j = 0; j < config.k; ++j) {
            const auto pick = j + static_cast<std::size_t>(rng.uniform_index(pool.size() - j));
            std::swap(pool[j], pool[pick]);
            chosen[j] = pool[j];
        }
    }
    return data.select_rows(chosen);
}

Assignment assign_points(const Matrix& data, const Matrix& centroids) {
    return assign_points(data, centroids, simd::active_kernels());
}

Assignment assign_points(const Matrix& data, const Matrix& centroids, const simd::Kernels& kernels) {
    if (centroids.rows() == 0)
        throw InvalidInput("at least one centroid is required");
    require_same_dimension(data, centroids);

    const std::size_t d = data.cols();
    Assignment out;
    out.labels.resize(data.rows());
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const auto nearest = kernels.nearest_centroid(data.row(i).data(), centroids.data(),
                                                      centroids.rows(), d);
        out.labels[i] = nearest.index;
        out.sse += nearest.distance;
    }
    return out;
}

Matrix update_centroids(const Matrix& data, std::span<const std::size_t> labels, std::size_t k,
                        EmptyClusterPolicy policy, const Matrix& previous) {
    return update_centroids(data, labels, k, policy, previous, simd::active_kernels());
}

Matrix update_centroids(const Matrix& data, std::span<const std::size_t> labels, std::size_t k,
                        EmptyClusterPolicy policy, const Matrix& previous,
                        const simd::Kernels& kernels) {
    if (labels.size() != data.rows())
        throw InvalidInput("label count " + std::to_string(labels.size()) + " does not match " +
                           std::to_string(data.rows()) + " rows");
    if (previous.rows() != k)
        throw InvalidInput("expected " + std::to_string(k) + " previous centroids, got " +
                           std::to_string(previous.rows()));
    require_same_dimension(data, previous);

    const std::size_t n = data.rows();
    const std::size_t d = data.cols();

    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] >= k)
            throw Error("internal consistency: label " + std::to_string(labels[i]) +
                        " is not below k=" + std::to_string(k));
        ++counts[labels[i]];
    }

    // Robust re-seeding happens before accumulation so a donated point never
    // enters its donor's mean. Ties on distance go to the highest row index.
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> reseed(k, kNone);
    std::vector<bool> donated(n, false);
    if (policy == EmptyClusterPolicy::Robust) {
        for (std::size_t j = 0; j < k; ++j) {
            if (counts[j] != 0)
                continue;
            std::size_t best = kNone;
            double best_distance = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t donor = labels[i];
                if (donated[i] || counts[donor] < 2)
                    continue;
                const double dist =
                    kernels.squared_distance(data.row(i).data(), previous.row(donor).data(), d);
                if (dist >= best_distance) {
                    best = i;
                    best_distance = dist;
                }
            }
            // k <= n guarantees a donor with two members while any cluster is empty.
            if (best == kNone)
                throw InvalidConfig("cannot re-seed empty cluster: fewer points than clusters");
            donated[best] = true;
            --counts[labels[best]];
            counts[j] = 1;
            reseed[j] = best;
        }
    }

    Matrix sums(k, d);
    for (std::size_t i = 0; i < n; ++i)
        if (!donated[i])
            kernels.accumulate(sums.row(labels[i]).data(), data.row(i).data(), d);

    for (std::size_t j = 0; j < k; ++j) {
        auto centroid = sums.row(j);
        if (reseed[j] != kNone) {
            const auto src = data.row(reseed[j]);
            std::copy(src.begin(), src.end(), centroid.begin());
            continue;
        }
        const auto divisor = static_cast<double>(std::max<std::size_t>(counts[j], 1));
        for (double& v : centroid)
            v /= divisor;
    }
    return sums;
}

ClusterModel run_kmeans(const Matrix& data, const KMeansConfig& config) {
    return run_kmeans(data, config, simd::active_kernels());
}

ClusterModel run_kmeans(const Matrix& data, const KMeansConfig& config, const simd::Kernels& kernels) {
    validate_dataset(data);
    validate_k(config.k, data.rows());
    if (config.max_iterations == 0)
        throw InvalidConfig("max_iterations must be at least 1");

    ClusterModel model;
    Matrix centroids = initialize_centroids(data, config);
    double previous_sse = std::numeric_limits<double>::infinity();

    while (model.iterations < config.max_iterations) {
        const Assignment pass = assign_points(data, centroids, kernels);
        model.sse_trace.push_back(pass.sse);
        ++model.iterations;
        centroids = update_centroids(data, pass.labels, config.k, config.empty_cluster_policy,
                                     centroids, kernels);
        if (!(pass.sse < previous_sse)) {
            model.converged = true;
            break;
        }
        previous_sse = pass.sse;
    }

    Assignment final_state = assign_points(data, centroids, kernels);
    model.centroids = std::move(centroids);
    model.assignments = std::move(final_state.labels);
    model.sse = final_state.sse;
    model.mse = final_state.sse / static_cast<double>(data.rows());
    return model;
}

Silhouette silhouette_width(const Matrix& data, std::span<const std::size_t> labels, std::size_t k) {
    if (k < 2)
        throw InvalidInput("silhouette width needs k >= 2, got k=" + std::to_string(k));
    if (labels.size() != data.rows())
        throw InvalidInput("label count does not match row count");

    const std::size_t n = data.rows();
    const std::size_t d = data.cols();
    const auto& kernels = simd::active_kernels();

    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t label : labels) {
        if (label >= k)
            throw InvalidInput("label " + std::to_string(label) + " is not below k=" + std::to_string(k));
        ++sizes[label];
    }

    Silhouette out;
    out.per_point.assign(n, 0.0);
    std::vector<double> distance_sum(k);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t own = labels[i];
        if (sizes[own] < 2)
            continue;
        std::fill(distance_sum.begin(), distance_sum.end(), 0.0);
        for (std::size_t other = 0; other < n; ++other)
            distance_sum[labels[other]] +=
                std::sqrt(kernels.squared_distance(data.row(i).data(), data.row(other).data(), d));

        const double a = distance_sum[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c)
            if (c != own && sizes[c] > 0)
                b = std::min(b, distance_sum[c] / static_cast<double>(sizes[c]));
        if (std::isinf(b))
            continue;
        const double scale = std::max(a, b);
        out.per_point[i] = scale > 0.0 ? (b - a) / scale : 0.0;
    }
    out.mean = std::accumulate(out.per_point.begin(), out.per_point.end(), 0.0) / static_cast<double>(n);
    return out;
}

}  // namespace perfclust
