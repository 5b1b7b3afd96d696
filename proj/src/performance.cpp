#include "perfclust/performance.hpp"

#include "perfclust/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace perfclust {

const std::array<BandRange, 6>& band_ranges() noexcept {
    static constexpr std::array<BandRange, 6> ranges{{
        {Band::Excellent, 70.0, std::numeric_limits<double>::infinity()},
        {Band::VeryGood, 60.0, 70.0},
        {Band::Good, 50.0, 60.0},
        {Band::VeryFair, 45.0, 50.0},
        {Band::Fair, 40.0, 45.0},
        {Band::Poor, 0.0, 40.0},
    }};
    return ranges;
}

std::string_view band_label(Band band) noexcept {
    switch (band) {
    case Band::Excellent:
        return "Excellent";
    case Band::VeryGood:
        return "Very Good";
    case Band::Good:
        return "Good";
    case Band::VeryFair:
        return "Very Fair";
    case Band::Fair:
        return "Fair";
    case Band::Poor:
        return "Poor";
    }
    return "";
}

std::optional<Band> band_from_label(std::string_view label) noexcept {
    for (const auto& range : band_ranges())
        if (band_label(range.band) == label)
            return range.band;
    return std::nullopt;
}

Band band_of(double overall) {
    if (!std::isfinite(overall) || overall < 0.0)
        throw InvalidInput("performance score must be finite and non-negative, got " +
                           std::to_string(overall));
    for (const auto& range : band_ranges())
        if (overall >= range.lower)
            return range.band;
    return Band::Poor;
}

namespace {

double row_mean(std::span<const double> row) {
    double sum = 0.0;
    for (double v : row)
        sum += v;
    return sum / static_cast<double>(row.size());
}

}  // namespace

double overall_performance(const Matrix& members) {
    if (members.rows() == 0)
        throw InvalidInput("overall performance of an empty group is undefined");
    if (members.cols() == 0)
        throw InvalidInput("students have no scores");
    double total = 0.0;
    for (std::size_t i = 0; i < members.rows(); ++i)
        total += row_mean(members.row(i));
    return total / static_cast<double>(members.rows());
}

double overall_performance(const Matrix& data, std::span<const std::size_t> rows) {
    if (rows.empty())
        throw InvalidInput("overall performance of an empty group is undefined");
    if (data.cols() == 0)
        throw InvalidInput("students have no scores");
    double total = 0.0;
    for (std::size_t i : rows)
        total += row_mean(data.row(i));
    return total / static_cast<double>(rows.size());
}

std::vector<ClusterPerformance> evaluate_clusters(const Matrix& data, const ClusterModel& model) {
    return evaluate_clusters(data, model.assignments, model.centroids.rows());
}

std::vector<ClusterPerformance> evaluate_clusters(const Matrix& data,
                                                  std::span<const std::size_t> labels,
                                                  std::size_t k) {
    if (labels.size() != data.rows())
        throw InvalidInput("model has " + std::to_string(labels.size()) + " assignments but data has " +
                           std::to_string(data.rows()) + " rows");
    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= k)
            throw InvalidInput("assignment " + std::to_string(labels[i]) + " is not below k=" +
                               std::to_string(k));
        members[labels[i]].push_back(i);
    }

    std::vector<ClusterPerformance> out;
    out.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        ClusterPerformance entry;
        entry.cluster_index = j;
        entry.size = members[j].size();
        if (!members[j].empty()) {
            entry.overall = overall_performance(data, members[j]);
            entry.band = band_of(*entry.overall);
        }
        out.push_back(entry);
    }
    return out;
}

}  // namespace perfclust
