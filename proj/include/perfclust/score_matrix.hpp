#pragma once

// Student score matrices: validated construction, CSV ingestion, and a seeded
// synthetic generator.

#include "perfclust/matrix.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace perfclust {

inline constexpr double kMinScore = 0.0;
inline constexpr double kMaxScore = 100.0;

/// N students x M courses. Every score is finite and within [0, 100];
/// student ids are unique and non-empty.
class ScoreMatrix {
public:
    /// Validates all invariants; throws InvalidInput. course_names may be empty,
    /// otherwise it must have one entry per column.
    static ScoreMatrix create(std::vector<std::string> student_ids, Matrix scores,
                              std::vector<std::string> course_names = {});

    const std::vector<std::string>& student_ids() const noexcept { return student_ids_; }
    const std::vector<std::string>& course_names() const noexcept { return course_names_; }
    const Matrix& scores() const noexcept { return scores_; }

    std::size_t students() const noexcept { return scores_.rows(); }
    std::size_t courses() const noexcept { return scores_.cols(); }

    bool operator==(const ScoreMatrix&) const = default;

private:
    ScoreMatrix() = default;

    std::vector<std::string> student_ids_;
    Matrix scores_;
    std::vector<std::string> course_names_;
};

/// "S0001", "S0002", ... widened as needed.
std::string generated_student_id(std::size_t index);

struct CsvOptions {
    bool has_header = true;
    bool id_column = true;
};

/// Comma-separated, LF or CRLF, no quoting. Blank lines are skipped. Errors
/// are ParseError with 1-based physical line and column numbers.
ScoreMatrix load_csv(std::istream& in, const CsvOptions& options = {});
ScoreMatrix load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

struct SyntheticSpec {
    std::size_t students = 79;
    std::size_t courses = 9;
    std::vector<double> centers{62.0, 53.0, 46.0};  ///< one per true cluster
    double spread = 3.0;                             ///< per-score standard deviation
    std::uint64_t seed = 7;
};

/// Row i belongs to true cluster i mod centers.size(), so group sizes differ
/// by at most one. Scores are center + spread * N(0,1), clamped to [0, 100].
/// Throws InvalidInput for invalid shapes, centers outside [0, 100], or a
/// negative spread.
ScoreMatrix generate_synthetic(const SyntheticSpec& spec);

}  // namespace perfclust
