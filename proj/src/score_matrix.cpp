#include "perfclust/score_matrix.hpp"

#include "perfclust/error.hpp"
#include "perfclust/rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string_view>
#include <unordered_set>
#include <utility>

namespace perfclust {

ScoreMatrix ScoreMatrix::create(std::vector<std::string> student_ids, Matrix scores,
                                std::vector<std::string> course_names) {
    if (scores.rows() == 0)
        throw InvalidInput("score matrix has no students");
    if (scores.cols() == 0)
        throw InvalidInput("score matrix has no courses");
    if (student_ids.size() != scores.rows())
        throw InvalidInput(std::to_string(student_ids.size()) + " student ids for " +
                           std::to_string(scores.rows()) + " rows");
    if (!course_names.empty() && course_names.size() != scores.cols())
        throw InvalidInput(std::to_string(course_names.size()) + " course names for " +
                           std::to_string(scores.cols()) + " columns");

    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < student_ids.size(); ++i) {
        if (student_ids[i].empty())
            throw InvalidInput("empty student id in row " + std::to_string(i + 1));
        if (!seen.insert(student_ids[i]).second)
            throw InvalidInput("duplicate student id '" + student_ids[i] + "'");
    }
    for (std::size_t i = 0; i < scores.rows(); ++i)
        for (std::size_t j = 0; j < scores.cols(); ++j) {
            const double v = scores(i, j);
            if (!std::isfinite(v) || v < kMinScore || v > kMaxScore)
                throw InvalidInput("score " + std::to_string(v) + " at row " + std::to_string(i + 1) +
                                   ", column " + std::to_string(j + 1) + " is outside [0, 100]");
        }

    ScoreMatrix m;
    m.student_ids_ = std::move(student_ids);
    m.scores_ = std::move(scores);
    m.course_names_ = std::move(course_names);
    return m;
}

std::string generated_student_id(std::size_t index) {
    std::string digits = std::to_string(index + 1);
    if (digits.size() < 4)
        digits.insert(0, 4 - digits.size(), '0');
    return "S" + digits;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

double parse_score(std::string_view cell, std::size_t row, std::size_t column) {
    if (cell.empty())
        throw ParseError(row, column, "missing score");
    double value = 0.0;
    const char* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ParseError(row, column, "'" + std::string(cell) + "' is not a number");
    if (value < kMinScore || value > kMaxScore)
        throw ParseError(row, column, "score " + std::string(cell) + " is outside [0, 100]");
    return value;
}

}  // namespace

ScoreMatrix load_csv(std::istream& in, const CsvOptions& options) {
    std::vector<std::string> ids;
    std::vector<std::string> course_names;
    std::vector<double> values;
    std::size_t width = 0;  // score columns; 0 until known
    bool header_pending = options.has_header;
    const std::size_t first_score = options.id_column ? 1 : 0;
    std::unordered_set<std::string> seen_ids;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        const auto fields = split_fields(line);
        if (fields.size() <= first_score)
            throw ParseError(line_no, 0, "row has no score columns");
        const std::size_t row_width = fields.size() - first_score;

        if (header_pending) {
            header_pending = false;
            width = row_width;
            for (std::size_t c = first_score; c < fields.size(); ++c)
                course_names.emplace_back(fields[c]);
            continue;
        }
        if (width == 0)
            width = row_width;
        if (row_width != width)
            throw ParseError(line_no, 0,
                             "ragged row: " + std::to_string(row_width) + " scores, expected " +
                                 std::to_string(width));

        if (options.id_column) {
            std::string id(fields[0]);
            if (id.empty())
                throw ParseError(line_no, 1, "empty student id");
            if (!seen_ids.insert(id).second)
                throw ParseError(line_no, 1, "duplicate student id '" + id + "'");
            ids.push_back(std::move(id));
        } else {
            ids.push_back(generated_student_id(ids.size()));
        }
        for (std::size_t c = first_score; c < fields.size(); ++c)
            values.push_back(parse_score(fields[c], line_no, c + 1));
    }
    if (in.bad())
        throw InvalidInput("I/O error while reading CSV");
    if (ids.empty())
        throw InvalidInput(line_no == 0 ? "CSV input is empty" : "CSV input has no data rows");

    const std::size_t rows = ids.size();
    return ScoreMatrix::create(std::move(ids), Matrix(rows, width, std::move(values)),
                               std::move(course_names));
}

ScoreMatrix load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open '" + path.string() + "'");
    return load_csv(in, options);
}

ScoreMatrix generate_synthetic(const SyntheticSpec& spec) {
    const std::size_t groups = spec.centers.size();
    if (groups == 0)
        throw InvalidInput("at least one cluster center is required");
    if (spec.students < groups)
        throw InvalidInput("students (" + std::to_string(spec.students) + ") must be at least the number of centers (" +
                           std::to_string(groups) + ")");
    if (spec.courses == 0)
        throw InvalidInput("courses must be at least 1");
    if (!std::isfinite(spec.spread) || spec.spread < 0.0)
        throw InvalidInput("spread must be finite and non-negative");
    for (double c : spec.centers)
        if (!std::isfinite(c) || c < kMinScore || c > kMaxScore)
            throw InvalidInput("center " + std::to_string(c) + " is outside [0, 100]");

    Rng rng(spec.seed);
    Matrix scores(spec.students, spec.courses);
    std::vector<std::string> ids;
    ids.reserve(spec.students);
    for (std::size_t i = 0; i < spec.students; ++i) {
        const double center = spec.centers[i % groups];
        for (double& v : scores.row(i))
            v = std::clamp(center + spec.spread * rng.normal(), kMinScore, kMaxScore);
        ids.push_back(generated_student_id(i));
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < spec.courses; ++j)
        names.push_back("C" + std::to_string(j + 1));
    return ScoreMatrix::create(std::move(ids), std::move(scores), std::move(names));
}

}  // namespace perfclust
