#include "perfclust/report.hpp"

#include "perfclust/error.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace perfclust {

const KResult* AnalysisReport::find(std::size_t k) const noexcept {
    for (const auto& entry : per_k)
        if (entry.k == k)
            return &entry;
    return nullptr;
}

std::string format_exact(double value) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), result.ptr};
}

std::string format_display(double value) {
    std::array<char, 512> buf{};
    const auto result =
        std::to_chars(buf.data(), buf.data() + buf.size(), std::fabs(value), std::chars_format::fixed);
    std::string text(buf.data(), result.ptr);

    auto dot = text.find('.');
    if (dot == std::string::npos) {
        dot = text.size();
        text += '.';
    }
    text.append(3, '0');  // guarantees a third fractional digit to round on
    const bool round_up = text[dot + 3] >= '5';
    std::string digits = text.substr(0, dot) + text.substr(dot + 1, 2);
    if (round_up) {
        std::size_t i = digits.size();
        while (i > 0) {
            --i;
            if (digits[i] == '9') {
                digits[i] = '0';
            } else {
                ++digits[i];
                break;
            }
            if (i == 0)
                digits.insert(digits.begin(), '1');
        }
    }
    std::string out = digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
    if (std::signbit(value) && out.find_first_not_of("0.") != std::string::npos)
        out.insert(out.begin(), '-');
    return out;
}

namespace {

std::string cluster_number(std::size_t index) { return std::to_string(index + 1); }

void render_text(const AnalysisReport& report, std::ostream& out) {
    out << "Students: " << report.n_students << "  Courses: " << report.n_courses << '\n';
    for (const auto& entry : report.per_k) {
        out << "\nK = " << entry.k << '\n';
        out << "Cluster #  Cluster size  Overall Performance  Band\n";
        for (const auto& c : entry.clusters) {
            out << cluster_number(c.cluster_index) << "  " << c.size << "  ";
            if (c.overall)
                out << format_display(*c.overall) << "  " << band_label(*c.band);
            else
                out << "-  -";
            out << '\n';
        }
        out << "Iterations: " << entry.iterations << "  Converged: " << (entry.converged ? "yes" : "no")
            << "  MSE: " << format_display(entry.mse);
        if (entry.mean_silhouette)
            out << "  Silhouette: " << format_display(*entry.mean_silhouette);
        out << '\n';
    }
}

constexpr std::string_view kCsvHeader =
    "n_students,n_courses,k,converged,iterations,mse,mean_silhouette,cluster,size,overall,overall_display,band";

void render_csv(const AnalysisReport& report, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& entry : report.per_k) {
        for (const auto& c : entry.clusters) {
            out << report.n_students << ',' << report.n_courses << ',' << entry.k << ','
                << (entry.converged ? "true" : "false") << ',' << entry.iterations << ','
                << format_exact(entry.mse) << ','
                << (entry.mean_silhouette ? format_exact(*entry.mean_silhouette) : "") << ','
                << cluster_number(c.cluster_index) << ',' << c.size << ','
                << (c.overall ? format_exact(*c.overall) : "") << ','
                << (c.overall ? format_display(*c.overall) : "") << ','
                << (c.band ? band_label(*c.band) : "") << '\n';
        }
    }
}

nlohmann::ordered_json to_json(const AnalysisReport& report) {
    nlohmann::ordered_json doc;
    doc["format"] = "perfclust-report";
    doc["version"] = 1;
    doc["dataset"] = {{"n_students", report.n_students}, {"n_courses", report.n_courses}};
    auto& results = doc["results"] = nlohmann::ordered_json::array();
    for (const auto& entry : report.per_k) {
        nlohmann::ordered_json item;
        item["k"] = entry.k;
        item["converged"] = entry.converged;
        item["iterations"] = entry.iterations;
        item["mse"] = entry.mse;
        item["mean_silhouette"] = entry.mean_silhouette ? nlohmann::ordered_json(*entry.mean_silhouette)
                                                        : nlohmann::ordered_json(nullptr);
        auto& clusters = item["clusters"] = nlohmann::ordered_json::array();
        for (const auto& c : entry.clusters) {
            nlohmann::ordered_json cj;
            cj["cluster"] = c.cluster_index + 1;
            cj["size"] = c.size;
            if (c.overall) {
                cj["overall"] = *c.overall;
                cj["overall_display"] = format_display(*c.overall);
                cj["band"] = band_label(*c.band);
            } else {
                cj["overall"] = nullptr;
                cj["overall_display"] = nullptr;
                cj["band"] = nullptr;
            }
            clusters.push_back(std::move(cj));
        }
        results.push_back(std::move(item));
    }
    return doc;
}

Band parse_band(std::string_view label) {
    const auto band = band_from_label(label);
    if (!band)
        throw InvalidInput("unknown band label '" + std::string(label) + "'");
    return *band;
}

}  // namespace

void render_table(const AnalysisReport& report, TableFormat format, std::ostream& out) {
    switch (format) {
    case TableFormat::Text:
        render_text(report, out);
        break;
    case TableFormat::Csv:
        render_csv(report, out);
        break;
    case TableFormat::Json:
        out << to_json(report).dump(2) << '\n';
        break;
    }
}

std::string render_table(const AnalysisReport& report, TableFormat format) {
    std::ostringstream out;
    render_table(report, format, out);
    return out.str();
}

AnalysisReport parse_report_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        if (doc.value("format", std::string()) != "perfclust-report")
            throw InvalidInput("not a perfclust report document");
        AnalysisReport report;
        report.n_students = doc.at("dataset").at("n_students").get<std::size_t>();
        report.n_courses = doc.at("dataset").at("n_courses").get<std::size_t>();
        for (const auto& item : doc.at("results")) {
            KResult entry;
            entry.k = item.at("k").get<std::size_t>();
            entry.converged = item.at("converged").get<bool>();
            entry.iterations = item.at("iterations").get<std::size_t>();
            entry.mse = item.at("mse").get<double>();
            if (!item.at("mean_silhouette").is_null())
                entry.mean_silhouette = item.at("mean_silhouette").get<double>();
            for (const auto& cj : item.at("clusters")) {
                ClusterPerformance c;
                const auto number = cj.at("cluster").get<std::size_t>();
                if (number == 0)
                    throw InvalidInput("cluster numbers start at 1");
                c.cluster_index = number - 1;
                c.size = cj.at("size").get<std::size_t>();
                if (!cj.at("overall").is_null()) {
                    c.overall = cj.at("overall").get<double>();
                    c.band = parse_band(cj.at("band").get<std::string>());
                }
                entry.clusters.push_back(c);
            }
            report.per_k.push_back(std::move(entry));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed report JSON: ") + e.what());
    }
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos)
            return fields;
        start = comma + 1;
    }
}

template <typename T>
T parse_number(std::string_view cell, std::size_t line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty())
        throw ParseError(line, 0, "bad number '" + std::string(cell) + "' in report CSV");
    return value;
}

}  // namespace

AnalysisReport parse_report_csv(std::string_view text) {
    AnalysisReport report;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        if (!header_seen) {
            if (line != kCsvHeader)
                throw ParseError(line_no, 0, "unexpected report CSV header");
            header_seen = true;
            continue;
        }
        const auto f = split_commas(line);
        if (f.size() != 12)
            throw ParseError(line_no, 0, "expected 12 fields in report CSV");

        report.n_students = parse_number<std::size_t>(f[0], line_no);
        report.n_courses = parse_number<std::size_t>(f[1], line_no);
        const auto k = parse_number<std::size_t>(f[2], line_no);
        if (report.per_k.empty() || report.per_k.back().k != k) {
            KResult entry;
            entry.k = k;
            if (f[3] != "true" && f[3] != "false")
                throw ParseError(line_no, 4, "converged must be true or false");
            entry.converged = f[3] == "true";
            entry.iterations = parse_number<std::size_t>(f[4], line_no);
            entry.mse = parse_number<double>(f[5], line_no);
            if (!f[6].empty())
                entry.mean_silhouette = parse_number<double>(f[6], line_no);
            report.per_k.push_back(std::move(entry));
        }
        ClusterPerformance c;
        const auto number = parse_number<std::size_t>(f[7], line_no);
        if (number == 0)
            throw ParseError(line_no, 8, "cluster numbers start at 1");
        c.cluster_index = number - 1;
        c.size = parse_number<std::size_t>(f[8], line_no);
        if (!f[9].empty()) {
            c.overall = parse_number<double>(f[9], line_no);
            c.band = parse_band(f[11]);
        }
        report.per_k.back().clusters.push_back(c);
    }
    if (!header_seen)
        throw InvalidInput("report CSV is empty");
    return report;
}

AnalysisReport parse_report(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_report_json(text);
    return parse_report_csv(text);
}

std::string write_csv(const ScoreMatrix& matrix) {
    std::string out = "id";
    for (std::size_t j = 0; j < matrix.courses(); ++j) {
        out += ',';
        out += matrix.course_names().empty() ? "C" + std::to_string(j + 1) : matrix.course_names()[j];
    }
    out += '\n';
    for (std::size_t i = 0; i < matrix.students(); ++i) {
        out += matrix.student_ids()[i];
        for (double v : matrix.scores().row(i)) {
            out += ',';
            out += format_exact(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace perfclust
