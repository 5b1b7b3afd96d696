#include "perfclust/error.hpp"
#include "perfclust/report.hpp"

#include <fmt/format.h>

#include <iterator>
#include <string>

namespace perfclust {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr double kPlotWidth = kWidth - kLeft - kRight;
constexpr double kPlotHeight = kHeight - kTop - kBottom;
constexpr double kAxisMax = 100.0;

double y_of(double value) { return kTop + kPlotHeight * (1.0 - value / kAxisMax); }

}  // namespace

std::string render_chart(const AnalysisReport& report, std::size_t k) {
    const KResult* entry = report.find(k);
    if (entry == nullptr)
        throw InvalidInput("report has no results for k=" + std::to_string(k));

    std::string svg;
    auto out = std::back_inserter(svg);
    fmt::format_to(out,
                   "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                   "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0:.0f}\" "
                   "height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
                   kWidth, kHeight);
    fmt::format_to(out,
                   "<text x=\"{:.1f}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                   "font-size=\"14\">Overall Performance versus cluster size (k = {})</text>\n",
                   kWidth / 2.0, k);

    // Axes and horizontal grid every 20 points.
    svg += "<g class=\"axis\" stroke=\"#333\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int tick = 0; tick <= 100; tick += 20) {
        const double y = y_of(tick);
        fmt::format_to(out, "<line x1=\"{:.1f}\" y1=\"{:.3f}\" x2=\"{:.1f}\" y2=\"{:.3f}\" stroke=\"#ddd\"/>\n",
                       kLeft, y, kLeft + kPlotWidth, y);
        fmt::format_to(out, "<text x=\"{:.1f}\" y=\"{:.3f}\" text-anchor=\"end\" stroke=\"none\">{}</text>\n",
                       kLeft - 6.0, y + 4.0, tick);
    }
    fmt::format_to(out, "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\"/>\n", kLeft, kTop,
                   kTop + kPlotHeight);
    fmt::format_to(out, "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\"/>\n", kLeft,
                   kTop + kPlotHeight, kLeft + kPlotWidth);
    svg += "</g>\n";
    fmt::format_to(out,
                   "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                   "font-size=\"12\">Cluster size (# of students)</text>\n",
                   kLeft + kPlotWidth / 2.0, kHeight - 16.0);
    fmt::format_to(out,
                   "<text x=\"16\" y=\"{0:.1f}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                   "font-size=\"12\" transform=\"rotate(-90 16 {0:.1f})\">Overall Performance (%)</text>\n",
                   kTop + kPlotHeight / 2.0);

    std::size_t bars = 0;
    for (const auto& c : entry->clusters)
        if (c.overall)
            ++bars;
    const double slot = bars == 0 ? kPlotWidth : kPlotWidth / static_cast<double>(bars);
    const double bar_width = slot * 0.6;

    svg += "<g class=\"bars\" font-family=\"sans-serif\" font-size=\"11\">\n";
    std::size_t slot_index = 0;
    for (const auto& c : entry->clusters) {
        if (!c.overall)
            continue;
        const double value = *c.overall;
        const double x = kLeft + slot * static_cast<double>(slot_index) + (slot - bar_width) / 2.0;
        const double height = kPlotHeight * value / kAxisMax;
        const double top = kTop + kPlotHeight - height;
        const double center = x + bar_width / 2.0;
        fmt::format_to(out,
                       "<rect class=\"bar\" x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" "
                       "fill=\"#4a78b5\" data-cluster=\"{}\" data-size=\"{}\" data-overall=\"{}\"/>\n",
                       x, top, bar_width, height, c.cluster_index + 1, c.size, format_display(value));
        fmt::format_to(out, "<text x=\"{:.3f}\" y=\"{:.3f}\" text-anchor=\"middle\">{}</text>\n", center,
                       top - 4.0, format_display(value));
        fmt::format_to(out, "<text x=\"{:.3f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", center,
                       kTop + kPlotHeight + 16.0, c.size);
        ++slot_index;
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace perfclust
