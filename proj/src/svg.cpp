#include "claimnet/svg.hpp"

#include <cmath>
#include <sstream>

#include "claimnet/csv.hpp"

namespace claimnet {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 48.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string header() {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    return out.str();
}

std::string axis() {
    std::ostringstream out;
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
        << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    return out.str();
}

std::string polyline(const std::vector<std::pair<double, double>>& points,
                     const std::string& color) {
    std::ostringstream out;
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : points) out << num(x) << "," << num(y) << " ";
    out << "\"/>\n";
    return out.str();
}

double x_for(int i, int n) {
    if (n <= 1) return kMargin + (kWidth - 2 * kMargin) / 2;
    return kMargin + (kWidth - 2 * kMargin) * i / (n - 1);
}

double y_for(double share) { // share in [0, 1]
    return kHeight - kMargin - (kHeight - 2 * kMargin) * share;
}

} // namespace

std::string svg_posneg_chart(const std::vector<YearPosNeg>& series) {
    std::ostringstream out;
    out << header();
    out << "<!-- data: year,articles,raw_positive,raw_negative,positive_share,negative_share\n";
    for (const auto& row : series) {
        out << row.year << "," << row.articles << "," << row.raw_positive << ","
            << row.raw_negative << "," << format3(row.positive_share) << ","
            << format3(row.negative_share) << "\n";
    }
    out << "-->\n" << axis();
    std::vector<std::pair<double, double>> pos;
    std::vector<std::pair<double, double>> neg;
    const int n = static_cast<int>(series.size());
    for (int i = 0; i < n; ++i) {
        pos.push_back({x_for(i, n), y_for(series[i].positive_share)});
        neg.push_back({x_for(i, n), y_for(series[i].negative_share)});
    }
    if (n > 0) {
        out << polyline(pos, "#2166ac") << polyline(neg, "#b2182b");
        out << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 12
            << "\" font-size=\"13\">share of articles: positive (blue), negative (red)</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_topic_chart(const TopicShares& shares) {
    std::ostringstream out;
    out << header();
    out << "<!-- data: period,articles";
    for (TopicCategory t : kAllTopics) out << "," << topic_name(t);
    out << ",coverage=" << format3(shares.coverage_percentage) << "\n";
    for (const auto& row : shares.periods) {
        out << row.label << "," << row.articles;
        for (TopicCategory t : kAllTopics) out << "," << format3(row.percentage.at(t));
        out << "\n";
    }
    out << "-->\n" << axis();

    const std::vector<std::string> palette = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                              "#66a61e", "#e6ab02", "#a6761d", "#666666"};
    const std::size_t groups = shares.periods.size();
    if (groups > 0) {
        const double group_width = (kWidth - 2 * kMargin) / groups;
        const double bar_width = group_width / (kAllTopics.size() + 2);
        for (std::size_t gi = 0; gi < groups; ++gi) {
            const auto& row = shares.periods[gi];
            double x = kMargin + gi * group_width + bar_width;
            std::size_t color = 0;
            for (TopicCategory t : kAllTopics) {
                const double pct = row.percentage.at(t);
                const double h = (kHeight - 2 * kMargin) * pct / 100.0;
                out << "<rect x=\"" << num(x) << "\" y=\"" << num(kHeight - kMargin - h)
                    << "\" width=\"" << num(bar_width) << "\" height=\"" << num(h) << "\" fill=\""
                    << palette[color % palette.size()] << "\"/>\n";
                x += bar_width;
                ++color;
            }
            out << "<text x=\"" << num(kMargin + gi * group_width + group_width / 2 - 12)
                << "\" y=\"" << num(kHeight - kMargin + 16) << "\" font-size=\"12\">" << row.label
                << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_meta_graph(const BlockMetaGraph& meta) {
    std::ostringstream out;
    out << header();
    out << "<!-- data: block_r,block_s,weight,p,hidden\n";
    for (const auto& cell : meta.cells) {
        out << cell.r << "," << cell.s << "," << cell.weight << "," << format3(cell.p) << ","
            << (cell.hidden ? "1" : "0") << "\n";
    }
    out << "-->\n";

    const int b = meta.num_blocks;
    if (b > 0) {
        const double cx = kWidth / 2;
        const double cy = kHeight / 2;
        const double ring = std::min(kWidth, kHeight) / 2 - 2 * kMargin;
        std::vector<std::pair<double, double>> centers(b);
        std::vector<long> received(b, 0);
        for (const auto& cell : meta.cells) received[cell.s] += cell.weight;
        long max_received = 1;
        for (long r : received) max_received = std::max(max_received, r);
        for (int i = 0; i < b; ++i) {
            const double angle = 2 * 3.14159265358979323846 * i / b;
            centers[i] = {cx + ring * std::cos(angle), cy + ring * std::sin(angle)};
        }
        for (const auto& cell : meta.cells) {
            if (cell.hidden || cell.r == cell.s) continue;
            const auto& [x1, y1] = centers[cell.r];
            const auto& [x2, y2] = centers[cell.s];
            out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
                << "\" y2=\"" << num(y2) << "\" stroke=\"#555\" stroke-width=\""
                << num(1.0 + 40.0 * cell.p) << "\" marker-end=\"url(#arr)\"/>\n";
        }
        out << "<defs><marker id=\"arr\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" "
               "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#555\"/>"
               "</marker></defs>\n";
        for (int i = 0; i < b; ++i) {
            const double radius =
                10.0 + 24.0 * std::sqrt(static_cast<double>(received[i]) / max_received);
            out << "<circle cx=\"" << num(centers[i].first) << "\" cy=\"" << num(centers[i].second)
                << "\" r=\"" << num(radius) << "\" fill=\"#97c2e5\" stroke=\"#333\"/>\n";
            out << "<text x=\"" << num(centers[i].first - 4) << "\" y=\""
                << num(centers[i].second + 4) << "\" font-size=\"13\">"
                << static_cast<char>('A' + (i % 26)) << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_wor_chart(const std::vector<WorYear>& series) {
    std::ostringstream out;
    out << header();
    out << "<!-- data: year,articles,share_world_a,share_world_b\n";
    for (const auto& row : series) {
        out << row.year << "," << row.articles << "," << format3(row.share_world_a) << ","
            << format3(row.share_world_b) << "\n";
    }
    out << "-->\n" << axis();
    std::vector<std::pair<double, double>> a;
    std::vector<std::pair<double, double>> b;
    const int n = static_cast<int>(series.size());
    for (int i = 0; i < n; ++i) {
        a.push_back({x_for(i, n), y_for(series[i].share_world_a)});
        b.push_back({x_for(i, n), y_for(series[i].share_world_b)});
    }
    if (n > 0) {
        out << polyline(a, "#2166ac") << polyline(b, "#b2182b");
        out << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 12
            << "\" font-size=\"13\">world of references share: A (blue), B (red)</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace claimnet
