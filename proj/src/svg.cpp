#include "registra/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "registra/errors.hpp"
#include "registra/format.hpp"

namespace registra::svg {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 560;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 60;

const std::vector<std::string> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

void check_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw NumericalError(std::string("svg: non-finite ") + what + " coordinate");
}

std::string fmt(double v) { return format_fixed(v, 2); }

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    void expand_margin() {
        if (hi <= lo) {
            // Degenerate extent: pad around the single value.
            const double pad = lo == 0.0 ? 1.0 : std::fabs(lo) * 0.1;
            lo -= pad;
            hi += pad;
            return;
        }
        const double pad = (hi - lo) * 0.05;
        lo -= pad;
        hi += pad;
    }
};

struct Scale {
    Range range;
    double pix_lo = 0.0;
    double pix_hi = 1.0;

    double operator()(double v) const {
        return pix_lo + (v - range.lo) / (range.hi - range.lo) * (pix_hi - pix_lo);
    }
};

// Round tick spacing to 1/2/5 * 10^k covering the range with 4-8 ticks.
std::vector<double> nice_ticks(const Range& r) {
    const double span = r.hi - r.lo;
    double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
    for (double mult : {1.0, 2.0, 5.0, 10.0, 20.0}) {
        if (span / (step * mult) <= 8.0) {
            step *= mult;
            break;
        }
    }
    std::vector<double> ticks;
    double first = std::ceil(r.lo / step) * step;
    for (double t = first; t <= r.hi + step * 1e-9; t += step) {
        ticks.push_back(t == 0.0 ? 0.0 : t);
    }
    return ticks;
}

std::string tick_label(double v) {
    std::string s = format_fixed(v, 2);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s.empty() ? "0" : s;
}

std::map<std::string, std::string> group_colors(const std::set<std::string>& groups) {
    std::map<std::string, std::string> colors;
    std::size_t i = 0;
    for (const auto& g : groups) {
        colors[g] = kPalette[i % kPalette.size()];
        ++i;
    }
    return colors;
}

void open_svg(std::ostringstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">"
        << escape(title) << "</text>\n";
}

void axes(std::ostringstream& out, const Scale& xs, const Scale& ys,
          const std::string& x_label, const std::string& y_label,
          bool numeric_x) {
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom
        << "\" x2=\"" << kWidth - kMarginRight << "\" y2=\"" << kHeight - kMarginBottom
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n";
    for (double t : nice_ticks(ys.range)) {
        const double y = ys(t);
        out << "<line x1=\"" << kMarginLeft - 4 << "\" y1=\"" << fmt(y) << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << tick_label(t) << "</text>\n";
    }
    if (numeric_x) {
        for (double t : nice_ticks(xs.range)) {
            const double x = xs(t);
            out << "<line x1=\"" << fmt(x) << "\" y1=\"" << kHeight - kMarginBottom
                << "\" x2=\"" << fmt(x) << "\" y2=\"" << kHeight - kMarginBottom + 4
                << "\" stroke=\"black\"/>\n";
            out << "<text x=\"" << fmt(x) << "\" y=\"" << kHeight - kMarginBottom + 18
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
                << tick_label(t) << "</text>\n";
        }
    }
    out << "<text x=\"" << (kMarginLeft + kWidth - kMarginRight) / 2 << "\" y=\""
        << kHeight - 14
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << (kMarginTop + kHeight - kMarginBottom) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 "
        << (kMarginTop + kHeight - kMarginBottom) / 2 << ")\">" << escape(y_label)
        << "</text>\n";
}

void legend(std::ostringstream& out, const std::map<std::string, std::string>& colors) {
    int y = kMarginTop;
    for (const auto& [group, color] : colors) {
        out << "<rect x=\"" << kWidth - kMarginRight - 190 << "\" y=\"" << y
            << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << kWidth - kMarginRight - 172 << "\" y=\"" << y + 10
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(group)
            << "</text>\n";
        y += 18;
    }
}

} // namespace

std::string scatter_plot(const std::string& title,
                         const std::string& x_label,
                         const std::string& y_label,
                         const std::vector<ScatterPoint>& points) {
    Range xr, yr;
    if (!points.empty()) {
        xr = {points[0].x, points[0].x};
        yr = {points[0].y, points[0].y};
    }
    std::set<std::string> groups;
    for (const auto& p : points) {
        check_finite(p.x, "x");
        check_finite(p.y, "y");
        xr.lo = std::min(xr.lo, p.x);
        xr.hi = std::max(xr.hi, p.x);
        yr.lo = std::min(yr.lo, p.y);
        yr.hi = std::max(yr.hi, p.y);
        groups.insert(p.group);
    }
    xr.expand_margin();
    yr.expand_margin();
    Scale xs{xr, kMarginLeft, static_cast<double>(kWidth - kMarginRight)};
    Scale ys{yr, static_cast<double>(kHeight - kMarginBottom), kMarginTop};
    auto colors = group_colors(groups);

    std::ostringstream out;
    open_svg(out, title);
    axes(out, xs, ys, x_label, y_label, true);
    for (const auto& p : points) {
        out << "<circle cx=\"" << fmt(xs(p.x)) << "\" cy=\"" << fmt(ys(p.y))
            << "\" r=\"3.5\" fill=\"" << colors[p.group] << "\" fill-opacity=\"0.7\"/>\n";
    }
    legend(out, colors);
    out << "</svg>\n";
    return out.str();
}

std::string box_plot(const std::string& title,
                     const std::string& y_label,
                     const std::vector<Box>& boxes) {
    if (boxes.empty()) throw InputError("box_plot: no boxes");
    Range yr{boxes[0].whisker_lo, boxes[0].whisker_hi};
    std::set<std::string> groups;
    for (const auto& b : boxes) {
        check_finite(b.whisker_lo, "whisker");
        check_finite(b.whisker_hi, "whisker");
        check_finite(b.stats.q1, "q1");
        check_finite(b.stats.q3, "q3");
        yr.lo = std::min(yr.lo, b.whisker_lo);
        yr.hi = std::max(yr.hi, b.whisker_hi);
        groups.insert(b.group);
    }
    yr.expand_margin();
    Scale ys{yr, static_cast<double>(kHeight - kMarginBottom), kMarginTop};
    auto colors = group_colors(groups);

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double slot = plot_w / static_cast<double>(boxes.size());
    const double box_w = slot * 0.5;

    std::ostringstream out;
    open_svg(out, title);
    Scale xs{{0.0, 1.0}, kMarginLeft, static_cast<double>(kWidth - kMarginRight)};
    axes(out, xs, ys, "", y_label, false);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto& b = boxes[i];
        const double cx = kMarginLeft + slot * (static_cast<double>(i) + 0.5);
        const std::string& color = colors[b.group];
        out << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(ys(b.whisker_lo))
            << "\" x2=\"" << fmt(cx) << "\" y2=\"" << fmt(ys(b.whisker_hi))
            << "\" stroke=\"black\"/>\n";
        out << "<rect x=\"" << fmt(cx - box_w / 2) << "\" y=\"" << fmt(ys(b.stats.q3))
            << "\" width=\"" << fmt(box_w) << "\" height=\""
            << fmt(ys(b.stats.q1) - ys(b.stats.q3)) << "\" fill=\"" << color
            << "\" fill-opacity=\"0.6\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << fmt(cx - box_w / 2) << "\" y1=\"" << fmt(ys(b.stats.median))
            << "\" x2=\"" << fmt(cx + box_w / 2) << "\" y2=\"" << fmt(ys(b.stats.median))
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << fmt(cx) << "\" y=\"" << kHeight - kMarginBottom + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << escape(b.label) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string grouped_bar_chart(const std::string& title,
                              const std::string& y_label,
                              const std::vector<std::string>& categories,
                              const std::vector<BarGroup>& series) {
    if (categories.empty() || series.empty())
        throw InputError("grouped_bar_chart: empty input");
    Range yr{0.0, 0.0};
    std::set<std::string> groups;
    for (const auto& s : series) {
        if (s.values.size() != categories.size())
            throw InputError("grouped_bar_chart: series/category size mismatch");
        for (double v : s.values) {
            check_finite(v, "bar value");
            yr.lo = std::min(yr.lo, v);
            yr.hi = std::max(yr.hi, v);
        }
        groups.insert(s.group);
    }
    yr.expand_margin();
    if (yr.lo > 0.0) yr.lo = 0.0;
    Scale ys{yr, static_cast<double>(kHeight - kMarginBottom), kMarginTop};
    auto colors = group_colors(groups);

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double slot = plot_w / static_cast<double>(categories.size());
    const double bar_w = slot * 0.8 / static_cast<double>(series.size());

    std::ostringstream out;
    open_svg(out, title);
    Scale xs{{0.0, 1.0}, kMarginLeft, static_cast<double>(kWidth - kMarginRight)};
    axes(out, xs, ys, "", y_label, false);
    for (std::size_t c = 0; c < categories.size(); ++c) {
        const double left = kMarginLeft + slot * static_cast<double>(c) + slot * 0.1;
        for (std::size_t s = 0; s < series.size(); ++s) {
            const double v = series[s].values[c];
            const double x = left + bar_w * static_cast<double>(s);
            const double y0 = ys(0.0);
            const double y1 = ys(v);
            out << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(std::min(y0, y1))
                << "\" width=\"" << fmt(bar_w) << "\" height=\"" << fmt(std::fabs(y1 - y0))
                << "\" fill=\"" << colors[series[s].group] << "\"/>\n";
        }
        out << "<text x=\"" << fmt(kMarginLeft + slot * (static_cast<double>(c) + 0.5))
            << "\" y=\"" << kHeight - kMarginBottom + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
            << escape(categories[c]) << "</text>\n";
    }
    legend(out, colors);
    out << "</svg>\n";
    return out.str();
}

std::string value_bars(const std::string& title,
                       const std::vector<std::string>& names,
                       const std::vector<double>& values) {
    if (names.size() != values.size() || names.empty())
        throw InputError("value_bars: name/value size mismatch");
    Range xr{0.0, 0.0};
    for (double v : values) {
        check_finite(v, "value");
        xr.lo = std::min(xr.lo, v);
        xr.hi = std::max(xr.hi, v);
    }
    xr.expand_margin();
    Scale xs{xr, static_cast<double>(kMarginLeft + 90),
             static_cast<double>(kWidth - kMarginRight)};

    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const double slot = plot_h / static_cast<double>(names.size());
    const double bar_h = slot * 0.7;

    std::ostringstream out;
    open_svg(out, title);
    const double zero_x = xs(0.0);
    out << "<line x1=\"" << fmt(zero_x) << "\" y1=\"" << kMarginTop << "\" x2=\""
        << fmt(zero_x) << "\" y2=\"" << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
        const double y = kMarginTop + slot * static_cast<double>(i) + (slot - bar_h) / 2;
        const double x1 = xs(values[i]);
        out << "<rect x=\"" << fmt(std::min(zero_x, x1)) << "\" y=\"" << fmt(y)
            << "\" width=\"" << fmt(std::fabs(x1 - zero_x)) << "\" height=\"" << fmt(bar_h)
            << "\" fill=\"" << (values[i] >= 0 ? "#1f77b4" : "#d62728") << "\"/>\n";
        out << "<text x=\"" << kMarginLeft + 84 << "\" y=\"" << fmt(y + bar_h / 2 + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << escape(names[i]) << "</text>\n";
        out << "<text x=\"" << fmt(x1 + (values[i] >= 0 ? 4 : -4)) << "\" y=\""
            << fmt(y + bar_h / 2 + 4) << "\" text-anchor=\""
            << (values[i] >= 0 ? "start" : "end")
            << "\" font-family=\"sans-serif\" font-size=\"10\">" << format_fixed(values[i], 2)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace registra::svg
