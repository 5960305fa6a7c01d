#pragma once

#include <string>
#include <vector>

#include "registra/stats.hpp"

namespace registra::svg {

// All charts render onto a fixed canvas with axis ranges auto-fit to the
// data plus a 5% margin. Output is byte-identical for identical input:
// fixed element order, fixed coordinate formatting, colors assigned by
// sorted group label.

struct ScatterPoint {
    double x = 0.0;
    double y = 0.0;
    std::string group;
};

struct Box {
    std::string label;
    std::string group;
    stats::SummaryStats stats; // box spans q1..q3, line at median
    double whisker_lo = 0.0;   // sample extremes
    double whisker_hi = 0.0;
};

struct BarGroup {
    std::string group;
    std::vector<double> values; // one per category
};

std::string scatter_plot(const std::string& title,
                         const std::string& x_label,
                         const std::string& y_label,
                         const std::vector<ScatterPoint>& points);

std::string box_plot(const std::string& title,
                     const std::string& y_label,
                     const std::vector<Box>& boxes);

std::string grouped_bar_chart(const std::string& title,
                              const std::string& y_label,
                              const std::vector<std::string>& categories,
                              const std::vector<BarGroup>& series);

// Horizontal signed bars, one per named value (loading charts).
std::string value_bars(const std::string& title,
                       const std::vector<std::string>& names,
                       const std::vector<double>& values);

} // namespace registra::svg
