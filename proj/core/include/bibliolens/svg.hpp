#pragma once

#include <string>
#include <vector>

#include "bibliolens/curve.hpp"

namespace bibliolens {

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    int width = 640;
    int height = 420;
};

// Static line chart: frame, axis ticks, one polyline per series, legend.
std::string line_chart_svg(const ChartSpec& spec);

// "series,x,y" rows in full precision.
std::string chart_csv(const ChartSpec& spec);

}  // namespace bibliolens
