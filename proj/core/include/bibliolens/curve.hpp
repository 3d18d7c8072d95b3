#pragma once

#include <string>
#include <vector>

namespace bibliolens {

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct Series {
    std::string name;
    std::vector<CurvePoint> points;
};

}  // namespace bibliolens
