#include "bibliolens/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bibliolens/decimal.hpp"
#include "csv.hpp"

namespace bibliolens {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string xml_escape(const std::string& s) {
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

std::string num(double v) { return round_half_up(v, 2); }

// Tick step of 1, 2 or 5 times a power of ten giving about five intervals.
double nice_step(double span) {
    if (span <= 0) return 1.0;
    double raw = span / 5.0;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double r = raw / mag;
    return (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
}

struct Axis {
    double lo = 0, hi = 1, step = 1;

    static Axis fit(double lo, double hi, bool from_zero) {
        if (from_zero) lo = std::min(lo, 0.0);
        if (hi <= lo) hi = lo + 1.0;
        Axis a;
        a.step = nice_step(hi - lo);
        a.lo = std::floor(lo / a.step) * a.step;
        a.hi = std::ceil(hi / a.step) * a.step;
        return a;
    }
};

std::string tick_label(double v, double step) {
    int decimals = step >= 1.0 ? 0 : static_cast<int>(std::ceil(-std::log10(step)));
    return round_half_up(v, decimals);
}

}  // namespace

std::string line_chart_svg(const ChartSpec& spec) {
    const double left = 70, right = 20, top = 40, bottom = 60;
    const double w = spec.width, h = spec.height;
    const double pw = w - left - right, ph = h - top - bottom;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const auto& s : spec.series)
        for (const auto& p : s.points) {
            if (!any) {
                xmin = xmax = p.x;
                ymin = ymax = p.y;
                any = true;
            }
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    Axis xa = Axis::fit(xmin, xmax, false);
    Axis ya = Axis::fit(ymin, ymax, true);
    auto sx = [&](double x) { return left + (x - xa.lo) / (xa.hi - xa.lo) * pw; };
    auto sy = [&](double y) { return top + ph - (y - ya.lo) / (ya.hi - ya.lo) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << num(w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(spec.title)
      << "</text>\n";
    o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"#333\"/>\n";

    int xticks = static_cast<int>(std::lround((xa.hi - xa.lo) / xa.step));
    for (int i = 0; i <= xticks; ++i) {
        double v = xa.lo + i * xa.step;
        o << "<line x1=\"" << num(sx(v)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(sx(v)) << "\" y2=\""
          << num(top + ph + 5) << "\" stroke=\"#333\"/>";
        o << "<text x=\"" << num(sx(v)) << "\" y=\"" << num(top + ph + 18) << "\" text-anchor=\"middle\">"
          << tick_label(v, xa.step) << "</text>\n";
    }
    int yticks = static_cast<int>(std::lround((ya.hi - ya.lo) / ya.step));
    for (int i = 0; i <= yticks; ++i) {
        double v = ya.lo + i * ya.step;
        o << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(v)) << "\" x2=\"" << num(left + pw) << "\" y2=\""
          << num(sy(v)) << "\" stroke=\"#ddd\"/>";
        o << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(v) + 4) << "\" text-anchor=\"end\">"
          << tick_label(v, ya.step) << "</text>\n";
    }
    o << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(h - 15) << "\" text-anchor=\"middle\">"
      << xml_escape(spec.x_label) << "</text>\n";
    o << "<text transform=\"translate(16 " << num(top + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << xml_escape(spec.y_label) << "</text>\n";

    for (std::size_t i = 0; i < spec.series.size(); ++i) {
        const auto& s = spec.series[i];
        const char* color = kPalette[i % std::size(kPalette)];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t j = 0; j < s.points.size(); ++j)
            o << (j ? " " : "") << num(sx(s.points[j].x)) << ',' << num(sy(s.points[j].y));
        o << "\"/>\n";
        double ly = top + 16 + 16 * static_cast<double>(i);
        o << "<line x1=\"" << num(left + 10) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(left + 30)
          << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>";
        o << "<text x=\"" << num(left + 36) << "\" y=\"" << num(ly) << "\">" << xml_escape(s.name) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string chart_csv(const ChartSpec& spec) {
    std::ostringstream o;
    csv::write_row(o, {"series", "x", "y"});
    for (const auto& s : spec.series)
        for (const auto& p : s.points) csv::write_row(o, {s.name, format_exact(p.x), format_exact(p.y)});
    return o.str();
}

}  // namespace bibliolens
