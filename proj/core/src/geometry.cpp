#include "pnw/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "pnw/profiles.hpp"

namespace pnw {

std::vector<LatticePoint> word_path(const Word& w) {
    std::vector<LatticePoint> path{{0, 0}};
    path.reserve(w.size() + 1);
    long y = 0;
    long x = 0;
    for (char c : w) {
        y += (c == 'a') ? 1 : -1;
        path.push_back({++x, y});
    }
    return path;
}

bool RegionProfile::contains(long x, long y) const noexcept {
    if (x < 0 || static_cast<std::size_t>(x) > n) return false;
    if ((x - y) % 2 != 0) return false;
    return lower[static_cast<std::size_t>(x)] <= y && y <= upper[static_cast<std::size_t>(x)];
}

ParikhVector RegionProfile::parikh_of(long x, long y) noexcept {
    return {static_cast<std::size_t>((x + y) / 2), static_cast<std::size_t>((x - y) / 2)};
}

RegionProfile region(const Word& w) {
    const auto max_a = max_a_profile(w);
    const auto min_a = min_a_profile(w);
    RegionProfile r;
    r.n = w.size();
    for (std::size_t k = 0; k <= r.n; ++k) {
        const auto kk = static_cast<long>(k);
        r.upper.push_back(2 * static_cast<long>(max_a[k]) - kk);
        r.lower.push_back(2 * static_cast<long>(min_a[k]) - kk);
    }
    return r;
}

std::vector<LatticePoint> region_polygon(const RegionProfile& r) {
    std::vector<LatticePoint> out;
    out.reserve(2 * (r.n + 1));
    for (std::size_t k = 0; k <= r.n; ++k) out.push_back({static_cast<long>(k), r.upper[k]});
    for (std::size_t k = r.n + 1; k-- > 0;) out.push_back({static_cast<long>(k), r.lower[k]});
    return out;
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Canvas {
    double unit;
    double margin;
    long y_top;

    double px(long x) const { return margin + static_cast<double>(x) * unit; }
    double py(long y) const { return margin + static_cast<double>(y_top - y) * unit; }

    std::string points(const std::vector<LatticePoint>& pts) const {
        std::string out;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) out += ' ';
            out += num(px(pts[i].x)) + "," + num(py(pts[i].y));
        }
        return out;
    }
};

std::vector<LatticePoint> boundary(const std::vector<long>& ys) {
    std::vector<LatticePoint> out;
    for (std::size_t k = 0; k < ys.size(); ++k) out.push_back({static_cast<long>(k), ys[k]});
    return out;
}

}  // namespace

std::string render_svg(const Word& w, const SvgOptions& options) {
    if (w.size() > render_bound)
        throw std::length_error("render bound " + std::to_string(render_bound) + " exceeded by length " +
                                std::to_string(w.size()));
    if (!(options.unit > 0)) throw std::invalid_argument("unit must be positive");

    const auto r = region(w);
    const long y_top = *std::max_element(r.upper.begin(), r.upper.end());
    const long y_bottom = *std::min_element(r.lower.begin(), r.lower.end());
    const Canvas canvas{options.unit, options.unit, y_top};
    const double width = 2 * canvas.margin + static_cast<double>(r.n) * options.unit;
    const double height = 2 * canvas.margin + static_cast<double>(y_top - y_bottom) * options.unit;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
        << "<title>" << (w.empty() ? std::string("(empty word)") : w.str()) << "</title>\n";

    if (!w.empty()) {
        svg << "<polygon id=\"region\" fill=\"#dfe9f5\" stroke=\"none\" points=\""
            << canvas.points(region_polygon(r)) << "\"/>\n";
        if (options.suffix_paths) {
            svg << "<g id=\"suffix-paths\" fill=\"none\" stroke=\"#9aa5b1\" stroke-width=\"1\">\n";
            for (std::size_t start = 2; start <= w.size(); ++start) {
                svg << "<polyline points=\"" << canvas.points(word_path(w.factor(start, w.size() - start + 1)))
                    << "\"/>\n";
            }
            svg << "</g>\n";
        }
        svg << "<polyline id=\"pnf-a\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"2\" points=\""
            << canvas.points(boundary(r.upper)) << "\"/>\n"
            << "<polyline id=\"pnf-b\" fill=\"none\" stroke=\"#b0413e\" stroke-width=\"2\" points=\""
            << canvas.points(boundary(r.lower)) << "\"/>\n"
            << "<polyline id=\"word\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\" points=\""
            << canvas.points(word_path(w)) << "\"/>\n";
    }
    svg << "<circle id=\"origin\" cx=\"" << num(canvas.px(0)) << "\" cy=\"" << num(canvas.py(0))
        << "\" r=\"" << num(options.unit / 5) << "\" fill=\"#222222\"/>\n"
        << "</svg>\n";
    return svg.str();
}

std::string region_csv(const Word& w) {
    const auto r = region(w);
    const auto max_a = max_a_profile(w);
    const auto min_a = min_a_profile(w);
    std::ostringstream out;
    out << "k,upper_y,lower_y,F_a,f_a\n";
    for (std::size_t k = 0; k <= r.n; ++k)
        out << k << ',' << r.upper[k] << ',' << r.lower[k] << ',' << max_a[k] << ',' << min_a[k] << '\n';
    return out.str();
}

}  // namespace pnw
