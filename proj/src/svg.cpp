#include "ladr/svg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "ladr/error.hpp"

namespace ladr {

namespace {

// Exact fixed-point rendering with 4 decimals, round half away from zero.
std::string fixed4(const Rational& value) {
    Rational scaled = value * 10000;
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    const Integer units = floor_int(scaled + Rational(1, 2));
    const Integer whole = units / 10000;
    const Integer frac = units % 10000;
    std::ostringstream out;
    if (negative && (whole != 0 || frac != 0)) out << '-';
    out << whole.get_str() << '.';
    std::string f = frac.get_str();
    out << std::string(4 - f.size(), '0') << f;
    return out.str();
}

struct Bounds {
    Rational min_x, max_x, min_y, max_y;
    bool empty = true;

    void include(const Rational& x, const Rational& y) {
        if (empty) {
            min_x = max_x = x;
            min_y = max_y = y;
            empty = false;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
};

}  // namespace

std::string render_svg(const RenderContent& content) {
    const Layout* layout = content.layout;
    if (!layout && content.instance) layout = &content.instance->initial();
    const bool has_rects = content.instance != nullptr && layout->size() > 0;
    const bool has_points = content.points != nullptr && content.points->size() > 0;
    const bool has_lines = content.lines != nullptr && content.lines->size() > 0;
    if (!has_rects && !has_points && !has_lines) throw Error("nothing to render");

    Bounds b;
    std::optional<BBox> box;
    if (has_rects) {
        box = bounding_box(*content.instance, *layout);
        b.include(box->left, box->bottom);
        b.include(box->right, box->top);
    }
    if (has_points)
        for (const Point& p : content.points->pts) b.include(p.x, p.y);
    if (has_lines && b.empty) {
        for (const Rational& y : content.lines->horizontals) b.include(Rational(0), y);
        for (const Rational& x : content.lines->verticals) b.include(x, Rational(0));
    }

    Rational extent = std::max(Rational(b.max_x - b.min_x), Rational(b.max_y - b.min_y));
    if (extent <= 0) extent = 1;
    const Rational margin = extent / 20;
    const Rational width = b.max_x - b.min_x + 2 * margin;
    const Rational height = b.max_y - b.min_y + 2 * margin;
    // Flip y so larger y draws higher.
    auto sx = [&](const Rational& x) { return fixed4(x - b.min_x + margin); };
    auto sy = [&](const Rational& y) { return fixed4(b.max_y - y + margin); };

    const std::string stroke = fixed4(extent / 200);
    const std::string dash = fixed4(extent / 50);
    const std::string dot_radius = fixed4(extent / 80);
    const std::string font = fixed4(extent / 30);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fixed4(width) << " "
        << fixed4(height) << "\">\n";
    svg << "<style>\n"
        << ".box{fill:#eef3fb;stroke:#1f4e9c;stroke-width:" << stroke << "}\n"
        << ".bbox{fill:none;stroke:#888888;stroke-width:" << stroke << ";stroke-dasharray:" << dash
        << "}\n"
        << ".dot{fill:#b01818}\n"
        << ".line{stroke:#2a7a2a;stroke-width:" << stroke << "}\n"
        << ".label{font-family:monospace;font-size:" << font
        << "px;text-anchor:middle;dominant-baseline:middle;fill:#10233f}\n"
        << "</style>\n";

    if (has_lines) {
        for (const Rational& y : content.lines->horizontals)
            svg << "<line class=\"line\" x1=\"0\" y1=\"" << sy(y) << "\" x2=\"" << fixed4(width)
                << "\" y2=\"" << sy(y) << "\"/>\n";
        for (const Rational& x : content.lines->verticals)
            svg << "<line class=\"line\" x1=\"" << sx(x) << "\" y1=\"0\" x2=\"" << sx(x)
                << "\" y2=\"" << fixed4(height) << "\"/>\n";
    }

    if (has_rects) {
        for (const Rect& r : content.instance->rects()) {
            const Point& p = layout->at(r.id);
            svg << "<rect class=\"box\" x=\"" << sx(p.x - rational(r.w, 2)) << "\" y=\""
                << sy(p.y + rational(r.h, 2)) << "\" width=\"" << fixed4(Rational(r.w))
                << "\" height=\"" << fixed4(Rational(r.h)) << "\"/>\n";
        }
        for (const Rect& r : content.instance->rects()) {
            const Point& p = layout->at(r.id);
            svg << "<text class=\"label\" x=\"" << sx(p.x) << "\" y=\"" << sy(p.y) << "\">" << r.id
                << "</text>\n";
        }
        svg << "<rect class=\"bbox\" x=\"" << sx(box->left) << "\" y=\"" << sy(box->top)
            << "\" width=\"" << fixed4(box->width()) << "\" height=\"" << fixed4(box->height())
            << "\"/>\n";
    }

    if (has_points)
        for (const Point& p : content.points->pts)
            svg << "<circle class=\"dot\" cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\""
                << dot_radius << "\"/>\n";

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ladr
