#pragma once

#include <map>
#include <string>
#include <vector>

#include "ladr/rational.hpp"

namespace ladr {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// Axis-aligned rectangle with positive integer dimensions. Position lives in a
// Layout, keyed by id; a Rect alone has no location.
struct Rect {
    std::string id;
    long w = 1;
    long h = 1;
};

// Assignment of center points to rect ids. Deterministic iteration order (by id).
class Layout {
public:
    Layout() = default;

    void place(const std::string& id, Point p) { centers_[id] = p; }
    bool has(const std::string& id) const { return centers_.count(id) != 0; }
    // Throws Error if the id is absent.
    const Point& at(const std::string& id) const;
    std::size_t size() const { return centers_.size(); }

    const std::map<std::string, Point>& centers() const { return centers_; }

    Layout translated(const Rational& dx, const Rational& dy) const;
    Layout scaled(const Rational& factor) const;

    bool operator==(const Layout& o) const { return centers_ == o.centers_; }

private:
    std::map<std::string, Point> centers_;
};

// Rect set plus its initial layout. Validates on construction: unique non-empty
// ids, dimensions >= 1, the layout covers exactly the id set, and no two rects
// share a center.
class Instance {
public:
    Instance(std::vector<Rect> rects, Layout initial);

    const std::vector<Rect>& rects() const { return rects_; }
    const Layout& initial() const { return initial_; }
    std::size_t size() const { return rects_.size(); }

    // Throws Error if the id is unknown.
    const Rect& rect(const std::string& id) const;

    long max_width() const { return max_w_; }
    long max_height() const { return max_h_; }
    long total_width() const { return total_w_; }
    long total_height() const { return total_h_; }

private:
    std::vector<Rect> rects_;
    Layout initial_;
    std::map<std::string, std::size_t> index_;
    long max_w_ = 0;
    long max_h_ = 0;
    long total_w_ = 0;
    long total_h_ = 0;
};

struct BBox {
    Rational left;
    Rational right;
    Rational bottom;
    Rational top;

    Rational width() const { return right - left; }
    Rational height() const { return top - bottom; }
    Rational area() const { return width() * height(); }
    Rational perimeter() const { return 2 * (width() + height()); }
};

// Orthogonal order of a layout: rect ids grouped into equal-coordinate classes
// per axis, classes sorted by coordinate ascending, ids sorted within a class.
// rank maps give the 1-based class index per rect id.
struct OrthoOrder {
    std::vector<std::vector<std::string>> x_classes;
    std::vector<std::vector<std::string>> y_classes;
    std::map<std::string, int> x_rank;
    std::map<std::string, int> y_rank;
};

// Strict interior overlap on both axes; touching boundaries count as disjoint.
bool intersects(const Rect& a, const Rect& b, const Layout& layout);

OrthoOrder compute_order(const Layout& layout);

// True iff both layouts place the same id set and induce identical rank maps,
// i.e. all pairwise coordinate differences agree in sign on both axes.
bool same_orthogonal_order(const Layout& a, const Layout& b);

// Smallest axis-aligned box containing every rect of the instance as placed by
// the layout. Throws Error on an empty instance or a layout missing an id.
BBox bounding_box(const Instance& instance, const Layout& layout);

}  // namespace ladr
