#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ladr/geometry.hpp"

namespace ladr {

// Default size limit for the exact hitting-set solvers.
inline constexpr int kDefaultExactCap = 12;

// Distinct points with exact coordinates.
struct PointSet {
    std::vector<Point> pts;
    std::size_t size() const { return pts.size(); }
};

// Segment between two points of a PointSet, by index, a < b.
struct Segment {
    int a = 0;
    int b = 0;
};

// All induced segments of a point set, in (a, b) lexicographic order.
struct SegmentSet {
    int n_points = 0;
    std::vector<Segment> segs;
};

enum class Axis { Horizontal, Vertical };

struct Line {
    Axis axis;
    Rational coord;  // y for horizontal lines, x for vertical lines
};

// Axis-aligned line set; coordinates kept sorted ascending.
struct LineSet {
    std::vector<Rational> horizontals;
    std::vector<Rational> verticals;

    std::size_t size() const { return horizontals.size() + verticals.size(); }
    void add(const Line& line);
    void normalize();
};

// Cell coordinates and within-cell ranks induced by a separating line set:
// for point p, cell[p] = (#verticals left of p, #horizontals below p);
// alpha[p] ranks p's x among the distinct x values in its column,
// beta[p] ranks p's y among the distinct y values in its row (both 1-based).
struct HitMap {
    std::vector<std::pair<int, int>> cell;
    std::vector<int> alpha;
    std::vector<int> beta;
};

SegmentSet induced_segments(const PointSet& points);

// Strict betweenness on one coordinate: a vertical line hits pq iff its x lies
// strictly between the two x coordinates; horizontal likewise on y.
bool line_hits_segment(const Line& line, const Point& p, const Point& q);

// True iff every induced segment is hit by some line. Throws Error if a line
// passes through a point of the set.
bool is_separating(const LineSet& lines, const PointSet& points);

// Throws Error if a line passes through a point, or if two points share a cell
// (the line set does not separate them).
HitMap hit_map(const PointSet& points, const LineSet& lines);

// Minimum-cardinality separating line set. Throws CapExceededError when
// |points| > cap.
LineSet exact_uhs(const PointSet& points, int cap = kDefaultExactCap);

// Is there a separating set with at most r horizontal and c vertical lines?
bool cuhs_decide(const PointSet& points, int r, int c, int cap = kDefaultExactCap);

// Like cuhs_decide, but returns a witness line set when one exists.
std::optional<LineSet> cuhs_witness(const PointSet& points, int r, int c,
                                    int cap = kDefaultExactCap);

// Pareto-minimal feasible budgets, as (r, c) pairs with r ascending.
std::vector<std::pair<int, int>> feasible_rc_frontier(const PointSet& points,
                                                      int cap = kDefaultExactCap);

// min (r+1)(c+1) over feasible budgets: the optimal bounding-box area over
// disjoint order-preserving unit-square layouts of the point set.
Rational optimal_lads_area(const PointSet& points, int cap = kDefaultExactCap);

// Unit squares centered at the points; ids are decimal point indices.
Instance unit_square_instance(const PointSet& points);

// Point set from a layout's centers, in the layout's (id-sorted) order.
PointSet points_from_layout(const Layout& layout);

// Builds a disjoint unit-square layout with the points' orthogonal order from a
// separating line set with r horizontals and c verticals; the result fits in a
// (c+1+eps) x (r+1+eps) box. Ids are decimal point indices.
Layout hitting_to_layout(const PointSet& points, const LineSet& lines, const Rational& eps);

// Inverse direction: from a disjoint unit-square layout of width < w + 1/2 and
// height < h + 1/2, builds at most (w-1) verticals and (h-1) horizontals that
// separate the layout's centers (in the layout's own frame).
LineSet layout_to_hitting(const Instance& instance, const Layout& layout, long w, long h);

}  // namespace ladr
