#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ladr/approx.hpp"
#include "ladr/geometry.hpp"
#include "ladr/hitting.hpp"

namespace helpers {

using ladr::Instance;
using ladr::Layout;
using ladr::LineSet;
using ladr::Point;
using ladr::PointSet;
using ladr::Rational;
using ladr::Rect;

// splitmix64, fixed so corpora are identical across platforms
inline std::uint64_t mix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline PointSet pts(const std::vector<std::pair<long, long>>& coords) {
    PointSet p;
    for (const auto& [x, y] : coords) p.pts.push_back(Point{Rational(x), Rational(y)});
    return p;
}

// Six-point staircase whose minimum separating sets have exactly three lines.
inline PointSet template_i() { return pts({{1, 4}, {2, 2}, {3, 6}, {4, 1}, {5, 5}, {6, 3}}); }

inline PointSet collinear3() { return pts({{0, 0}, {1, 0}, {2, 0}}); }

inline Instance unit_instance(const std::vector<std::pair<long, long>>& centers) {
    std::vector<Rect> rects;
    Layout layout;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        Rect r;
        r.id = std::to_string(i);
        rects.push_back(r);
        layout.place(r.id, Point{Rational(centers[i].first), Rational(centers[i].second)});
    }
    return Instance(std::move(rects), std::move(layout));
}

// entries are (w, h, x, y)
inline Instance rect_instance(const std::vector<std::tuple<long, long, long, long>>& entries) {
    std::vector<Rect> rects;
    Layout layout;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [w, h, x, y] = entries[i];
        rects.push_back(Rect{std::to_string(i), w, h});
        layout.place(std::to_string(i), Point{Rational(x), Rational(y)});
    }
    return Instance(std::move(rects), std::move(layout));
}

inline std::vector<std::pair<long, long>> random_centers(std::uint64_t& state, int n, long span) {
    std::set<std::pair<long, long>> used;
    std::vector<std::pair<long, long>> out;
    while (static_cast<int>(out.size()) < n) {
        const long x = static_cast<long>(mix(state) % (span + 1));
        const long y = static_cast<long>(mix(state) % (span + 1));
        if (used.insert({x, y}).second) out.push_back({x, y});
    }
    return out;
}

inline Instance random_unit_instance(std::uint64_t& state, int n, long span = 20) {
    return unit_instance(random_centers(state, n, span));
}

inline Instance random_rect_instance(std::uint64_t& state, int n, long span = 20,
                                     long max_dim = 5) {
    const auto centers = random_centers(state, n, span);
    std::vector<std::tuple<long, long, long, long>> entries;
    for (const auto& [x, y] : centers) {
        const long w = 1 + static_cast<long>(mix(state) % max_dim);
        const long h = 1 + static_cast<long>(mix(state) % max_dim);
        entries.push_back({w, h, x, y});
    }
    return rect_instance(entries);
}

// Midpoint candidates between consecutive distinct coordinates, per axis.
inline std::pair<std::vector<Rational>, std::vector<Rational>> candidate_lines(
    const PointSet& points) {
    std::vector<Rational> xs, ys;
    for (const Point& p : points.pts) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    auto mids = [](std::vector<Rational>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<Rational> out;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back((v[i] + v[i + 1]) / 2);
        return out;
    };
    return {mids(xs), mids(ys)};
}

// Exhaustive subset enumeration over midpoint candidates; oracle for the
// branch-and-bound solvers on tiny point sets.
inline int brute_min_uhs_size(const PointSet& points) {
    const auto [vx, vy] = candidate_lines(points);
    int best = static_cast<int>(vx.size() + vy.size());
    for (std::uint32_t vm = 0; vm < (1u << vx.size()); ++vm) {
        for (std::uint32_t hm = 0; hm < (1u << vy.size()); ++hm) {
            const int count = __builtin_popcount(vm) + __builtin_popcount(hm);
            if (count >= best) continue;
            LineSet lines;
            for (std::size_t i = 0; i < vx.size(); ++i)
                if (vm & (1u << i)) lines.verticals.push_back(vx[i]);
            for (std::size_t i = 0; i < vy.size(); ++i)
                if (hm & (1u << i)) lines.horizontals.push_back(vy[i]);
            if (ladr::is_separating(lines, points)) best = count;
        }
    }
    return best;
}

inline bool brute_cuhs_decide(const PointSet& points, int r, int c) {
    const auto [vx, vy] = candidate_lines(points);
    for (std::uint32_t vm = 0; vm < (1u << vx.size()); ++vm) {
        if (__builtin_popcount(vm) > c) continue;
        for (std::uint32_t hm = 0; hm < (1u << vy.size()); ++hm) {
            if (__builtin_popcount(hm) > r) continue;
            LineSet lines;
            for (std::size_t i = 0; i < vx.size(); ++i)
                if (vm & (1u << i)) lines.verticals.push_back(vx[i]);
            for (std::size_t i = 0; i < vy.size(); ++i)
                if (hm & (1u << i)) lines.horizontals.push_back(vy[i]);
            if (ladr::is_separating(lines, points)) return true;
        }
    }
    return false;
}

inline PointSet random_points(std::uint64_t& state, int n, long span = 8) {
    const auto centers = random_centers(state, n, span);
    return pts(centers);
}

// Shifts each coordinate by rank * gamma, widening every consecutive-class gap
// by at least gamma while preserving order and disjointness.
inline Layout spread_layout(const Layout& layout, const Rational& gamma) {
    const ladr::OrthoOrder order = ladr::compute_order(layout);
    Layout out;
    for (const auto& [id, p] : layout.centers())
        out.place(id, Point{p.x + order.x_rank.at(id) * gamma,
                            p.y + order.y_rank.at(id) * gamma});
    return out;
}

}  // namespace helpers
