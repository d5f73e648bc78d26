#include "ladr/hitting.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "ladr/error.hpp"

namespace ladr {

void LineSet::add(const Line& line) {
    (line.axis == Axis::Horizontal ? horizontals : verticals).push_back(line.coord);
}

void LineSet::normalize() {
    for (auto* v : {&horizontals, &verticals}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
}

namespace {

void check_distinct(const PointSet& points) {
    std::set<std::pair<Rational, Rational>> seen;
    for (const Point& p : points.pts)
        if (!seen.emplace(p.x, p.y).second) throw Error("point set has duplicate points");
}

// Index of the cell a coordinate falls into, given sorted line coordinates.
// Throws if the coordinate lies on a line.
int cell_index(const std::vector<Rational>& sorted_lines, const Rational& v) {
    auto it = std::lower_bound(sorted_lines.begin(), sorted_lines.end(), v);
    if (it != sorted_lines.end() && *it == v) throw Error("line passes through a point");
    return static_cast<int>(it - sorted_lines.begin());
}

}  // namespace

SegmentSet induced_segments(const PointSet& points) {
    check_distinct(points);
    SegmentSet out;
    out.n_points = static_cast<int>(points.size());
    for (int a = 0; a < out.n_points; ++a)
        for (int b = a + 1; b < out.n_points; ++b) out.segs.push_back(Segment{a, b});
    return out;
}

bool line_hits_segment(const Line& line, const Point& p, const Point& q) {
    const Rational& u = (line.axis == Axis::Vertical) ? p.x : p.y;
    const Rational& v = (line.axis == Axis::Vertical) ? q.x : q.y;
    return (u < line.coord && line.coord < v) || (v < line.coord && line.coord < u);
}

HitMap hit_map(const PointSet& points, const LineSet& lines) {
    check_distinct(points);
    std::vector<Rational> vs = lines.verticals;
    std::vector<Rational> hs = lines.horizontals;
    std::sort(vs.begin(), vs.end());
    std::sort(hs.begin(), hs.end());

    const int n = static_cast<int>(points.size());
    HitMap out;
    out.cell.resize(n);
    out.alpha.assign(n, 0);
    out.beta.assign(n, 0);
    std::map<std::pair<int, int>, int> cell_seen;
    for (int i = 0; i < n; ++i) {
        out.cell[i] = {cell_index(vs, points.pts[i].x), cell_index(hs, points.pts[i].y)};
        auto ins = cell_seen.emplace(out.cell[i], i);
        if (!ins.second)
            throw Error("line set does not separate points " + std::to_string(ins.first->second) +
                        " and " + std::to_string(i));
    }

    // Rank distinct x per column and distinct y per row.
    std::map<int, std::set<Rational>> col_xs, row_ys;
    for (int i = 0; i < n; ++i) {
        col_xs[out.cell[i].first].insert(points.pts[i].x);
        row_ys[out.cell[i].second].insert(points.pts[i].y);
    }
    for (int i = 0; i < n; ++i) {
        const auto& xs = col_xs[out.cell[i].first];
        const auto& ys = row_ys[out.cell[i].second];
        out.alpha[i] = 1 + static_cast<int>(std::distance(xs.begin(), xs.find(points.pts[i].x)));
        out.beta[i] = 1 + static_cast<int>(std::distance(ys.begin(), ys.find(points.pts[i].y)));
    }
    return out;
}

bool is_separating(const LineSet& lines, const PointSet& points) {
    check_distinct(points);
    std::vector<Rational> vs = lines.verticals;
    std::vector<Rational> hs = lines.horizontals;
    std::sort(vs.begin(), vs.end());
    std::sort(hs.begin(), hs.end());
    std::set<std::pair<int, int>> cells;
    for (const Point& p : points.pts) {
        const std::pair<int, int> cell{cell_index(vs, p.x), cell_index(hs, p.y)};
        if (!cells.insert(cell).second) return false;
    }
    return true;
}

namespace {

// Dynamic bitset over induced segments.
struct Mask {
    std::vector<std::uint64_t> w;

    explicit Mask(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void or_with(const Mask& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    bool contains(const Mask& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((w[i] & o.w[i]) != o.w[i]) return false;
        return true;
    }
};

struct Candidate {
    Line line;
    Mask hits;
};

// Exact solver state shared by the minimization and budgeted searches.
struct ExactSearch {
    PointSet points;
    std::vector<Segment> segs;
    std::vector<Candidate> cands;
    std::vector<std::uint64_t> seg_cands;    // candidates hitting each segment
    std::vector<std::uint64_t> seg_cands_v;  // vertical candidates only
    std::vector<std::uint64_t> seg_cands_h;  // horizontal candidates only
    int n_vertical = 0;                      // candidates [0, n_vertical) are vertical

    explicit ExactSearch(const PointSet& p) : points(p) {
        segs = induced_segments(points).segs;
        std::set<Rational> xs, ys;
        for (const Point& pt : points.pts) {
            xs.insert(pt.x);
            ys.insert(pt.y);
        }
        auto midpoints = [](const std::set<Rational>& coords) {
            std::vector<Rational> mids;
            const Rational* prev = nullptr;
            for (const Rational& c : coords) {
                if (prev) mids.push_back((*prev + c) / 2);
                prev = &c;
            }
            return mids;
        };
        for (const Rational& x : midpoints(xs)) cands.push_back({Line{Axis::Vertical, x}, Mask{}});
        n_vertical = static_cast<int>(cands.size());
        for (const Rational& y : midpoints(ys)) cands.push_back({Line{Axis::Horizontal, y}, Mask{}});
        if (cands.size() > 64)
            throw CapExceededError("exact hitting-set search limited to 64 candidate lines");

        seg_cands.assign(segs.size(), 0);
        seg_cands_v.assign(segs.size(), 0);
        seg_cands_h.assign(segs.size(), 0);
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            Candidate& cand = cands[ci];
            cand.hits = Mask(segs.size());
            for (std::size_t si = 0; si < segs.size(); ++si) {
                if (line_hits_segment(cand.line, points.pts[segs[si].a], points.pts[segs[si].b])) {
                    cand.hits.set(si);
                    seg_cands[si] |= std::uint64_t(1) << ci;
                    if (static_cast<int>(ci) < n_vertical)
                        seg_cands_v[si] |= std::uint64_t(1) << ci;
                    else
                        seg_cands_h[si] |= std::uint64_t(1) << ci;
                }
            }
        }
    }

    bool is_vertical(int ci) const { return ci < n_vertical; }

    // Greedy count of uncovered segments with pairwise-disjoint candidate sets;
    // a lower bound on the number of additional lines needed.
    int disjoint_lb(const Mask& covered) const {
        std::uint64_t taken = 0;
        int lb = 0;
        for (std::size_t s = 0; s < segs.size(); ++s) {
            if (covered.test(s)) continue;
            if ((seg_cands[s] & taken) == 0) {
                ++lb;
                taken |= seg_cands[s];
            }
        }
        return lb;
    }

    // Lower bound on one axis, counting segments only that axis can hit.
    int forced_axis_lb(const Mask& covered, bool vertical) const {
        const auto& own = vertical ? seg_cands_v : seg_cands_h;
        const auto& other = vertical ? seg_cands_h : seg_cands_v;
        std::uint64_t taken = 0;
        int lb = 0;
        for (std::size_t s = 0; s < segs.size(); ++s) {
            if (covered.test(s) || other[s] != 0) continue;
            if ((own[s] & taken) == 0) {
                ++lb;
                taken |= own[s];
            }
        }
        return lb;
    }

    bool all_covered(const Mask& covered) const {
        for (std::size_t s = 0; s < segs.size(); ++s)
            if (!covered.test(s)) return false;
        return true;
    }

    // Uncovered segment with the fewest usable candidates; -1 when all covered,
    // -2 when some uncovered segment has no usable candidate.
    int pick_segment(const Mask& covered, std::uint64_t usable) const {
        int best = -1;
        int best_count = INT_MAX;
        for (std::size_t s = 0; s < segs.size(); ++s) {
            if (covered.test(s)) continue;
            const int count = __builtin_popcountll(seg_cands[s] & usable);
            if (count == 0) return -2;
            if (count < best_count) {
                best_count = count;
                best = static_cast<int>(s);
            }
        }
        return best;
    }

    LineSet to_line_set(const std::vector<int>& chosen) const {
        LineSet out;
        for (int ci : chosen) out.add(cands[ci].line);
        out.normalize();
        return out;
    }
};

struct MinimizeSearch {
    const ExactSearch& ctx;
    std::vector<int> best;
    std::vector<int> chosen;

    explicit MinimizeSearch(const ExactSearch& c) : ctx(c) {}

    void seed_greedy() {
        Mask covered(ctx.segs.size());
        while (!ctx.all_covered(covered)) {
            int best_cand = -1;
            int best_gain = -1;
            for (std::size_t ci = 0; ci < ctx.cands.size(); ++ci) {
                int gain = 0;
                for (std::size_t s = 0; s < ctx.segs.size(); ++s)
                    if (!covered.test(s) && ctx.cands[ci].hits.test(s)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best_cand = static_cast<int>(ci);
                }
            }
            best.push_back(best_cand);
            covered.or_with(ctx.cands[best_cand].hits);
        }
    }

    void dfs(Mask covered) {
        if (ctx.all_covered(covered)) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        if (chosen.size() + static_cast<std::size_t>(ctx.disjoint_lb(covered)) >= best.size())
            return;
        const std::uint64_t usable = ~std::uint64_t(0);
        const int s = ctx.pick_segment(covered, usable);
        std::uint64_t options = ctx.seg_cands[s];
        while (options) {
            const int ci = __builtin_ctzll(options);
            options &= options - 1;
            Mask next = covered;
            next.or_with(ctx.cands[ci].hits);
            chosen.push_back(ci);
            dfs(next);
            chosen.pop_back();
        }
    }
};

struct BudgetSearch {
    const ExactSearch& ctx;
    std::vector<int> chosen;
    std::vector<int> witness;
    bool found = false;

    explicit BudgetSearch(const ExactSearch& c) : ctx(c) {}

    bool dfs(Mask covered, int rem_h, int rem_v) {
        if (ctx.all_covered(covered)) {
            witness = chosen;
            found = true;
            return true;
        }
        if (ctx.disjoint_lb(covered) > rem_h + rem_v) return false;
        if (ctx.forced_axis_lb(covered, true) > rem_v) return false;
        if (ctx.forced_axis_lb(covered, false) > rem_h) return false;
        std::uint64_t usable = 0;
        if (rem_v > 0) usable |= (ctx.n_vertical == 64)
                                     ? ~std::uint64_t(0)
                                     : ((std::uint64_t(1) << ctx.n_vertical) - 1);
        if (rem_h > 0) usable |= ~((ctx.n_vertical == 64)
                                       ? ~std::uint64_t(0)
                                       : ((std::uint64_t(1) << ctx.n_vertical) - 1));
        const int s = ctx.pick_segment(covered, usable);
        if (s < 0) return false;
        std::uint64_t options = ctx.seg_cands[s] & usable;
        while (options) {
            const int ci = __builtin_ctzll(options);
            options &= options - 1;
            Mask next = covered;
            next.or_with(ctx.cands[ci].hits);
            chosen.push_back(ci);
            const bool ok = ctx.is_vertical(ci) ? dfs(next, rem_h, rem_v - 1)
                                                : dfs(next, rem_h - 1, rem_v);
            chosen.pop_back();
            if (ok) return true;
        }
        return false;
    }
};

void check_cap(const PointSet& points, int cap, const char* op) {
    if (static_cast<int>(points.size()) > cap)
        throw CapExceededError(std::string(op) + ": point count " +
                               std::to_string(points.size()) + " exceeds exact-solve cap " +
                               std::to_string(cap));
}

}  // namespace

LineSet exact_uhs(const PointSet& points, int cap) {
    check_cap(points, cap, "exact_uhs");
    if (points.size() <= 1) {
        check_distinct(points);
        return LineSet{};
    }
    ExactSearch ctx(points);
    MinimizeSearch search(ctx);
    search.seed_greedy();
    search.dfs(Mask(ctx.segs.size()));
    return ctx.to_line_set(search.best);
}

std::optional<LineSet> cuhs_witness(const PointSet& points, int r, int c, int cap) {
    check_cap(points, cap, "cuhs");
    if (r < 0 || c < 0) throw Error("negative line budget");
    if (points.size() <= 1) {
        check_distinct(points);
        return LineSet{};
    }
    ExactSearch ctx(points);
    BudgetSearch search(ctx);
    if (!search.dfs(Mask(ctx.segs.size()), r, c)) return std::nullopt;
    return ctx.to_line_set(search.witness);
}

bool cuhs_decide(const PointSet& points, int r, int c, int cap) {
    return cuhs_witness(points, r, c, cap).has_value();
}

std::vector<std::pair<int, int>> feasible_rc_frontier(const PointSet& points, int cap) {
    check_cap(points, cap, "feasible_rc_frontier");
    const int n = static_cast<int>(points.size());
    if (n <= 1) return {{0, 0}};
    std::vector<std::pair<int, int>> frontier;
    int prev_c = INT_MAX;
    for (int r = 0; r <= n - 1; ++r) {
        if (!cuhs_decide(points, r, n - 1, cap)) continue;
        int lo = 0, hi = n - 1;
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            if (cuhs_decide(points, r, mid, cap))
                hi = mid;
            else
                lo = mid + 1;
        }
        if (lo < prev_c) {
            frontier.emplace_back(r, lo);
            prev_c = lo;
        }
        if (lo == 0) break;
    }
    return frontier;
}

Rational optimal_lads_area(const PointSet& points, int cap) {
    const auto frontier = feasible_rc_frontier(points, cap);
    if (frontier.empty()) throw Error("no feasible line budget");
    bool first = true;
    Rational best;
    for (const auto& [r, c] : frontier) {
        const Rational area = Rational(r + 1) * Rational(c + 1);
        if (first || area < best) {
            best = area;
            first = false;
        }
    }
    return best;
}

Instance unit_square_instance(const PointSet& points) {
    std::vector<Rect> rects;
    Layout layout;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string id = std::to_string(i);
        rects.push_back(Rect{id, 1, 1});
        layout.place(id, points.pts[i]);
    }
    return Instance(std::move(rects), std::move(layout));
}

PointSet points_from_layout(const Layout& layout) {
    PointSet out;
    for (const auto& [id, p] : layout.centers()) {
        (void)id;
        out.pts.push_back(p);
    }
    return out;
}

Layout hitting_to_layout(const PointSet& points, const LineSet& lines, const Rational& eps) {
    if (eps <= 0) throw Error("eps must be positive");
    const HitMap hm = hit_map(points, lines);
    const long n = static_cast<long>(points.size());
    const long c = static_cast<long>(lines.verticals.size());
    const long r = static_cast<long>(lines.horizontals.size());
    const Rational delta = eps / Rational(std::max({n, c + 1, r + 1}));

    Layout out;
    for (long i = 0; i < n; ++i) {
        const Rational x =
            Rational(hm.cell[i].first) * (1 + delta) + Rational(1, 2) + delta * hm.alpha[i] / n;
        const Rational y =
            Rational(hm.cell[i].second) * (1 + delta) + Rational(1, 2) + delta * hm.beta[i] / n;
        out.place(std::to_string(i), Point{x, y});
    }

    const Instance inst = unit_square_instance(points);
    for (std::size_t a = 0; a < inst.rects().size(); ++a)
        for (std::size_t b = a + 1; b < inst.rects().size(); ++b)
            if (intersects(inst.rects()[a], inst.rects()[b], out))
                throw Error("hitting_to_layout produced an overlap");
    if (!same_orthogonal_order(out, inst.initial()))
        throw Error("hitting_to_layout changed the orthogonal order");
    return out;
}

LineSet layout_to_hitting(const Instance& instance, const Layout& layout, long w, long h) {
    if (w < 1 || h < 1) throw Error("grid dimensions must be positive");
    for (const Rect& rc : instance.rects())
        if (rc.w != 1 || rc.h != 1) throw Error("layout_to_hitting requires unit squares");
    const auto& rects = instance.rects();
    for (std::size_t a = 0; a < rects.size(); ++a)
        for (std::size_t b = a + 1; b < rects.size(); ++b)
            if (intersects(rects[a], rects[b], layout))
                throw Error("layout_to_hitting requires a disjoint layout");

    const BBox box = bounding_box(instance, layout);
    if (2 * box.width() >= 2 * w + 1 || 2 * box.height() >= 2 * h + 1)
        throw Error("layout exceeds the grid by 1/2 or more");

    PointSet centers;
    for (const auto& [id, p] : layout.centers()) {
        (void)id;
        centers.pts.push_back(p);
    }

    Rational delta(-1, 4);
    for (int attempt = 0; attempt < 128; ++attempt, delta /= 2) {
        LineSet lines;
        bool collision = false;
        for (long i = 1; i < w && !collision; ++i) {
            const Rational x = box.left + i + Rational(1, 2) + delta;
            for (const Point& p : centers.pts)
                if (p.x == x) {
                    collision = true;
                    break;
                }
            if (!collision) lines.verticals.push_back(x);
        }
        for (long j = 1; j < h && !collision; ++j) {
            const Rational y = box.bottom + j + Rational(1, 2) + delta;
            for (const Point& p : centers.pts)
                if (p.y == y) {
                    collision = true;
                    break;
                }
            if (!collision) lines.horizontals.push_back(y);
        }
        if (collision) continue;
        lines.normalize();
        if (!is_separating(lines, centers))
            throw Error("layout_to_hitting produced a non-separating set");
        return lines;
    }
    throw Error("layout_to_hitting could not find line offsets");
}

}  // namespace ladr
