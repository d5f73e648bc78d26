#include "ladr/approx.hpp"

#include <algorithm>

#include "ladr/error.hpp"

namespace ladr {

namespace {

std::vector<long> geometric_axis(long lo, long hi, const Rational& factor) {
    std::vector<long> out{lo};
    Rational value(lo);
    while (out.back() < hi) {
        value *= factor;
        long entry = ceil_int(value).get_si();
        if (entry <= out.back()) entry = out.back() + 1;
        out.push_back(std::min(entry, hi));
    }
    return out;
}

void validate_axis(const std::vector<long>& axis, long lo, long hi, const char* name) {
    if (axis.empty() || axis.front() != lo || axis.back() != hi)
        throw Error(std::string(name) + " schedule must span [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
    for (std::size_t i = 1; i < axis.size(); ++i)
        if (axis[i] <= axis[i - 1])
            throw Error(std::string(name) + " schedule must be strictly increasing");
}

}  // namespace

GridSchedule make_schedule(const Instance& instance, ScheduleMode mode, const Rational& mu) {
    GridSchedule out;
    const long wlo = instance.max_width(), whi = instance.total_width();
    const long hlo = instance.max_height(), hhi = instance.total_height();
    if (mode == ScheduleMode::Exact) {
        out.mu = 0;
        for (long w = wlo; w <= whi; ++w) out.widths.push_back(w);
        for (long h = hlo; h <= hhi; ++h) out.heights.push_back(h);
        return out;
    }
    Rational m = mu;
    if (m <= 0) {
        const long span = 1 + whi + hhi;
        long bits = 0;
        while ((1L << bits) < span) ++bits;
        m = Rational(1, std::max(bits, 1L));
    }
    out.mu = m;
    const Rational factor = 1 + m;
    out.widths = geometric_axis(wlo, whi, factor);
    out.heights = geometric_axis(hlo, hhi, factor);
    return out;
}

namespace {

struct SweepState {
    const Instance& instance;
    const Rational& eps;
    const ApproxOptions& opts;
    std::vector<ProbeRecord> trace;
    bool have_best = false;
    Rational best_obj;
    long best_w = 0, best_h = 0;
    Layout best_layout;

    bool probe(long w, long h) {
        const LPModel model = build_layout_lp(instance, w, h, eps);
        const Outcome out = opts.lazy ? solve_layout_feasibility(model, opts.solve)
                                      : solve_feasibility(model, opts.solve);
        if (out.status == SolveStatus::IterationLimit)
            throw Error("cell solver exceeded the pivot cap at (" + std::to_string(w) + ", " +
                        std::to_string(h) + ")");
        const bool feasible = out.status == SolveStatus::Feasible;
        trace.push_back(ProbeRecord{w, h, feasible});
        if (!feasible) return false;

        Layout relaxed = layout_from_assignment(model, out.assignment);
        const BBox box = bounding_box(instance, relaxed);
        const Rational obj =
            opts.objective == Objective::Area ? box.area() : box.perimeter();
        const bool better =
            !have_best || obj < best_obj ||
            (obj == best_obj && (w < best_w || (w == best_w && h < best_h)));
        if (better) {
            have_best = true;
            best_obj = obj;
            best_w = w;
            best_h = h;
            best_layout = std::move(relaxed);
        }
        return true;
    }
};

}  // namespace

ApproxResult approx_ladr(const Instance& instance, const Rational& eps,
                         const GridSchedule& schedule, const ApproxOptions& opts) {
    if (eps <= 0 || eps >= 1) throw Error("eps must be in (0, 1)");
    validate_axis(schedule.widths, instance.max_width(), instance.total_width(), "width");
    validate_axis(schedule.heights, instance.max_height(), instance.total_height(), "height");

    SweepState state{instance, eps, opts};
    const auto& ws = schedule.widths;
    const auto& hs = schedule.heights;
    if (opts.full_sweep) {
        for (long w : ws)
            for (long h : hs) state.probe(w, h);
    } else {
        // Walk the feasibility frontier: minimal feasible height is
        // non-increasing in width, so each width resumes the descent where the
        // previous one stopped.
        std::size_t hi = hs.size() - 1;
        for (long w : ws) {
            if (!state.probe(w, hs[hi])) continue;
            while (hi > 0 && state.probe(w, hs[hi - 1])) --hi;
        }
    }
    if (!state.have_best) throw Error("no feasible cell in the schedule");

    ApproxResult result;
    result.layout = state.best_layout.scaled(2);
    const VerifyReport report = verify_solution(instance, result.layout);
    if (!report.ok()) throw Error("doubled layout failed verification: " + report.detail);
    result.box = report.box;
    result.w = state.best_w;
    result.h = state.best_h;
    result.objective_value =
        opts.objective == Objective::Area ? result.box.area() : result.box.perimeter();
    result.trace = std::move(state.trace);
    return result;
}

ApproxResult approx_perimeter(const Instance& instance, const Rational& eps,
                              const GridSchedule& schedule, const ApproxOptions& opts) {
    ApproxOptions perim = opts;
    perim.objective = Objective::Perimeter;
    return approx_ladr(instance, eps, schedule, perim);
}

Layout compress_width(const Instance& instance, const Layout& layout, const Rational& eps) {
    if (eps <= 0) throw Error("eps must be positive");
    const auto& rects = instance.rects();
    for (std::size_t i = 0; i < rects.size(); ++i)
        for (std::size_t j = i + 1; j < rects.size(); ++j)
            if (intersects(rects[i], rects[j], layout))
                throw Error("compress_width requires a disjoint layout");

    const OrthoOrder order = compute_order(layout);
    const int k = static_cast<int>(order.x_classes.size());
    if (k <= 1) return layout;

    std::vector<Rational> xs(k), maxw(k, Rational(0));
    for (int i = 0; i < k; ++i) {
        xs[i] = layout.at(order.x_classes[i].front()).x;
        for (const auto& id : order.x_classes[i])
            maxw[i] = std::max(maxw[i], Rational(instance.rect(id).w));
    }

    Rational delta = eps / Rational(static_cast<long>(instance.size()));
    for (int i = 0; i + 1 < k; ++i) delta = std::min(delta, Rational(xs[i + 1] - xs[i]));

    Rational min_left = layout.at(rects.front().id).x - rational(rects.front().w, 2);
    for (const Rect& r : rects)
        min_left = std::min(min_left, Rational(layout.at(r.id).x - rational(r.w, 2)));

    std::vector<Rational> nx(k);
    nx[0] = xs[0];
    for (int i = 1; i < k; ++i) {
        Rational lo = std::max(Rational(nx[i - 1] + delta), Rational(min_left + maxw[i] / 2));
        for (int j = 0; j < i; ++j) {
            for (const auto& aid : order.x_classes[i]) {
                const Rect& ra = instance.rect(aid);
                const Point& pa = layout.at(aid);
                for (const auto& bid : order.x_classes[j]) {
                    const Rect& rb = instance.rect(bid);
                    const Point& pb = layout.at(bid);
                    const Rational dy = pa.y >= pb.y ? pa.y - pb.y : pb.y - pa.y;
                    if (2 * dy < ra.h + rb.h)
                        lo = std::max(lo, Rational(nx[j] + rational(ra.w + rb.w, 2)));
                }
            }
        }
        nx[i] = lo;
    }

    Layout out;
    for (int i = 0; i < k; ++i)
        for (const auto& id : order.x_classes[i]) out.place(id, Point{nx[i], layout.at(id).y});
    return out;
}

VerifyReport verify_solution(const Instance& instance, const Layout& layout) {
    VerifyReport rep;
    rep.disjoint = true;
    const auto& rects = instance.rects();
    for (std::size_t i = 0; i < rects.size() && rep.disjoint; ++i)
        for (std::size_t j = i + 1; j < rects.size(); ++j)
            if (intersects(rects[i], rects[j], layout)) {
                rep.disjoint = false;
                rep.detail = "rects '" + rects[i].id + "' and '" + rects[j].id + "' overlap";
                break;
            }
    rep.order_preserved = same_orthogonal_order(layout, instance.initial());
    if (!rep.order_preserved && rep.detail.empty())
        rep.detail = "orthogonal order differs from the initial layout";
    rep.box = bounding_box(instance, layout);
    return rep;
}

}  // namespace ladr
