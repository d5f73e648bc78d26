// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "ladr/approx.hpp"
#include "ladr/gadgets.hpp"
#include "ladr/geometry.hpp"
#include "ladr/hitting.hpp"
#include "ladr/io.hpp"
#include "ladr/lp.hpp"

using nlohmann::json;
using namespace ladr;

namespace {

using Err = std::optional<std::string>;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LADR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    CliResult result;
    if (!pipe) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path scratch_dir() {
    static std::filesystem::path dir = [] {
        auto p = std::filesystem::temp_directory_path() /
                 ("ladr_acceptance_" + std::to_string(getpid()));
        std::filesystem::create_directories(p);
        return p;
    }();
    return dir;
}

// Exhaustive budget search over all candidate-line subsets, independent of the
// library's solvers: candidates are midlines between consecutive distinct
// coordinates, and a (r, c) budget is feasible iff some subset separates.
struct BruteFrontier {
    Rational min_area;      // min (r+1)(c+1)
    long min_box_sum = -1;  // min (r+1)+(c+1)
};

BruteFrontier brute_frontier(const std::vector<Point>& points) {
    std::vector<Rational> xs, ys;
    for (const Point& p : points) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    auto mids = [](std::vector<Rational> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<Rational> out;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back((v[i] + v[i + 1]) / 2);
        return out;
    };
    const std::vector<Rational> vx = mids(xs);
    const std::vector<Rational> hy = mids(ys);

    std::vector<std::uint32_t> seg_v, seg_h;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            std::uint32_t vm = 0, hm = 0;
            const Rational lo_x = std::min(points[a].x, points[b].x);
            const Rational hi_x = std::max(points[a].x, points[b].x);
            const Rational lo_y = std::min(points[a].y, points[b].y);
            const Rational hi_y = std::max(points[a].y, points[b].y);
            for (std::size_t i = 0; i < vx.size(); ++i)
                if (lo_x < vx[i] && vx[i] < hi_x) vm |= 1u << i;
            for (std::size_t i = 0; i < hy.size(); ++i)
                if (lo_y < hy[i] && hy[i] < hi_y) hm |= 1u << i;
            seg_v.push_back(vm);
            seg_h.push_back(hm);
        }

    BruteFrontier best;
    for (std::uint32_t hm = 0; hm < (1u << hy.size()); ++hm)
        for (std::uint32_t vm = 0; vm < (1u << vx.size()); ++vm) {
            bool separating = true;
            for (std::size_t s = 0; s < seg_v.size() && separating; ++s)
                separating = (seg_v[s] & vm) != 0 || (seg_h[s] & hm) != 0;
            if (!separating) continue;
            const long r = __builtin_popcount(hm), c = __builtin_popcount(vm);
            const Rational area((r + 1) * (c + 1));
            if (best.min_box_sum < 0 || area < best.min_area) best.min_area = area;
            best.min_box_sum = best.min_box_sum < 0 ? r + c + 2 : std::min(best.min_box_sum, r + c + 2);
        }
    return best;
}

struct UnitCase {
    std::string inst_path;
    std::string layout_path;
    bool layout_written = false;
    BruteFrontier oracle;
};

std::vector<UnitCase>& unit_corpus() {
    static std::vector<UnitCase> corpus = [] {
        std::vector<UnitCase> cases;
        for (int n = 2; n <= 6; ++n)
            for (int i = 0; i < 20; ++i) {
                std::uint64_t state = 0xACCE5500ULL + n * 100 + i;
                const auto centers = helpers::random_centers(state, n, 20);
                const Instance inst = helpers::unit_instance(centers);
                UnitCase c;
                const std::string stem = "unit_" + std::to_string(n) + "_" + std::to_string(i);
                c.inst_path = (scratch_dir() / (stem + ".json")).string();
                c.layout_path = (scratch_dir() / (stem + ".layout.json")).string();
                write_file(c.inst_path, format_instance_json(inst));
                std::vector<Point> pts;
                for (const auto& [x, y] : centers) pts.push_back(Point{Rational(x), Rational(y)});
                c.oracle = brute_frontier(pts);
                cases.push_back(std::move(c));
            }
        return cases;
    }();
    return corpus;
}

struct HittingCase {
    std::string name;
    PointSet points;
    LineSet lines;
};

std::vector<HittingCase> g_hitting_cases;

PointSet gadget_group(const GadgetInstance& g, const std::string& label) {
    PointSet out;
    for (std::size_t p = 0; p < g.points.size(); ++p)
        if (g.labels[p] == label) out.pts.push_back(g.points.pts[p]);
    return out;
}

Formula small_formula() {
    return validate_formula(3, {{3, 2, -1}, {1, -2, 3}, {2, 1, -3}}, true);
}

// ---- criteria ----

Err approximation_guarantee() {
    const Rational factor = Rational(4) * Rational(11, 10) * Rational(11, 10);
    for (UnitCase& c : unit_corpus()) {
        const CliResult res = run_cli("adjust \"" + c.inst_path + "\" --schedule exact --eps 1/10" +
                                      " --out \"" + c.layout_path + "\"");
        if (res.exit_code != 0)
            return "adjust failed (exit " + std::to_string(res.exit_code) + ") on " + c.inst_path;
        const json doc = json::parse(res.out, nullptr, false);
        if (doc.is_discarded() || doc.at("verified") != true)
            return "unverified adjust output on " + c.inst_path;
        c.layout_written = true;
        const Rational area = parse_rational(doc.at("bbox").at("area").get<std::string>());
        const Rational bound = factor * c.oracle.min_area;
        if (area > bound)
            return "area " + format_rational(area) + " exceeds bound " + format_rational(bound) +
                   " (optimum " + format_rational(c.oracle.min_area) + ") on " + c.inst_path;
    }
    return std::nullopt;
}

Err verifier_property() {
    for (UnitCase& c : unit_corpus()) {
        if (!c.layout_written) {
            const CliResult res = run_cli("adjust \"" + c.inst_path +
                                          "\" --schedule exact --eps 1/10 --out \"" +
                                          c.layout_path + "\"");
            if (res.exit_code != 0) return "adjust failed on " + c.inst_path;
            c.layout_written = true;
        }
        const CliResult res = run_cli("verify \"" + c.inst_path + "\" \"" + c.layout_path + "\"");
        if (res.exit_code != 0) return "verify rejected the adjusted layout of " + c.inst_path;
    }

    std::uint64_t state = 0xACCE5502ULL;
    for (int i = 0; i < 50; ++i) {
        const int n = 5 + (i % 36);
        const Instance inst = helpers::random_rect_instance(state, n, 30, 5);
        const std::string stem = (scratch_dir() / ("rect_" + std::to_string(i))).string();
        write_file(stem + ".json", format_instance_json(inst));
        const CliResult adj = run_cli("adjust \"" + stem + ".json\" --schedule geometric" +
                                      " --eps 1/10 --out \"" + stem + ".layout.json\"");
        if (adj.exit_code != 0)
            return "adjust failed (exit " + std::to_string(adj.exit_code) + ") on rect case " +
                   std::to_string(i) + " (n=" + std::to_string(n) + ")";
        const json doc = json::parse(adj.out, nullptr, false);
        if (doc.is_discarded() || doc.at("verified") != true)
            return "unverified adjust output on rect case " + std::to_string(i);
        const CliResult ver = run_cli("verify \"" + stem + ".json\" \"" + stem + ".layout.json\"");
        if (ver.exit_code != 0) return "verify rejected rect case " + std::to_string(i);
    }
    return std::nullopt;
}

Err oracle_values() {
    using clock = std::chrono::steady_clock;
    auto timed = [](const std::string& name, const std::function<Err()>& f) -> Err {
        const auto start = clock::now();
        if (Err e = f()) return e;
        const double secs = std::chrono::duration<double>(clock::now() - start).count();
        if (secs >= 1.0) return name + " took " + std::to_string(secs) + "s (budget 1s)";
        return std::nullopt;
    };

    const PointSet staircase = helpers::template_i();
    if (Err e = timed("staircase exact search", [&]() -> Err {
            const LineSet lines = exact_uhs(staircase);
            if (lines.size() != 3) return std::string("staircase optimum is not 3");
            g_hitting_cases.push_back({"staircase-exact", staircase, lines});
            return std::nullopt;
        }))
        return e;
    if (Err e = timed("two-horizontal witness", [&]() -> Err {
            const auto w = cuhs_witness(staircase, 2, 1);
            if (!w || w->size() != 3) return std::string("no (r=2, c=1) optimum on the staircase");
            g_hitting_cases.push_back({"staircase-r2c1", staircase, *w});
            return std::nullopt;
        }))
        return e;
    if (Err e = timed("two-vertical witness", [&]() -> Err {
            const auto w = cuhs_witness(staircase, 1, 2);
            if (!w || w->size() != 3) return std::string("no (r=1, c=2) optimum on the staircase");
            g_hitting_cases.push_back({"staircase-r1c2", staircase, *w});
            return std::nullopt;
        }))
        return e;

    const GadgetInstance gadget = build_gadget(small_formula());
    const PointSet corner = gadget_group(gadget, "A5");
    if (Err e = timed("corner block", [&]() -> Err {
            const LineSet lines = exact_uhs(corner);
            if (lines.size() != 2) return std::string("corner-block optimum is not 2");
            g_hitting_cases.push_back({"corner-block", corner, lines});
            return std::nullopt;
        }))
        return e;

    const PointSet collinear = helpers::collinear3();
    if (Err e = timed("collinear points", [&]() -> Err {
            const LineSet lines = exact_uhs(collinear);
            if (lines.size() != 2) return std::string("collinear optimum is not 2");
            g_hitting_cases.push_back({"collinear", collinear, lines});
            return std::nullopt;
        }))
        return e;
    return std::nullopt;
}

Err layout_round_trip() {
    if (g_hitting_cases.empty()) return std::string("no line sets collected by the oracle check");
    const Rational eps(1, 10);
    for (const HittingCase& hc : g_hitting_cases) {
        const auto start = std::chrono::steady_clock::now();
        const long r = static_cast<long>(hc.lines.horizontals.size());
        const long c = static_cast<long>(hc.lines.verticals.size());
        const Layout layout = hitting_to_layout(hc.points, hc.lines, eps);
        const Instance inst = unit_square_instance(hc.points);
        const VerifyReport report = verify_solution(inst, layout);
        if (!report.ok()) return hc.name + ": layout not verified (" + report.detail + ")";
        if (report.box.width() > Rational(c + 1) + eps)
            return hc.name + ": width " + format_rational(report.box.width()) + " exceeds " +
                   format_rational(Rational(c + 1) + eps);
        if (report.box.height() > Rational(r + 1) + eps)
            return hc.name + ": height " + format_rational(report.box.height()) + " exceeds " +
                   format_rational(Rational(r + 1) + eps);

        const LineSet back = layout_to_hitting(inst, layout, c + 1, r + 1);
        if (static_cast<long>(back.verticals.size()) > c ||
            static_cast<long>(back.horizontals.size()) > r)
            return hc.name + ": recovered line set exceeds the (r, c) budget";
        if (!is_separating(back, points_from_layout(layout)))
            return hc.name + ": recovered line set does not separate the layout";
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 1.0) return hc.name + " round trip took " + std::to_string(secs) + "s";
    }
    return std::nullopt;
}

Err gadget_reproduction() {
    const GadgetInstance gadget = build_gadget(small_formula());
    if (gadget.points.size() != 88)
        return "point count " + std::to_string(gadget.points.size()) + ", expected 88";
    if (gadget.k != 35) return "line budget " + std::to_string(gadget.k) + ", expected 35";
    const Assignment all_true{{true, true, true}};
    const LineSet lines = assignment_to_hitting_set(gadget, all_true);
    if (lines.size() != 35)
        return "induced set has " + std::to_string(lines.size()) + " lines, expected 35";
    if (!is_separating(lines, gadget.points))
        return std::string("induced 35-line set does not separate the gadget");
    const Assignment back = hitting_set_to_assignment(gadget, lines);
    if (back.values != all_true.values) return std::string("extraction lost the assignment");
    return std::nullopt;
}

Err feasibility_monotone() {
    std::uint64_t state = 0xACCE5506ULL;
    for (int i = 0; i < 20; ++i) {
        const int n = 2 + (i % 4);
        const Instance inst = i % 2 == 0 ? helpers::random_unit_instance(state, n, 12)
                                         : helpers::random_rect_instance(state, n, 12, 3);
        const GridSchedule grid = make_schedule(inst, ScheduleMode::Exact);
        std::vector<std::vector<bool>> feasible(grid.widths.size(),
                                                std::vector<bool>(grid.heights.size()));
        for (std::size_t wi = 0; wi < grid.widths.size(); ++wi)
            for (std::size_t hi = 0; hi < grid.heights.size(); ++hi) {
                const LPModel model =
                    build_layout_lp(inst, grid.widths[wi], grid.heights[hi], Rational(1, 10));
                const Outcome out = solve_feasibility(model);
                if (out.status == SolveStatus::IterationLimit)
                    return "pivot limit hit on case " + std::to_string(i);
                feasible[wi][hi] = out.status == SolveStatus::Feasible;
            }
        if (!feasible.back().back()) return "largest cell infeasible on case " + std::to_string(i);
        for (std::size_t wi = 0; wi < feasible.size(); ++wi)
            for (std::size_t hi = 0; hi < feasible[wi].size(); ++hi) {
                if (!feasible[wi][hi]) continue;
                if (wi + 1 < feasible.size() && !feasible[wi + 1][hi])
                    return "width growth lost feasibility on case " + std::to_string(i);
                if (hi + 1 < feasible[wi].size() && !feasible[wi][hi + 1])
                    return "height growth lost feasibility on case " + std::to_string(i);
            }
    }
    return std::nullopt;
}

Err perimeter_variant() {
    const Rational factor(22, 10);  // 2 * (1 + 1/10)
    for (const UnitCase& c : unit_corpus()) {
        const CliResult res =
            run_cli("adjust \"" + c.inst_path + "\" --schedule exact --eps 1/10" +
                    " --objective perimeter");
        if (res.exit_code != 0)
            return "perimeter adjust failed (exit " + std::to_string(res.exit_code) + ") on " +
                   c.inst_path;
        const json doc = json::parse(res.out, nullptr, false);
        if (doc.is_discarded() || doc.at("verified") != true)
            return "unverified perimeter output on " + c.inst_path;
        const Rational perimeter =
            parse_rational(doc.at("bbox").at("perimeter").get<std::string>());
        const Rational bound = factor * Rational(2) * Rational(c.oracle.min_box_sum);
        if (perimeter > bound)
            return "perimeter " + format_rational(perimeter) + " exceeds bound " +
                   format_rational(bound) + " on " + c.inst_path;
    }
    return std::nullopt;
}

Err compression() {
    const Rational eps(1, 10);
    std::uint64_t state = 0xACCE5508ULL;
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + (i % 10);
        const Instance inst = helpers::random_unit_instance(state, n, 15);
        const Layout before = inst.initial();
        const Layout after = compress_width(inst, before, eps);
        const VerifyReport report = verify_solution(inst, after);
        if (!report.ok())
            return "compressed layout invalid on case " + std::to_string(i) + " (" +
                   report.detail + ")";
        for (const auto& [id, p] : before.centers())
            if (after.at(id).y != p.y) return "height changed on case " + std::to_string(i);
        const Rational w_before = bounding_box(inst, before).width();
        const Rational w_after = report.box.width();
        if (w_after > w_before) return "width grew on case " + std::to_string(i);
        if (w_after - Rational(floor_int(w_after)) > eps)
            return "width " + format_rational(w_after) + " not within eps of an integer on case " +
                   std::to_string(i);
    }
    return std::nullopt;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_secs;
        std::function<Err()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "approximation factor on random unit instances", 300, approximation_guarantee},
        {2, "adjusted layouts pass verification", 600, verifier_property},
        {3, "exact hitting-set optima", 5, oracle_values},
        {4, "line set / layout round trip", 5, layout_round_trip},
        {5, "hardness gadget reproduction", 5, gadget_reproduction},
        {6, "feasibility is monotone in the box", 120, feasibility_monotone},
        {7, "perimeter objective bound", 300, perimeter_variant},
        {8, "width compression", 60, compression},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Err err;
        try {
            err = c.run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!err && secs > c.budget_secs)
            err = "runtime " + std::to_string(secs) + "s over budget " +
                  std::to_string(c.budget_secs) + "s";
        char line[256];
        std::snprintf(line, sizeof(line), "%s  criterion %d: %s (%.1fs)",
                      err ? "FAIL" : "PASS", c.id, c.name, secs);
        std::cout << line << "\n";
        if (err) {
            std::cout << "      " << *err << "\n";
            ++failures;
        }
    }
    std::error_code ec;
    std::filesystem::remove_all(scratch_dir(), ec);
    if (failures) std::cout << failures << " criterion(s) failed\n";
    else std::cout << "all criteria passed\n";
    return failures;
}
