#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladr/approx.hpp"
#include "ladr/error.hpp"
#include "ladr/gadgets.hpp"
#include "ladr/hitting.hpp"
#include "ladr/io.hpp"
#include "ladr/svg.hpp"

namespace {

using nlohmann::json;

int g_exit = 0;

ladr::Rational flag_rational(const std::string& text, const char* flag) {
    try {
        return ladr::parse_rational(text, true);
    } catch (const ladr::ParseError&) {
        throw ladr::ParseError(std::string("bad value for ") + flag + ": '" + text + "'");
    }
}

json bbox_json(const ladr::BBox& box) {
    return json{{"left", ladr::format_rational(box.left)},
                {"right", ladr::format_rational(box.right)},
                {"bottom", ladr::format_rational(box.bottom)},
                {"top", ladr::format_rational(box.top)},
                {"width", ladr::format_rational(box.width())},
                {"height", ladr::format_rational(box.height())},
                {"area", ladr::format_rational(box.area())},
                {"perimeter", ladr::format_rational(box.perimeter())}};
}

struct AdjustArgs {
    std::string instance_path;
    std::string out;
    std::string eps = "1/10";
    std::string mu = "0";
    std::string schedule = "exact";
    std::string objective = "area";
    bool full_sweep = false;
    bool direct = false;
    bool lossy = false;
};

void cmd_adjust(const AdjustArgs& a) {
    const ladr::Instance instance =
        ladr::parse_instance_json(ladr::read_file(a.instance_path), a.lossy);
    const ladr::Rational eps = flag_rational(a.eps, "--eps");
    const ladr::Rational mu = flag_rational(a.mu, "--mu");
    const auto mode = a.schedule == "geometric" ? ladr::ScheduleMode::Geometric
                                                : ladr::ScheduleMode::Exact;
    const ladr::GridSchedule schedule = ladr::make_schedule(instance, mode, mu);

    ladr::ApproxOptions opts;
    opts.objective =
        a.objective == "perimeter" ? ladr::Objective::Perimeter : ladr::Objective::Area;
    opts.full_sweep = a.full_sweep;
    opts.lazy = !a.direct;
    const ladr::ApproxResult res = ladr::approx_ladr(instance, eps, schedule, opts);

    const ladr::VerifyReport report = ladr::verify_solution(instance, res.layout);
    json trace = json::array();
    for (const ladr::ProbeRecord& probe : res.trace)
        trace.push_back(json{{"w", probe.w}, {"h", probe.h}, {"feasible", probe.feasible}});
    json doc{{"w", res.w},
             {"h", res.h},
             {"objective", a.objective},
             {"objective_value", ladr::format_rational(res.objective_value)},
             {"bbox", bbox_json(res.box)},
             {"verified", report.ok()},
             {"trace", std::move(trace)},
             {"layout", json::parse(ladr::format_layout_json(res.layout))}};
    std::cout << doc.dump(2) << "\n";
    if (!a.out.empty()) ladr::write_file(a.out, ladr::format_layout_json(res.layout));
    if (!report.ok()) {
        std::cerr << "verification failed: " << report.detail << "\n";
        g_exit = 1;
    }
}

struct VerifyArgs {
    std::string instance_path;
    std::string layout_path;
    bool lossy = false;
};

void cmd_verify(const VerifyArgs& a) {
    const ladr::Instance instance =
        ladr::parse_instance_json(ladr::read_file(a.instance_path), a.lossy);
    const ladr::Layout layout = ladr::parse_layout_json(ladr::read_file(a.layout_path), a.lossy);
    const ladr::VerifyReport report = ladr::verify_solution(instance, layout);
    json doc{{"disjoint", report.disjoint},
             {"order_preserved", report.order_preserved},
             {"detail", report.detail},
             {"bbox", bbox_json(report.box)}};
    std::cout << doc.dump(2) << "\n";
    g_exit = report.ok() ? 0 : 1;
}

struct HitsetArgs {
    std::string points_path;
    std::string out;
    bool exact = false;
    bool oracle_area = false;
    std::vector<int> decide;
    int cap = ladr::kDefaultExactCap;
    bool lossy = false;
};

void cmd_hitset(const HitsetArgs& a) {
    const int chosen = (a.exact ? 1 : 0) + (a.oracle_area ? 1 : 0) + (a.decide.empty() ? 0 : 1);
    if (chosen != 1)
        throw ladr::ParseError("choose exactly one of --exact, --decide, --oracle-area");
    const ladr::PointSet points =
        ladr::parse_points_json(ladr::read_file(a.points_path), a.lossy);

    json doc;
    if (a.exact) {
        const ladr::LineSet lines = ladr::exact_uhs(points, a.cap);
        doc = json{{"count", lines.size()},
                   {"lines", json::parse(ladr::format_lines_json(lines))}};
        if (!a.out.empty()) ladr::write_file(a.out, ladr::format_lines_json(lines));
    } else if (!a.decide.empty()) {
        const auto witness = ladr::cuhs_witness(points, a.decide[0], a.decide[1], a.cap);
        doc = json{{"r", a.decide[0]}, {"c", a.decide[1]}, {"feasible", witness.has_value()}};
        if (witness) {
            doc["lines"] = json::parse(ladr::format_lines_json(*witness));
            if (!a.out.empty()) ladr::write_file(a.out, ladr::format_lines_json(*witness));
        }
    } else {
        const ladr::Rational area = ladr::optimal_lads_area(points, a.cap);
        doc = json{{"area", ladr::format_rational(area)}};
    }
    std::cout << doc.dump(2) << "\n";
}

struct GadgetArgs {
    std::string cnf_path;
    std::string epsilon_sep = "0";
    std::string points_out;
    std::string meta_out;
    std::string assignment;
    std::string lines_out;
    std::string extract;
    bool relaxed = false;
    bool lossy = false;
};

void cmd_gadget(const GadgetArgs& a) {
    const auto [n, raw] = ladr::parse_dimacs(ladr::read_file(a.cnf_path));
    const ladr::Formula formula = ladr::validate_formula(n, raw, a.relaxed);
    const ladr::GadgetInstance gadget =
        ladr::build_gadget(formula, flag_rational(a.epsilon_sep, "--epsilon-sep"));

    if (!a.points_out.empty()) ladr::write_file(a.points_out, ladr::format_points_json(gadget.points));
    if (!a.meta_out.empty()) ladr::write_file(a.meta_out, ladr::format_gadget_meta_json(gadget));

    json doc{{"n", gadget.formula.n},
             {"m", gadget.formula.m},
             {"k", gadget.k},
             {"points", gadget.points.size()},
             {"epsilon_sep", ladr::format_rational(gadget.epsilon_sep)}};

    if (!a.assignment.empty()) {
        if (static_cast<int>(a.assignment.size()) != gadget.formula.n)
            throw ladr::ParseError("--assignment needs one 0/1 per variable");
        ladr::Assignment asg;
        for (char c : a.assignment) {
            if (c != '0' && c != '1') throw ladr::ParseError("--assignment must be 0/1 bits");
            asg.values.push_back(c == '1');
        }
        const ladr::LineSet lines = ladr::assignment_to_hitting_set(gadget, asg);
        doc["line_count"] = lines.size();
        doc["separating"] = ladr::is_separating(lines, gadget.points);
        doc["lines"] = json::parse(ladr::format_lines_json(lines));
        if (!a.lines_out.empty()) ladr::write_file(a.lines_out, ladr::format_lines_json(lines));
    }

    if (!a.extract.empty()) {
        const ladr::LineSet lines = ladr::parse_lines_json(ladr::read_file(a.extract), a.lossy);
        const ladr::Assignment asg = ladr::hitting_set_to_assignment(gadget, lines);
        std::string bits;
        for (bool b : asg.values) bits += b ? '1' : '0';
        doc["assignment"] = bits;
    }

    std::cout << doc.dump(2) << "\n";
}

struct RenderArgs {
    std::string out_path;
    std::string instance_path;
    std::string layout_path;
    std::string points_path;
    std::string lines_path;
    bool lossy = false;
};

void cmd_render(const RenderArgs& a) {
    std::optional<ladr::Instance> instance;
    std::optional<ladr::Layout> layout;
    std::optional<ladr::PointSet> points;
    std::optional<ladr::LineSet> lines;
    if (!a.instance_path.empty())
        instance = ladr::parse_instance_json(ladr::read_file(a.instance_path), a.lossy);
    if (!a.layout_path.empty()) {
        if (!instance) throw ladr::ParseError("--layout needs --instance");
        layout = ladr::parse_layout_json(ladr::read_file(a.layout_path), a.lossy);
    } else if (instance) {
        layout = instance->initial();
    }
    if (!a.points_path.empty())
        points = ladr::parse_points_json(ladr::read_file(a.points_path), a.lossy);
    if (!a.lines_path.empty())
        lines = ladr::parse_lines_json(ladr::read_file(a.lines_path), a.lossy);

    ladr::RenderContent content;
    if (instance) content.instance = &*instance;
    if (layout) content.layout = &*layout;
    if (points) content.points = &*points;
    if (lines) content.lines = &*lines;
    ladr::write_file(a.out_path, ladr::render_svg(content));
}

struct GenArgs {
    int n = 4;
    std::string mode = "unit";
    std::uint64_t seed = 0;
    int span = 20;
    int max_dim = 5;
    std::string out;
};

// splitmix64; fixed here so generated corpora are identical everywhere
std::uint64_t mix(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void cmd_gen(const GenArgs& a) {
    if (a.n < 1) throw ladr::ParseError("--n must be positive");
    const long side = a.span + 1;
    if (static_cast<long>(a.n) > side * side)
        throw ladr::ParseError("--n exceeds the number of distinct lattice centers");
    std::uint64_t state = a.seed;
    std::set<std::pair<long, long>> used;
    std::vector<ladr::Rect> rects;
    ladr::Layout layout;
    for (int i = 0; i < a.n; ++i) {
        long x = 0, y = 0;
        do {
            x = static_cast<long>(mix(state) % side);
            y = static_cast<long>(mix(state) % side);
        } while (!used.insert({x, y}).second);
        ladr::Rect r;
        r.id = std::to_string(i);
        if (a.mode == "rect") {
            r.w = 1 + static_cast<long>(mix(state) % a.max_dim);
            r.h = 1 + static_cast<long>(mix(state) % a.max_dim);
        }
        rects.push_back(r);
        layout.place(r.id, ladr::Point{ladr::Rational(x), ladr::Rational(y)});
    }
    const ladr::Instance instance(std::move(rects), std::move(layout));
    const std::string text = ladr::format_instance_json(instance);
    if (a.out.empty())
        std::cout << text;
    else
        ladr::write_file(a.out, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal-order-preserving rectangle layout tools"};
    app.require_subcommand(1);

    AdjustArgs adjust;
    CLI::App* adjust_cmd = app.add_subcommand("adjust", "compute an adjusted disjoint layout");
    adjust_cmd->add_option("instance", adjust.instance_path, "instance JSON file")->required();
    adjust_cmd->add_option("--out", adjust.out, "write the layout JSON here");
    adjust_cmd->add_option("--eps", adjust.eps, "slack parameter (rational, default 1/10)");
    adjust_cmd->add_option("--mu", adjust.mu, "geometric schedule step (0 = default)");
    adjust_cmd->add_option("--schedule", adjust.schedule, "grid schedule")
        ->check(CLI::IsMember({"exact", "geometric"}));
    adjust_cmd->add_option("--objective", adjust.objective, "selection objective")
        ->check(CLI::IsMember({"area", "perimeter"}));
    adjust_cmd->add_flag("--full-sweep", adjust.full_sweep, "probe every grid cell");
    adjust_cmd->add_flag("--direct", adjust.direct, "disable the lazy cell solver");
    adjust_cmd->add_flag("--lossy", adjust.lossy, "accept decimal numbers");
    adjust_cmd->callback([&adjust] { cmd_adjust(adjust); });

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a layout against an instance");
    verify_cmd->add_option("instance", verify.instance_path, "instance JSON file")->required();
    verify_cmd->add_option("layout", verify.layout_path, "layout JSON file")->required();
    verify_cmd->add_flag("--lossy", verify.lossy, "accept decimal numbers");
    verify_cmd->callback([&verify] { cmd_verify(verify); });

    HitsetArgs hitset;
    CLI::App* hitset_cmd = app.add_subcommand("hitset", "separating line sets for point sets");
    hitset_cmd->add_option("points", hitset.points_path, "points JSON file")->required();
    hitset_cmd->add_flag("--exact", hitset.exact, "minimum separating line set");
    hitset_cmd->add_option("--decide", hitset.decide, "budgets: r horizontals, c verticals")
        ->expected(2);
    hitset_cmd->add_flag("--oracle-area", hitset.oracle_area,
                         "minimum (r+1)(c+1) over feasible budgets");
    hitset_cmd->add_option("--exact-cap", hitset.cap, "point-count cap for exact search");
    hitset_cmd->add_option("--out", hitset.out, "write the lines JSON here");
    hitset_cmd->add_flag("--lossy", hitset.lossy, "accept decimal numbers");
    hitset_cmd->callback([&hitset] { cmd_hitset(hitset); });

    GadgetArgs gadget;
    CLI::App* gadget_cmd =
        app.add_subcommand("gadget", "hardness gadget point sets from 3-CNF formulas");
    gadget_cmd->add_option("cnf", gadget.cnf_path, "DIMACS CNF file")->required();
    gadget_cmd->add_flag("--relaxed-occurrence", gadget.relaxed,
                         "skip the five-occurrences-per-variable check");
    gadget_cmd->add_option("--epsilon-sep", gadget.epsilon_sep,
                           "separation parameter (0 = default 1/(100m))");
    gadget_cmd->add_option("--points-out", gadget.points_out, "write the points JSON here");
    gadget_cmd->add_option("--meta-out", gadget.meta_out, "write gadget metadata JSON here");
    gadget_cmd->add_option("--assignment", gadget.assignment,
                           "0/1 bits; emit the induced separating line set");
    gadget_cmd->add_option("--lines-out", gadget.lines_out, "write the induced lines JSON here");
    gadget_cmd->add_option("--extract", gadget.extract,
                           "lines JSON file; recover the encoded assignment");
    gadget_cmd->add_flag("--lossy", gadget.lossy, "accept decimal numbers");
    gadget_cmd->callback([&gadget] { cmd_gadget(gadget); });

    RenderArgs render;
    CLI::App* render_cmd = app.add_subcommand("render", "render inputs as SVG");
    render_cmd->add_option("out", render.out_path, "output SVG path")->required();
    render_cmd->add_option("--instance", render.instance_path, "instance JSON file");
    render_cmd->add_option("--layout", render.layout_path,
                           "layout JSON file (defaults to the instance's initial layout)");
    render_cmd->add_option("--points", render.points_path, "points JSON file");
    render_cmd->add_option("--lines", render.lines_path, "lines JSON file");
    render_cmd->add_flag("--lossy", render.lossy, "accept decimal numbers");
    render_cmd->callback([&render] { cmd_render(render); });

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
    gen_cmd->add_option("--n", gen.n, "rectangle count");
    gen_cmd->add_option("--mode", gen.mode, "unit squares or random rectangles")
        ->check(CLI::IsMember({"unit", "rect"}));
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("--span", gen.span, "centers drawn from [0, span]^2");
    gen_cmd->add_option("--max-dim", gen.max_dim, "max rectangle dimension in rect mode");
    gen_cmd->add_option("--out", gen.out, "write the instance JSON here");
    gen_cmd->callback([&gen] { cmd_gen(gen); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ladr::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ladr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
