#include "ladr/gadgets.hpp"

#include <algorithm>
#include <set>

#include "ladr/error.hpp"

namespace ladr {

Formula validate_formula(int n, const std::vector<std::array<int, 3>>& clauses,
                         bool relaxed_occurrence) {
    if (n < 1) throw ParseError("formula needs at least one variable");
    if (clauses.empty()) throw ParseError("formula needs at least one clause");
    Formula f;
    f.n = n;
    f.m = static_cast<int>(clauses.size());
    std::vector<int> occurrences(n + 1, 0);
    for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
        Clause clause;
        std::set<int> vars;
        for (int t = 0; t < 3; ++t) {
            const int lit = clauses[ci][t];
            if (lit == 0) throw ParseError("literal 0 in clause " + std::to_string(ci + 1));
            const int var = lit > 0 ? lit : -lit;
            if (var > n)
                throw ParseError("variable " + std::to_string(var) + " out of range in clause " +
                                 std::to_string(ci + 1));
            if (!vars.insert(var).second)
                throw ParseError("clause " + std::to_string(ci + 1) +
                                 " repeats variable " + std::to_string(var));
            clause.lits[t] = Literal{var, lit < 0};
            ++occurrences[var];
        }
        f.clauses.push_back(clause);
    }
    if (!relaxed_occurrence) {
        for (int v = 1; v <= n; ++v)
            if (occurrences[v] != 5)
                throw ParseError("variable " + std::to_string(v) + " occurs " +
                                 std::to_string(occurrences[v]) + " times, expected 5");
    }
    // The first clause must not open with variable 1.
    auto& first = f.clauses.front().lits;
    if (first[0].var == 1) {
        const int t = first[1].var != 1 ? 1 : 2;
        std::swap(first[0], first[t]);
    }
    return f;
}

bool satisfies(const Formula& formula, const Assignment& assignment) {
    if (static_cast<int>(assignment.values.size()) != formula.n)
        throw Error("assignment length differs from variable count");
    for (const Clause& clause : formula.clauses) {
        bool sat = false;
        for (const Literal& lit : clause.lits)
            if (assignment.values[lit.var - 1] != lit.negated) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

namespace {

// Point templates. The variable block admits exactly two optimal separations:
// two horizontals and a vertical (encoding true) or one horizontal and two
// verticals (encoding false).
const long kVariableTemplate[6][2] = {{1, 4}, {2, 2}, {3, 6}, {4, 1}, {5, 5}, {6, 3}};
const long kClausePairTemplate[4][2] = {{2, -1}, {5, -2}, {6, -3}, {9, -4}};

void add_f_template(PointSet& points, std::vector<std::string>& labels, const Rational& eps,
                    const Rational& px, const Rational& py, const std::string& label) {
    const Point pts[4] = {{px + 0, py - eps},
                          {px - 1, py - 1 + eps},
                          {px - 2, py - 2 * eps},
                          {px - 3, py - 1 + 2 * eps}};
    for (const Point& p : pts) {
        points.pts.push_back(p);
        labels.push_back(label);
    }
}

void add_h_template(PointSet& points, std::vector<std::string>& labels, const Rational& eps,
                    const Rational& px, const Rational& py, const std::string& label) {
    const Point pts[4] = {{px - eps, py + 0},
                          {px - 1 + eps, py - 1},
                          {px - 2 * eps, py - 2},
                          {px - 1 + 2 * eps, py - 3}};
    for (const Point& p : pts) {
        points.pts.push_back(p);
        labels.push_back(label);
    }
}

}  // namespace

GadgetInstance build_gadget(const Formula& formula, const Rational& epsilon_sep) {
    const int n = formula.n;
    const int m = formula.m;
    GadgetInstance g;
    g.formula = formula;
    g.epsilon_sep = epsilon_sep > 0 ? epsilon_sep : Rational(1, 100L * m);
    g.k = 5L * n + 8L * m - 4;
    if (2 * m * g.epsilon_sep >= 1)
        throw Error("epsilon_sep too large: needs epsilon_sep * m < 1/2");
    const Rational& eps = g.epsilon_sep;

    for (int i = 1; i <= n; ++i) {
        const long base = 6L * (i - 1);
        const std::size_t begin = g.points.size();
        for (const auto& p : kVariableTemplate) {
            g.points.pts.push_back(Point{Rational(base + p[0]), Rational(base + p[1])});
            g.labels.push_back("V" + std::to_string(i));
        }
        g.variable_points.emplace_back(begin, g.points.size());
    }

    for (int j = 1; j <= m; ++j) {
        const long tx = 6L * n + 1 + 10L * (j - 1);
        const long ty = 4L * (j - m);
        const std::size_t begin = g.points.size();
        for (const auto& p : kClausePairTemplate) {
            g.points.pts.push_back(Point{Rational(tx + p[0]), Rational(ty + p[1])});
            g.labels.push_back("T1_" + std::to_string(j));
        }
        static const long kSlots[3][2] = {{1, 3}, {4, 7}, {8, 10}};
        for (int t = 0; t < 3; ++t) {
            const Literal lit = formula.clauses[j - 1].lits[t];
            const long band = 6L * (lit.var - 1);
            const Rational y_hi =
                lit.negated ? Rational(band + 4) - eps * j : Rational(band + 5) - eps * j;
            const Rational y_lo =
                lit.negated ? Rational(band + 3) + eps * j : Rational(band + 4) + eps * j;
            g.points.pts.push_back(Point{Rational(tx + kSlots[t][0]), y_hi});
            g.labels.push_back("T2_" + std::to_string(j));
            g.points.pts.push_back(Point{Rational(tx + kSlots[t][1]), y_lo});
            g.labels.push_back("T2_" + std::to_string(j));
        }
        g.clause_points.emplace_back(begin, g.points.size());
    }

    for (int j = 1; j <= m; ++j)
        add_f_template(g.points, g.labels, eps, Rational(-4L * m + 3 + 4L * (j - 1)),
                       Rational(-4L * m + 2 + 4L * (j - 1)), "A1_" + std::to_string(j));
    for (int l = 1; l <= m - 1; ++l)
        add_h_template(g.points, g.labels, eps, Rational(-4L * m + 4L * l),
                       Rational(-8L * m + 7 + 4L * (l - 1)), "A2_" + std::to_string(l));
    for (int l = 1; l <= n - 1; ++l)
        add_f_template(g.points, g.labels, eps, Rational(-4L * m - 1 - 4L * (l - 1)),
                       Rational(7 + 6L * (l - 1)), "A3_" + std::to_string(l));
    for (int j = 1; j <= m - 1; ++j)
        add_h_template(g.points, g.labels, eps, Rational(6L * n + 2 + 10L * j),
                       Rational(-8L * m + 3 - 4L * (j - 1)), "A4_" + std::to_string(j));

    const Rational half(1, 2);
    for (const auto& [dx, dy] : {std::pair{0, 0}, {0, -1}, {1, 0}, {1, -1}}) {
        g.points.pts.push_back(Point{Rational(6L * n) + half + dx, half + dy});
        g.labels.push_back("A5");
    }

    std::set<std::pair<Rational, Rational>> seen;
    for (const Point& p : g.points.pts)
        if (!seen.emplace(p.x, p.y).second)
            throw Error("gadget produced duplicate points; epsilon_sep unsuitable");
    return g;
}

LineSet assignment_to_hitting_set(const GadgetInstance& gadget, const Assignment& assignment) {
    const Formula& f = gadget.formula;
    if (!satisfies(f, assignment)) throw Error("assignment does not satisfy the formula");

    const int n = f.n;
    const int m = f.m;
    const Rational half(1, 2);
    LineSet lines;
    lines.horizontals.push_back(Rational(0));
    lines.verticals.push_back(Rational(6L * n + 1));

    auto f_gadget_lines = [&](const Rational& px, const Rational& py) {
        lines.horizontals.push_back(py - half);
        lines.verticals.push_back(px - 1 - half);
    };
    auto h_gadget_lines = [&](const Rational& px, const Rational& py) {
        lines.horizontals.push_back(py - 1 - half);
        lines.verticals.push_back(px - half);
    };
    for (int j = 1; j <= m; ++j)
        f_gadget_lines(Rational(-4L * m + 3 + 4L * (j - 1)), Rational(-4L * m + 2 + 4L * (j - 1)));
    for (int l = 1; l <= m - 1; ++l)
        h_gadget_lines(Rational(-4L * m + 4L * l), Rational(-8L * m + 7 + 4L * (l - 1)));
    for (int l = 1; l <= n - 1; ++l)
        f_gadget_lines(Rational(-4L * m - 1 - 4L * (l - 1)), Rational(7 + 6L * (l - 1)));
    for (int j = 1; j <= m - 1; ++j)
        h_gadget_lines(Rational(6L * n + 2 + 10L * j), Rational(-8L * m + 3 - 4L * (j - 1)));

    for (int i = 1; i <= n; ++i) {
        const Rational base(6L * (i - 1));
        if (assignment.values[i - 1]) {
            lines.horizontals.push_back(base + 4 + half);
            lines.horizontals.push_back(base + 2 + half);
            lines.verticals.push_back(base + 3 + half);
        } else {
            lines.horizontals.push_back(base + 3 + half);
            lines.verticals.push_back(base + 2 + half);
            lines.verticals.push_back(base + 4 + half);
        }
    }

    for (int j = 1; j <= m; ++j) {
        const Rational tx(6L * n + 1 + 10L * (j - 1));
        int first_sat = -1;
        for (int t = 0; t < 3 && first_sat < 0; ++t) {
            const Literal lit = f.clauses[j - 1].lits[t];
            if (assignment.values[lit.var - 1] != lit.negated) first_sat = t;
        }
        static const long kClauseSplits[3][2] = {{4, 8}, {2, 8}, {2, 6}};
        lines.verticals.push_back(tx + kClauseSplits[first_sat][0] + half);
        lines.verticals.push_back(tx + kClauseSplits[first_sat][1] + half);
    }

    lines.normalize();
    if (static_cast<long>(lines.size()) != gadget.k)
        throw Error("constructed line set has the wrong size");
    return lines;
}

Assignment hitting_set_to_assignment(const GadgetInstance& gadget, const LineSet& lines) {
    if (!is_separating(lines, gadget.points))
        throw Error("line set does not separate the gadget points");

    Assignment out;
    out.values.assign(gadget.formula.n, false);
    for (int i = 1; i <= gadget.formula.n; ++i) {
        const auto [begin, end] = gadget.variable_points[i - 1];
        Rational min_x = gadget.points.pts[begin].x, max_x = min_x;
        Rational min_y = gadget.points.pts[begin].y, max_y = min_y;
        for (std::size_t p = begin; p < end; ++p) {
            min_x = std::min(min_x, gadget.points.pts[p].x);
            max_x = std::max(max_x, gadget.points.pts[p].x);
            min_y = std::min(min_y, gadget.points.pts[p].y);
            max_y = std::max(max_y, gadget.points.pts[p].y);
        }
        long hits = 0;
        for (const Rational& v : lines.verticals)
            if (min_x < v && v < max_x) ++hits;
        for (const Rational& h : lines.horizontals)
            if (min_y < h && h < max_y) ++hits;
        if (hits != 3) continue;  // over-budget block, value stays false
        const Rational band(6L * (i - 1));
        for (const Rational& h : lines.horizontals)
            if (band + 4 < h && h < band + 5) {
                out.values[i - 1] = true;
                break;
            }
    }
    return out;
}

}  // namespace ladr
