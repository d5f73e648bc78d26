#include "ladr/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ladr/error.hpp"

namespace ladr {

LPModel build_layout_lp(const Instance& instance, long w, long h, const Rational& eps) {
    if (eps <= 0 || eps >= 1) throw Error("eps must be in (0, 1)");
    if (w < instance.max_width()) throw Error("cell width below the widest rect");
    if (h < instance.max_height()) throw Error("cell height below the tallest rect");

    LPModel m;
    m.w = w;
    m.h = h;
    m.eps = eps;
    m.gamma = eps / Rational(2 * static_cast<long>(instance.size()));
    m.order = compute_order(instance.initial());

    const int K = static_cast<int>(m.order.x_classes.size());
    const int M = static_cast<int>(m.order.y_classes.size());
    for (int c = 0; c < K; ++c) m.x_var.push_back(m.program.add_var("x" + std::to_string(c + 1)));
    for (int c = 0; c < M; ++c) m.y_var.push_back(m.program.add_var("y" + std::to_string(c + 1)));

    m.class_w.assign(K, Rational(0));
    for (int c = 0; c < K; ++c)
        for (const auto& id : m.order.x_classes[c])
            m.class_w[c] = std::max(m.class_w[c], Rational(instance.rect(id).w));
    m.class_h.assign(M, Rational(0));
    for (int c = 0; c < M; ++c)
        for (const auto& id : m.order.y_classes[c])
            m.class_h[c] = std::max(m.class_h[c], Rational(instance.rect(id).h));

    for (int c = 0; c + 1 < K; ++c)
        m.program.cons.push_back(Constraint{
            {{m.x_var[c + 1], Rational(1)}, {m.x_var[c], Rational(-1)}}, Rel::Ge, m.gamma,
            "order-x"});
    for (int c = 0; c + 1 < M; ++c)
        m.program.cons.push_back(Constraint{
            {{m.y_var[c + 1], Rational(1)}, {m.y_var[c], Rational(-1)}}, Rel::Ge, m.gamma,
            "order-y"});

    for (int a = 0; a < K; ++a)
        for (int b = a + 1; b < K; ++b)
            m.program.cons.push_back(Constraint{
                {{m.x_var[b], Rational(1)}, {m.x_var[a], Rational(-1)}}, Rel::Le,
                Rational(w) + eps - (m.class_w[a] + m.class_w[b]) / 2, "cap-x"});
    for (int a = 0; a < M; ++a)
        for (int b = a + 1; b < M; ++b)
            m.program.cons.push_back(Constraint{
                {{m.y_var[b], Rational(1)}, {m.y_var[a], Rational(-1)}}, Rel::Le,
                Rational(h) + eps - (m.class_h[a] + m.class_h[b]) / 2, "cap-y"});

    const auto& rects = instance.rects();
    for (std::size_t i = 0; i < rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            const Rect& ra = rects[i];
            const Rect& rb = rects[j];
            PairData pd;
            pd.a = ra.id;
            pd.b = rb.id;
            pd.w_mean = rational(ra.w + rb.w, 2);
            pd.h_mean = rational(ra.h + rb.h, 2);
            const int ax = m.order.x_rank.at(ra.id);
            const int bx = m.order.x_rank.at(rb.id);
            const int ay = m.order.y_rank.at(ra.id);
            const int by = m.order.y_rank.at(rb.id);
            pd.x_sign = ax == bx ? 0 : (bx < ax ? +1 : -1);
            pd.y_sign = ay == by ? 0 : (by < ay ? +1 : -1);

            Constraint con;
            con.rel = Rel::Ge;
            con.rhs = Rational(1);
            con.tag = "pair";
            if (pd.x_sign != 0) {
                const Rational coeff = Rational(pd.x_sign) / pd.w_mean;
                con.terms.push_back({m.x_var[ax - 1], coeff});
                con.terms.push_back({m.x_var[bx - 1], -coeff});
            }
            if (pd.y_sign != 0) {
                const Rational coeff = Rational(pd.y_sign) / pd.h_mean;
                con.terms.push_back({m.y_var[ay - 1], coeff});
                con.terms.push_back({m.y_var[by - 1], -coeff});
            }
            m.program.cons.push_back(std::move(con));
            m.pairs.push_back(std::move(pd));
        }
    }
    return m;
}

bool satisfies(const Constraint& c, const std::vector<Rational>& assignment) {
    Rational lhs(0);
    for (const Term& t : c.terms) lhs += t.coeff * assignment[t.var];
    switch (c.rel) {
        case Rel::Le: return lhs <= c.rhs;
        case Rel::Ge: return lhs >= c.rhs;
        case Rel::Eq: return lhs == c.rhs;
    }
    return false;
}

bool satisfies(const Program& program, const std::vector<Rational>& assignment) {
    for (std::size_t v = 0; v < program.vars.size(); ++v)
        if (program.nonneg[v] && assignment[v] < 0) return false;
    for (const Constraint& c : program.cons)
        if (!satisfies(c, assignment)) return false;
    return true;
}

namespace {

constexpr int kDegenerateRunLimit = 40;

// sign of (an/ad - bn/bd) for ad, bd > 0
int cmp_ratio(const Rational& an, const Rational& ad, const Rational& bn, const Rational& bd) {
    const Rational lhs = an * bd;
    const Rational rhs = bn * ad;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

}  // namespace

Outcome solve_feasibility(const Program& p, const SolveOptions& opts) {
    const int V = static_cast<int>(p.vars.size());
    const int R = static_cast<int>(p.cons.size());

    std::vector<int> col_plus(V), col_minus(V, -1);
    int struct_cols = 0;
    for (int v = 0; v < V; ++v) {
        col_plus[v] = struct_cols++;
        if (!p.nonneg[v]) col_minus[v] = struct_cols++;
    }

    // Dense rows with nonnegative rhs.
    std::vector<std::vector<Rational>> rowa(R, std::vector<Rational>(struct_cols, Rational(0)));
    std::vector<Rational> rhs(R);
    std::vector<Rel> rel(R);
    for (int i = 0; i < R; ++i) {
        const Constraint& c = p.cons[i];
        for (const Term& t : c.terms) {
            if (t.var < 0 || t.var >= V) throw Error("constraint references unknown variable");
            rowa[i][col_plus[t.var]] += t.coeff;
            if (col_minus[t.var] >= 0) rowa[i][col_minus[t.var]] -= t.coeff;
        }
        rhs[i] = c.rhs;
        rel[i] = c.rel;
        if (rhs[i] < 0) {
            for (Rational& x : rowa[i]) x = -x;
            rhs[i] = -rhs[i];
            if (rel[i] == Rel::Le)
                rel[i] = Rel::Ge;
            else if (rel[i] == Rel::Ge)
                rel[i] = Rel::Le;
        }
    }

    int n_slack = 0, n_art = 0;
    for (int i = 0; i < R; ++i) {
        if (rel[i] != Rel::Eq) ++n_slack;
        if (rel[i] != Rel::Le) ++n_art;
    }
    const int art_start = struct_cols + n_slack;
    const int T = art_start + n_art;  // rhs column lives at index T

    std::vector<std::vector<Rational>> tab(R + 1, std::vector<Rational>(T + 1, Rational(0)));
    std::vector<int> basis(R, -1);
    std::vector<Rational>& d = tab[R];  // reduced costs; d[T] == -objective

    int slack_at = struct_cols, art_at = art_start;
    for (int i = 0; i < R; ++i) {
        for (int j = 0; j < struct_cols; ++j) tab[i][j] = rowa[i][j];
        tab[i][T] = rhs[i];
        if (rel[i] == Rel::Le) {
            tab[i][slack_at] = 1;
            basis[i] = slack_at++;
        } else if (rel[i] == Rel::Ge) {
            tab[i][slack_at] = -1;
            ++slack_at;
            tab[i][art_at] = 1;
            basis[i] = art_at++;
        } else {
            tab[i][art_at] = 1;
            basis[i] = art_at++;
        }
    }
    // Minimize the artificial sum: price out the artificial basis rows.
    for (int i = 0; i < R; ++i) {
        if (basis[i] < art_start) continue;
        for (int j = 0; j <= T; ++j) d[j] -= tab[i][j];
    }
    for (int j = art_start; j < T; ++j) d[j] += 1;

    const long cap =
        opts.max_pivots > 0 ? opts.max_pivots : 50000 + 10L * (R + T);
    long pivots = 0;
    int degen_run = 0;
    bool bland = false;

    while (true) {
        int pc = -1;
        if (bland) {
            for (int j = 0; j < T; ++j)
                if (d[j] < 0) {
                    pc = j;
                    break;
                }
        } else {
            for (int j = 0; j < T; ++j)
                if (d[j] < 0 && (pc == -1 || d[j] < d[pc])) pc = j;
        }
        if (pc == -1) break;

        if (++pivots > cap) return Outcome{SolveStatus::IterationLimit, {}, pivots};

        int pr = -1;
        for (int i = 0; i < R; ++i) {
            if (tab[i][pc] <= 0) continue;
            if (pr == -1) {
                pr = i;
                continue;
            }
            // Compare rhs_i / a_i vs rhs_pr / a_pr without division.
            const int cmp = cmp_ratio(tab[i][T], tab[i][pc], tab[pr][T], tab[pr][pc]);
            if (cmp < 0 || (cmp == 0 && basis[i] < basis[pr])) pr = i;
        }
        if (pr == -1) throw Error("phase-1 objective unbounded");

        if (tab[pr][T] == 0) {
            if (++degen_run > kDegenerateRunLimit) bland = true;
        } else {
            degen_run = 0;
            bland = false;
        }

        // Pivot on (pr, pc).
        {
            std::vector<Rational>& prow = tab[pr];
            const Rational pv = prow[pc];
            if (pv != 1)
                for (Rational& x : prow) x /= pv;
            for (int i = 0; i <= R; ++i) {
                if (i == pr) continue;
                const Rational factor = tab[i][pc];
                if (factor == 0) continue;
                std::vector<Rational>& row = tab[i];
                for (int j = 0; j <= T; ++j) {
                    if (prow[j] == 0) continue;
                    row[j] -= factor * prow[j];
                }
            }
            basis[pr] = pc;
        }
    }

    if (d[T] < 0) return Outcome{SolveStatus::Infeasible, {}, pivots};

    std::vector<Rational> colval(T, Rational(0));
    for (int i = 0; i < R; ++i) colval[basis[i]] = tab[i][T];
    std::vector<Rational> assignment(V);
    for (int v = 0; v < V; ++v) {
        assignment[v] = colval[col_plus[v]];
        if (col_minus[v] >= 0) assignment[v] -= colval[col_minus[v]];
    }
    return Outcome{SolveStatus::Feasible, std::move(assignment), pivots};
}

Layout layout_from_assignment(const LPModel& model, const std::vector<Rational>& assignment) {
    Layout out;
    for (const auto& [id, xr] : model.order.x_rank) {
        const int yr = model.order.y_rank.at(id);
        out.place(id, Point{assignment[model.x_var[xr - 1]], assignment[model.y_var[yr - 1]]});
    }
    return out;
}

Outcome solve_layout_feasibility(const LPModel& model, const SolveOptions& opts) {
    const int K = static_cast<int>(model.order.x_classes.size());
    const int M = static_cast<int>(model.order.y_classes.size());
    const int GX = K - 1;
    const int GY = M - 1;

    Program gap_template;
    for (int i = 0; i < GX; ++i) gap_template.add_var("gx" + std::to_string(i + 1), true);
    for (int i = 0; i < GY; ++i) gap_template.add_var("gy" + std::to_string(i + 1), true);

    // Rewrites a class-variable constraint over gap variables; the anchor and
    // gamma margins move into the right-hand side.
    auto transform = [&](const Constraint& con) {
        std::vector<Rational> gx(GX, Rational(0)), gy(GY, Rational(0));
        Rational shift(0);
        for (const Term& t : con.terms) {
            const bool is_x = t.var < K;
            const int c0 = is_x ? t.var : t.var - K;
            auto& g = is_x ? gx : gy;
            for (int i = 0; i < c0; ++i) g[i] += t.coeff;
            shift += t.coeff * c0 * model.gamma;
        }
        Constraint out;
        out.rel = con.rel;
        out.rhs = con.rhs - shift;
        out.tag = con.tag;
        for (int i = 0; i < GX; ++i)
            if (gx[i] != 0) out.terms.push_back({i, gx[i]});
        for (int i = 0; i < GY; ++i)
            if (gy[i] != 0) out.terms.push_back({GX + i, gy[i]});
        return out;
    };

    const auto& cons = model.program.cons;
    std::vector<char> active(cons.size(), 0), transformable(cons.size(), 0);
    std::size_t pair_idx = 0;
    for (std::size_t ci = 0; ci < cons.size(); ++ci) {
        const Constraint& con = cons[ci];
        if (con.tag == "order-x" || con.tag == "order-y") continue;  // held by gap bounds
        transformable[ci] = 1;
        if (con.tag == "pair") {
            const PairData& pd = model.pairs[pair_idx++];
            const int dx = std::abs(model.order.x_rank.at(pd.a) - model.order.x_rank.at(pd.b));
            const int dy = std::abs(model.order.y_rank.at(pd.a) - model.order.y_rank.at(pd.b));
            if (dx <= 1 && dy <= 1) active[ci] = 1;
        } else if (con.terms.size() == 2) {
            // Seed with the extremal cap rows (first against last class).
            const int lo = std::min(con.terms[0].var, con.terms[1].var);
            const int hi = std::max(con.terms[0].var, con.terms[1].var);
            if (con.tag == "cap-x" && lo == model.x_var.front() && hi == model.x_var.back())
                active[ci] = 1;
            if (con.tag == "cap-y" && lo == model.y_var.front() && hi == model.y_var.back())
                active[ci] = 1;
        }
    }

    long total_pivots = 0;
    while (true) {
        Program sub = gap_template;
        for (std::size_t ci = 0; ci < cons.size(); ++ci)
            if (active[ci]) sub.cons.push_back(transform(cons[ci]));

        Outcome out = solve_feasibility(sub, opts);
        total_pivots += out.pivots;
        if (out.status != SolveStatus::Feasible) {
            out.pivots = total_pivots;
            return out;
        }

        // Class coordinates from the gaps, anchored at zero.
        std::vector<Rational> full(model.program.vars.size(), Rational(0));
        Rational acc(0);
        for (int c = 0; c < K; ++c) {
            if (c > 0) acc += model.gamma + out.assignment[c - 1];
            full[model.x_var[c]] = acc;
        }
        acc = 0;
        for (int c = 0; c < M; ++c) {
            if (c > 0) acc += model.gamma + out.assignment[GX + c - 1];
            full[model.y_var[c]] = acc;
        }

        bool added = false;
        for (std::size_t ci = 0; ci < cons.size(); ++ci) {
            if (active[ci] || !transformable[ci]) continue;
            if (!satisfies(cons[ci], full)) {
                active[ci] = 1;
                added = true;
            }
        }
        if (!added) return Outcome{SolveStatus::Feasible, std::move(full), total_pivots};
    }
}

}  // namespace ladr
