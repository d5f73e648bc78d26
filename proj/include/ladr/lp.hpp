#pragma once

#include <string>
#include <vector>

#include "ladr/geometry.hpp"

namespace ladr {

enum class Rel { Le, Ge, Eq };

struct Term {
    int var = 0;
    Rational coeff;
};

struct Constraint {
    std::vector<Term> terms;
    Rel rel = Rel::Le;
    Rational rhs;
    std::string tag;  // "order-x", "order-y", "cap-x", "cap-y", "pair"
};

// Feasibility program. Variables are free unless flagged nonnegative.
struct Program {
    std::vector<std::string> vars;
    std::vector<bool> nonneg;
    std::vector<Constraint> cons;

    int add_var(const std::string& name, bool nn = false) {
        vars.push_back(name);
        nonneg.push_back(nn);
        return static_cast<int>(vars.size()) - 1;
    }
};

enum class SolveStatus { Feasible, Infeasible, IterationLimit };

struct Outcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<Rational> assignment;  // aligned with Program::vars when Feasible
    long pivots = 0;
};

// Separation row bookkeeping: mean dimensions and the sign giving the
// initial-order orientation of the coordinate difference.
struct PairData {
    std::string a, b;
    Rational w_mean, h_mean;
    int x_sign = 0;  // +1: x_a - x_b, -1: x_b - x_a, 0: same x class
    int y_sign = 0;
};

// Order-collapsed feasibility LP for one (w, h) grid cell: one variable per
// rigidity class, consecutive-class margins of gamma, per-class-pair box caps,
// and one separation row per rect pair.
struct LPModel {
    Program program;
    OrthoOrder order;
    std::vector<int> x_var;  // variable index per x class (ascending)
    std::vector<int> y_var;
    std::vector<Rational> class_w;  // max rect width per x class
    std::vector<Rational> class_h;  // max rect height per y class
    long w = 0;
    long h = 0;
    Rational eps;
    Rational gamma;
    std::vector<PairData> pairs;
};

struct SolveOptions {
    long max_pivots = 0;  // 0 picks a size-based default
};

LPModel build_layout_lp(const Instance& instance, long w, long h, const Rational& eps);

// Exact phase-1 simplex over rationals. Infeasible is decided exactly; the
// pivot cap yields IterationLimit, never a wrong status.
Outcome solve_feasibility(const Program& program, const SolveOptions& opts = {});

inline Outcome solve_feasibility(const LPModel& model, const SolveOptions& opts = {}) {
    return solve_feasibility(model.program, opts);
}

// Same feasible set as solve_feasibility(model), solved by lazy row activation
// in gap space: order margins become variable bounds, and cap/pair rows are
// activated only when the current candidate violates them. Feasible outcomes
// are exact-checked against the full model first.
Outcome solve_layout_feasibility(const LPModel& model, const SolveOptions& opts = {});

bool satisfies(const Constraint& c, const std::vector<Rational>& assignment);
bool satisfies(const Program& program, const std::vector<Rational>& assignment);

// Rect centers from a model assignment of class variables.
Layout layout_from_assignment(const LPModel& model, const std::vector<Rational>& assignment);

}  // namespace ladr
