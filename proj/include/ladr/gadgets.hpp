#pragma once

#include <array>
#include <string>
#include <vector>

#include "ladr/hitting.hpp"

namespace ladr {

struct Literal {
    int var = 0;  // 1-based
    bool negated = false;
};

struct Clause {
    std::array<Literal, 3> lits;
};

struct Formula {
    int n = 0;  // variables
    int m = 0;  // clauses
    std::vector<Clause> clauses;
};

// Checks a raw clause list (literals as signed 1-based variable indices):
// three distinct variables per clause, and unless relaxed_occurrence is set,
// every variable occurs exactly five times (which forces 3m == 5n). The first
// clause is reordered if needed so its first literal is not on variable 1.
Formula validate_formula(int n, const std::vector<std::array<int, 3>>& clauses,
                         bool relaxed_occurrence = false);

struct Assignment {
    std::vector<bool> values;  // values[i] is variable i+1
};

bool satisfies(const Formula& formula, const Assignment& assignment);

// Point set whose minimum separating line sets encode satisfying assignments:
// a satisfiable formula needs exactly k = 5n + 8m - 4 lines.
struct GadgetInstance {
    Formula formula;
    PointSet points;
    std::vector<std::string> labels;  // per point: group tag like "V2", "T2_3", "A1_1"
    Rational epsilon_sep;
    long k = 0;

    // index ranges [begin, end) into points, per variable / clause block
    std::vector<std::pair<std::size_t, std::size_t>> variable_points;
    std::vector<std::pair<std::size_t, std::size_t>> clause_points;  // T1 then T2 per clause
};

// epsilon_sep <= 0 picks the default 1/(100 m).
GadgetInstance build_gadget(const Formula& formula, const Rational& epsilon_sep = Rational(0));

// The k-line separating set induced by a satisfying assignment. Throws Error
// if the assignment leaves some clause unsatisfied.
LineSet assignment_to_hitting_set(const GadgetInstance& gadget, const Assignment& assignment);

// Reads an assignment back from a separating line set: variable blocks hit by
// exactly three lines yield their configuration's truth value, anything else
// defaults to false. Throws Error if the lines do not separate the points.
Assignment hitting_set_to_assignment(const GadgetInstance& gadget, const LineSet& lines);

}  // namespace ladr
