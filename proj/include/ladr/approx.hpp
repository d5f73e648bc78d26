#pragma once

#include <string>
#include <vector>

#include "ladr/geometry.hpp"
#include "ladr/lp.hpp"

namespace ladr {

enum class ScheduleMode { Exact, Geometric };

// Candidate box dimensions swept by the approximation. Both axes always
// contain their endpoints (max single dimension, total dimension).
struct GridSchedule {
    std::vector<long> widths;
    std::vector<long> heights;
    Rational mu;  // 0 for exact schedules
};

// mu <= 0 with Geometric picks the default 1/ceil(log2(1 + W_R + H_R)).
GridSchedule make_schedule(const Instance& instance, ScheduleMode mode,
                           const Rational& mu = Rational(0));

struct ProbeRecord {
    long w = 0;
    long h = 0;
    bool feasible = false;
};

enum class Objective { Area, Perimeter };

struct ApproxOptions {
    Objective objective = Objective::Area;
    // Probe every grid cell instead of walking the feasibility frontier.
    bool full_sweep = false;
    // Use the lazy-activation cell solver; off solves each full model directly.
    bool lazy = true;
    SolveOptions solve;
};

struct ApproxResult {
    Layout layout;
    BBox box;
    long w = 0;  // winning cell
    long h = 0;
    Rational objective_value;  // area or perimeter of the returned layout
    std::vector<ProbeRecord> trace;
};

// Sweeps the schedule, keeps the feasible cell whose relaxed layout minimizes
// the objective (ties to the lexicographically smallest (w, h)), and returns
// the doubled layout, which is always disjoint and order-preserving.
ApproxResult approx_ladr(const Instance& instance, const Rational& eps,
                         const GridSchedule& schedule, const ApproxOptions& opts = {});

// approx_ladr with the perimeter objective.
ApproxResult approx_perimeter(const Instance& instance, const Rational& eps,
                              const GridSchedule& schedule, const ApproxOptions& opts = {});

// Narrows a disjoint layout: x-rigidity classes slide left to the first
// position allowed by the separations of y-overlapping predecessors. Width
// never increases and height and orthogonal order are unchanged; for unit
// squares the result is within eps of an integer width. Throws Error if the
// input layout overlaps.
Layout compress_width(const Instance& instance, const Layout& layout, const Rational& eps);

struct VerifyReport {
    bool disjoint = false;
    bool order_preserved = false;
    BBox box;
    std::string detail;  // first violation, if any

    bool ok() const { return disjoint && order_preserved; }
};

VerifyReport verify_solution(const Instance& instance, const Layout& layout);

}  // namespace ladr
