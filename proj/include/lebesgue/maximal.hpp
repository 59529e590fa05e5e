#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lebesgue/averaging.hpp"
#include "lebesgue/step_function.hpp"

namespace lebesgue {

/// Indexed finite family of balls; every radius must be positive.
struct BallCollection {
    std::vector<Ball> balls;

    void validate() const;
    std::size_t size() const { return balls.size(); }
};

/// Greedy finite Vitali selection: repeatedly take the largest-radius ball
/// disjoint (as open intervals; touching counts as disjoint) from all
/// chosen ones, ties broken by lower index. The selected balls are pairwise
/// disjoint and every input ball meets a selected ball of >= radius and is
/// contained in its 3-scaling.
std::vector<std::size_t> vitali_finite(const BallCollection& coll);

struct VitaliWitness {
    std::size_t index = 0;    // input ball
    std::size_t covered_by = 0;  // selected ball j with B_i within sball(3, B_j)
    bool ok = false;
};

struct VitaliVerification {
    bool disjoint = false;
    bool covered = false;
    std::vector<VitaliWitness> witnesses;

    bool ok() const { return disjoint && covered; }
};

/// Pure checker for any candidate selection: verifies pairwise disjointness
/// of the selected balls and exhibits, for every input index, a selected
/// ball that intersects it, dominates its radius, and 3x-covers it.
VitaliVerification verify_vitali(const BallCollection& coll,
                                 std::span<const std::size_t> selected);

/// Ball average of |f| at radius r: (1/(2r)) * integral of |f| over (x-r, x+r).
double hl_max(const StepFunction& f, double x, double r);

/// Exact Hardy-Littlewood maximal value sup_{r>0} hl_max(f,x,r): between
/// consecutive critical radii {|x - b| : b breakpoint} the numerator is
/// affine in r, so the sup is attained at a critical radius or as the
/// r -> 0+ limit; all candidates are evaluated.
double hl_maximal(const StepFunction& f, double x);

/// Grid fallback for continuous piecewise-linear inputs: max of hl_max over
/// the knot-distance radii and the schedule radii (a lower bound on the sup).
double hl_maximal(const PiecewiseLinear& g, double x, const RadiusSchedule& sched);

/// Exact superlevel set {x | hl_maximal(f, x) > c} as a finite interval
/// union: per breakpoint b, x -> hl_max(f, x, |x - b|) is a Mobius function
/// of x between consecutive midpoints, so each piece contributes an exactly
/// solvable interval; the r -> 0 limit contributes {|f| > c}.
IntervalSet maximal_superlevel(const StepFunction& f, double c);

struct MaximalReport {
    double c = 0.0;
    double superlevel_measure = 0.0;   // exact measure of {Mf > c}
    double bound = 0.0;                // (3/c) * l1_norm(f)
    bool holds = false;                // superlevel_measure <= bound
    long grid_points_above = 0;        // grid cross-check count
    double grid_under_measure = 0.0;   // grid cells at points with Mf > c
};

/// Hardy-Littlewood maximal inequality check at threshold c > 0; the exact
/// superlevel measure is compared against (3/c)||f||_1, and a pointwise
/// grid evaluation at spacing grid_step over the enlarged support window
/// cross-checks the exact set from below.
MaximalReport maximal_inequality_check(const StepFunction& f, double c, double grid_step);

}  // namespace lebesgue
