#pragma once

#include "lebesgue/interval_set.hpp"
#include "lebesgue/piecewise_affine.hpp"
#include "lebesgue/step_function.hpp"

namespace lebesgue {

/// Exact Lebesgue integral of a step function over an interval set:
/// sum of value * overlap-length per piece. Linear in f, additive in S.
double integrate(const StepFunction& f, const IntervalSet& s);

/// Exact trapezoid integration of a continuous piecewise-linear function.
double integrate(const PiecewiseLinear& g, const IntervalSet& s);

/// L1 norm over S: integral of |f|. Zero iff f vanishes a.e. on S.
double l1_norm(const StepFunction& f, const IntervalSet& s);

/// L1 distance between a step function and a continuous approximant over S,
/// evaluated exactly on the merged breakpoint/knot grid.
double l1_distance(const StepFunction& f, const PiecewiseLinear& g, const IntervalSet& s);

enum class LevelMode { greater, greater_equal };

/// {x in support window | f(x) > c} (or >= c), canonical.
IntervalSet superlevel_set(const StepFunction& f, double c, LevelMode mode);
/// Same for a piecewise-linear function over its knot window [x_0, x_m);
/// crossing points are solved linearly.
IntervalSet superlevel_set(const PiecewiseLinear& g, double c, LevelMode mode);

struct MarkovReport {
    double a = 0.0;
    double lhs = 0.0;   // measure of {|f| >= a}
    double rhs = 0.0;   // (1/a) * l1_norm(f)
    bool holds = false; // lhs <= rhs, a theorem for valid inputs
};

/// Markov's inequality check at threshold a > 0 over the support window.
MarkovReport markov_check(const StepFunction& f, double a);

/// f restricted to the ball B(0, 2(k+1)): zeroed outside (-2(k+1), 2(k+1)).
StepFunction restrict_to_ball(const StepFunction& f, int k);

}  // namespace lebesgue
