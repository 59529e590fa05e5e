#pragma once

#include <vector>

#include "lebesgue/interval_set.hpp"

namespace lebesgue {

/// Finitely many constant pieces on a partition b_0 < ... < b_m, taking
/// value values[i] on [b_i, b_{i+1}) and 0 outside [b_0, b_m). The empty
/// function (no breakpoints) is the zero function. Every StepFunction is
/// measurable and globally integrable by construction.
struct StepFunction {
    std::vector<double> breakpoints;  // strictly increasing, size m+1 (or empty)
    std::vector<double> values;       // size m

    static StepFunction make(std::vector<double> breakpoints, std::vector<double> values);
    static StepFunction zero() { return {}; }
    static StepFunction indicator(double lo, double hi, double v = 1.0);

    double operator()(double x) const;
    bool is_zero_function() const { return values.empty(); }
    std::size_t piece_count() const { return values.size(); }

    /// [b_0, b_m); the empty interval {0,0} for the zero function.
    Interval support_window() const;
    IntervalSet support_window_set() const;

    /// Value of the piece immediately left of x (0 left of the support).
    double left_value(double x) const;
};

/// A jump discontinuity: f equals `left` just left of x and `right` at
/// and just right of x. Support edges count when the outside value 0
/// differs from the adjacent piece.
struct Jump {
    double x = 0.0;
    double left = 0.0;
    double right = 0.0;

    double height() const;
};

std::vector<Jump> jumps(const StepFunction& f);

StepFunction operator+(const StepFunction& f, const StepFunction& g);
StepFunction operator-(const StepFunction& f);
StepFunction scale(double a, const StepFunction& f);
StepFunction abs(const StepFunction& f);

/// Continuous piecewise-linear function: linear between consecutive knots,
/// constant values.front() left of the first knot and values.back() right
/// of the last. A single knot yields a constant function. Evaluation on a
/// flat segment (equal knot values) returns that value exactly.
struct PiecewiseLinear {
    std::vector<double> knots;   // strictly increasing, size >= 1
    std::vector<double> values;  // same size

    static PiecewiseLinear make(std::vector<double> knots, std::vector<double> values);
    static PiecewiseLinear constant(double y) { return {{0.0}, {y}}; }

    double operator()(double x) const;
    std::size_t knot_count() const { return knots.size(); }
};

}  // namespace lebesgue
