#pragma once

#include <utility>
#include <vector>

#include "lebesgue/integration.hpp"
#include "lebesgue/step_function.hpp"

namespace lebesgue {

/// Finite geometric stand-in for the r -> 0+ limit process: radii
/// r0 * factor^i for i = 0..steps-1, with a stabilization tolerance.
/// The tail used by detectors is the last ceil(steps/4) radii.
struct RadiusSchedule {
    double r0 = 1.0;
    double factor = 0.5;
    int steps = 24;
    double tol = 1e-9;

    void validate() const;
    std::vector<double> radii() const;
    int tail_length() const { return (steps + 3) / 4; }
    /// Largest radius in the detector tail.
    double stabilization_radius() const;
};

enum class Tristate { yes, no, undecided };

/// Average of |f| over A; 0 when A is null (the fine-of-zero convention).
double iavg(const StepFunction& f, const IntervalSet& a);

/// Average of |f(y) - f(x)| over the ball B(x, r), exact.
double davg(const StepFunction& f, double x, double r);

struct LebesguePointResult {
    Tristate status = Tristate::undecided;
    std::vector<std::pair<double, double>> trace;  // (radius, davg)
};

/// Detects whether x is a Lebesgue point of f along the schedule:
/// yes if the tail davg values are all < tol and nonincreasing within
/// 2*tol; no if the whole tail stays >= tol; undecided otherwise.
LebesguePointResult is_lebesgue_pt(const StepFunction& f, double x, const RadiusSchedule& sched);

/// Limit of the supremum (resp. infimum) of f over the punctured ball
/// B(a, r) \ {a} as r runs down the schedule; exact per radius for this
/// carrier class, returns the final (stabilized) value.
double lime_sup(const StepFunction& f, double a, const RadiusSchedule& sched);
double lime_inf(const StepFunction& f, double a, const RadiusSchedule& sched);
double lime_sup(const PiecewiseLinear& f, double a, const RadiusSchedule& sched);
double lime_inf(const PiecewiseLinear& f, double a, const RadiusSchedule& sched);

struct ScanResult {
    IntervalSet flagged;          // grid_step-neighborhoods of flagged points
    double flagged_measure = 0.0;
    long points_scanned = 0;
    long points_flagged = 0;
};

/// Scans the support window on a uniform grid; points judged `no` or
/// `undecided` are collected with their grid_step-neighborhoods. For a
/// step function the flagged set stays inside shrinking neighborhoods of
/// the breakpoints.
ScanResult non_lebesgue_scan(const StepFunction& f, double grid_step,
                             const RadiusSchedule& sched);

}  // namespace lebesgue
