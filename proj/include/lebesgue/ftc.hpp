#pragma once

#include <utility>
#include <vector>

#include "lebesgue/averaging.hpp"
#include "lebesgue/step_function.hpp"

namespace lebesgue {

/// Shrinking step widths for difference-quotient probes of the primitive.
struct DerivativeProbe {
    std::vector<double> h_values;  // strictly decreasing, positive
    bool two_sided = true;         // symmetric quotient when true

    static DerivativeProbe geometric(double h0, double factor, int count, bool two_sided = true);
    void validate() const;
};

/// Exact integral of f over (a, x]; a may be -infinity (the compact support
/// keeps the value finite). Returns 0 when x <= a. F is piecewise affine in
/// x with knots at the breakpoints of f.
double primitive(const StepFunction& f, double a, double x);

struct Ftc1Report {
    double derivative_estimate = 0.0;  // quotient at the smallest h
    double f_at_x = 0.0;
    Tristate lebesgue_pt_status = Tristate::undecided;
    bool skipped = false;  // non-Lebesgue point: hypothesis fails, check skipped
    bool pass = false;
    std::vector<std::pair<double, double>> trace;  // (h, quotient)
};

/// Verifies F'(x) = f(x) at Lebesgue points via difference quotients of the
/// exact primitive. At points the detector does not certify, the check is
/// skipped (pass stays true), mirroring the hypothesis of the theorem.
Ftc1Report ftc1_check(const StepFunction& f, double a, double x, const DerivativeProbe& probe,
                      const RadiusSchedule& sched = {}, double tol = 1e-9);

/// Stabilized value of measure(A intersect B(x,r)) / measure(B(x,r)) along
/// the schedule (the value at the final radius); always in [0, 1].
double density(const IntervalSet& a, double x, const RadiusSchedule& sched);
std::vector<std::pair<double, double>> density_trace(const IntervalSet& a, double x,
                                                     const RadiusSchedule& sched);

struct DensityCheckReport {
    IntervalSet exceptional;
    double exceptional_measure = 0.0;
    long interior_points = 0;
    long exterior_points = 0;
    long exceptional_points = 0;
    double bound = 0.0;  // 4 * grid_step * #endpoints
    bool within_bound = false;
};

/// Grid classification of densities: 1 on the interior, 0 on the exterior,
/// anything else is exceptional and must stay confined to grid_step
/// neighborhoods of the boundary.
DensityCheckReport density_check(const IntervalSet& a, double grid_step,
                                 const RadiusSchedule& sched);

}  // namespace lebesgue
