#pragma once

#include <cstdint>
#include <vector>

#include "lebesgue/interval_set.hpp"
#include "lebesgue/step_function.hpp"

namespace lebesgue {

/// Closed interval [lo, hi]; degenerate single points (lo == hi) allowed.
struct ClosedInterval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool operator==(const ClosedInterval&) const = default;
};

/// Finite union of closed intervals, sorted and pairwise disjoint
/// (touching parts are merged: closed intervals sharing an endpoint are
/// not disjoint as point sets).
class ClosedSet {
  public:
    ClosedSet() = default;

    static ClosedSet normalize(std::vector<ClosedInterval> raw);
    static ClosedSet from_canonical(std::vector<ClosedInterval> parts);

    std::span<const ClosedInterval> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    bool contains(double x) const;

    /// Measure-equivalent half-open shadow [lo, hi) per part (degenerate
    /// points drop out); used for measure arithmetic against IntervalSets.
    IntervalSet half_open_shadow() const;

    bool operator==(const ClosedSet&) const = default;

  private:
    std::vector<ClosedInterval> parts_;
};

/// Exact distance from x to the closed set A; 0 iff x lies in A.
/// Throws when A is empty.
double dist_to_set(double x, const ClosedSet& a);

/// inf{|a-b| : a in A, b in B}, computed exactly from the interval
/// endpoints; positive iff the sets are disjoint. Throws on empty input.
double set_distance(const ClosedSet& a, const ClosedSet& b);

/// Separating function f(x) = min(dist_to_set(x, A), eps)/eps with
/// eps = set_distance(A, B): piecewise linear, exactly 0 on A and 1 on B,
/// range within [0, 1], Lipschitz constant 1/eps (up to one ulp in the
/// realized slopes). Throws when A and B touch or overlap (eps = 0).
PiecewiseLinear urysohn_function(const ClosedSet& a, const ClosedSet& b);

/// Continuous bounded extension of f from the closed set A to the line:
/// g = f on A, |g| <= M everywhere, linear interpolation across the gaps
/// and constant beyond the extremes. Throws if |f| exceeds M on A.
PiecewiseLinear tietze_extend(const ClosedSet& a, const PiecewiseLinear& f, double m);

/// Compact K inside closure(A) with measure(A \ K) < eps and no jump of f
/// inside K: every jump point of f lying in closure(A) is excluded with an
/// open margin of half-width eps/(4 * #excluded-points).
ClosedSet lusin_compact(const StepFunction& f, const IntervalSet& a, double eps);

struct RampApproxResult {
    PiecewiseLinear g;
    double l1_error = 0.0;        // exact integral of |f - g| over E
    double analytic_error = 0.0;  // sum over jumps of |jump| * width / 2
    double ramp_width = 0.0;      // realized width (1/n clamped to the min gap)
};

/// Continuous L1 approximation of a step function: each jump at b is
/// replaced by a linear ramp on [b, b + w], w = min(1/n, smallest
/// breakpoint gap), giving an exact per-jump error |jump| * w / 2.
RampApproxResult continuous_approx_L1(const StepFunction& f, const IntervalSet& e, int n);

/// Specification of a function sequence f_j -> g for the Egorov
/// construction.
struct FunctionSequenceSpec {
    enum class Kind : std::uint8_t { power, shifted_ramp, step_list };

    Kind kind = Kind::power;
    IntervalSet domain;  // A, finite measure by construction

    // power: f_j(x) = x^j on A within [0, 1], limit g = 0 a.e.
    // shifted_ramp: f_j = ramp smoothing of `limit` with width 1/j.
    // step_list: explicit f_j from `sequence`, limit `limit`.
    StepFunction limit;
    std::vector<StepFunction> sequence;
    bool tail_monotone = true;

    void validate() const;
};

struct EgorovLevel {
    int k = 0;              // precision level, target sup <= 1/k
    long n_of_k = 0;        // index from which the level holds off B
    double budget = 0.0;    // eps / 2^k
    double level_measure = 0.0;
    bool attained = false;  // budget reached within j_max
};

struct EgorovResult {
    IntervalSet exceptional;  // B
    double exceptional_measure = 0.0;
    std::vector<EgorovLevel> levels;
    bool all_attained = false;
    bool tail_truncated = false;  // sup verified only up to j_max
};

/// Exceptional-set construction: per level k the set where the tail sup
/// of |f_j - g| exceeds 1/k is pushed below the budget eps/2^k by choosing
/// n_of_k; B is the union over levels, so measure(B) < eps. Levels run to
/// max(1, ceil(log2(1/eps))). Unattainable budgets within j_max are
/// reported, never silently truncated.
EgorovResult egorov_exceptional(const FunctionSequenceSpec& spec, double eps, long j_max);

}  // namespace lebesgue
