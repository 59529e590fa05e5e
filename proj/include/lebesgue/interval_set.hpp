#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace lebesgue {

/// Half-open interval [lo, hi). Instances stored inside an IntervalSet
/// always satisfy lo < hi; empty intervals are never stored.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x < hi; }
    bool operator==(const Interval&) const = default;
};

/// Open ball (center - radius, center + radius); radius must be positive.
struct Ball {
    double center = 0.0;
    double radius = 1.0;
};

/// Canonical finite union of disjoint, non-adjacent half-open intervals,
/// sorted by left endpoint. All set algebra is performed exactly on the
/// stored endpoints: operations only compare and copy endpoints, they never
/// introduce rounding. Single points are null sets, so closed and open
/// variants of the same endpoints are measure-equivalent.
class IntervalSet {
  public:
    IntervalSet() = default;

    /// Canonicalize arbitrary endpoint pairs: pairs with lo >= hi are
    /// dropped, overlapping and touching intervals are merged.
    /// Throws std::invalid_argument on non-finite endpoints.
    static IntervalSet normalize(std::span<const std::pair<double, double>> raw);
    static IntervalSet normalize(std::initializer_list<std::pair<double, double>> raw);

    /// Assumes `parts` is already sorted, disjoint and non-adjacent.
    static IntervalSet from_canonical(std::vector<Interval> parts);

    std::span<const Interval> parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    double measure() const;
    bool contains(double x) const;
    /// Smallest interval containing the set; {0,0} for the empty set.
    Interval hull() const;

    bool operator==(const IntervalSet&) const = default;

  private:
    std::vector<Interval> parts_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_diff(const IntervalSet& a, const IntervalSet& b);
IntervalSet complement_within(const IntervalSet& s, Interval window);
bool is_subset(const IntervalSet& a, const IntervalSet& b);

/// The ball as a one-part interval set {(center-r, center+r)}.
IntervalSet ball_to_set(Ball b);
/// Scale the radius of a ball by k > 0, keeping the center.
Ball sball(double k, Ball b);

/// Open cover U of D with measure(U \ D) < eps: every endpoint is padded
/// outward by eps/(4n) where n = number of parts, so the total slack is
/// eps/2. Throws on eps <= 0.
IntervalSet outer_regularize(const IntervalSet& d, double eps);

/// Compact subset V of D with measure(D \ V) < eps: every endpoint is
/// shrunk inward by eps/(4n); parts shorter than twice the shrink width
/// vanish. The parts of the result denote closed intervals [lo, hi]
/// (stored half-open; the endpoint difference is null). Throws on eps <= 0.
IntervalSet inner_regularize(const IntervalSet& d, double eps);

/// K_n compact inside D with measure(D) - measure(K_n) <= 1/n, so that
/// sup_n measure(K_n) = measure(D). Requires n >= 1.
IntervalSet compact_exhaustion(const IntervalSet& d, int n);

}  // namespace lebesgue
