#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "lebesgue/interval_set.hpp"
#include "lebesgue/maximal.hpp"
#include "lebesgue/separation.hpp"
#include "lebesgue/step_function.hpp"

namespace lebesgue {

/// Seeded generator for random test instances. Every endpoint, value and
/// radius is drawn on the 2^-6 dyadic grid inside [-10, 10], so products
/// and sums arising in the measure/integral checks are exact in binary64.
/// The behavior-level contract is the aggregate report, not the RNG stream.
class InstanceGen {
  public:
    explicit InstanceGen(std::uint64_t seed) : eng_(seed) {}

    /// Uniform multiple of 2^-6 in [lo, hi] (bounds given in grid units).
    double dyadic(double lo, double hi);
    int uniform_int(int lo, int hi);

    /// Up to max_pieces pieces, breakpoints and values on the dyadic grid
    /// in [-10, 10]; adjacent equal values (non-jumps) may occur.
    StepFunction step_function(int max_pieces = 10);

    /// Up to max_parts parts in [-10, 10], canonical.
    IntervalSet interval_set(int max_parts = 8);

    /// 1..max_balls balls, centers in [-10, 10], radii in [1/64, 5].
    BallCollection ball_collection(int max_balls = 12);

    /// Disjoint nonempty closed sets with positive separation; occasional
    /// degenerate single-point parts.
    std::pair<ClosedSet, ClosedSet> disjoint_closed_pair(int max_parts_each = 3);

  private:
    std::mt19937_64 eng_;
};

}  // namespace lebesgue
