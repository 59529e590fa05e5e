#pragma once

#include <vector>

#include "lebesgue/interval_set.hpp"
#include "lebesgue/step_function.hpp"

namespace lebesgue {

/// One affine cell on [lo, hi), stored by its exact endpoint values so that
/// trapezoid integration and closure extrema never re-derive them through a
/// rounded slope.
struct AffineCell {
    double lo = 0.0;
    double hi = 0.0;
    double v_lo = 0.0;  // value at lo
    double v_hi = 0.0;  // value approached at hi

    double at(double x) const {
        if (v_lo == v_hi || x == lo) return v_lo;
        if (x == hi) return v_hi;
        return v_lo + (x - lo) * (v_hi - v_lo) / (hi - lo);
    }
    double length() const { return hi - lo; }
};

/// Piecewise-affine function with jumps, defined on a finite union of
/// sorted disjoint cells. This is the merged-grid value object used for
/// exact mixed step/pwl arithmetic: integration of |f - g|, suprema over
/// closures, and superlevel sets, all solved cell by cell.
class PiecewiseAffine {
  public:
    static PiecewiseAffine from_step(const StepFunction& f, const IntervalSet& domain);
    static PiecewiseAffine from_pwl(const PiecewiseLinear& g, const IntervalSet& domain);
    /// f - g on the merged breakpoint/knot grid over `domain`.
    static PiecewiseAffine step_minus_pwl(const StepFunction& f, const PiecewiseLinear& g,
                                          const IntervalSet& domain);
    static PiecewiseAffine step_minus_step(const StepFunction& f, const StepFunction& g,
                                           const IntervalSet& domain);

    PiecewiseAffine negated() const;
    PiecewiseAffine minus_const(double c) const;

    double integrate() const;
    double integrate_abs() const;

    /// Extrema over the closure of each cell (exact: attained or approached
    /// at cell endpoints). Zero for an empty domain.
    double sup() const;
    double inf() const;
    double sup_abs() const;

    /// {x in domain | value > c} (strict) or >= c. On sloped cells the
    /// crossing point is solved linearly; the result is canonical and
    /// correct up to null sets at crossing endpoints.
    IntervalSet superlevel(double c, bool strict) const;

    const std::vector<AffineCell>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }

  private:
    std::vector<AffineCell> cells_;
};

}  // namespace lebesgue
