#include "lebesgue/piecewise_affine.hpp"

#include <algorithm>
#include <cmath>

namespace lebesgue {

namespace {

// Cut points of the given grids strictly inside (lo, hi), plus the endpoints.
std::vector<double> grid_within(const Interval& iv, std::span<const double> pts_a,
                                std::span<const double> pts_b) {
    std::vector<double> cuts;
    cuts.push_back(iv.lo);
    for (auto pts : {pts_a, pts_b})
        for (double p : pts)
            if (iv.lo < p && p < iv.hi) cuts.push_back(p);
    cuts.push_back(iv.hi);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

}  // namespace

PiecewiseAffine PiecewiseAffine::from_step(const StepFunction& f, const IntervalSet& domain) {
    PiecewiseAffine out;
    for (const Interval& iv : domain.parts()) {
        std::vector<double> cuts = grid_within(iv, f.breakpoints, {});
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double v = f(cuts[i]);
            out.cells_.push_back({cuts[i], cuts[i + 1], v, v});
        }
    }
    return out;
}

PiecewiseAffine PiecewiseAffine::from_pwl(const PiecewiseLinear& g, const IntervalSet& domain) {
    return step_minus_pwl(StepFunction::zero(), g, domain).negated();
}

PiecewiseAffine PiecewiseAffine::step_minus_pwl(const StepFunction& f, const PiecewiseLinear& g,
                                                const IntervalSet& domain) {
    PiecewiseAffine out;
    for (const Interval& iv : domain.parts()) {
        std::vector<double> cuts = grid_within(iv, f.breakpoints, g.knots);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double lo = cuts[i], hi = cuts[i + 1];
            double fv = f(lo);  // constant across the cell
            out.cells_.push_back({lo, hi, fv - g(lo), fv - g(hi)});
        }
    }
    return out;
}

PiecewiseAffine PiecewiseAffine::step_minus_step(const StepFunction& f, const StepFunction& g,
                                                 const IntervalSet& domain) {
    PiecewiseAffine out;
    for (const Interval& iv : domain.parts()) {
        std::vector<double> cuts = grid_within(iv, f.breakpoints, g.breakpoints);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            double v = f(cuts[i]) - g(cuts[i]);
            out.cells_.push_back({cuts[i], cuts[i + 1], v, v});
        }
    }
    return out;
}

PiecewiseAffine PiecewiseAffine::negated() const {
    PiecewiseAffine out = *this;
    for (AffineCell& c : out.cells_) {
        c.v_lo = -c.v_lo;
        c.v_hi = -c.v_hi;
    }
    return out;
}

PiecewiseAffine PiecewiseAffine::minus_const(double c) const {
    PiecewiseAffine out = *this;
    for (AffineCell& cell : out.cells_) {
        cell.v_lo -= c;
        cell.v_hi -= c;
    }
    return out;
}

double PiecewiseAffine::integrate() const {
    double total = 0.0;
    for (const AffineCell& c : cells_) total += 0.5 * (c.v_lo + c.v_hi) * c.length();
    return total;
}

double PiecewiseAffine::integrate_abs() const {
    double total = 0.0;
    for (const AffineCell& c : cells_) {
        double a = c.v_lo, b = c.v_hi;
        double len = c.length();
        if (a == 0.0 && b == 0.0) continue;
        if ((a >= 0.0) == (b >= 0.0) || a == 0.0 || b == 0.0) {
            total += 0.5 * (std::abs(a) + std::abs(b)) * len;
        } else {
            // Sign change inside the cell: two triangles around the root.
            double wa = len * std::abs(a) / (std::abs(a) + std::abs(b));
            total += 0.5 * (std::abs(a) * wa + std::abs(b) * (len - wa));
        }
    }
    return total;
}

double PiecewiseAffine::sup() const {
    double best = 0.0;
    bool first = true;
    for (const AffineCell& c : cells_) {
        double m = std::max(c.v_lo, c.v_hi);
        best = first ? m : std::max(best, m);
        first = false;
    }
    return first ? 0.0 : best;
}

double PiecewiseAffine::inf() const {
    double best = 0.0;
    bool first = true;
    for (const AffineCell& c : cells_) {
        double m = std::min(c.v_lo, c.v_hi);
        best = first ? m : std::min(best, m);
        first = false;
    }
    return first ? 0.0 : best;
}

double PiecewiseAffine::sup_abs() const {
    double best = 0.0;
    for (const AffineCell& c : cells_)
        best = std::max({best, std::abs(c.v_lo), std::abs(c.v_hi)});
    return best;
}

IntervalSet PiecewiseAffine::superlevel(double c, bool strict) const {
    std::vector<std::pair<double, double>> raw;
    for (const AffineCell& cell : cells_) {
        if (cell.v_lo == cell.v_hi) {
            bool in = strict ? cell.v_lo > c : cell.v_lo >= c;
            if (in) raw.emplace_back(cell.lo, cell.hi);
            continue;
        }
        // The single crossing point is a null set, so strict and non-strict
        // produce the same interval.
        double xc = cell.lo + (c - cell.v_lo) * cell.length() / (cell.v_hi - cell.v_lo);
        if (cell.v_hi > cell.v_lo) {
            double lo = std::clamp(xc, cell.lo, cell.hi);
            if (cell.v_hi > c && lo < cell.hi) raw.emplace_back(lo, cell.hi);
        } else {
            double hi = std::clamp(xc, cell.lo, cell.hi);
            if (cell.v_lo > c && cell.lo < hi) raw.emplace_back(cell.lo, hi);
        }
    }
    return IntervalSet::normalize(raw);
}

}  // namespace lebesgue
