#include "lebesgue/integration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lebesgue {

double integrate(const StepFunction& f, const IntervalSet& s) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < f.breakpoints.size(); ++i) {
        if (f.values[i] == 0.0) continue;
        Interval piece{f.breakpoints[i], f.breakpoints[i + 1]};
        for (const Interval& part : s.parts()) {
            double lo = std::max(piece.lo, part.lo);
            double hi = std::min(piece.hi, part.hi);
            if (lo < hi) total += f.values[i] * (hi - lo);
        }
    }
    return total;
}

double integrate(const PiecewiseLinear& g, const IntervalSet& s) {
    return PiecewiseAffine::from_pwl(g, s).integrate();
}

double l1_norm(const StepFunction& f, const IntervalSet& s) { return integrate(abs(f), s); }

double l1_distance(const StepFunction& f, const PiecewiseLinear& g, const IntervalSet& s) {
    return PiecewiseAffine::step_minus_pwl(f, g, s).integrate_abs();
}

IntervalSet superlevel_set(const StepFunction& f, double c, LevelMode mode) {
    std::vector<std::pair<double, double>> raw;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        bool in = mode == LevelMode::greater ? f.values[i] > c : f.values[i] >= c;
        if (in) raw.emplace_back(f.breakpoints[i], f.breakpoints[i + 1]);
    }
    return IntervalSet::normalize(raw);
}

IntervalSet superlevel_set(const PiecewiseLinear& g, double c, LevelMode mode) {
    if (g.knots.size() < 2) {
        return {};  // knot window [x_0, x_0) is empty
    }
    IntervalSet window = IntervalSet::normalize({{g.knots.front(), g.knots.back()}});
    return PiecewiseAffine::from_pwl(g, window).superlevel(c, mode == LevelMode::greater);
}

MarkovReport markov_check(const StepFunction& f, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("markov_check: a must be > 0");
    MarkovReport r;
    r.a = a;
    r.lhs = superlevel_set(abs(f), a, LevelMode::greater_equal).measure();
    r.rhs = (1.0 / a) * l1_norm(f, f.support_window_set());
    r.holds = r.lhs <= r.rhs;
    return r;
}

StepFunction restrict_to_ball(const StepFunction& f, int k) {
    if (k < 0) throw std::invalid_argument("restrict_to_ball: k must be >= 0");
    if (f.is_zero_function()) return f;
    double radius = 2.0 * (static_cast<double>(k) + 1.0);
    double lo = -radius, hi = radius;
    std::vector<double> bps, vals;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double plo = std::max(f.breakpoints[i], lo);
        double phi = std::min(f.breakpoints[i + 1], hi);
        if (plo >= phi) continue;
        if (bps.empty()) bps.push_back(plo);
        bps.push_back(phi);
        vals.push_back(f.values[i]);
    }
    // Trim zero-valued edge pieces left over from clipping.
    while (!vals.empty() && vals.front() == 0.0) {
        vals.erase(vals.begin());
        bps.erase(bps.begin());
    }
    while (!vals.empty() && vals.back() == 0.0) {
        vals.pop_back();
        bps.pop_back();
    }
    if (vals.empty()) return StepFunction::zero();
    return StepFunction::make(std::move(bps), std::move(vals));
}

}  // namespace lebesgue
