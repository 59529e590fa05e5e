#include "lebesgue/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lebesgue/piecewise_affine.hpp"

namespace lebesgue {

void RadiusSchedule::validate() const {
    if (!(r0 > 0.0)) throw std::invalid_argument("RadiusSchedule: r0 must be > 0");
    if (!(factor > 0.0 && factor < 1.0))
        throw std::invalid_argument("RadiusSchedule: factor must be in (0,1)");
    if (steps < 4) throw std::invalid_argument("RadiusSchedule: steps must be >= 4");
    if (!(tol > 0.0)) throw std::invalid_argument("RadiusSchedule: tol must be > 0");
}

std::vector<double> RadiusSchedule::radii() const {
    validate();
    std::vector<double> rs;
    rs.reserve(static_cast<std::size_t>(steps));
    double r = r0;
    for (int i = 0; i < steps; ++i) {
        rs.push_back(r);
        r *= factor;
    }
    return rs;
}

double RadiusSchedule::stabilization_radius() const {
    std::vector<double> rs = radii();
    return rs[rs.size() - static_cast<std::size_t>(tail_length())];
}

double iavg(const StepFunction& f, const IntervalSet& a) {
    double m = a.measure();
    if (!(m > 0.0)) return 0.0;
    return l1_norm(f, a) / m;
}

double davg(const StepFunction& f, double x, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("davg: r must be > 0");
    IntervalSet ball = ball_to_set({x, r});
    PiecewiseAffine centered = PiecewiseAffine::from_step(f, ball).minus_const(f(x));
    return centered.integrate_abs() / ball.measure();
}

LebesguePointResult is_lebesgue_pt(const StepFunction& f, double x,
                                   const RadiusSchedule& sched) {
    LebesguePointResult out;
    std::vector<double> rs = sched.radii();
    out.trace.reserve(rs.size());
    for (double r : rs) out.trace.emplace_back(r, davg(f, x, r));

    std::size_t tail_start = rs.size() - static_cast<std::size_t>(sched.tail_length());
    bool all_small = true, all_large = true, monotone = true;
    for (std::size_t i = tail_start; i < out.trace.size(); ++i) {
        double v = out.trace[i].second;
        if (!(v < sched.tol)) all_small = false;
        if (!(v >= sched.tol)) all_large = false;
        if (i > tail_start && v > out.trace[i - 1].second + 2.0 * sched.tol) monotone = false;
    }
    if (all_small && monotone)
        out.status = Tristate::yes;
    else if (all_large)
        out.status = Tristate::no;
    else
        out.status = Tristate::undecided;
    return out;
}

namespace {

// Sup/inf of a step function over the open ball (a-r, a+r) minus {a}.
// Pieces of a step function have positive length, so the deleted center
// never removes a value from the candidate set; the puncture is kept for
// fidelity to the definition.
double step_ball_extremum(const StepFunction& f, double a, double r, bool want_sup) {
    double lo = a - r, hi = a + r;
    bool any = false;
    double best = 0.0;
    auto consider = [&](double v) {
        if (!any) {
            best = v;
            any = true;
        } else {
            best = want_sup ? std::max(best, v) : std::min(best, v);
        }
    };
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double plo = std::max(f.breakpoints[i], lo);
        double phi = std::min(f.breakpoints[i + 1], hi);
        if (plo < phi) consider(f.values[i]);
    }
    Interval win = f.support_window();
    if (f.is_zero_function() || lo < win.lo || hi > win.hi) consider(0.0);
    return best;
}

double pwl_ball_extremum(const PiecewiseLinear& g, double a, double r, bool want_sup) {
    // g is continuous, so extrema over the punctured open ball equal
    // extrema over the closed ball, attained at knots or ball endpoints.
    double lo = a - r, hi = a + r;
    double best = g(lo);
    auto consider = [&](double v) { best = want_sup ? std::max(best, v) : std::min(best, v); };
    consider(g(hi));
    for (std::size_t i = 0; i < g.knots.size(); ++i)
        if (lo < g.knots[i] && g.knots[i] < hi) consider(g.values[i]);
    return best;
}

}  // namespace

double lime_sup(const StepFunction& f, double a, const RadiusSchedule& sched) {
    double v = 0.0;
    for (double r : sched.radii()) v = step_ball_extremum(f, a, r, true);
    return v;
}

double lime_inf(const StepFunction& f, double a, const RadiusSchedule& sched) {
    double v = 0.0;
    for (double r : sched.radii()) v = step_ball_extremum(f, a, r, false);
    return v;
}

double lime_sup(const PiecewiseLinear& f, double a, const RadiusSchedule& sched) {
    double v = 0.0;
    for (double r : sched.radii()) v = pwl_ball_extremum(f, a, r, true);
    return v;
}

double lime_inf(const PiecewiseLinear& f, double a, const RadiusSchedule& sched) {
    double v = 0.0;
    for (double r : sched.radii()) v = pwl_ball_extremum(f, a, r, false);
    return v;
}

ScanResult non_lebesgue_scan(const StepFunction& f, double grid_step,
                             const RadiusSchedule& sched) {
    if (!(grid_step > 0.0)) throw std::invalid_argument("non_lebesgue_scan: grid_step must be > 0");
    ScanResult out;
    if (f.is_zero_function()) return out;
    Interval win = f.support_window();
    std::vector<std::pair<double, double>> neighborhoods;
    for (double x = win.lo; x < win.hi; x += grid_step) {
        ++out.points_scanned;
        if (is_lebesgue_pt(f, x, sched).status != Tristate::yes) {
            ++out.points_flagged;
            neighborhoods.emplace_back(x - grid_step, x + grid_step);
        }
    }
    out.flagged = IntervalSet::normalize(neighborhoods);
    out.flagged_measure = out.flagged.measure();
    return out;
}

}  // namespace lebesgue
