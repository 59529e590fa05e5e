#include "lebesgue/ftc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lebesgue/integration.hpp"

namespace lebesgue {

DerivativeProbe DerivativeProbe::geometric(double h0, double factor, int count, bool two_sided) {
    if (!(h0 > 0.0) || !(factor > 0.0 && factor < 1.0) || count < 1)
        throw std::invalid_argument("DerivativeProbe: need h0 > 0, factor in (0,1), count >= 1");
    DerivativeProbe p;
    p.two_sided = two_sided;
    double h = h0;
    for (int i = 0; i < count; ++i) {
        p.h_values.push_back(h);
        h *= factor;
    }
    return p;
}

void DerivativeProbe::validate() const {
    if (h_values.empty()) throw std::invalid_argument("DerivativeProbe: empty schedule");
    for (std::size_t i = 0; i < h_values.size(); ++i) {
        if (!(h_values[i] > 0.0)) throw std::invalid_argument("DerivativeProbe: h must be > 0");
        if (i > 0 && !(h_values[i] < h_values[i - 1]))
            throw std::invalid_argument("DerivativeProbe: h values must be strictly decreasing");
    }
}

double primitive(const StepFunction& f, double a, double x) {
    if (!(x > a)) return 0.0;
    if (f.is_zero_function()) return 0.0;
    // Endpoint inclusion is a null set: integrate over [max(a, b_0), x).
    double lo = std::isinf(a) ? f.breakpoints.front() : a;
    if (lo >= x) return 0.0;
    return integrate(f, IntervalSet::normalize({{lo, x}}));
}

Ftc1Report ftc1_check(const StepFunction& f, double a, double x, const DerivativeProbe& probe,
                      const RadiusSchedule& sched, double tol) {
    probe.validate();
    if (!(x > a)) throw std::invalid_argument("ftc1_check: need a < x");

    Ftc1Report r;
    r.f_at_x = f(x);
    for (double h : probe.h_values) {
        double q;
        if (probe.two_sided)
            q = (primitive(f, a, x + h) - primitive(f, a, x - h)) / (2.0 * h);
        else
            q = (primitive(f, a, x + h) - primitive(f, a, x)) / h;
        r.trace.emplace_back(h, q);
    }
    r.derivative_estimate = r.trace.back().second;
    r.lebesgue_pt_status = is_lebesgue_pt(f, x, sched).status;
    if (r.lebesgue_pt_status == Tristate::yes) {
        r.skipped = false;
        r.pass = std::abs(r.derivative_estimate - r.f_at_x) <= tol;
    } else {
        r.skipped = true;
        r.pass = true;  // hypothesis not established: skipped, never failed
    }
    return r;
}

double density(const IntervalSet& a, double x, const RadiusSchedule& sched) {
    double d = 0.0;
    for (double r : sched.radii()) {
        IntervalSet ball = ball_to_set({x, r});
        d = set_intersect(a, ball).measure() / ball.measure();
    }
    return d;
}

std::vector<std::pair<double, double>> density_trace(const IntervalSet& a, double x,
                                                     const RadiusSchedule& sched) {
    std::vector<std::pair<double, double>> out;
    for (double r : sched.radii()) {
        IntervalSet ball = ball_to_set({x, r});
        out.emplace_back(r, set_intersect(a, ball).measure() / ball.measure());
    }
    return out;
}

DensityCheckReport density_check(const IntervalSet& a, double grid_step,
                                 const RadiusSchedule& sched) {
    if (!(grid_step > 0.0)) throw std::invalid_argument("density_check: grid_step must be > 0");
    DensityCheckReport rep;
    long endpoints = static_cast<long>(2 * a.size());
    rep.bound = 4.0 * grid_step * static_cast<double>(endpoints);
    if (a.empty()) {
        rep.within_bound = true;
        return rep;
    }

    Interval hull = a.hull();
    double pad = 4.0 * grid_step;
    std::vector<std::pair<double, double>> cells;
    for (double x = hull.lo - pad; x < hull.hi + pad; x += grid_step) {
        double d = density(a, x, sched);
        if (d == 1.0) {
            ++rep.interior_points;
        } else if (d == 0.0) {
            ++rep.exterior_points;
        } else {
            ++rep.exceptional_points;
            cells.emplace_back(x - grid_step, x + grid_step);
        }
    }
    rep.exceptional = IntervalSet::normalize(cells);
    rep.exceptional_measure = rep.exceptional.measure();
    rep.within_bound = rep.exceptional_measure <= rep.bound;
    return rep;
}

}  // namespace lebesgue
