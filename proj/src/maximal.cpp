#include "lebesgue/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lebesgue/integration.hpp"
#include "lebesgue/piecewise_affine.hpp"

namespace lebesgue {

void BallCollection::validate() const {
    for (const Ball& b : balls) {
        if (!std::isfinite(b.center) || !std::isfinite(b.radius) || !(b.radius > 0.0))
            throw std::invalid_argument("BallCollection: balls need finite center and radius > 0");
    }
}

namespace {

bool open_intersects(Ball a, Ball b) {
    return std::max(a.center - a.radius, b.center - b.radius) <
           std::min(a.center + a.radius, b.center + b.radius);
}

bool contained_in_scaled(Ball inner, Ball outer, double k) {
    return outer.center - k * outer.radius <= inner.center - inner.radius &&
           inner.center + inner.radius <= outer.center + k * outer.radius;
}

}  // namespace

std::vector<std::size_t> vitali_finite(const BallCollection& coll) {
    coll.validate();
    std::vector<std::size_t> order(coll.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (coll.balls[a].radius != coll.balls[b].radius)
            return coll.balls[a].radius > coll.balls[b].radius;
        return a < b;
    });
    std::vector<std::size_t> selected;
    for (std::size_t i : order) {
        bool blocked = false;
        for (std::size_t j : selected)
            if (open_intersects(coll.balls[i], coll.balls[j])) {
                blocked = true;
                break;
            }
        if (!blocked) selected.push_back(i);
    }
    std::sort(selected.begin(), selected.end());
    return selected;
}

VitaliVerification verify_vitali(const BallCollection& coll,
                                 std::span<const std::size_t> selected) {
    coll.validate();
    VitaliVerification v;
    v.disjoint = true;
    for (std::size_t a = 0; a < selected.size(); ++a)
        for (std::size_t b = a + 1; b < selected.size(); ++b)
            if (open_intersects(coll.balls[selected[a]], coll.balls[selected[b]]))
                v.disjoint = false;

    v.covered = true;
    for (std::size_t i = 0; i < coll.size(); ++i) {
        VitaliWitness w;
        w.index = i;
        for (std::size_t j : selected) {
            if (j >= coll.size()) continue;
            if (open_intersects(coll.balls[i], coll.balls[j]) &&
                coll.balls[j].radius >= coll.balls[i].radius &&
                contained_in_scaled(coll.balls[i], coll.balls[j], 3.0)) {
                w.covered_by = j;
                w.ok = true;
                break;
            }
        }
        if (!w.ok) v.covered = false;
        v.witnesses.push_back(w);
    }
    return v;
}

double hl_max(const StepFunction& f, double x, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("hl_max: r must be > 0");
    return l1_norm(f, ball_to_set({x, r})) / (2.0 * r);
}

double hl_maximal(const StepFunction& f, double x) {
    if (f.is_zero_function()) return 0.0;
    // r -> 0+ limit: |f(x)| off breakpoints, the one-sided mean at a breakpoint.
    double limit0;
    bool at_bp = std::binary_search(f.breakpoints.begin(), f.breakpoints.end(), x);
    if (at_bp)
        limit0 = 0.5 * (std::abs(f.left_value(x)) + std::abs(f(x)));
    else
        limit0 = std::abs(f(x));

    double best = limit0;
    for (double b : f.breakpoints) {
        double r = std::abs(x - b);
        if (r > 0.0) best = std::max(best, hl_max(f, x, r));
    }
    return best;
}

double hl_maximal(const PiecewiseLinear& g, double x, const RadiusSchedule& sched) {
    std::vector<double> radii = sched.radii();
    for (double k : g.knots) {
        double r = std::abs(x - k);
        if (r > 0.0) radii.push_back(r);
    }
    double best = 0.0;
    for (double r : radii) {
        IntervalSet ball = ball_to_set({x, r});
        best = std::max(best, PiecewiseAffine::from_pwl(g, ball).integrate_abs() / (2.0 * r));
    }
    return best;
}

namespace {

// Appends {x in segment | (A*x > B)} (or the whole segment when A == 0 and
// 0 > B) to `raw`. Segment ends may be infinite only where the solution is
// known to be bounded.
void emit_solution(std::vector<std::pair<double, double>>& raw, double seg_lo, double seg_hi,
                   double a, double b) {
    if (a == 0.0) {
        if (0.0 > b) raw.emplace_back(seg_lo, seg_hi);
        return;
    }
    double xc = b / a;
    if (a > 0.0) {
        double lo = std::max(seg_lo, xc);
        if (lo < seg_hi) raw.emplace_back(lo, seg_hi);
    } else {
        double hi = std::min(seg_hi, xc);
        if (seg_lo < hi) raw.emplace_back(seg_lo, hi);
    }
}

}  // namespace

IntervalSet maximal_superlevel(const StepFunction& f, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("maximal_superlevel: c must be > 0");
    if (f.is_zero_function()) return {};
    std::vector<std::pair<double, double>> raw;

    // r -> 0 contribution: {|f| > c} (breakpoints themselves are null).
    IntervalSet pointwise = superlevel_set(abs(f), c, LevelMode::greater);
    for (const Interval& iv : pointwise.parts()) raw.emplace_back(iv.lo, iv.hi);

    const std::vector<double>& bp = f.breakpoints;
    for (std::size_t j = 0; j < bp.size(); ++j) {
        double b = bp[j];

        // Right side: ball (b, 2x-b), x > b. Edges at breakpoints >= b,
        // then an unbounded zero-value segment.
        {
            std::vector<double> edges(bp.begin() + static_cast<std::ptrdiff_t>(j), bp.end());
            double cum = 0.0;
            for (std::size_t l = 0; l < edges.size(); ++l) {
                double s = std::abs(f(edges[l]));
                double seg_lo = 0.5 * (edges[l] + b);
                bool last = l + 1 == edges.size();
                double seg_hi =
                    last ? std::numeric_limits<double>::infinity() : 0.5 * (edges[l + 1] + b);
                // N(x) = cum + s*(2x - b - edges[l]); D(x) = 2(x - b).
                double a_coef = 2.0 * (s - c);
                double b_coef = s * (b + edges[l]) - cum - 2.0 * c * b;
                emit_solution(raw, seg_lo, seg_hi, a_coef, b_coef);
                if (!last) cum += s * (edges[l + 1] - edges[l]);
            }
        }

        // Left side: ball (2x-b, b), x < b; mirrored walk down the breakpoints.
        {
            std::vector<double> edges;  // b = edges[0] > edges[1] > ...
            for (std::size_t l = j + 1; l-- > 0;) edges.push_back(bp[l]);
            double cum = 0.0;
            for (std::size_t l = 0; l < edges.size(); ++l) {
                double s = l + 1 < edges.size() ? std::abs(f(edges[l + 1])) : 0.0;
                double seg_hi = 0.5 * (edges[l] + b);
                bool last = l + 1 == edges.size();
                double seg_lo =
                    last ? -std::numeric_limits<double>::infinity() : 0.5 * (edges[l + 1] + b);
                // N(x) = cum + s*(edges[l] - (2x - b)); D(x) = 2(b - x) > 0.
                double a_coef = 2.0 * (c - s);
                double b_coef = 2.0 * c * b - cum - s * (edges[l] + b);
                emit_solution(raw, seg_lo, seg_hi, a_coef, b_coef);
                if (!last) cum += s * (edges[l] - edges[l + 1]);
            }
        }
    }
    return IntervalSet::normalize(raw);
}

MaximalReport maximal_inequality_check(const StepFunction& f, double c, double grid_step) {
    if (!(c > 0.0)) throw std::invalid_argument("maximal_inequality_check: c must be > 0");
    if (!(grid_step > 0.0))
        throw std::invalid_argument("maximal_inequality_check: grid_step must be > 0");
    MaximalReport r;
    r.c = c;
    double norm = l1_norm(f, f.support_window_set());
    r.bound = 3.0 / c * norm;

    IntervalSet level = maximal_superlevel(f, c);
    r.superlevel_measure = level.measure();
    r.holds = r.superlevel_measure <= r.bound;

    if (!f.is_zero_function()) {
        // Analytic tail: beyond dist = ||f||_1 / (2c) from the support hull,
        // hl_maximal <= ||f||_1 / (2 dist) <= c.
        Interval win = f.support_window();
        double tail = norm / (2.0 * c);
        std::vector<std::pair<double, double>> cells;
        for (double x = win.lo - tail; x <= win.hi + tail; x += grid_step) {
            if (hl_maximal(f, x) > c) {
                ++r.grid_points_above;
                cells.emplace_back(x - 0.5 * grid_step, x + 0.5 * grid_step);
            }
        }
        r.grid_under_measure = set_intersect(IntervalSet::normalize(cells), level).measure();
    }
    return r;
}

}  // namespace lebesgue
