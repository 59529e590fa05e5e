#include "lebesgue/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lebesgue {

StepFunction StepFunction::make(std::vector<double> breakpoints, std::vector<double> values) {
    if (breakpoints.empty() && values.empty()) return {};
    if (breakpoints.size() != values.size() + 1)
        throw std::invalid_argument("StepFunction: need one more breakpoint than values");
    for (double b : breakpoints)
        if (!std::isfinite(b)) throw std::invalid_argument("StepFunction: non-finite breakpoint");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("StepFunction: non-finite value");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i - 1] < breakpoints[i]))
            throw std::invalid_argument("StepFunction: breakpoints must be strictly increasing");
    StepFunction f;
    f.breakpoints = std::move(breakpoints);
    f.values = std::move(values);
    return f;
}

StepFunction StepFunction::indicator(double lo, double hi, double v) {
    return make({lo, hi}, {v});
}

double StepFunction::operator()(double x) const {
    if (values.empty()) return 0.0;
    if (x < breakpoints.front() || x >= breakpoints.back()) return 0.0;
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    return values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

double StepFunction::left_value(double x) const {
    if (values.empty()) return 0.0;
    if (x <= breakpoints.front() || x > breakpoints.back()) return 0.0;
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
    if (it != breakpoints.end() && *it == x) {
        return idx == 0 ? 0.0 : values[idx - 1];
    }
    return values[idx - 1];
}

Interval StepFunction::support_window() const {
    if (values.empty()) return {0.0, 0.0};
    return {breakpoints.front(), breakpoints.back()};
}

IntervalSet StepFunction::support_window_set() const {
    if (values.empty()) return {};
    return IntervalSet::from_canonical({support_window()});
}

double Jump::height() const { return std::abs(right - left); }

std::vector<Jump> jumps(const StepFunction& f) {
    std::vector<Jump> out;
    if (f.values.empty()) return out;
    double prev = 0.0;
    for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
        double next = i < f.values.size() ? f.values[i] : 0.0;
        if (prev != next) out.push_back({f.breakpoints[i], prev, next});
        prev = next;
    }
    return out;
}

namespace {

std::vector<double> merged_breakpoints(const StepFunction& f, const StepFunction& g) {
    std::vector<double> pts(f.breakpoints);
    pts.insert(pts.end(), g.breakpoints.begin(), g.breakpoints.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
    if (f.is_zero_function()) return g;
    if (g.is_zero_function()) return f;
    std::vector<double> pts = merged_breakpoints(f, g);
    std::vector<double> vals;
    vals.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) vals.push_back(f(pts[i]) + g(pts[i]));
    return StepFunction::make(std::move(pts), std::move(vals));
}

StepFunction operator-(const StepFunction& f) { return scale(-1.0, f); }

StepFunction scale(double a, const StepFunction& f) {
    StepFunction out = f;
    for (double& v : out.values) v = a * v;
    return out;
}

StepFunction abs(const StepFunction& f) {
    StepFunction out = f;
    for (double& v : out.values) v = std::abs(v);
    return out;
}

PiecewiseLinear PiecewiseLinear::make(std::vector<double> knots, std::vector<double> values) {
    if (knots.empty() || knots.size() != values.size())
        throw std::invalid_argument("PiecewiseLinear: need matching non-empty knots and values");
    for (double k : knots)
        if (!std::isfinite(k)) throw std::invalid_argument("PiecewiseLinear: non-finite knot");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("PiecewiseLinear: non-finite value");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i - 1] < knots[i]))
            throw std::invalid_argument("PiecewiseLinear: knots must be strictly increasing");
    PiecewiseLinear g;
    g.knots = std::move(knots);
    g.values = std::move(values);
    return g;
}

double PiecewiseLinear::operator()(double x) const {
    if (x <= knots.front()) return values.front();
    if (x >= knots.back()) return values.back();
    auto it = std::upper_bound(knots.begin(), knots.end(), x);
    std::size_t i = static_cast<std::size_t>(it - knots.begin());
    double x0 = knots[i - 1], x1 = knots[i];
    double y0 = values[i - 1], y1 = values[i];
    if (x == x0) return y0;
    if (y0 == y1) return y0;  // exact on flat segments
    return y0 + (x - x0) * (y1 - y0) / (x1 - x0);
}

}  // namespace lebesgue
