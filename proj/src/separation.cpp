#include "lebesgue/separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lebesgue/integration.hpp"
#include "lebesgue/piecewise_affine.hpp"

namespace lebesgue {

ClosedSet ClosedSet::normalize(std::vector<ClosedInterval> raw) {
    std::vector<ClosedInterval> kept;
    kept.reserve(raw.size());
    for (const ClosedInterval& iv : raw) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw std::invalid_argument("ClosedSet: non-finite endpoint");
        if (iv.lo <= iv.hi) kept.push_back(iv);
    }
    std::sort(kept.begin(), kept.end(),
              [](const ClosedInterval& a, const ClosedInterval& b) { return a.lo < b.lo; });
    std::vector<ClosedInterval> merged;
    for (const ClosedInterval& iv : kept) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    return from_canonical(std::move(merged));
}

ClosedSet ClosedSet::from_canonical(std::vector<ClosedInterval> parts) {
    ClosedSet s;
    s.parts_ = std::move(parts);
    return s;
}

bool ClosedSet::contains(double x) const {
    for (const ClosedInterval& iv : parts_)
        if (iv.contains(x)) return true;
    return false;
}

IntervalSet ClosedSet::half_open_shadow() const {
    std::vector<std::pair<double, double>> raw;
    for (const ClosedInterval& iv : parts_)
        if (iv.lo < iv.hi) raw.emplace_back(iv.lo, iv.hi);
    return IntervalSet::normalize(raw);
}

double dist_to_set(double x, const ClosedSet& a) {
    if (a.empty()) throw std::invalid_argument("dist_to_set: empty set");
    double best = -1.0;
    for (const ClosedInterval& iv : a.parts()) {
        double d;
        if (x < iv.lo)
            d = iv.lo - x;
        else if (x > iv.hi)
            d = x - iv.hi;
        else
            d = 0.0;
        if (best < 0.0 || d < best) best = d;
    }
    return best;
}

double set_distance(const ClosedSet& a, const ClosedSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("set_distance: empty set");
    double best = -1.0;
    for (const ClosedInterval& x : a.parts()) {
        for (const ClosedInterval& y : b.parts()) {
            double d;
            if (x.hi < y.lo)
                d = y.lo - x.hi;
            else if (y.hi < x.lo)
                d = x.lo - y.hi;
            else
                d = 0.0;
            if (best < 0.0 || d < best) best = d;
        }
    }
    return best;
}

namespace {

constexpr int kWalkCap = 64;
constexpr double kInf = std::numeric_limits<double>::infinity();

// A point q > hi with (q - hi) >= eps in double arithmetic, as close to the
// crossing as a bounded nextafter walk can certify. The extreme double of
// the predicate region can be unreachable (denormal-step regimes), so the
// walks are capped and any certified point is acceptable.
bool flank_right(double hi, double eps, double& out) {
    double q = hi + eps;
    for (int i = 0; i < kWalkCap && q - hi < eps; ++i) q = std::nextafter(q, kInf);
    if (q - hi < eps) return false;
    for (int i = 0; i < kWalkCap; ++i) {
        double prev = std::nextafter(q, -kInf);
        if (!(prev > hi) || prev - hi < eps) break;
        q = prev;
    }
    out = q;
    return true;
}

// A point q < lo with (lo - q) >= eps in double arithmetic.
bool flank_left(double lo, double eps, double& out) {
    double q = lo - eps;
    for (int i = 0; i < kWalkCap && lo - q < eps; ++i) q = std::nextafter(q, -kInf);
    if (lo - q < eps) return false;
    for (int i = 0; i < kWalkCap; ++i) {
        double next = std::nextafter(q, kInf);
        if (!(next < lo) || lo - next < eps) break;
        q = next;
    }
    out = q;
    return true;
}

void push_knot(std::vector<double>& xs, std::vector<double>& ys, double x, double y) {
    if (!xs.empty() && x == xs.back()) return;  // dedupe coincident positions
    xs.push_back(x);
    ys.push_back(y);
}

}  // namespace

PiecewiseLinear urysohn_function(const ClosedSet& a, const ClosedSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("urysohn_function: empty set");
    double eps = set_distance(a, b);
    if (!(eps > 0.0))
        throw std::invalid_argument("urysohn_function: sets touch or overlap (eps = 0)");

    // Every endpoint of B evaluates to distance >= eps from A in double
    // arithmetic (set_distance and dist_to_set share their endpoint
    // expressions), so B endpoints are valid value-1 plateau anchors; using
    // them guarantees f is exactly 1 on all of B.
    std::vector<double> b_pts;
    for (const ClosedInterval& p : b.parts()) {
        b_pts.push_back(p.lo);
        if (p.hi > p.lo) b_pts.push_back(p.hi);
    }
    auto anchors_within = [&](double lo, double hi, double& mn, double& mx) {
        bool any = false;
        for (double p : b_pts)
            if (lo < p && p < hi) {
                mn = any ? std::min(mn, p) : p;
                mx = any ? std::max(mx, p) : p;
                any = true;
            }
        return any;
    };

    std::vector<double> xs, ys;
    const auto parts = a.parts();

    // Plateau edge left of the first part, then the parts at value 0 with
    // value-1 plateaus (or a single peak knot) in each gap.
    {
        double q;
        bool have = flank_left(parts.front().lo, eps, q);
        double mn, mx;
        if (anchors_within(-kInf, parts.front().lo, mn, mx)) q = have ? std::max(q, mx) : mx;
        else if (!have) q = parts.front().lo - eps;  // unreachable; keep a knot anyway
        push_knot(xs, ys, q, 1.0);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        push_knot(xs, ys, parts[i].lo, 0.0);
        if (parts[i].hi > parts[i].lo) push_knot(xs, ys, parts[i].hi, 0.0);

        if (i + 1 < parts.size()) {
            double gap_lo = parts[i].hi, gap_hi = parts[i + 1].lo;
            double q1 = 0.0, q2 = 0.0;
            bool have1 = flank_right(gap_lo, eps, q1);
            bool have2 = flank_left(gap_hi, eps, q2);
            double mn, mx;
            if (anchors_within(gap_lo, gap_hi, mn, mx)) {
                q1 = have1 ? std::min(q1, mn) : mn;
                q2 = have2 ? std::max(q2, mx) : mx;
                have1 = have2 = true;
            }
            if (have1 && have2 && q1 <= q2) {
                push_knot(xs, ys, q1, 1.0);
                if (q2 > q1) push_knot(xs, ys, q2, 1.0);
            } else {
                double m = 0.5 * (gap_lo + gap_hi);
                if (gap_lo < m && m < gap_hi)
                    push_knot(xs, ys, m, std::min(dist_to_set(m, a), eps) / eps);
            }
        }
    }
    {
        double q;
        bool have = flank_right(parts.back().hi, eps, q);
        double mn, mx;
        if (anchors_within(parts.back().hi, kInf, mn, mx)) q = have ? std::min(q, mn) : mn;
        else if (!have) q = parts.back().hi + eps;
        push_knot(xs, ys, q, 1.0);
    }
    return PiecewiseLinear::make(std::move(xs), std::move(ys));
}

PiecewiseLinear tietze_extend(const ClosedSet& a, const PiecewiseLinear& f, double m) {
    if (a.empty()) throw std::invalid_argument("tietze_extend: empty set");
    if (!(m > 0.0)) throw std::invalid_argument("tietze_extend: bound must be > 0");

    std::vector<double> xs, ys;
    auto add = [&](double x) {
        double y = f(x);
        if (std::abs(y) > m) throw std::invalid_argument("tietze_extend: |f| exceeds the bound on A");
        push_knot(xs, ys, x, y);
    };
    for (const ClosedInterval& part : a.parts()) {
        add(part.lo);
        for (std::size_t i = 0; i < f.knots.size(); ++i)
            if (part.lo < f.knots[i] && f.knots[i] < part.hi) add(f.knots[i]);
        if (part.hi > part.lo) add(part.hi);
    }
    return PiecewiseLinear::make(std::move(xs), std::move(ys));
}

ClosedSet lusin_compact(const StepFunction& f, const IntervalSet& a, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("lusin_compact: eps must be > 0");

    std::vector<ClosedInterval> closure;
    closure.reserve(a.size());
    for (const Interval& iv : a.parts()) closure.push_back({iv.lo, iv.hi});
    ClosedSet closed_a = ClosedSet::from_canonical(std::move(closure));

    std::vector<double> excluded;
    for (const Jump& j : jumps(f))
        if (closed_a.contains(j.x)) excluded.push_back(j.x);
    if (excluded.empty()) return closed_a;

    double margin = eps / (4.0 * static_cast<double>(excluded.size()));
    std::vector<ClosedInterval> out;
    for (const ClosedInterval& part : closed_a.parts()) {
        double cursor = part.lo;
        bool alive = true;
        for (double x : excluded) {
            if (x + margin < cursor || x - margin > part.hi) continue;
            if (cursor <= x - margin) out.push_back({cursor, x - margin});
            cursor = x + margin;
            if (cursor > part.hi) {
                alive = false;
                break;
            }
        }
        if (alive && cursor <= part.hi) out.push_back({cursor, part.hi});
    }
    return ClosedSet::normalize(std::move(out));
}

RampApproxResult continuous_approx_L1(const StepFunction& f, const IntervalSet& e, int n) {
    if (n < 1) throw std::invalid_argument("continuous_approx_L1: n must be >= 1");
    RampApproxResult res;
    res.ramp_width = 1.0 / static_cast<double>(n);

    std::vector<Jump> js = jumps(f);
    if (js.empty()) {
        res.g = PiecewiseLinear::constant(f.values.empty() ? 0.0 : f.values.front());
        return res;
    }
    for (std::size_t i = 1; i < f.breakpoints.size(); ++i)
        res.ramp_width = std::min(res.ramp_width, f.breakpoints[i] - f.breakpoints[i - 1]);

    std::vector<double> xs, ys;
    for (const Jump& j : js) {
        push_knot(xs, ys, j.x, j.left);
        push_knot(xs, ys, j.x + res.ramp_width, j.right);
    }
    res.g = PiecewiseLinear::make(std::move(xs), std::move(ys));

    res.l1_error = l1_distance(f, res.g, e);
    double analytic = 0.0;
    for (const Jump& j : js) {
        double k2 = j.x + res.ramp_width;
        analytic += 0.5 * j.height() * (k2 - j.x);
    }
    res.analytic_error = analytic;
    return res;
}

void FunctionSequenceSpec::validate() const {
    if (kind == Kind::power) {
        if (!domain.empty()) {
            Interval h = domain.hull();
            if (h.lo < 0.0 || h.hi > 1.0)
                throw std::invalid_argument("FunctionSequenceSpec: power family needs A within [0,1]");
        }
    } else if (kind == Kind::step_list) {
        if (sequence.empty())
            throw std::invalid_argument("FunctionSequenceSpec: step_list needs a non-empty sequence");
    }
}

namespace {

// {x in domain : |f - g| > c} for a step f against a pwl g.
IntervalSet abs_diff_superlevel(const StepFunction& f, const PiecewiseLinear& g,
                                const IntervalSet& domain, double c) {
    PiecewiseAffine d = PiecewiseAffine::step_minus_pwl(f, g, domain);
    return set_union(d.superlevel(c, true), d.negated().superlevel(c, true));
}

IntervalSet abs_diff_superlevel(const StepFunction& f, const StepFunction& g,
                                const IntervalSet& domain, double c) {
    PiecewiseAffine d = PiecewiseAffine::step_minus_step(f, g, domain);
    return set_union(d.superlevel(c, true), d.negated().superlevel(c, true));
}

}  // namespace

EgorovResult egorov_exceptional(const FunctionSequenceSpec& spec, double eps, long j_max) {
    if (!(eps > 0.0)) throw std::invalid_argument("egorov_exceptional: eps must be > 0");
    if (j_max < 1) throw std::invalid_argument("egorov_exceptional: j_max must be >= 1");
    spec.validate();

    EgorovResult res;
    res.tail_truncated = !spec.tail_monotone;
    int levels = std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / eps))));

    IntervalSet b;
    bool all_ok = true;
    double budget = eps;
    for (int k = 1; k <= levels; ++k) {
        budget *= 0.5;  // eps / 2^k
        double threshold = 1.0 / static_cast<double>(k);
        EgorovLevel level;
        level.k = k;
        level.budget = budget;

        IntervalSet ek;
        if (spec.kind == FunctionSequenceSpec::Kind::power) {
            // sup_{j>=n} x^j = x^n on [0,1]; {x^n > 1/k} = (k^(-1/n), 1].
            if (k == 1) {
                level.n_of_k = 1;
                level.attained = true;
            } else {
                double t_req = 1.0 - budget;
                long n = 1;
                if (t_req > 0.0)
                    n = std::max<long>(
                        1, static_cast<long>(std::ceil(std::log(static_cast<double>(k)) /
                                                       -std::log1p(-budget))));
                double t = std::pow(static_cast<double>(k), -1.0 / static_cast<double>(n));
                for (int guard = 0; std::pow(t, static_cast<double>(n)) > threshold && guard < 64;
                     ++guard)
                    t = std::nextafter(t, 0.0);
                if (t < 1.0) ek = set_intersect(spec.domain, IntervalSet::normalize({{t, 1.0}}));
                level.n_of_k = n;
                level.attained = ek.measure() <= budget && n <= j_max;
            }
        } else {
            long start = res.levels.empty() ? 1 : res.levels.back().n_of_k;
            long limit = spec.kind == FunctionSequenceSpec::Kind::step_list
                             ? std::min<long>(j_max, static_cast<long>(spec.sequence.size()))
                             : j_max;
            bool found = false;
            for (long n = start; n <= limit && !found; ++n) {
                IntervalSet candidate;
                if (spec.kind == FunctionSequenceSpec::Kind::shifted_ramp) {
                    PiecewiseLinear fn =
                        continuous_approx_L1(spec.limit, spec.domain, static_cast<int>(n)).g;
                    candidate = abs_diff_superlevel(spec.limit, fn, spec.domain, threshold);
                } else if (spec.tail_monotone) {
                    candidate = abs_diff_superlevel(spec.sequence[static_cast<std::size_t>(n - 1)],
                                                    spec.limit, spec.domain, threshold);
                } else {
                    for (long j = n; j <= limit; ++j)
                        candidate = set_union(
                            candidate,
                            abs_diff_superlevel(spec.sequence[static_cast<std::size_t>(j - 1)],
                                                spec.limit, spec.domain, threshold));
                }
                if (candidate.measure() <= budget) {
                    ek = candidate;
                    level.n_of_k = n;
                    found = true;
                }
            }
            if (!found) {
                level.n_of_k = limit;
                all_ok = false;
            }
            level.attained = found;
        }

        level.level_measure = ek.measure();
        if (!level.attained) all_ok = false;
        res.levels.push_back(level);
        b = set_union(b, ek);
    }

    res.exceptional = b;
    res.exceptional_measure = b.measure();
    res.all_attained = all_ok;
    return res;
}

}  // namespace lebesgue
