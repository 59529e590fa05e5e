#include "doctest.h"

#include <stdexcept>

#include <cmath>

#include "lebesgue/generators.hpp"
#include "lebesgue/integration.hpp"
#include "lebesgue/piecewise_affine.hpp"
#include "lebesgue/separation.hpp"

using namespace lebesgue;

namespace {
ClosedSet closed(std::vector<ClosedInterval> parts) { return ClosedSet::normalize(std::move(parts)); }
}

TEST_CASE("closed set normalization merges touching parts") {
    ClosedSet s = closed({{0.0, 1.0}, {1.0, 2.0}});
    REQUIRE(s.size() == 1);
    CHECK(s.parts()[0] == ClosedInterval{0.0, 2.0});

    ClosedSet pt = closed({{3.0, 3.0}});
    CHECK(pt.contains(3.0));
    CHECK(pt.half_open_shadow().empty());
}

TEST_CASE("dist_to_set") {
    ClosedSet a = closed({{0.0, 1.0}});
    CHECK(dist_to_set(2.0, a) == 1.0);
    CHECK(dist_to_set(0.5, a) == 0.0);
    CHECK(dist_to_set(3.0, closed({{0.0, 1.0}, {4.0, 5.0}})) == 1.0);
    CHECK_THROWS_AS(dist_to_set(0.0, ClosedSet{}), std::invalid_argument);
}

TEST_CASE("set_distance") {
    CHECK(set_distance(closed({{0.0, 1.0}}), closed({{2.0, 3.0}})) == 1.0);
    ClosedSet a = closed({{0.0, 1.0}});
    CHECK(set_distance(a, a) == 0.0);
    CHECK(set_distance(a, closed({{1.0, 2.0}})) == 0.0);
}

TEST_CASE("urysohn separating function on the worked example") {
    ClosedSet a = closed({{0.0, 1.0}});
    ClosedSet b = closed({{2.0, 3.0}});
    PiecewiseLinear f = urysohn_function(a, b);
    CHECK(f(0.5) == 0.0);
    CHECK(f(2.5) == 1.0);
    CHECK(f(1.5) == 0.5);
    CHECK(f(-5.0) == 1.0);  // far left: distance exceeds eps

    CHECK_THROWS_AS(urysohn_function(a, closed({{1.0, 2.0}})), std::invalid_argument);
    CHECK_THROWS_AS(urysohn_function(a, a), std::invalid_argument);
}

TEST_CASE("urysohn properties over random disjoint pairs") {
    InstanceGen gen(71);
    for (int i = 0; i < 100; ++i) {
        auto [a, b] = gen.disjoint_closed_pair();
        double eps = set_distance(a, b);
        REQUIRE(eps > 0.0);
        PiecewiseLinear f = urysohn_function(a, b);

        for (const ClosedInterval& p : a.parts())
            for (double x : {p.lo, 0.5 * (p.lo + p.hi), p.hi}) CHECK(f(x) == 0.0);
        for (const ClosedInterval& p : b.parts())
            for (double x : {p.lo, 0.5 * (p.lo + p.hi), p.hi}) CHECK(f(x) == 1.0);
        for (double v : f.values) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        for (std::size_t k = 1; k < f.knots.size(); ++k) {
            double dy = std::abs(f.values[k] - f.values[k - 1]);
            double dx = f.knots[k] - f.knots[k - 1];
            CHECK(dy * eps <= dx * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("tietze extension bridges gaps and respects the bound") {
    ClosedSet a = closed({{0.0, 1.0}, {2.0, 3.0}});
    PiecewiseLinear f = PiecewiseLinear::make({0.0, 1.0, 2.0, 3.0}, {0.0, 0.0, 1.0, 1.0});
    PiecewiseLinear g = tietze_extend(a, f, 1.0);
    CHECK(g(1.5) == 0.5);
    CHECK(g(-2.0) == 0.0);   // constant extension left
    CHECK(g(10.0) == 1.0);   // constant extension right
    double max_abs = 0.0;
    for (double v : g.values) max_abs = std::max(max_abs, std::abs(v));
    CHECK(max_abs <= 1.0);

    PiecewiseLinear too_big = PiecewiseLinear::make({0.0, 1.0}, {0.0, 5.0});
    CHECK_THROWS_AS(tietze_extend(a, too_big, 1.0), std::invalid_argument);
}

TEST_CASE("tietze agrees with f at every knot inside A") {
    InstanceGen gen(73);
    for (int i = 0; i < 50; ++i) {
        auto [a, b] = gen.disjoint_closed_pair();
        (void)b;
        // build f with knots at the part endpoints, values within the bound
        std::vector<double> ks, vs;
        for (const ClosedInterval& p : a.parts()) {
            if (ks.empty() || p.lo != ks.back()) {
                ks.push_back(p.lo);
                vs.push_back(gen.dyadic(-5.0, 5.0));
            }
            if (p.hi != ks.back()) {
                ks.push_back(p.hi);
                vs.push_back(gen.dyadic(-5.0, 5.0));
            }
        }
        PiecewiseLinear f = PiecewiseLinear::make(ks, vs);
        PiecewiseLinear g = tietze_extend(a, f, 5.0);
        for (std::size_t k = 0; k < g.knots.size(); ++k) {
            CHECK(g.values[k] == f(g.knots[k]));
            CHECK(std::abs(g.values[k]) <= 5.0);
        }
    }
}

TEST_CASE("lusin compact on the worked example") {
    StepFunction f = StepFunction::indicator(0.0, 1.0);
    IntervalSet a = IntervalSet::normalize({{-1.0, 2.0}});
    ClosedSet k = lusin_compact(f, a, 0.1);
    // margins of half-width 0.1/(4*2) = 0.0125 around the jumps at 0 and 1
    double gap = set_diff(a, k.half_open_shadow()).measure();
    CHECK(gap == doctest::Approx(0.05).epsilon(1e-13));
    CHECK(gap < 0.1);

    // dyadic eps: exact margins and gap
    ClosedSet kd = lusin_compact(f, a, 0.125);
    CHECK(set_diff(a, kd.half_open_shadow()).measure() == 0.0625);
    CHECK_FALSE(k.contains(0.0));
    CHECK_FALSE(k.contains(1.0));
    CHECK(k.contains(-1.0));
    CHECK(k.contains(2.0));
    CHECK(k.contains(0.5));
    CHECK(dist_to_set(0.0, k) > 0.0);
    CHECK(dist_to_set(1.0, k) > 0.0);

    // no jumps inside A: K is the whole closure
    StepFunction wide = StepFunction::indicator(-8.0, 8.0, 5.0);
    ClosedSet k2 = lusin_compact(wide, IntervalSet::normalize({{0.0, 1.0}}), 0.5);
    CHECK(set_diff(IntervalSet::normalize({{0.0, 1.0}}), k2.half_open_shadow()).measure() == 0.0);

    CHECK_THROWS_AS(lusin_compact(f, a, 0.0), std::invalid_argument);
}

TEST_CASE("lusin over random inputs") {
    InstanceGen gen(79);
    for (int i = 0; i < 50; ++i) {
        StepFunction f = gen.step_function();
        IntervalSet a = gen.interval_set();
        if (a.empty()) a = IntervalSet::normalize({{-2.0, 2.0}});
        double eps = gen.dyadic(1.0 / 64.0, 1.0);
        ClosedSet k = lusin_compact(f, a, eps);
        CHECK(set_diff(a, k.half_open_shadow()).measure() < eps);
        for (const Jump& j : jumps(f)) CHECK_FALSE(k.contains(j.x));
        CHECK(is_subset(k.half_open_shadow(),
                        IntervalSet::normalize([&] {
                            std::vector<std::pair<double, double>> cl;
                            for (const Interval& iv : a.parts()) cl.emplace_back(iv.lo, iv.hi);
                            return cl;
                        }())));
    }
}

TEST_CASE("continuous approximation error matches the ramp formula") {
    StepFunction one = StepFunction::indicator(0.0, 1.0);
    IntervalSet e = IntervalSet::normalize({{-4.0, 4.0}});
    for (int n : {1, 2, 4, 8, 16, 32, 64}) {
        RampApproxResult r = continuous_approx_L1(one, e, n);
        // two unit jumps, each contributing (1/n)/2
        CHECK(r.l1_error == 1.0 / n);
        CHECK(r.analytic_error == r.l1_error);
    }

    // halving: error(2n) = error(n)/2 exactly for dyadic widths
    RampApproxResult r4 = continuous_approx_L1(one, e, 4);
    RampApproxResult r8 = continuous_approx_L1(one, e, 8);
    CHECK(r8.l1_error == 0.5 * r4.l1_error);

    // constant zero function: approximant equals f
    RampApproxResult rz = continuous_approx_L1(StepFunction::zero(), e, 4);
    CHECK(rz.l1_error == 0.0);
    CHECK(rz.analytic_error == 0.0);
}

TEST_CASE("approximation error is monotone and exact over random inputs") {
    InstanceGen gen(83);
    IntervalSet e = IntervalSet::normalize({{-16.0, 16.0}});
    for (int i = 0; i < 50; ++i) {
        StepFunction f = gen.step_function();
        double prev = -1.0;
        for (int p = 0; p <= 6; ++p) {
            int n = 1 << p;
            RampApproxResult r = continuous_approx_L1(f, e, n);
            CHECK(r.l1_error == r.analytic_error);
            if (prev >= 0.0) CHECK(r.l1_error <= prev);
            prev = r.l1_error;
        }
    }
}

TEST_CASE("egorov on the power family") {
    FunctionSequenceSpec spec;
    spec.kind = FunctionSequenceSpec::Kind::power;
    spec.domain = IntervalSet::normalize({{0.0, 1.0}});
    EgorovResult r = egorov_exceptional(spec, 0.1, 2048);
    CHECK(r.all_attained);
    CHECK(r.exceptional_measure < 0.1);
    REQUIRE(r.levels.size() == 4);  // ceil(log2(10))
    for (const EgorovLevel& l : r.levels) {
        CHECK(l.attained);
        CHECK(l.level_measure <= l.budget);
        if (l.k > 1) {
            // sup over A \ B of x^{n_of_k} is the right edge of A \ B raised
            // to n_of_k; must sit below 1/k
            double edge = set_diff(spec.domain, r.exceptional).parts().back().hi;
            CHECK(std::pow(edge, static_cast<double>(l.n_of_k)) <= 1.0 / l.k);
        }
    }

    // halving eps shrinks the exceptional set toward the non-convergence locus
    EgorovResult r2 = egorov_exceptional(spec, 0.05, 4096);
    CHECK(r2.exceptional_measure < 0.05);
    CHECK(r2.exceptional_measure <= r.exceptional_measure);
}

TEST_CASE("egorov trivial and truncated cases") {
    // f_k = g for all k: exceptional set empty
    FunctionSequenceSpec spec;
    spec.kind = FunctionSequenceSpec::Kind::step_list;
    spec.domain = IntervalSet::normalize({{0.0, 1.0}});
    spec.limit = StepFunction::indicator(0.0, 1.0, 3.0);
    spec.sequence = {spec.limit, spec.limit, spec.limit};
    spec.tail_monotone = false;
    EgorovResult r = egorov_exceptional(spec, 0.25, 3);
    CHECK(r.all_attained);
    CHECK(r.exceptional_measure == 0.0);
    CHECK(r.tail_truncated);

    // an unreachable budget is reported, not silently truncated
    FunctionSequenceSpec bad;
    bad.kind = FunctionSequenceSpec::Kind::step_list;
    bad.domain = IntervalSet::normalize({{0.0, 1.0}});
    bad.limit = StepFunction::zero();
    bad.sequence = {StepFunction::indicator(0.0, 1.0, 5.0)};
    bad.tail_monotone = false;
    EgorovResult rb = egorov_exceptional(bad, 0.25, 1);
    CHECK_FALSE(rb.all_attained);
}

TEST_CASE("egorov step_list without monotone tails unions the superlevels") {
    FunctionSequenceSpec spec;
    spec.kind = FunctionSequenceSpec::Kind::step_list;
    spec.domain = IntervalSet::normalize({{0.0, 1.0}});
    spec.limit = StepFunction::zero();
    spec.sequence = {StepFunction::indicator(0.0, 0.5),
                     StepFunction::indicator(0.25, 0.75),
                     StepFunction::zero()};
    spec.tail_monotone = false;
    EgorovResult r = egorov_exceptional(spec, 0.2, 3);
    CHECK(r.all_attained);
    CHECK(r.tail_truncated);
    // levels k >= 2 need the tail from j = 3 where all functions vanish
    for (const EgorovLevel& l : r.levels)
        if (l.k >= 2) CHECK(l.n_of_k == 3);
    CHECK(r.exceptional_measure == 0.0);
}

TEST_CASE("egorov on the shifted ramp family") {
    FunctionSequenceSpec spec;
    spec.kind = FunctionSequenceSpec::Kind::shifted_ramp;
    spec.domain = IntervalSet::normalize({{-2.0, 2.0}});
    spec.limit = StepFunction::indicator(0.0, 1.0);
    spec.tail_monotone = true;
    EgorovResult r = egorov_exceptional(spec, 0.125, 4096);
    CHECK(r.all_attained);
    CHECK(r.exceptional_measure < 0.125);
    // the sup of |f_n - g| off B stays within 1/k at the reported n
    for (const EgorovLevel& l : r.levels) {
        PiecewiseLinear fn =
            continuous_approx_L1(spec.limit, spec.domain, static_cast<int>(l.n_of_k)).g;
        IntervalSet off = set_diff(spec.domain, r.exceptional);
        double sup = PiecewiseAffine::step_minus_pwl(spec.limit, fn, off).sup_abs();
        CHECK(sup <= (1.0 / l.k) * (1.0 + 1e-12));
    }
}
