#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <limits>

#include "lebesgue/ftc.hpp"
#include "lebesgue/generators.hpp"

using namespace lebesgue;

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

TEST_CASE("primitive of an indicator") {
    StepFunction one = StepFunction::indicator(0.0, 1.0);
    CHECK(primitive(one, kNegInf, 0.5) == 0.5);
    CHECK(primitive(one, kNegInf, -1.0) == 0.0);
    CHECK(primitive(one, kNegInf, 2.0) == 1.0);
    CHECK(primitive(one, 0.25, 0.75) == 0.5);
    CHECK(primitive(one, 3.0, 2.0) == 0.0);  // x below a: empty interval
}

TEST_CASE("primitive is Lipschitz with constant sup|f|") {
    InstanceGen gen(89);
    for (int i = 0; i < 50; ++i) {
        StepFunction f = gen.step_function();
        double supf = 0.0;
        for (double v : f.values) supf = std::max(supf, std::abs(v));
        double x = gen.dyadic(-10.0, 10.0);
        double y = gen.dyadic(-10.0, 10.0);
        CHECK(std::abs(primitive(f, kNegInf, x) - primitive(f, kNegInf, y)) <=
              supf * std::abs(x - y) + 1e-12);
    }
}

TEST_CASE("ftc1 at interior points, skip at breakpoints") {
    StepFunction one = StepFunction::indicator(0.0, 1.0);
    DerivativeProbe probe = DerivativeProbe::geometric(0.5, 0.5, 10);

    Ftc1Report mid = ftc1_check(one, kNegInf, 0.5, probe);
    CHECK(mid.lebesgue_pt_status == Tristate::yes);
    CHECK_FALSE(mid.skipped);
    CHECK(mid.pass);
    CHECK(mid.derivative_estimate == 1.0);

    Ftc1Report outside = ftc1_check(one, kNegInf, 2.0, probe);
    CHECK(outside.pass);
    CHECK(outside.derivative_estimate == 0.0);

    Ftc1Report at_jump = ftc1_check(one, kNegInf, 0.0, probe);
    CHECK(at_jump.skipped);  // davg stays at 1/2: not a Lebesgue point
    CHECK(at_jump.pass);
}

TEST_CASE("ftc1 difference quotients are exact off breakpoints on dyadic data") {
    InstanceGen gen(97);
    DerivativeProbe probe = DerivativeProbe::geometric(0.5, 0.5, 10);
    for (int i = 0; i < 50; ++i) {
        StepFunction f = gen.step_function();
        double x = gen.dyadic(-10.0, 10.0);
        bool is_bp = false;
        for (double b : f.breakpoints)
            if (b == x) is_bp = true;
        if (is_bp) continue;
        Ftc1Report r = ftc1_check(f, kNegInf, x, probe);
        CHECK(r.pass);
        if (!r.skipped) CHECK(r.derivative_estimate == r.f_at_x);
    }
}

TEST_CASE("one-sided probes use the right quotient") {
    StepFunction one = StepFunction::indicator(0.0, 1.0);
    DerivativeProbe probe = DerivativeProbe::geometric(0.25, 0.5, 8, false);
    Ftc1Report r = ftc1_check(one, kNegInf, 0.5, probe);
    CHECK(r.pass);
    CHECK(r.derivative_estimate == 1.0);
}

TEST_CASE("density values") {
    RadiusSchedule sched;
    IntervalSet a = IntervalSet::normalize({{0.0, 1.0}});
    CHECK(density(a, 0.5, sched) == 1.0);
    CHECK(density(a, 2.0, sched) == 0.0);
    CHECK(density(a, 0.0, sched) == 0.5);
    CHECK(density(IntervalSet{}, 0.0, sched) == 0.0);
}

TEST_CASE("density of the complement mirrors the density") {
    InstanceGen gen(101);
    RadiusSchedule sched;
    Interval window{-16.0, 16.0};
    for (int i = 0; i < 50; ++i) {
        IntervalSet a = gen.interval_set();
        double x = gen.dyadic(-10.0, 10.0);
        double d = density(a, x, sched);
        double dc = density(complement_within(a, window), x, sched);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        CHECK(d + dc == 1.0);
    }
}

TEST_CASE("density traces stabilize") {
    RadiusSchedule sched;
    IntervalSet a = IntervalSet::normalize({{0.0, 1.0}});
    auto trace = density_trace(a, 0.25, sched);
    REQUIRE(trace.size() == 24);
    CHECK(trace.back().second == 1.0);
}

TEST_CASE("density_check classifies interiors, exteriors and boundaries") {
    RadiusSchedule sched;
    IntervalSet a = IntervalSet::normalize({{0.0, 1.0}});
    DensityCheckReport r = density_check(a, 1.0 / 64.0, sched);
    CHECK(r.within_bound);
    CHECK(r.exceptional_measure <= 4.0 * (1.0 / 64.0) * 2.0);
    CHECK(r.interior_points > 0);
    CHECK(r.exterior_points > 0);
    // boundary points land on the grid and are the only exceptional ones
    CHECK(r.exceptional_points == 2);

    DensityCheckReport empty = density_check(IntervalSet{}, 0.125, sched);
    CHECK(empty.within_bound);
    CHECK(empty.exceptional_measure == 0.0);

    // grid refinement halves the bound
    DensityCheckReport fine = density_check(a, 1.0 / 128.0, sched);
    CHECK(fine.bound == 0.5 * r.bound);
    CHECK(fine.within_bound);
}

TEST_CASE("density_check over random sets") {
    InstanceGen gen(103);
    RadiusSchedule sched;
    for (int i = 0; i < 50; ++i) {
        IntervalSet a = gen.interval_set();
        DensityCheckReport r = density_check(a, 1.0 / 64.0, sched);
        CHECK(r.within_bound);
    }
}
