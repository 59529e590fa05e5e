#include "doctest.h"

#include <stdexcept>

#include "lebesgue/generators.hpp"
#include "lebesgue/ldt.hpp"

using namespace lebesgue;

TEST_CASE("ldt bounded check on the zero function") {
    RadiusSchedule sched;
    LdtReport r = ldt_bounded_check(StepFunction::zero(), 0, 0.1, 4, 0.0625, sched);
    CHECK(r.flagged_measure == 0.0);
    for (double e : r.l1_errors) CHECK(e == 0.0);
    CHECK(r.consistent);
    CHECK(r.bounds_decay);
}

TEST_CASE("ldt bounded check on the unit indicator") {
    RadiusSchedule sched;
    LdtReport r = ldt_bounded_check(StepFunction::indicator(0.0, 1.0), 0, 0.1, 16, 1.0 / 64.0,
                                    sched);
    REQUIRE(r.l1_errors.size() == 16);
    // ||f - g_n||_1 = 1/n from the ramp formula; exact at dyadic widths
    for (int n = 1; n <= 16; ++n) {
        double e = r.l1_errors[static_cast<std::size_t>(n - 1)];
        if ((n & (n - 1)) == 0)
            CHECK(e == 1.0 / n);
        else
            CHECK(e == doctest::Approx(1.0 / n).epsilon(1e-12));
    }
    // a/2 split: (2/a + 6/a) * error
    CHECK(r.combined_bounds[0] == 80.0);
    CHECK(r.bounds_decay);
    CHECK(r.consistent);
    CHECK(r.flagged_measure <= r.min_combined_bound + r.grid_slack);
}

TEST_CASE("ldt full scan equals the k = 0 report for small support") {
    RadiusSchedule sched;
    StepFunction f = StepFunction::indicator(0.0, 1.0);
    LdtScanResult scan = ldt_full_scan(f, 2, 0.1, 8, 1.0 / 32.0, sched);
    REQUIRE(scan.reports.size() == 3);
    CHECK(scan.all_consistent);
    // f is supported inside (-2, 2): every restriction is the identity
    for (const LdtReport& r : scan.reports) {
        CHECK(r.flagged_measure == scan.reports[0].flagged_measure);
        CHECK(r.min_combined_bound == scan.reports[0].min_combined_bound);
    }
    CHECK(scan.overall_flagged == scan.reports[0].flagged_measure);
}

TEST_CASE("doubling the approximant count halves the final bound") {
    RadiusSchedule sched;
    StepFunction f = StepFunction::indicator(0.0, 1.0);
    LdtReport r8 = ldt_bounded_check(f, 0, 0.125, 8, 0.0625, sched);
    LdtReport r16 = ldt_bounded_check(f, 0, 0.125, 16, 0.0625, sched);
    CHECK(r16.min_combined_bound == 0.5 * r8.min_combined_bound);
}

TEST_CASE("ldt flagged set stays near the breakpoints") {
    RadiusSchedule sched;
    StepFunction f = StepFunction::indicator(0.0, 1.0);
    LdtReport r = ldt_bounded_check(f, 0, 0.25, 4, 1.0 / 64.0, sched);
    double reach = 1.0 / 64.0 + sched.stabilization_radius();
    CHECK(r.flagged_measure <= 2.0 * 2.0 * reach);
}

TEST_CASE("ldt consistency over random functions") {
    InstanceGen gen(107);
    RadiusSchedule sched;
    for (int i = 0; i < 10; ++i) {
        StepFunction f = gen.step_function(4);
        LdtReport r = ldt_bounded_check(f, 4, 0.25, 8, 0.125, sched);
        CHECK(r.consistent);
        CHECK(r.bounds_decay);
    }
}
