#include "lebesgue/ldt.hpp"

#include <algorithm>
#include <stdexcept>

#include "lebesgue/integration.hpp"
#include "lebesgue/separation.hpp"

namespace lebesgue {

LdtReport ldt_bounded_check(const StepFunction& f, int k, double a, int n_approx,
                            double grid_step, const RadiusSchedule& sched) {
    if (!(a > 0.0)) throw std::invalid_argument("ldt_bounded_check: a must be > 0");
    if (n_approx < 1) throw std::invalid_argument("ldt_bounded_check: n_approx must be >= 1");

    LdtReport rep;
    rep.k = k;
    rep.threshold_a = a;
    rep.approximant_count = n_approx;

    StepFunction fk = restrict_to_ball(f, k);
    double radius = 2.0 * (static_cast<double>(k) + 1.0);
    IntervalSet bk = ball_to_set({0.0, radius});

    for (int n = 1; n <= n_approx; ++n) {
        double err = continuous_approx_L1(fk, bk, n).l1_error;
        rep.l1_errors.push_back(err);
        // Set (a): {f_k - g_n >= a/2}, Markov at level a/2.
        rep.markov_bounds.push_back(2.0 / a * err);
        // Set (b): {HL(f_k - g_n) > a/2}, maximal inequality at level a/2.
        rep.maximal_bounds.push_back(6.0 / a * err);
        rep.combined_bounds.push_back(rep.markov_bounds.back() + rep.maximal_bounds.back());
    }
    rep.min_combined_bound =
        *std::min_element(rep.combined_bounds.begin(), rep.combined_bounds.end());

    rep.bounds_decay = true;
    for (std::size_t i = 1; i < rep.combined_bounds.size(); ++i)
        if (rep.combined_bounds[i] > rep.combined_bounds[i - 1]) rep.bounds_decay = false;

    rep.grid_slack =
        4.0 * grid_step * static_cast<double>(fk.breakpoints.size());
    rep.flagged_measure = non_lebesgue_scan(fk, grid_step, sched).flagged_measure;
    rep.consistent = rep.flagged_measure <= rep.min_combined_bound + rep.grid_slack;
    return rep;
}

LdtScanResult ldt_full_scan(const StepFunction& f, int k_max, double a, int n_approx,
                            double grid_step, const RadiusSchedule& sched) {
    if (k_max < 0) throw std::invalid_argument("ldt_full_scan: k_max must be >= 0");
    LdtScanResult out;
    out.all_consistent = true;
    for (int k = 0; k <= k_max; ++k) {
        out.reports.push_back(ldt_bounded_check(f, k, a, n_approx, grid_step, sched));
        out.overall_flagged = std::max(out.overall_flagged, out.reports.back().flagged_measure);
        if (!out.reports.back().consistent) out.all_consistent = false;
    }
    return out;
}

}  // namespace lebesgue
