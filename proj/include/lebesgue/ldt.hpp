#pragma once

#include <vector>

#include "lebesgue/averaging.hpp"
#include "lebesgue/step_function.hpp"

namespace lebesgue {

/// Per-k outcome of the bounded differentiation workflow: the proof-skeleton
/// bounds from the continuous approximants against the directly scanned
/// non-Lebesgue measure.
struct LdtReport {
    int k = 0;
    double threshold_a = 0.0;
    int approximant_count = 0;
    std::vector<double> l1_errors;       // ||f_k - g_n||_1 over B_k, n = 1..
    std::vector<double> markov_bounds;   // (2/a) * error_n   (set (a), level a/2)
    std::vector<double> maximal_bounds;  // (6/a) * error_n   (set (b), level a/2)
    std::vector<double> combined_bounds;
    double min_combined_bound = 0.0;
    double grid_slack = 0.0;  // 4 * grid_step * #breakpoints
    double flagged_measure = 0.0;
    bool consistent = false;     // flagged <= min combined bound + slack
    bool bounds_decay = false;   // combined bounds nonincreasing in n
};

/// Restrict f to the ball B(0, 2(k+1)), build ramp approximants g_n for
/// n <= n_approx, compute the Markov and maximal-inequality bounds at the
/// a/2 split, and compare against the direct non-Lebesgue grid scan.
LdtReport ldt_bounded_check(const StepFunction& f, int k, double a, int n_approx,
                            double grid_step, const RadiusSchedule& sched);

/// Runs ldt_bounded_check for every k <= k_max. The overall flagged measure
/// is the max over k of the per-window scans.
struct LdtScanResult {
    std::vector<LdtReport> reports;
    double overall_flagged = 0.0;
    bool all_consistent = false;
};

LdtScanResult ldt_full_scan(const StepFunction& f, int k_max, double a, int n_approx,
                            double grid_step, const RadiusSchedule& sched);

}  // namespace lebesgue
