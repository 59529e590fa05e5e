#include "lebesgue/generators.hpp"

#include <algorithm>
#include <set>

namespace lebesgue {

namespace {
constexpr double kGrid = 64.0;  // 2^6 subdivisions per unit
}

double InstanceGen::dyadic(double lo, double hi) {
    long klo = static_cast<long>(lo * kGrid);
    long khi = static_cast<long>(hi * kGrid);
    std::uniform_int_distribution<long> dist(klo, khi);
    return static_cast<double>(dist(eng_)) / kGrid;
}

int InstanceGen::uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(eng_);
}

StepFunction InstanceGen::step_function(int max_pieces) {
    int pieces = uniform_int(1, max_pieces);
    std::set<double> pts;
    while (static_cast<int>(pts.size()) < pieces + 1) pts.insert(dyadic(-10.0, 10.0));
    std::vector<double> bps(pts.begin(), pts.end());
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(pieces));
    for (int i = 0; i < pieces; ++i) vals.push_back(dyadic(-10.0, 10.0));
    return StepFunction::make(std::move(bps), std::move(vals));
}

IntervalSet InstanceGen::interval_set(int max_parts) {
    int parts = uniform_int(0, max_parts);
    std::vector<std::pair<double, double>> raw;
    raw.reserve(static_cast<std::size_t>(parts));
    for (int i = 0; i < parts; ++i) {
        double a = dyadic(-10.0, 10.0);
        double b = dyadic(-10.0, 10.0);
        raw.emplace_back(std::min(a, b), std::max(a, b));
    }
    return IntervalSet::normalize(raw);
}

BallCollection InstanceGen::ball_collection(int max_balls) {
    BallCollection coll;
    int n = uniform_int(1, max_balls);
    coll.balls.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        coll.balls.push_back({dyadic(-10.0, 10.0), dyadic(1.0 / kGrid, 5.0)});
    return coll;
}

std::pair<ClosedSet, ClosedSet> InstanceGen::disjoint_closed_pair(int max_parts_each) {
    // Draw strictly separated closed intervals on distinct grid points, then
    // deal them out alternately so both sets are nonempty and the pairwise
    // gaps stay >= 1/64.
    int total = uniform_int(2, 2 * max_parts_each);
    std::set<double> pts;
    while (static_cast<int>(pts.size()) < 2 * total) pts.insert(dyadic(-10.0, 10.0));
    std::vector<double> sorted(pts.begin(), pts.end());

    std::vector<ClosedInterval> a_parts, b_parts;
    for (int i = 0; i < total; ++i) {
        double lo = sorted[static_cast<std::size_t>(2 * i)];
        double hi = sorted[static_cast<std::size_t>(2 * i + 1)];
        if (uniform_int(0, 7) == 0) hi = lo;  // occasional degenerate point
        if (i % 2 == 0)
            a_parts.push_back({lo, hi});
        else
            b_parts.push_back({lo, hi});
    }
    return {ClosedSet::from_canonical(std::move(a_parts)),
            ClosedSet::from_canonical(std::move(b_parts))};
}

}  // namespace lebesgue
