#include "lebesgue/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lebesgue {

IntervalSet IntervalSet::normalize(std::span<const std::pair<double, double>> raw) {
    std::vector<Interval> kept;
    kept.reserve(raw.size());
    for (const auto& [lo, hi] : raw) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("IntervalSet: non-finite endpoint");
        if (lo < hi) kept.push_back({lo, hi});
    }
    std::sort(kept.begin(), kept.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    std::vector<Interval> merged;
    for (const Interval& iv : kept) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    return from_canonical(std::move(merged));
}

IntervalSet IntervalSet::normalize(std::initializer_list<std::pair<double, double>> raw) {
    return normalize(std::span<const std::pair<double, double>>(raw.begin(), raw.size()));
}

IntervalSet IntervalSet::from_canonical(std::vector<Interval> parts) {
    IntervalSet s;
    s.parts_ = std::move(parts);
    return s;
}

double IntervalSet::measure() const {
    double total = 0.0;
    for (const Interval& iv : parts_) total += iv.length();
    return total;
}

bool IntervalSet::contains(double x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](double v, const Interval& iv) { return v < iv.lo; });
    return it != parts_.begin() && std::prev(it)->contains(x);
}

Interval IntervalSet::hull() const {
    if (parts_.empty()) return {0.0, 0.0};
    return {parts_.front().lo, parts_.back().hi};
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all(a.parts().begin(), a.parts().end());
    all.insert(all.end(), b.parts().begin(), b.parts().end());
    std::sort(all.begin(), all.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Interval> merged;
    for (const Interval& iv : all) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    return IntervalSet::from_canonical(std::move(merged));
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Interval& x = a.parts()[i];
        const Interval& y = b.parts()[j];
        double lo = std::max(x.lo, y.lo);
        double hi = std::min(x.hi, y.hi);
        if (lo < hi) out.push_back({lo, hi});
        if (x.hi < y.hi)
            ++i;
        else
            ++j;
    }
    return IntervalSet::from_canonical(std::move(out));
}

IntervalSet set_diff(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    std::size_t j = 0;
    for (const Interval& x : a.parts()) {
        double cursor = x.lo;
        while (j < b.size() && b.parts()[j].hi <= cursor) ++j;
        std::size_t k = j;
        while (k < b.size() && b.parts()[k].lo < x.hi) {
            const Interval& y = b.parts()[k];
            if (cursor < y.lo) out.push_back({cursor, y.lo});
            cursor = std::max(cursor, y.hi);
            if (cursor >= x.hi) break;
            ++k;
        }
        if (cursor < x.hi) out.push_back({cursor, x.hi});
    }
    return IntervalSet::from_canonical(std::move(out));
}

IntervalSet complement_within(const IntervalSet& s, Interval window) {
    if (window.lo >= window.hi) return {};
    std::vector<Interval> win{window};
    return set_diff(IntervalSet::from_canonical(std::move(win)), s);
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
    return set_diff(a, b).empty();
}

IntervalSet ball_to_set(Ball b) {
    if (!(b.radius > 0.0)) throw std::invalid_argument("Ball: radius must be > 0");
    return IntervalSet::normalize({{b.center - b.radius, b.center + b.radius}});
}

Ball sball(double k, Ball b) {
    if (!(k > 0.0)) throw std::invalid_argument("sball: scale must be > 0");
    return {b.center, k * b.radius};
}

IntervalSet outer_regularize(const IntervalSet& d, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("outer_regularize: eps must be > 0");
    if (d.empty()) return {};
    double pad = eps / (4.0 * static_cast<double>(d.size()));
    std::vector<std::pair<double, double>> padded;
    padded.reserve(d.size());
    for (const Interval& iv : d.parts()) padded.emplace_back(iv.lo - pad, iv.hi + pad);
    return IntervalSet::normalize(padded);
}

IntervalSet inner_regularize(const IntervalSet& d, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("inner_regularize: eps must be > 0");
    if (d.empty()) return {};
    double shrink = eps / (4.0 * static_cast<double>(d.size()));
    std::vector<Interval> kept;
    for (const Interval& iv : d.parts()) {
        double lo = iv.lo + shrink;
        double hi = iv.hi - shrink;
        if (lo < hi) kept.push_back({lo, hi});
    }
    return IntervalSet::from_canonical(std::move(kept));
}

IntervalSet compact_exhaustion(const IntervalSet& d, int n) {
    if (n < 1) throw std::invalid_argument("compact_exhaustion: n must be >= 1");
    if (d.empty()) return {};
    return inner_regularize(d, 1.0 / static_cast<double>(n));
}

}  // namespace lebesgue
