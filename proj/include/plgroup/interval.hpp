#pragma once

#include "plgroup/errors.hpp"
#include "plgroup/rational.hpp"

namespace plgroup {

// Nonempty interval with rational endpoints.  Endpoint openness is tracked
// but most callers work with open intervals, the default.
struct Interval {
    Rational lo;
    Rational hi;
    bool lo_open = true;
    bool hi_open = true;

    Interval() : lo(0), hi(1) {}
    Interval(Rational l, Rational h, bool lopen = true, bool hopen = true)
        : lo(std::move(l)), hi(std::move(h)), lo_open(lopen), hi_open(hopen) {
        if (!(lo < hi)) throw DegenerateInterval(to_string(lo) + " >= " + to_string(hi));
    }

    Rational length() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rational& x) const {
        if (x < lo || x > hi) return false;
        if (x == lo && lo_open) return false;
        if (x == hi && hi_open) return false;
        return true;
    }

    bool operator==(const Interval& o) const {
        return lo == o.lo && hi == o.hi && lo_open == o.lo_open && hi_open == o.hi_open;
    }
};

// Open intersection; empty is reported as nullopt rather than a degenerate
// Interval.
inline std::optional<Interval> intersect_open(const Interval& a, const Interval& b) {
    Rational lo = a.lo > b.lo ? a.lo : b.lo;
    Rational hi = a.hi < b.hi ? a.hi : b.hi;
    if (!(lo < hi)) return std::nullopt;
    return Interval(lo, hi);
}

inline bool disjoint_open(const Interval& a, const Interval& b) {
    return !intersect_open(a, b).has_value();
}

// Distance between two disjoint intervals.
inline Rational gap(const Interval& a, const Interval& b) {
    if (a.hi <= b.lo) return b.lo - a.hi;
    if (b.hi <= a.lo) return a.lo - b.hi;
    return Rational(0);
}

}  // namespace plgroup
