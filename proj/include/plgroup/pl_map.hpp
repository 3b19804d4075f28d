#pragma once

#include <vector>

#include "plgroup/errors.hpp"
#include "plgroup/interval.hpp"
#include "plgroup/rational.hpp"

namespace plgroup {

struct Point {
    Rational x;
    Rational y;

    Point() : x(0), y(0) {}
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    bool operator==(const Point&) const = default;
};

// Increasing piecewise-linear self-homeomorphism of [0,1], stored as its
// canonical ordered break list.  The endpoints (0,0) and (1,1) are implicit;
// every stored break is genuine (the slope changes there).  The empty list
// is the identity.
class PLMap {
public:
    PLMap() = default;

    // Validates conditions (1) strict monotonicity and (2) no collinear
    // triple against the virtual endpoints.  Throws NonMonotone or
    // CollinearBreak (with the offending index).
    static PLMap from_breaks(std::vector<Point> breaks);

    const std::vector<Point>& breaks() const { return breaks_; }
    std::size_t break_count() const { return breaks_.size(); }
    bool is_identity() const { return breaks_.empty(); }

    // Knot list with virtual endpoints prepended/appended.
    std::vector<Point> knots() const;

    bool operator==(const PLMap&) const = default;

private:
    std::vector<Point> breaks_;
};

// True iff the point list satisfies conditions (1) and (2); the non-throwing
// counterpart of PLMap::from_breaks.
bool defines_pl_map(const std::vector<Point>& pts);

Rational evaluate(const PLMap& f, const Rational& x);
Rational evaluate_inverse(const PLMap& f, const Rational& y);

PLMap compose(const PLMap& f, const PLMap& g);  // x -> f(g(x))
PLMap invert(const PLMap& f);

// Right/left one-sided slopes at x in [0,1] / (0,1].
Rational right_slope(const PLMap& f, const Rational& x);
Rational left_slope(const PLMap& f, const Rational& x);

// f*(x) = f'_+(x)/f'_-(x); 1 away from breaks.  Requires 0 < x < 1.
Rational slope_ratio(const PLMap& f, const Rational& x);

std::vector<Rational> break_points(const PLMap& f);

Rational max_slope(const PLMap& f);
Rational bilipschitz_constant(const PLMap& f);

// Maximum segment slope over the (open) intersection with J.
Rational max_slope_on(const PLMap& f, const Interval& J);

// Image interval [f(lo), f(hi)] of the closure of J.
Interval image_closure(const PLMap& f, const Interval& J);

inline PLMap compose3(const PLMap& f, const PLMap& g, const PLMap& h) {
    return compose(f, compose(g, h));
}

}  // namespace plgroup
