#include "plgroup/pl_map.hpp"

#include <algorithm>

namespace plgroup {

namespace {

bool collinear(const Point& a, const Point& b, const Point& c) {
    return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

Rational segment_slope(const Point& a, const Point& b) {
    return (b.y - a.y) / (b.x - a.x);
}

}  // namespace

std::vector<Point> PLMap::knots() const {
    std::vector<Point> k;
    k.reserve(breaks_.size() + 2);
    k.emplace_back(Rational(0), Rational(0));
    k.insert(k.end(), breaks_.begin(), breaks_.end());
    k.emplace_back(Rational(1), Rational(1));
    return k;
}

PLMap PLMap::from_breaks(std::vector<Point> breaks) {
    Point prev(Rational(0), Rational(0));
    for (const Point& p : breaks) {
        if (!(p.x > prev.x) || !(p.y > prev.y))
            throw NonMonotone("break coordinates must be strictly increasing in (0,1)");
        prev = p;
    }
    if (!(prev.x < 1) || !(prev.y < 1))
        throw NonMonotone("break coordinates must be strictly increasing in (0,1)");
    // Condition (2) against the virtual endpoints.
    std::vector<Point> k;
    k.emplace_back(Rational(0), Rational(0));
    k.insert(k.end(), breaks.begin(), breaks.end());
    k.emplace_back(Rational(1), Rational(1));
    for (std::size_t i = 1; i + 1 < k.size(); ++i) {
        if (collinear(k[i - 1], k[i], k[i + 1]))
            throw CollinearBreak(i - 1, "slope does not change");
    }
    PLMap m;
    m.breaks_ = std::move(breaks);
    return m;
}

bool defines_pl_map(const std::vector<Point>& pts) {
    try {
        PLMap::from_breaks(pts);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Rational evaluate(const PLMap& f, const Rational& x) {
    if (x < 0 || x > 1) throw OutOfDomain("evaluate at " + to_string(x));
    if (x == 0) return Rational(0);
    if (x == 1) return Rational(1);
    auto k = f.knots();
    // first knot with k[i].x >= x
    auto it = std::lower_bound(k.begin(), k.end(), x,
                               [](const Point& p, const Rational& v) { return p.x < v; });
    if (it->x == x) return it->y;
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    return lo.y + (x - lo.x) * (hi.y - lo.y) / (hi.x - lo.x);
}

Rational evaluate_inverse(const PLMap& f, const Rational& y) {
    if (y < 0 || y > 1) throw OutOfDomain("inverse evaluate at " + to_string(y));
    if (y == 0) return Rational(0);
    if (y == 1) return Rational(1);
    auto k = f.knots();
    auto it = std::lower_bound(k.begin(), k.end(), y,
                               [](const Point& p, const Rational& v) { return p.y < v; });
    if (it->y == y) return it->x;
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    return lo.x + (y - lo.y) * (hi.x - lo.x) / (hi.y - lo.y);
}

Rational right_slope(const PLMap& f, const Rational& x) {
    if (x < 0 || x >= 1) throw OutOfDomain("right slope at " + to_string(x));
    auto k = f.knots();
    // segment [k[i], k[i+1]) containing x from the right
    auto it = std::upper_bound(k.begin(), k.end(), x,
                               [](const Rational& v, const Point& p) { return v < p.x; });
    return segment_slope(*(it - 1), *it);
}

Rational left_slope(const PLMap& f, const Rational& x) {
    if (x <= 0 || x > 1) throw OutOfDomain("left slope at " + to_string(x));
    auto k = f.knots();
    auto it = std::lower_bound(k.begin(), k.end(), x,
                               [](const Point& p, const Rational& v) { return p.x < v; });
    return segment_slope(*(it - 1), *it);
}

Rational slope_ratio(const PLMap& f, const Rational& x) {
    if (x <= 0 || x >= 1) throw OutOfDomain("slope ratio at " + to_string(x));
    return right_slope(f, x) / left_slope(f, x);
}

PLMap compose(const PLMap& f, const PLMap& g) {
    // Candidate breaks: B(g) together with g^{-1}(B(f)); a candidate is kept
    // exactly when the chain-rule ratio f*(g(x)) g*(x) differs from 1.
    std::vector<Rational> xs;
    for (const Point& b : g.breaks()) xs.push_back(b.x);
    for (const Point& b : f.breaks()) xs.push_back(evaluate_inverse(g, b.x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Point> breaks;
    for (const Rational& x : xs) {
        Rational gx = evaluate(g, x);
        if (slope_ratio(f, gx) * slope_ratio(g, x) != 1)
            breaks.emplace_back(x, evaluate(f, gx));
    }
    return PLMap::from_breaks(std::move(breaks));
}

PLMap invert(const PLMap& f) {
    std::vector<Point> swapped;
    swapped.reserve(f.break_count());
    for (const Point& p : f.breaks()) swapped.emplace_back(p.y, p.x);
    return PLMap::from_breaks(std::move(swapped));
}

std::vector<Rational> break_points(const PLMap& f) {
    std::vector<Rational> xs;
    xs.reserve(f.break_count());
    for (const Point& p : f.breaks()) xs.push_back(p.x);
    return xs;
}

Rational max_slope(const PLMap& f) {
    auto k = f.knots();
    Rational best = segment_slope(k[0], k[1]);
    for (std::size_t i = 1; i + 1 < k.size(); ++i) {
        Rational s = segment_slope(k[i], k[i + 1]);
        if (s > best) best = s;
    }
    return best;
}

Rational bilipschitz_constant(const PLMap& f) {
    Rational a = max_slope(f);
    Rational b = max_slope(invert(f));
    return a > b ? a : b;
}

Rational max_slope_on(const PLMap& f, const Interval& J) {
    auto k = f.knots();
    bool found = false;
    Rational best(0);
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        Rational lo = k[i].x > J.lo ? k[i].x : J.lo;
        Rational hi = k[i + 1].x < J.hi ? k[i + 1].x : J.hi;
        if (lo < hi) {
            Rational s = segment_slope(k[i], k[i + 1]);
            if (!found || s > best) best = s;
            found = true;
        }
    }
    if (!found) throw OutOfDomain("interval misses [0,1]");
    return best;
}

Interval image_closure(const PLMap& f, const Interval& J) {
    Rational lo = J.lo < 0 ? Rational(0) : J.lo;
    Rational hi = J.hi > 1 ? Rational(1) : J.hi;
    return Interval(evaluate(f, lo), evaluate(f, hi), false, false);
}

}  // namespace plgroup
