#include "plgroup/line_circle.hpp"

#include <algorithm>

namespace plgroup {

namespace {

Rational seg_slope(const Point& a, const Point& b) { return (b.y - a.y) / (b.x - a.x); }

// One-sided slopes of a line map.
Rational rslope(const LineMap& f, const Rational& x) {
    if (f.breaks.empty()) return f.left_slope;
    if (x >= f.breaks.back().x) return f.right_slope;
    auto it = std::upper_bound(f.breaks.begin(), f.breaks.end(), x,
                               [](const Rational& v, const Point& p) { return v < p.x; });
    if (it == f.breaks.begin()) return f.left_slope;
    return seg_slope(*(it - 1), *it);
}

Rational lslope(const LineMap& f, const Rational& x) {
    if (f.breaks.empty()) return f.left_slope;
    if (x <= f.breaks.front().x) return f.left_slope;
    auto it = std::lower_bound(f.breaks.begin(), f.breaks.end(), x,
                               [](const Point& p, const Rational& v) { return p.x < v; });
    if (it == f.breaks.end()) return f.right_slope;
    return seg_slope(*(it - 1), *it);
}

}  // namespace

LineMap LineMap::checked(std::vector<Point> breaks, Rational left_slope, Rational right_slope,
                         Rational offset) {
    if (!(left_slope > 0) || !(right_slope > 0))
        throw NonMonotone("tail slopes must be positive");
    if (breaks.empty()) {
        if (left_slope != right_slope)
            throw NonMonotone("affine line map needs equal tail slopes");
    } else {
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
            if (!(breaks[i].x < breaks[i + 1].x) || !(breaks[i].y < breaks[i + 1].y))
                throw NonMonotone("line breaks must be strictly increasing");
        if (offset != 0) throw NonMonotone("offset is reserved for affine maps");
    }
    LineMap m;
    m.breaks = std::move(breaks);
    m.left_slope = std::move(left_slope);
    m.right_slope = std::move(right_slope);
    m.offset = std::move(offset);
    // every stored break must be genuine
    for (const Point& b : m.breaks)
        if (rslope(m, b.x) == lslope(m, b.x))
            throw CollinearBreak(0, "line break at " + to_string(b.x) + " is not genuine");
    return m;
}

LineMap LineMap::translation(const Rational& c) {
    LineMap m;
    m.offset = c;
    return m;
}

Rational evaluate_line(const LineMap& f, const Rational& x) {
    if (f.breaks.empty()) return f.left_slope * x + f.offset;
    if (x <= f.breaks.front().x)
        return f.breaks.front().y + f.left_slope * (x - f.breaks.front().x);
    if (x >= f.breaks.back().x)
        return f.breaks.back().y + f.right_slope * (x - f.breaks.back().x);
    auto it = std::lower_bound(f.breaks.begin(), f.breaks.end(), x,
                               [](const Point& p, const Rational& v) { return p.x < v; });
    if (it->x == x) return it->y;
    return (it - 1)->y + (x - (it - 1)->x) * seg_slope(*(it - 1), *it);
}

Rational evaluate_line_inverse(const LineMap& f, const Rational& y) {
    if (f.breaks.empty()) return (y - f.offset) / f.left_slope;
    if (y <= f.breaks.front().y)
        return f.breaks.front().x + (y - f.breaks.front().y) / f.left_slope;
    if (y >= f.breaks.back().y)
        return f.breaks.back().x + (y - f.breaks.back().y) / f.right_slope;
    auto it = std::lower_bound(f.breaks.begin(), f.breaks.end(), y,
                               [](const Point& p, const Rational& v) { return p.y < v; });
    if (it->y == y) return it->x;
    return (it - 1)->x + (y - (it - 1)->y) / seg_slope(*(it - 1), *it);
}

LineMap compose_line(const LineMap& f, const LineMap& g) {
    std::vector<Rational> xs;
    for (const Point& b : g.breaks) xs.push_back(b.x);
    for (const Point& b : f.breaks) xs.push_back(evaluate_line_inverse(g, b.x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Point> breaks;
    for (const Rational& x : xs) {
        Rational gx = evaluate_line(g, x);
        if (rslope(f, gx) * rslope(g, x) != lslope(f, gx) * lslope(g, x))
            breaks.emplace_back(x, evaluate_line(f, gx));
    }
    Rational ls = f.left_slope * g.left_slope;
    Rational rs = f.right_slope * g.right_slope;
    Rational offset(0);
    if (breaks.empty()) offset = evaluate_line(f, evaluate_line(g, Rational(0)));
    return LineMap::checked(std::move(breaks), ls, rs, offset);
}

LineMap invert_line(const LineMap& f) {
    std::vector<Point> swapped;
    for (const Point& p : f.breaks) swapped.emplace_back(p.y, p.x);
    Rational ls = 1 / f.left_slope;
    Rational rs = 1 / f.right_slope;
    Rational offset(0);
    if (swapped.empty()) offset = -f.offset / f.left_slope;
    return LineMap::checked(std::move(swapped), ls, rs, offset);
}

LineMap embed_interval(const PLMap& f) {
    std::vector<Point> breaks;
    if (right_slope(f, Rational(0)) != 1) breaks.emplace_back(Rational(0), Rational(0));
    for (const Point& b : f.breaks()) breaks.push_back(b);
    if (left_slope(f, Rational(1)) != 1) breaks.emplace_back(Rational(1), Rational(1));
    return LineMap::checked(std::move(breaks), Rational(1), Rational(1));
}

LineMap bump_line(const Interval& U) {
    Rational m = U.midpoint();
    std::vector<Point> breaks;
    breaks.emplace_back(U.lo, U.lo);
    breaks.emplace_back(m, m + U.length() / 8);
    breaks.emplace_back(U.hi, U.hi);
    return LineMap::checked(std::move(breaks), Rational(1), Rational(1));
}

bool fixes_complement_of_unit(const LineMap& f) {
    if (f.breaks.empty()) return f.is_identity();
    if (f.left_slope != 1 || f.right_slope != 1) return false;
    const Point& first = f.breaks.front();
    const Point& last = f.breaks.back();
    return first.x >= 0 && first.y == first.x && last.x <= 1 && last.y == last.x;
}

namespace {

LineMap commutator_line(const LineMap& f, const LineMap& g) {
    return compose_line(compose_line(f, g), compose_line(invert_line(f), invert_line(g)));
}

// Rational point outside [0,1] moved by h, when one exists.  Cell midpoints
// between consecutive critical points (breaks, diagonal crossings, 0, 1)
// cover every moved component.
std::optional<Rational> moved_point_outside_unit(const LineMap& h) {
    std::vector<Rational> crit{Rational(0), Rational(1)};
    for (const Point& b : h.breaks) crit.push_back(b.x);
    if (h.breaks.empty()) {
        if (h.left_slope != 1) crit.push_back(h.offset / (1 - h.left_slope));
    } else {
        const Point& first = h.breaks.front();
        if (h.left_slope != 1)
            crit.push_back(first.x - (first.y - first.x) / (h.left_slope - 1));
        const Point& last = h.breaks.back();
        if (h.right_slope != 1)
            crit.push_back(last.x - (last.y - last.x) / (h.right_slope - 1));
        for (std::size_t i = 0; i + 1 < h.breaks.size(); ++i) {
            Rational s = seg_slope(h.breaks[i], h.breaks[i + 1]);
            if (s != 1)
                crit.push_back(h.breaks[i].x - (h.breaks[i].y - h.breaks[i].x) / (s - 1));
        }
    }
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

    std::vector<Rational> candidates;
    candidates.push_back(crit.front() - 1);
    candidates.push_back(crit.back() + 1);
    for (std::size_t i = 0; i + 1 < crit.size(); ++i)
        candidates.push_back((crit[i] + crit[i + 1]) / 2);
    for (const Rational& x : candidates)
        if ((x < 0 || x > 1) && evaluate_line(h, x) != x) return x;
    return std::nullopt;
}

}  // namespace

CentralizerProbeResult centralizer_membership_probe(const LineMap& h, const SampleConfig& cfg) {
    CentralizerProbeResult result;
    if (fixes_complement_of_unit(h)) {
        for (long t = 0; t < cfg.trials; ++t) {
            Rng rng = Rng::split(cfg.seed, static_cast<std::uint64_t>(t));
            Rational a = rng.unit_fraction(cfg.denominator_bound);
            Rational b = rng.unit_fraction(cfg.denominator_bound);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            bool left_side = (rng.next() & 1) != 0;
            Interval u = left_side ? Interval(-1 + a - 1, -1 + b - 1)  // inside (-2,-1)
                                   : Interval(1 + a, 1 + b);           // inside (1,2)
            LineMap g = bump_line(u);
            ++result.probes_run;
            if (!commutator_line(h, g).is_identity()) {
                result.witness = g;
                return result;
            }
        }
        result.member = true;
        return result;
    }

    // Guided search: h moves some point x0 outside [0,1]; a bump supported
    // near x0, away from [0,1] and from h's image of it, cannot commute.
    auto x0 = moved_point_outside_unit(h);
    if (!x0) throw CertificateFailure("no moved point found for a non-member");
    Rational y0 = evaluate_line(h, *x0);
    Rational dist_unit = *x0 < 0 ? Rational(-*x0) : Rational(*x0 - 1);
    Rational delta = abs_rational(y0 - *x0) / 4;
    if (dist_unit / 2 < delta) delta = dist_unit / 2;
    Rational lo = *x0 - delta > evaluate_line_inverse(h, y0 - delta)
                      ? *x0 - delta
                      : evaluate_line_inverse(h, y0 - delta);
    Rational hi = *x0 + delta < evaluate_line_inverse(h, y0 + delta)
                      ? *x0 + delta
                      : evaluate_line_inverse(h, y0 + delta);
    LineMap g = bump_line(Interval(lo, hi));
    Rational z = (lo + hi) / 2;
    if (evaluate_line(h, evaluate_line(g, z)) == evaluate_line(g, evaluate_line(h, z)))
        throw CertificateFailure("guided bump unexpectedly commutes");
    result.witness = g;
    return result;
}

// ---- circle maps (period 2) ----

namespace {

Rational reduce_mod2(const Rational& x, Rational* shift = nullptr) {
    Rational half = x / 2;
    Integer k = floor_div(half);
    Rational s = 2 * Rational(k);
    if (shift) *shift = s;
    return x - s;
}

std::vector<Point> circle_knots_window(const CircleMap& f) {
    // knot cycle over one period plus the wrap knot
    std::vector<Point> k = f.breaks;
    k.emplace_back(f.breaks.front().x + 2, f.breaks.front().y + 2);
    return k;
}

Rational rslope_circle(const CircleMap& f, const Rational& x);
Rational lslope_circle(const CircleMap& f, const Rational& x);

}  // namespace

CircleMap CircleMap::checked(std::vector<Point> breaks, Rational offset) {
    if (breaks.empty()) {
        CircleMap m;
        m.offset = std::move(offset);
        return m;
    }
    if (breaks.size() == 1)
        throw CollinearBreak(0, "a periodic map cannot have a single break per period");
    if (breaks.front().x < 0 || breaks.back().x >= 2)
        throw NonMonotone("circle break representatives must have x in [0,2)");
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (!(breaks[i].x < breaks[i + 1].x) || !(breaks[i].y < breaks[i + 1].y))
            throw NonMonotone("circle breaks must be strictly increasing");
    if (!(breaks.back().y < breaks.front().y + 2))
        throw NonMonotone("wrap segment must be increasing");
    CircleMap m;
    m.breaks = std::move(breaks);
    for (const Point& b : m.breaks)
        if (rslope_circle(m, b.x) == lslope_circle(m, b.x))
            throw CollinearBreak(0, "circle break at " + to_string(b.x) + " is not genuine");
    return m;
}

bool is_periodic_representative(const CircleMap& f) {
    try {
        CircleMap::checked(f.breaks, f.offset);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Rational evaluate_circle(const CircleMap& f, const Rational& x) {
    if (f.breaks.empty()) return x + f.offset;
    // shift x into [x_1, x_1 + 2)
    Rational shift;
    reduce_mod2(x - f.breaks.front().x, &shift);
    Rational x0 = x - shift;
    auto k = circle_knots_window(f);
    auto it = std::lower_bound(k.begin(), k.end(), x0,
                               [](const Point& p, const Rational& v) { return p.x < v; });
    if (it != k.end() && it->x == x0) return it->y + shift;
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    return lo.y + (x0 - lo.x) * seg_slope(lo, hi) + shift;
}

Rational evaluate_circle_inverse(const CircleMap& f, const Rational& y);

namespace {

Rational rslope_circle(const CircleMap& f, const Rational& x) {
    if (f.breaks.empty()) return Rational(1);
    Rational shift;
    reduce_mod2(x - f.breaks.front().x, &shift);
    Rational x0 = x - shift;
    auto k = circle_knots_window(f);
    auto it = std::upper_bound(k.begin(), k.end(), x0,
                               [](const Rational& v, const Point& p) { return v < p.x; });
    return seg_slope(*(it - 1), *it);
}

Rational lslope_circle(const CircleMap& f, const Rational& x) {
    if (f.breaks.empty()) return Rational(1);
    // approach from the left: reduce x into (x_1, x_1 + 2]
    Rational shift;
    Rational t = reduce_mod2(x - f.breaks.front().x, &shift);
    Rational x0 = x - shift;
    auto k = circle_knots_window(f);
    if (t == 0) {
        // left of the first break: the wrap segment
        return seg_slope(k[k.size() - 2], k.back());
    }
    auto it = std::lower_bound(k.begin(), k.end(), x0,
                               [](const Point& p, const Rational& v) { return p.x < v; });
    return seg_slope(*(it - 1), *it);
}

}  // namespace

Rational evaluate_circle_inverse(const CircleMap& f, const Rational& y) {
    if (f.breaks.empty()) return y - f.offset;
    Rational shift;
    reduce_mod2(y - f.breaks.front().y, &shift);
    Rational y0 = y - shift;
    auto k = circle_knots_window(f);
    auto it = std::lower_bound(k.begin(), k.end(), y0,
                               [](const Point& p, const Rational& v) { return p.y < v; });
    if (it != k.end() && it->y == y0) return it->x + shift;
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    return lo.x + (y0 - lo.y) / seg_slope(lo, hi) + shift;
}

CircleMap compose_circle(const CircleMap& f, const CircleMap& g) {
    std::vector<Rational> xs;
    for (const Point& b : g.breaks) xs.push_back(b.x);
    Rational g0 = evaluate_circle(g, Rational(0));
    for (const Point& b : f.breaks) {
        // representative of b's fiber inside [g(0), g(0)+2)
        Rational t = g0 + reduce_mod2(b.x - g0);
        xs.push_back(reduce_mod2(evaluate_circle_inverse(g, t)));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Point> breaks;
    for (const Rational& x : xs) {
        Rational gx = evaluate_circle(g, x);
        if (rslope_circle(f, gx) * rslope_circle(g, x) !=
            lslope_circle(f, gx) * lslope_circle(g, x))
            breaks.emplace_back(x, evaluate_circle(f, gx));
    }
    Rational offset(0);
    if (breaks.empty()) offset = evaluate_circle(f, evaluate_circle(g, Rational(0)));
    return CircleMap::checked(std::move(breaks), offset);
}

CircleMap invert_circle(const CircleMap& f) {
    if (f.breaks.empty()) return CircleMap::checked({}, -f.offset);
    std::vector<Point> swapped;
    for (const Point& p : f.breaks) {
        Rational shift;
        Rational x = reduce_mod2(p.y, &shift);
        swapped.emplace_back(x, p.x - shift);
    }
    std::sort(swapped.begin(), swapped.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    return CircleMap::checked(std::move(swapped));
}

CircleMap periodize(const PLMap& f) {
    std::vector<Point> breaks;
    if (right_slope(f, Rational(0)) != 1) breaks.emplace_back(Rational(0), Rational(0));
    for (const Point& b : f.breaks()) breaks.push_back(b);
    if (left_slope(f, Rational(1)) != 1) breaks.emplace_back(Rational(1), Rational(1));
    return CircleMap::checked(std::move(breaks));
}

CircleMap circle_rotation(const Rational& c) { return CircleMap::checked({}, c); }

}  // namespace plgroup
