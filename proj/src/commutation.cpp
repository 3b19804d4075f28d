#include "plgroup/commutation.hpp"

#include <algorithm>

namespace plgroup {

namespace {

// Random open subinterval of J with endpoints on the seeded fraction grid.
Interval random_subinterval(const Interval& J, long dbound, Rng& rng) {
    for (;;) {
        Rational a = rng.unit_fraction(dbound);
        Rational b = rng.unit_fraction(dbound);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        Rational len = J.hi - J.lo;
        return Interval(J.lo + a * len, J.lo + b * len);
    }
}

}  // namespace

PLMap bump(const Interval& U) {
    if (U.lo < 0 || U.hi > 1)
        throw DegenerateInterval("bump interval must lie inside [0,1]");
    Rational m = U.midpoint();
    std::vector<Point> pts;
    if (U.lo > 0) pts.emplace_back(U.lo, U.lo);
    pts.emplace_back(m, m + U.length() / 8);
    if (U.hi < 1) pts.emplace_back(U.hi, U.hi);
    return PLMap::from_breaks(std::move(pts));
}

PLMap commutator(const PLMap& f, const PLMap& g) {
    return compose(compose(f, g), compose(invert(f), invert(g)));
}

std::vector<Interval> support(const PLMap& f) {
    // Fixed set = union of closed intervals (isolated fixed points are
    // degenerate entries, tracked as lo == hi pairs); the support is its
    // open complement in [0,1].
    auto k = f.knots();
    std::vector<std::pair<Rational, Rational>> fixed;
    fixed.emplace_back(Rational(0), Rational(0));
    fixed.emplace_back(Rational(1), Rational(1));
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        const Point& a = k[i];
        const Point& b = k[i + 1];
        Rational s = (b.y - a.y) / (b.x - a.x);
        if (s == 1) {
            if (a.y == a.x) fixed.emplace_back(a.x, b.x);  // diagonal segment
        } else {
            Rational cross = a.x + (a.x - a.y) / (s - 1);
            if (cross >= a.x && cross <= b.x) fixed.emplace_back(cross, cross);
        }
    }
    std::sort(fixed.begin(), fixed.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& iv : fixed) {
        if (!merged.empty() && iv.first <= merged.back().second) {
            if (iv.second > merged.back().second) merged.back().second = iv.second;
        } else {
            merged.push_back(iv);
        }
    }
    std::vector<Interval> out;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        if (merged[i].second < merged[i + 1].first)
            out.emplace_back(merged[i].second, merged[i + 1].first);
    }
    return out;
}

bool supports_disjoint(const PLMap& f, const PLMap& g) {
    for (const Interval& a : support(f))
        for (const Interval& b : support(g))
            if (!disjoint_open(a, b)) return false;
    return true;
}

std::optional<NonCommuteWitness> noncommute_witness(const PLMap& f, const Interval& W) {
    std::optional<Interval> moved;
    for (const Interval& comp : support(f)) {
        moved = intersect_open(comp, W);
        if (moved) break;
    }
    if (!moved) return std::nullopt;

    Rational x = moved->midpoint();
    Rational y = evaluate(f, x);
    Rational delta = abs_rational(y - x) / 4;  // 2 delta < |y - x|

    Rational ylo = y - delta < 0 ? Rational(0) : y - delta;
    Rational yhi = y + delta > 1 ? Rational(1) : y + delta;
    Interval near_x(x - delta < 0 ? Rational(0) : x - delta, x + delta > 1 ? Rational(1) : x + delta);
    Interval pre_y(evaluate_inverse(f, ylo), evaluate_inverse(f, yhi));
    Interval w_prime = *intersect_open(*intersect_open(W, near_x), pre_y);
    // w_prime contains x and f(w_prime) is disjoint from it

    PLMap g = bump(w_prime);
    Rational z = w_prime.midpoint();
    NonCommuteWitness w;
    w.w_prime = w_prime;
    w.bump_map = g;
    w.z = z;
    w.left = evaluate(f, evaluate(g, z));
    w.right = evaluate(g, evaluate(f, z));
    if (w.left == w.right) throw CertificateFailure("witness construction produced equal values");
    return w;
}

bool cuv_direct(const PLMap& f, const Interval& U, const Interval& V) {
    Interval img = image_closure(f, U);
    return img.lo >= V.lo && img.hi <= V.hi;
}

CuvProbeResult cuv_commutator_probe(const PLMap& f, const Interval& U, const Interval& V,
                                    const SampleConfig& cfg) {
    std::vector<Interval> complement;
    if (V.lo > 0) complement.emplace_back(Rational(0), V.lo);
    if (V.hi < 1) complement.emplace_back(V.hi, Rational(1));
    if (complement.empty()) throw VacuousCase("closure of V is all of [0,1]");

    CuvProbeResult result;
    if (cuv_direct(f, U, V)) {
        PLMap finv = invert(f);
        for (long t = 0; t < cfg.trials; ++t) {
            Rng rng = Rng::split(cfg.seed, static_cast<std::uint64_t>(t));
            Interval u_prime = random_subinterval(U, cfg.denominator_bound, rng);
            const Interval& comp =
                complement[rng.below(static_cast<std::uint64_t>(complement.size()))];
            Interval w_prime = random_subinterval(comp, cfg.denominator_bound, rng);
            PLMap inner = compose3(f, bump(u_prime), finv);
            ++result.probes_run;
            if (!commutator(inner, bump(w_prime)).is_identity()) {
                result.violation = {u_prime, w_prime};
                return result;
            }
        }
        result.member = true;
        return result;
    }

    // Direct check failed: follow the reverse direction of the set identity.
    // Some open part of U maps into the complement of closure(V); a bump
    // there conjugates to a map moving points of the complement, and the
    // witness finder produces the non-commuting partner.
    for (const Interval& comp : complement) {
        Rational lo = U.lo > evaluate_inverse(f, comp.lo) ? U.lo : evaluate_inverse(f, comp.lo);
        Rational hi = U.hi < evaluate_inverse(f, comp.hi) ? U.hi : evaluate_inverse(f, comp.hi);
        if (!(lo < hi)) continue;
        Interval u_prime(lo, hi);
        PLMap inner = compose3(f, bump(u_prime), invert(f));
        auto w = noncommute_witness(inner, comp);
        if (w) {
            result.violation = {u_prime, w->w_prime};
            return result;
        }
    }
    throw CertificateFailure("guided search failed to find a violating pair");
}

}  // namespace plgroup
