#include "plgroup/escape_hoelder.hpp"

#include <algorithm>

namespace plgroup {

namespace {

// |a|^q >= n^q |b|^p, the violation side of the strict Hoelder comparison.
bool power_violates(const Rational& diff, const Rational& dist, const Rational& n,
                    const HoelderExponent& eps) {
    Rational lhs = pow_rational(abs_rational(diff), static_cast<unsigned long>(eps.q));
    Rational rhs = pow_rational(n, static_cast<unsigned long>(eps.q)) *
                   pow_rational(abs_rational(dist), static_cast<unsigned long>(eps.p));
    return lhs >= rhs;
}

// Profile knots restricted to closure(J), with interpolated values at the
// cut points.
std::vector<Point> knots_on(const PQMap& g, const Interval& J) {
    std::vector<Point> out;
    out.emplace_back(J.lo, derivative_at(g, J.lo));
    for (const Point& p : g.profile())
        if (p.x > J.lo && p.x < J.hi) out.push_back(p);
    out.emplace_back(J.hi, derivative_at(g, J.hi));
    return out;
}

// Max |slope| of the derivative profile over J.
Rational max_profile_slope(const PQMap& g, const Interval& J) {
    const auto& pr = g.profile();
    Rational best(0);
    for (std::size_t i = 0; i + 1 < pr.size(); ++i) {
        Rational lo = pr[i].x > J.lo ? pr[i].x : J.lo;
        Rational hi = pr[i + 1].x < J.hi ? pr[i + 1].x : J.hi;
        if (!(lo < hi)) continue;
        Rational s = abs_rational((pr[i + 1].y - pr[i].y) / (pr[i + 1].x - pr[i].x));
        if (s > best) best = s;
    }
    return best;
}

Rational min_profile_value(const PQMap& g, const Interval& J) {
    auto ks = knots_on(g, J);
    Rational best = ks.front().y;
    for (const Point& p : ks)
        if (p.y < best) best = p.y;
    return best;
}

}  // namespace

HoelderExponent HoelderExponent::checked(long p, long q) {
    if (p <= 0 || q <= 0 || p >= q) throw OutOfDomain("exponent must satisfy 0 < p/q < 1");
    Integer g;
    mpz_gcd(g.get_mpz_t(), Integer(p).get_mpz_t(), Integer(q).get_mpz_t());
    if (g != 1) throw OutOfDomain("exponent p/q must be in lowest terms");
    return HoelderExponent{p, q};
}

PQMap::PQMap() {
    profile_.emplace_back(Rational(0), Rational(1));
    profile_.emplace_back(Rational(1), Rational(1));
}

PQMap PQMap::from_profile(std::vector<Point> profile) {
    if (profile.size() < 2 || profile.front().x != 0 || profile.back().x != 1)
        throw OutOfDomain("derivative profile must span [0,1]");
    for (std::size_t i = 0; i + 1 < profile.size(); ++i)
        if (!(profile[i].x < profile[i + 1].x))
            throw OutOfDomain("profile knots must be strictly increasing");
    for (const Point& p : profile)
        if (!(p.y > 0)) throw NonPositiveDerivative("derivative value " + to_string(p.y));
    if (profile_integral(profile, Rational(0), Rational(1)) != 1)
        throw AreaMismatch("derivative must integrate to 1 over [0,1]");
    PQMap m;
    m.profile_ = std::move(profile);
    return m;
}

Rational derivative_at(const PQMap& f, const Rational& x) {
    if (x < 0 || x > 1) throw OutOfDomain("derivative at " + to_string(x));
    const auto& pr = f.profile();
    auto it = std::lower_bound(pr.begin(), pr.end(), x,
                               [](const Point& p, const Rational& v) { return p.x < v; });
    if (it->x == x) return it->y;
    const Point& hi = *it;
    const Point& lo = *(it - 1);
    return lo.y + (x - lo.x) * (hi.y - lo.y) / (hi.x - lo.x);
}

Rational profile_integral(const std::vector<Point>& profile, const Rational& lo,
                          const Rational& hi) {
    Rational acc(0);
    for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
        Rational a = profile[i].x > lo ? profile[i].x : lo;
        Rational b = profile[i + 1].x < hi ? profile[i + 1].x : hi;
        if (!(a < b)) continue;
        Rational slope = (profile[i + 1].y - profile[i].y) / (profile[i + 1].x - profile[i].x);
        Rational va = profile[i].y + (a - profile[i].x) * slope;
        Rational vb = profile[i].y + (b - profile[i].x) * slope;
        acc += (b - a) * (va + vb) / 2;
    }
    return acc;
}

Rational evaluate(const PQMap& f, const Rational& x) {
    if (x < 0 || x > 1) throw OutOfDomain("evaluate at " + to_string(x));
    return profile_integral(f.profile(), Rational(0), x);
}

Rational max_derivative(const PQMap& f) {
    Rational best = f.profile().front().y;
    for (const Point& p : f.profile())
        if (p.y > best) best = p.y;
    return best;
}

PQMap antiderivative_map(const std::vector<Point>& profile_on_J, const Interval& J) {
    if (profile_on_J.size() < 2 || profile_on_J.front().x != J.lo ||
        profile_on_J.back().x != J.hi)
        throw OutOfDomain("profile must span the closure of J");
    for (const Point& p : profile_on_J)
        if (!(p.y > 0)) throw NonPositiveDerivative("derivative value " + to_string(p.y));
    Rational area = profile_integral(profile_on_J, J.lo, J.hi);
    if (area != J.length())
        throw AreaMismatch("integral " + to_string(area) + " != length " + to_string(J.length()));
    if (J.lo > 0 && profile_on_J.front().y != 1)
        throw OutOfDomain("junction derivative at " + to_string(J.lo) + " must be 1");
    if (J.hi < 1 && profile_on_J.back().y != 1)
        throw OutOfDomain("junction derivative at " + to_string(J.hi) + " must be 1");

    std::vector<Point> full;
    if (J.lo > 0) full.emplace_back(Rational(0), Rational(1));
    full.insert(full.end(), profile_on_J.begin(), profile_on_J.end());
    if (J.hi < 1) full.emplace_back(Rational(1), Rational(1));
    return PQMap::from_profile(std::move(full));
}

SeparatedFamily SeparatedFamily::checked(std::vector<Interval> intervals) {
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (intervals[i].lo < 0 || intervals[i].hi > 1)
            throw DegenerateInterval("family interval outside [0,1]");
        for (std::size_t j = i + 1; j < intervals.size(); ++j) {
            if (!disjoint_open(intervals[i], intervals[j]))
                throw SeparationViolated("intervals overlap");
            Rational g = gap(intervals[i], intervals[j]);
            Rational need = intervals[i].length() > intervals[j].length()
                                ? intervals[i].length()
                                : intervals[j].length();
            if (g < need)
                throw SeparationViolated("gap " + to_string(g) + " below max length " +
                                         to_string(need));
        }
    }
    return SeparatedFamily{std::move(intervals)};
}

Hoelder3 hoelder_case_test(const PQMap& g, const Interval& J, long n,
                           const HoelderExponent& eps) {
    auto ks = knots_on(g, J);
    for (std::size_t i = 0; i < ks.size(); ++i)
        for (std::size_t j = i + 1; j < ks.size(); ++j)
            if (power_violates(ks[i].y - ks[j].y, ks[i].x - ks[j].x, rat(n), eps))
                return Hoelder3::No;
    // Sufficient bound: |g'(x)-g'(y)| <= S|x-y| <= S l^{1-eps} |x-y|^eps.
    Rational S = max_profile_slope(g, J);
    Rational lhs = pow_rational(S, static_cast<unsigned long>(eps.q)) *
                   pow_rational(J.length(), static_cast<unsigned long>(eps.q - eps.p));
    if (lhs <= pow_rational(rat(n), static_cast<unsigned long>(eps.q))) return Hoelder3::Yes;
    return Hoelder3::Unknown;
}

Hoelder3 hoelder_case_test_inverse(const PQMap& g, const Interval& J, long n,
                                   const HoelderExponent& eps) {
    auto ks = knots_on(g, J);
    std::vector<Point> img;  // (g(x), 1/g'(x)) at the same knots
    for (const Point& p : ks) img.emplace_back(evaluate(g, p.x), 1 / p.y);
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (power_violates(img[i].y - img[j].y, img[i].x - img[j].x, rat(n), eps))
                return Hoelder3::No;
    // (g^{-1})' has Lipschitz constant at most S / m^3 on g(J), m = min g'.
    Rational S = max_profile_slope(g, J);
    Rational m = min_profile_value(g, J);
    Rational S_inv = S / (m * m * m);
    Rational len = evaluate(g, J.hi) - evaluate(g, J.lo);
    Rational lhs = pow_rational(S_inv, static_cast<unsigned long>(eps.q)) *
                   pow_rational(len, static_cast<unsigned long>(eps.q - eps.p));
    if (lhs <= pow_rational(rat(n), static_cast<unsigned long>(eps.q))) return Hoelder3::Yes;
    return Hoelder3::Unknown;
}

namespace {

struct Case2Data {
    bool active = false;
    Rational len;
    Rational len_eps;  // l^eps, rational by the q-th-power length convention
};

Case2Data classify(const PQMap& g, const Interval& jk, long n, const HoelderExponent& eps) {
    Case2Data d;
    Rational len = jk.length();
    auto root = exact_root(len, static_cast<unsigned long>(eps.q));
    if (!root)
        throw IrrationalPower("interval length " + to_string(len) + " is not a rational " +
                              std::to_string(eps.q) + "-th power");
    d.len = len;
    d.len_eps = pow_rational(*root, static_cast<unsigned long>(eps.p));
    Hoelder3 fwd = hoelder_case_test(g, jk, n, eps);
    Hoelder3 inv = hoelder_case_test_inverse(g, jk, n, eps);
    if (fwd == Hoelder3::Unknown || inv == Hoelder3::Unknown)
        throw CaseUndecided("adversary Hoelder class undecided on " + to_string(jk.lo) + ".." +
                            to_string(jk.hi));
    d.active = (fwd == Hoelder3::Yes && inv == Hoelder3::Yes);
    return d;
}

// The five-knot symmetric spike profile on J: dip to 1 - l^eps at distance
// delta = l/(2(n+1)^4) either side of the apex 1 + l^eps (n+1)^4 at the
// midpoint.
std::vector<Point> spike_profile(const Interval& jk, const Rational& len_eps, long n) {
    Rational K = pow_rational(rat(n + 1), 4);
    Rational delta = jk.length() / (2 * K);
    Rational xk = jk.midpoint();
    std::vector<Point> pr;
    pr.emplace_back(jk.lo, Rational(1));
    pr.emplace_back(xk - delta, 1 - len_eps);
    pr.emplace_back(xk, 1 + len_eps * K);
    pr.emplace_back(xk + delta, 1 - len_eps);
    pr.emplace_back(jk.hi, Rational(1));
    return pr;
}

}  // namespace

PQMap build_escape_hoelder(long n, const HoelderExponent& eps, const SeparatedFamily& J,
                           const std::vector<PQMap>& adversaries) {
    if (n < 1) throw OutOfDomain("escape construction needs n >= 1");
    if (adversaries.size() != J.intervals.size())
        throw ArityMismatch("one adversary per interval required");
    SeparatedFamily::checked(J.intervals);

    std::vector<std::size_t> order(J.intervals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return J.intervals[a].lo < J.intervals[b].lo;
    });

    std::vector<Point> profile;
    profile.emplace_back(Rational(0), Rational(1));
    for (std::size_t k : order) {
        const Interval& jk = J.intervals[k];
        Case2Data d = classify(adversaries[k], jk, n, eps);
        if (!d.active) continue;
        for (Point& p : spike_profile(jk, d.len_eps, n)) {
            if (profile.back().x == p.x) continue;  // shared junction knot
            profile.push_back(std::move(p));
        }
    }
    if (profile.back().x != 1) profile.emplace_back(Rational(1), Rational(1));
    return PQMap::from_profile(std::move(profile));
}

HoelderCertificate verify_escape_hoelder(const PQMap& f, long n, const HoelderExponent& eps,
                                         const SeparatedFamily& J,
                                         const std::vector<PQMap>& adversaries) {
    if (adversaries.size() != J.intervals.size())
        throw ArityMismatch("one adversary per interval required");
    SeparatedFamily::checked(J.intervals);

    HoelderCertificate cert;
    cert.f = f;
    cert.n = n;
    cert.eps = eps;
    cert.family = J;
    cert.adversaries = adversaries;
    Rational K = pow_rational(rat(n + 1), 4);
    cert.holder_constant = 2 * (K + 1) * K;

    unsigned long up = static_cast<unsigned long>(eps.p);
    unsigned long uq = static_cast<unsigned long>(eps.q);

    struct ActiveInterval {
        std::size_t k;
        Interval j;
        Rational len_eps;
    };
    std::vector<ActiveInterval> active;

    for (std::size_t k = 0; k < J.intervals.size(); ++k) {
        const Interval& jk = J.intervals[k];
        const PQMap& g = adversaries[k];
        Case2Data d = classify(g, jk, n, eps);
        HoelderRecord rec;
        rec.k = k;
        rec.witness_a = jk.lo;
        rec.witness_x = jk.midpoint();
        if (d.active) {
            rec.case_id = 2;
            Rational fx = derivative_at(f, rec.witness_x);
            Rational fa = derivative_at(f, rec.witness_a);
            Rational gx = derivative_at(g, rec.witness_x);
            Rational ga = derivative_at(g, rec.witness_a);
            rec.lhs = abs_rational(fx / gx - fa / ga);
            rec.rhs_base = abs_rational(evaluate(g, rec.witness_x) - evaluate(g, rec.witness_a));
            rec.lhs_pow = pow_rational(rec.lhs, uq);
            rec.rhs_pow = pow_rational(rat(n * (n + 1)), uq) * pow_rational(rec.rhs_base, up);
            if (!(rec.lhs_pow > rec.rhs_pow))
                throw CertificateFailure("interval " + std::to_string(k) +
                                         ": violation comparison fails, lhs^q = " +
                                         to_string(rec.lhs_pow) + " vs " + to_string(rec.rhs_pow));
            active.push_back({k, jk, d.len_eps});
        } else {
            rec.case_id = 1;
            // f' must be identically 1 on J_k so the adversary's own failure
            // transfers to f g^{-1}.
            bool flat = derivative_at(f, jk.lo) == 1 && derivative_at(f, jk.hi) == 1;
            for (const Point& p : f.profile())
                if (p.x > jk.lo && p.x < jk.hi && p.y != 1) flat = false;
            if (!flat)
                throw CertificateFailure("interval " + std::to_string(k) +
                                         ": case-1 coincidence fails, f' is not 1 there");
        }
        cert.per_k.push_back(std::move(rec));
    }

    // Global Hoelder bound on f': junctions, per-interval segment slopes and
    // knot pairs, then the cross-interval substitution inequalities.
    for (const auto& ai : active) {
        if (derivative_at(f, ai.j.lo) != 1 || derivative_at(f, ai.j.hi) != 1)
            throw CertificateFailure("junction derivative differs from 1 at interval " +
                                     std::to_string(ai.k));
        Rational slope_bound = cert.holder_constant * ai.len_eps / ai.j.length();
        const auto& pr = f.profile();
        for (std::size_t i = 0; i + 1 < pr.size(); ++i) {
            Rational lo = pr[i].x > ai.j.lo ? pr[i].x : ai.j.lo;
            Rational hi = pr[i + 1].x < ai.j.hi ? pr[i + 1].x : ai.j.hi;
            if (!(lo < hi)) continue;
            Rational s = abs_rational((pr[i + 1].y - pr[i].y) / (pr[i + 1].x - pr[i].x));
            if (!(s <= slope_bound))
                throw CertificateFailure("segment slope " + to_string(s) +
                                         " exceeds C l^{eps-1} on interval " +
                                         std::to_string(ai.k));
        }
        // two-point bound |f'(x)-f'(y)|^q <= C^q |x-y|^p on knot pairs
        auto ks = knots_on(f, ai.j);
        Rational Cq = pow_rational(cert.holder_constant, uq);
        for (std::size_t i = 0; i < ks.size(); ++i)
            for (std::size_t j = i + 1; j < ks.size(); ++j) {
                Rational lhs = pow_rational(abs_rational(ks[i].y - ks[j].y), uq);
                Rational rhs = Cq * pow_rational(abs_rational(ks[i].x - ks[j].x), up);
                if (!(lhs <= rhs))
                    throw CertificateFailure("two-point Hoelder bound fails inside interval " +
                                             std::to_string(ai.k));
            }
    }

    // Cross-interval substitution: for x in J_k, y in J_p with l_k >= l_p,
    // the point z in {x_k, y_k} satisfies |f'(x)-f'(z)| >= |f'(x)-f'(y)| and
    // |x-z| <= l_k <= |x-y|.
    for (const auto& a : active) {
        for (const auto& b : active) {
            if (a.k == b.k || a.j.length() < b.j.length()) continue;
            Rational xk = a.j.midpoint();
            Rational yk = xk + a.j.length() / (2 * K);
            Rational f_xk = derivative_at(f, xk);
            Rational f_yk = derivative_at(f, yk);
            for (const Point& px : knots_on(f, a.j))
                for (const Point& py : knots_on(f, b.j)) {
                    Rational z = px.y >= py.y ? yk : xk;
                    Rational fz = px.y >= py.y ? f_yk : f_xk;
                    if (!(abs_rational(px.y - fz) >= abs_rational(px.y - py.y)))
                        throw CertificateFailure("substitution value inequality fails between " +
                                                 std::to_string(a.k) + " and " +
                                                 std::to_string(b.k));
                    Rational dist = abs_rational(px.x - py.x);
                    if (!(abs_rational(px.x - z) <= a.j.length() && a.j.length() <= dist))
                        throw CertificateFailure("substitution distance inequality fails between " +
                                                 std::to_string(a.k) + " and " +
                                                 std::to_string(b.k));
                }
        }
    }

    // Dip ordering under decreasing length: longer intervals dip lower and
    // spike higher.
    for (const auto& a : active)
        for (const auto& b : active)
            if (a.j.length() >= b.j.length() && a.k != b.k) {
                if (!(1 - a.len_eps <= 1 - b.len_eps) ||
                    !(derivative_at(f, a.j.midpoint()) >= derivative_at(f, b.j.midpoint())))
                    throw CertificateFailure("length-monotone ordering fails");
            }

    return cert;
}

bool derivative_sup_bound_check(const PQMap& f, long n, const HoelderExponent& eps) {
    if (hoelder_case_test(f, Interval(Rational(0), Rational(1)), n, eps) != Hoelder3::Yes)
        return true;  // nothing asserted unless the derivative is certified n-Hoelder
    return max_derivative(f) <= n + 1;
}

long compose_hoelder_bound(long n, const HoelderExponent& eps) {
    if (n == 0) return 1;
    unsigned long uq = static_cast<unsigned long>(eps.q);
    // least m with (m - n(n+1))^q > n^q (n+1)^{q+p}
    Integer rhs = pow_integer(Integer(n), uq) *
                  pow_integer(Integer(n + 1), static_cast<unsigned long>(eps.q + eps.p));
    Integer base = n * static_cast<long>(n + 1);
    Integer root;
    mpz_root(root.get_mpz_t(), rhs.get_mpz_t(), uq);
    Integer m = base + root;
    while (!(pow_integer(m - base, uq) > rhs) || m <= base) ++m;
    return static_cast<long>(m.get_si());
}

}  // namespace plgroup
