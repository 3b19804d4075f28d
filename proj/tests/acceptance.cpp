// Acceptance gate: one line per criterion, PASS or FAIL, exit code = number
// of failures.  All thresholds are fixed here, not configurable.
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "plgroup/serialization.hpp"

using namespace plgroup;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS criterion " << number << ": " << title << "\n";
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "FAIL criterion " << number << ": " << title << " -- " << e.what() << "\n";
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

PLMap mk(std::initializer_list<std::pair<Rational, Rational>> pts) {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back(Point{x, y});
    return PLMap::from_breaks(std::move(v));
}

constexpr long kDenomBound = 1000000;

// Shared sample set for criteria 1 and 2.
struct Pair {
    PLMap f, g;
};

std::vector<Pair> algebra_samples() {
    std::vector<Pair> out;
    out.reserve(1000);
    for (int t = 0; t < 1000; ++t) {
        Rng rng = Rng::split(100, static_cast<std::uint64_t>(t));
        Pair p;
        p.f = sample_An(rng.below(9), kDenomBound, rng);
        p.g = sample_An(rng.below(9), kDenomBound, rng);
        out.push_back(std::move(p));
    }
    return out;
}

void check_criterion_1(const std::vector<Pair>& samples) {
    int t = 0;
    for (const auto& [f, g] : samples) {
        Rng rng = Rng::split(101, static_cast<std::uint64_t>(t++));
        PLMap h = sample_An(2, 1000, rng);
        require(compose(compose(f, g), h) == compose(f, compose(g, h)), "associativity");
        require(compose(f, invert(f)).is_identity(), "inverse law");
        require(invert(invert(f)) == f, "double inverse");

        PLMap fg = compose(f, g);
        std::vector<Rational> grid;
        for (const auto& b : g.breaks()) grid.push_back(b.x);
        for (const auto& b : f.breaks()) grid.push_back(evaluate_inverse(g, b.x));
        for (const auto& b : fg.breaks()) grid.push_back(b.x);
        grid.push_back(rat(1, 3));
        grid.push_back(rat(7, 11));
        for (const auto& x : grid) {
            require(evaluate(fg, x) == evaluate(f, evaluate(g, x)), "pointwise composition");
            if (x > 0 && x < 1)
                require(slope_ratio(fg, x) ==
                            slope_ratio(f, evaluate(g, x)) * slope_ratio(g, x),
                        "chain rule");
        }
    }
}

void check_criterion_2(const std::vector<Pair>& samples) {
    for (const auto& [f, g] : samples) {
        PLMap fg = compose(f, g);
        require(fg.break_count() <= f.break_count() + g.break_count(), "break bound");
        for (const auto& b : fg.breaks()) {
            bool candidate = false;
            for (const auto& bg : g.breaks()) candidate |= bg.x == b.x;
            for (const auto& bf : f.breaks()) candidate |= evaluate(g, b.x) == bf.x;
            require(candidate, "break containment");
        }
    }
    PLMap f = mk({{rat(1, 2), rat(1, 4)}});
    PLMap g = mk({{rat(1, 3), rat(1, 2)}});
    require(compose(f, g).break_count() == 1, "cancellation pair break count");
}

void check_criterion_3() {
    PLMap f = mk({{rat(1, 2), rat(1, 4)}});
    for (std::size_t m : {1u, 2u, 3u}) {
        SampleConfig cfg;
        cfg.seed = 300 + m;
        cfg.trials = 1000;
        cfg.denominator_bound = 1000;
        CategoryReport r = category_experiment(f, m, cfg);
        require(Rational(r.maximal_count, r.trials) >= rat(99, 100),
                "maximal fraction below 0.99 at m=" + std::to_string(m));
        for (const auto& d : r.deficient) {
            require(compose(f, d.g).break_count() == d.product_breaks, "deficient recount");
            require(hits_break_hyperplane(f, d.g), "deficient trial misses the hyperplane");
        }
    }
}

void check_criterion_4() {
    for (int t = 0; t < 200; ++t) {
        Rng rng = Rng::split(400, static_cast<std::uint64_t>(t));
        PLMap f = sample_An(rng.below(21), kDenomBound, rng);
        Factorization fac = factor_one_break(f);
        require(fac.factors.size() == f.break_count(), "factor count");
        for (const auto& g : fac.factors) require(is_in_Bn(g, 1), "factor break count");
        require(compose_all(fac.factors) == f, "reconstruction");
        PLMap h = f;
        while (!h.is_identity()) {
            PLMap g = peel_factor(h);
            PLMap next = compose(h, invert(g));
            require(next.break_count() + 1 == h.break_count(), "peel step off by one");
            h = next;
        }
    }
}

void check_criterion_5() {
    std::vector<Interval> js;
    for (int k = 0; k < 10; ++k) js.emplace_back(rat(2 * k, 21), rat(2 * k + 1, 21));
    IntervalFamily family = IntervalFamily::checked(js);
    for (long n : {2L, 3L, 5L}) {
        std::vector<PLMap> adv;
        for (int k = 0; k < 10; ++k) {
            if (k % 2 == 0) {
                adv.push_back(PLMap{});  // case 2
            } else {  // slope 25 inside J_k: case 1 for every n <= 5
                adv.push_back(build_escape_lip(5, IntervalFamily::checked({js[k]}), {PLMap{}}));
            }
        }
        PLMap f = build_escape_lip(n, family, adv);
        LipEscapeCertificate cert = verify_escape_lip(f, n, family, adv);
        require(cert.bilipschitz <= n * n + 1, "bilipschitz bound");
        require(cert.per_k.size() == 10, "per-interval records");
        for (int k = 0; k < 10; ++k) {
            require(cert.per_k[k].case_id == (k % 2 == 0 ? 2 : 1), "case split");
            if (k % 2 == 0)
                require(max_slope_on(f, js[k]) == n * n, "exact case-2 max slope");
            require(cert.per_k[k].quotient > n, "violation quotient");
        }
    }
    LipEscapeCertificate canonical = verify_escape_lip(
        build_escape_lip(2, IntervalFamily::checked({Interval(rat(0), rat(1))}), {PLMap{}}),
        2, IntervalFamily::checked({Interval(rat(0), rat(1))}), {PLMap{}});
    require(canonical.per_k[0].quotient == 4, "canonical quotient is 4");
}

SeparatedFamily spaced_family(long q) {
    // five intervals of exact q-th-power lengths (1/(k+4))^q, laid out with
    // gaps equal to the largest length
    std::vector<Interval> js;
    Rational lmax = pow_rational(rat(1, 4), static_cast<unsigned long>(q));
    Rational lo = rat(1, 100);
    for (int k = 0; k < 5; ++k) {
        Rational len = pow_rational(rat(1, k + 4), static_cast<unsigned long>(q));
        js.emplace_back(lo, lo + len);
        lo += len + lmax;
    }
    return SeparatedFamily::checked(js);
}

void check_criterion_6() {
    struct Case {
        long n, p, q;
    };
    for (const Case c : {Case{1, 1, 2}, Case{2, 1, 2}, Case{1, 1, 3}}) {
        HoelderExponent eps = HoelderExponent::checked(c.p, c.q);
        SeparatedFamily J = spaced_family(c.q);
        std::vector<PQMap> adv;
        for (int k = 0; k < 5; ++k) {
            if (k % 2 == 0) {
                adv.push_back(PQMap{});  // case 2
            } else {  // a spike on J_k escapes the class: case 1
                adv.push_back(build_escape_hoelder(
                    c.n, eps, SeparatedFamily::checked({J.intervals[k]}), {PQMap{}}));
            }
        }
        PQMap f = build_escape_hoelder(c.n, eps, J, adv);
        HoelderCertificate cert = verify_escape_hoelder(f, c.n, eps, J, adv);
        Rational K = pow_rational(rat(c.n + 1), 4);
        require(cert.holder_constant == 2 * (K + 1) * K, "Hoelder constant");
        for (int k = 0; k < 5; ++k) {
            const Interval& jk = J.intervals[k];
            require(derivative_at(f, jk.lo) == 1 && derivative_at(f, jk.hi) == 1,
                    "junction derivative");
            require(evaluate(f, jk.hi) - evaluate(f, jk.lo) == jk.length(), "area identity");
            require(cert.per_k[k].case_id == (k % 2 == 0 ? 2 : 1), "case split");
            if (k % 2 == 0)
                require(cert.per_k[k].lhs_pow > cert.per_k[k].rhs_pow, "strict violation");
        }
    }
    // canonical instance: n=1, eps=1/2, J=(0,1/16), identity adversary
    HoelderExponent eps = HoelderExponent::checked(1, 2);
    SeparatedFamily J = SeparatedFamily::checked({Interval(rat(0), rat(1, 16))});
    HoelderCertificate cert =
        verify_escape_hoelder(build_escape_hoelder(1, eps, J, {PQMap{}}), 1, eps, J, {PQMap{}});
    require(cert.per_k[0].lhs_pow == 16 && cert.per_k[0].rhs_pow == rat(1, 8),
            "canonical comparison 16 > 1/8");
}

void check_criterion_7() {
    int witnessed = 0;
    for (int t = 0; witnessed < 100; ++t) {
        require(t < 2000, "witness sampling exhausted");
        Rng rng = Rng::split(700, static_cast<std::uint64_t>(t));
        PLMap f = sample_An(1 + rng.below(4), 1000, rng);
        Rational a = rng.unit_fraction(40);
        Rational b = rng.unit_fraction(40);
        if (a == b) continue;
        Interval W(std::min(a, b), std::max(a, b));
        bool moves = false;
        for (const auto& s : support(f))
            if (intersect_open(s, W)) moves = true;
        if (!moves) continue;
        auto w = noncommute_witness(f, W);
        require(w.has_value(), "missing witness");
        require(w->left != w->right, "witness not separating");
        require(w->left == evaluate(f, evaluate(w->bump_map, w->z)), "witness left value");
        require(w->right == evaluate(w->bump_map, evaluate(f, w->z)), "witness right value");
        ++witnessed;
    }

    int direct_true = 0, direct_false = 0;
    for (int t = 0; direct_true + direct_false < 100; ++t) {
        require(t < 2000, "containment sampling exhausted");
        Rng rng = Rng::split(707, static_cast<std::uint64_t>(t));
        PLMap f = sample_An(1 + rng.below(3), 1000, rng);
        Rational ua = rng.unit_fraction(30), ub = rng.unit_fraction(30);
        if (ua == ub) continue;
        Interval U(std::min(ua, ub), std::max(ua, ub));
        Rational vhi = rng.unit_fraction(30);  // V = (0, vhi): closure never all of [0,1]
        Interval V(rat(0), vhi);
        SampleConfig cfg;
        cfg.seed = 7000 + static_cast<std::uint64_t>(t);
        cfg.trials = 50;
        bool direct = cuv_direct(f, U, V);
        CuvProbeResult probe = cuv_commutator_probe(f, U, V, cfg);
        require(probe.member == direct, "probe disagrees with the direct check");
        if (direct) {
            require(probe.probes_run == 50, "probe count");
            ++direct_true;
        } else {
            require(probe.violation.has_value(), "no violating pair found");
            auto [up, wp] = *probe.violation;
            PLMap inner = compose3(f, bump(up), invert(f));
            require(!commutator(inner, bump(wp)).is_identity(), "violating pair commutes");
            ++direct_false;
        }
    }
    require(direct_true > 0 && direct_false > 0, "containment sample mix degenerate");
}

void check_criterion_8() {
    for (int t = 0; t < 100; ++t) {
        Rng rng = Rng::split(800, static_cast<std::uint64_t>(t));
        PLMap f = sample_An(1 + rng.below(4), 1000, rng);
        PLMap g = sample_An(1 + rng.below(4), 1000, rng);
        require(embed_interval(compose(f, g)) ==
                    compose_line(embed_interval(f), embed_interval(g)),
                "embedding homomorphism");
        CircleMap c = compose_circle(periodize(f), periodize(g));
        require(is_periodic_representative(c), "periodicity under composition");
        Rational x = rng.unit_fraction(100);
        require(evaluate_circle(c, x + 2) == evaluate_circle(c, x) + 2, "periodic values");

        SampleConfig cfg;
        cfg.seed = 8000 + static_cast<std::uint64_t>(t);
        cfg.trials = 5;
        require(centralizer_membership_probe(embed_interval(f), cfg).member,
                "embedded map rejected by the centralizer probe");
    }
    SampleConfig cfg;
    cfg.seed = 888;
    cfg.trials = 5;
    auto refuted = centralizer_membership_probe(LineMap::translation(rat(2)), cfg);
    require(!refuted.member && refuted.witness.has_value(), "translation witness");
    LineMap t2 = LineMap::translation(rat(2));
    require(compose_line(t2, *refuted.witness) != compose_line(*refuted.witness, t2),
            "translation witness does not separate");
}

void check_criterion_9() {
    for (int t = 0; t < 1000; ++t) {
        Rng rng = Rng::split(900, static_cast<std::uint64_t>(t));
        PLMap f = sample_An(rng.below(7), 10000, rng);
        json j = f;
        std::string text = j.dump();
        require(json(json::parse(text).get<PLMap>()).dump() == text, "map round trip");
    }
    IntervalFamily J = IntervalFamily::checked({Interval(rat(0), rat(1))});
    json lip = verify_escape_lip(build_escape_lip(2, J, {PLMap{}}), 2, J, {PLMap{}});
    require(json(lip.get<LipEscapeCertificate>()).dump() == lip.dump(),
            "Lipschitz certificate round trip");
    HoelderExponent eps = HoelderExponent::checked(1, 2);
    SeparatedFamily Jh = SeparatedFamily::checked({Interval(rat(0), rat(1, 16))});
    json hoel = verify_escape_hoelder(build_escape_hoelder(1, eps, Jh, {PQMap{}}), 1, eps, Jh,
                                      {PQMap{}});
    require(json(hoel.get<HoelderCertificate>()).dump() == hoel.dump(),
            "Hoelder certificate round trip");
    require(compose_hoelder_bound(1, eps) == 5, "m_1");
    require(compose_hoelder_bound(2, eps) == 17, "m_2");
}

}  // namespace

int main() {
    auto samples = algebra_samples();
    criterion(1, "exact group algebra on 1000 random pairs",
              [&] { check_criterion_1(samples); });
    criterion(2, "break bound and containment, with the cancellation pair",
              [&] { check_criterion_2(samples); });
    criterion(3, "generic break counts with re-verified deficient trials", check_criterion_3);
    criterion(4, "one-break factorization of 200 random maps", check_criterion_4);
    criterion(5, "Lipschitz escape certificates for n in {2,3,5}", check_criterion_5);
    criterion(6, "Hoelder escape certificates for three parameter sets", check_criterion_6);
    criterion(7, "commutation witnesses and containment probes", check_criterion_7);
    criterion(8, "line and circle embeddings with the translation witness", check_criterion_8);
    criterion(9, "byte-exact round trips and composite bounds", check_criterion_9);
    return g_failures;
}
