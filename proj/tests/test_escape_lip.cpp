#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plgroup/commutation.hpp"
#include "plgroup/escape_lipschitz.hpp"

using namespace plgroup;

namespace {

PLMap mk(std::initializer_list<std::pair<Rational, Rational>> pts) {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back(Point{x, y});
    return PLMap::from_breaks(std::move(v));
}

// Brute-force two-point oracle over break abscissae and interval endpoints.
bool lipschitz_oracle(const PLMap& f, const Interval& J, long n) {
    std::vector<Rational> xs{J.lo, J.hi, J.midpoint()};
    for (const auto& b : f.breaks())
        if (b.x > J.lo && b.x < J.hi) xs.push_back(b.x);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] == xs[j]) continue;
            Rational q = abs_rational(evaluate(f, xs[i]) - evaluate(f, xs[j])) /
                         abs_rational(xs[i] - xs[j]);
            if (q >= n) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("the Lipschitz test is the segment-slope maximum") {
    Interval full(rat(0), rat(1));
    CHECK(is_n_lipschitz_on(PLMap{}, full, rat(2)));
    PLMap steep = mk({{rat(1, 5), rat(4, 5)}});
    CHECK_FALSE(is_n_lipschitz_on(steep, full, rat(2)));
    CHECK(is_n_lipschitz_on(steep, full, rat(5)));
    CHECK_FALSE(is_n_lipschitz_on(steep, full, rat(4)));  // strict

    for (long n : {2L, 3L, 5L}) {
        CHECK(is_n_lipschitz_on(steep, full, rat(n)) == lipschitz_oracle(steep, full, n));
        Interval right(rat(1, 2), rat(1));
        CHECK(is_n_lipschitz_on(steep, right, rat(n)) == lipschitz_oracle(steep, right, n));
    }
}

TEST_CASE("two-sided case test") {
    Interval full(rat(0), rat(1));
    CHECK(lipschitz_case2(PLMap{}, full, 2));
    CHECK_FALSE(lipschitz_case2(mk({{rat(1, 5), rat(4, 5)}}), full, 2));
    // slope 4 forward, 1/4 backward: two-sided only above 4
    CHECK(lipschitz_case2(mk({{rat(1, 5), rat(4, 5)}}), full, 5));
}

TEST_CASE("construction matches the diagonal formulas") {
    IntervalFamily full = IntervalFamily::checked({Interval(rat(0), rat(1))});
    PLMap f = build_escape_lip(2, full, {PLMap{}});
    CHECK(f == mk({{rat(1, 5), rat(4, 5)}}));
    CHECK(max_slope(f) == 4);

    // a too-steep adversary forces case 1: identity on the interval
    PLMap case1 = build_escape_lip(2, full, {mk({{rat(1, 5), rat(4, 5)}})});
    CHECK(case1.is_identity());

    IntervalFamily halves =
        IntervalFamily::checked({Interval(rat(0), rat(1, 2)), Interval(rat(1, 2), rat(1))});
    PLMap g = build_escape_lip(3, halves, {PLMap{}, PLMap{}});
    CHECK(g == mk({{rat(1, 20), rat(9, 20)},
                   {rat(1, 2), rat(1, 2)},
                   {rat(11, 20), rat(19, 20)}}));
    CHECK(max_slope(g) == 9);

    CHECK_THROWS_AS(build_escape_lip(1, full, {PLMap{}}), OutOfDomain);
    CHECK_THROWS_AS(build_escape_lip(2, full, {PLMap{}, PLMap{}}), ArityMismatch);
    CHECK_THROWS_AS(
        IntervalFamily::checked({Interval(rat(0), rat(1, 2)), Interval(rat(1, 4), rat(1))}),
        DisjointnessViolated);
}

TEST_CASE("certificates carry exact violation quotients") {
    IntervalFamily full = IntervalFamily::checked({Interval(rat(0), rat(1))});
    std::vector<PLMap> adv{PLMap{}};
    PLMap f = build_escape_lip(2, full, adv);
    LipEscapeCertificate cert = verify_escape_lip(f, 2, full, adv);
    REQUIRE(cert.per_k.size() == 1);
    CHECK(cert.per_k[0].case_id == 2);
    CHECK(cert.per_k[0].quotient == 4);
    CHECK(cert.per_k[0].quotient > 2);
    CHECK(cert.bilipschitz <= 5);

    // case-1 interval: the adversary's own violation transfers
    std::vector<PLMap> steep{mk({{rat(1, 5), rat(4, 5)}})};
    PLMap id_f = build_escape_lip(2, full, steep);
    LipEscapeCertificate c1 = verify_escape_lip(id_f, 2, full, steep);
    REQUIRE(c1.per_k.size() == 1);
    CHECK(c1.per_k[0].case_id == 1);

    // identity against a case-2 adversary cannot violate anything
    CHECK_THROWS_AS(verify_escape_lip(PLMap{}, 2, full, adv), CertificateFailure);
}

TEST_CASE("construction is the identity off the family") {
    IntervalFamily mid = IntervalFamily::checked({Interval(rat(1, 4), rat(1, 2))});
    PLMap f = build_escape_lip(3, mid, {PLMap{}});
    auto s = support(f);
    REQUIRE(s.size() == 1);
    CHECK(s[0].lo >= rat(1, 4));
    CHECK(s[0].hi <= rat(1, 2));
    LipEscapeCertificate cert = verify_escape_lip(f, 3, mid, {PLMap{}});
    CHECK(cert.per_k[0].quotient > 3);
    CHECK(cert.bilipschitz <= 10);
}
