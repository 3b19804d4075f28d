#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plgroup/encoding.hpp"
#include "plgroup/pl_map.hpp"

using namespace plgroup;

namespace {

PLMap mk(std::initializer_list<std::pair<Rational, Rational>> pts) {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back(Point{x, y});
    return PLMap::from_breaks(std::move(v));
}

// Independent composition oracle: evaluate both maps pointwise on a dense
// grid plus all candidate break abscissae.
void check_compose_pointwise(const PLMap& f, const PLMap& g) {
    PLMap fg = compose(f, g);
    for (int k = 0; k <= 101; ++k) {
        Rational x = rat(k, 101);
        CHECK(evaluate(fg, x) == evaluate(f, evaluate(g, x)));
    }
    for (const auto& b : g.breaks()) CHECK(evaluate(fg, b.x) == evaluate(f, evaluate(g, b.x)));
    for (const auto& b : f.breaks()) {
        Rational x = evaluate_inverse(g, b.x);
        CHECK(evaluate(fg, x) == evaluate(f, evaluate(g, x)));
    }
}

}  // namespace

TEST_CASE("construction validates the break conditions") {
    CHECK(PLMap().is_identity());
    CHECK(PLMap::from_breaks({}).is_identity());
    CHECK_THROWS_AS(mk({{rat(1, 2), rat(1, 2)}}), CollinearBreak);
    CHECK_THROWS_AS(mk({{rat(1, 2), rat(1, 4)}, {rat(1, 3), rat(1, 2)}}), NonMonotone);
    CHECK_THROWS_AS(mk({{rat(1, 2), rat(1, 4)}, {rat(1, 2), rat(1, 2)}}), NonMonotone);
    CHECK(mk({{rat(1, 2), rat(1, 4)}}).break_count() == 1);
    // the slightly steeper pair is fine: triples have slopes (2,1) and (1,1/2)
    CHECK(mk({{rat(1, 4), rat(1, 2)}, {rat(1, 2), rat(3, 4)}}).break_count() == 2);
    // collinear interior triple is rejected with the middle break's index
    try {
        mk({{rat(1, 4), rat(1, 8)}, {rat(1, 2), rat(1, 4)}});
        CHECK(false);
    } catch (const CollinearBreak& e) {
        CHECK(e.index() == 0);  // (0,0),(1/4,1/8),(1/2,1/4) share slope 1/2
    }
}

TEST_CASE("evaluation interpolates exactly and fixes endpoints") {
    PLMap id;
    CHECK(evaluate(id, rat(2, 3)) == rat(2, 3));
    PLMap f = mk({{rat(1, 2), rat(1, 4)}});
    CHECK(evaluate(f, rat(0)) == 0);
    CHECK(evaluate(f, rat(1)) == 1);
    CHECK(evaluate(f, rat(1, 4)) == rat(1, 8));
    CHECK(evaluate(f, rat(3, 4)) == rat(5, 8));
    CHECK(evaluate(f, rat(1, 2)) == rat(1, 4));
    CHECK_THROWS_AS(evaluate(f, rat(3, 2)), OutOfDomain);
    CHECK_THROWS_AS(evaluate(f, rat(-1, 2)), OutOfDomain);
}

TEST_CASE("evaluate_inverse inverts evaluate") {
    PLMap f = mk({{rat(1, 2), rat(1, 4)}});
    CHECK(evaluate_inverse(f, rat(1, 8)) == rat(1, 4));
    CHECK(evaluate_inverse(f, rat(1, 4)) == rat(1, 2));
    for (int k = 0; k <= 16; ++k) {
        Rational x = rat(k, 16);
        CHECK(evaluate_inverse(f, evaluate(f, x)) == x);
    }
}

TEST_CASE("composition merges and prunes breaks") {
    PLMap f = mk({{rat(1, 2), rat(1, 4)}});
    CHECK(compose(f, invert(f)).is_identity());
    CHECK(compose(invert(f), f).is_identity());

    PLMap ff = compose(f, f);
    CHECK(ff == mk({{rat(1, 2), rat(1, 8)}, {rat(2, 3), rat(1, 4)}}));
    check_compose_pointwise(f, f);

    // colliding breaks: g(1/3) = 1/2 is f's break, yet the slope ratios do
    // not cancel, so the single break survives
    PLMap g = mk({{rat(1, 3), rat(1, 2)}});
    PLMap fg = compose(f, g);
    CHECK(fg.break_count() == 1);
    CHECK(fg.breaks()[0].x == rat(1, 3));
    CHECK(slope_ratio(fg, rat(1, 3)) == rat(3, 2));
    check_compose_pointwise(f, g);
}

TEST_CASE("inversion swaps coordinates") {
    CHECK(invert(PLMap()).is_identity());
    CHECK(invert(mk({{rat(1, 2), rat(1, 4)}})) == mk({{rat(1, 4), rat(1, 2)}}));
    CHECK(invert(mk({{rat(1, 5), rat(4, 5)}})) == mk({{rat(4, 5), rat(1, 5)}}));
}

TEST_CASE("slope ratio and the chain rule") {
    PLMap f = mk({{rat(1, 2), rat(1, 4)}});
    CHECK(slope_ratio(f, rat(1, 3)) == 1);
    CHECK(slope_ratio(f, rat(1, 2)) == 3);
    CHECK_THROWS_AS(slope_ratio(f, rat(0)), OutOfDomain);
    PLMap ff = compose(f, f);
    CHECK(slope_ratio(ff, rat(1, 2)) ==
          slope_ratio(f, evaluate(f, rat(1, 2))) * slope_ratio(f, rat(1, 2)));
    CHECK(slope_ratio(ff, rat(1, 2)) == 3);
}

TEST_CASE("break point lists") {
    CHECK(break_points(PLMap()).empty());
    PLMap f = mk({{rat(1, 2), rat(1, 4)}});
    CHECK(break_points(f) == std::vector<Rational>{rat(1, 2)});
    CHECK(break_points(compose(f, f)) == std::vector<Rational>{rat(1, 2), rat(2, 3)});
}

TEST_CASE("slope extrema") {
    CHECK(max_slope(PLMap()) == 1);
    CHECK(bilipschitz_constant(PLMap()) == 1);
    PLMap s = mk({{rat(1, 5), rat(4, 5)}});
    CHECK(max_slope(s) == 4);
    CHECK(max_slope(invert(s)) == 4);
    CHECK(bilipschitz_constant(s) == 4);
    PLMap f = mk({{rat(1, 2), rat(1, 4)}});
    CHECK(max_slope(f) == rat(3, 2));
    CHECK(bilipschitz_constant(f) == 2);
}

TEST_CASE("group laws, chain rule, and break bound on random samples") {
    SampleConfig cfg;
    cfg.seed = 7;
    cfg.denominator_bound = 1000;
    for (int t = 0; t < 40; ++t) {
        Rng rng = Rng::split(cfg.seed, static_cast<std::uint64_t>(t));
        PLMap f = sample_An(1 + t % 5, cfg.denominator_bound, rng);
        PLMap g = sample_An(1 + (t / 5) % 5, cfg.denominator_bound, rng);
        PLMap h = sample_An(2, cfg.denominator_bound, rng);

        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        CHECK(compose(f, invert(f)).is_identity());
        CHECK(invert(invert(f)) == f);

        PLMap fg = compose(f, g);
        CHECK(fg.break_count() <= f.break_count() + g.break_count());
        for (const auto& b : fg.breaks()) {
            bool in_g = false, in_preimage_f = false;
            for (const auto& bg : g.breaks()) in_g |= bg.x == b.x;
            for (const auto& bf : f.breaks()) in_preimage_f |= evaluate(g, b.x) == bf.x;
            CHECK((in_g || in_preimage_f));
            CHECK(slope_ratio(fg, b.x) != 1);  // canonicity
            CHECK(slope_ratio(fg, b.x) ==
                  slope_ratio(f, evaluate(g, b.x)) * slope_ratio(g, b.x));
        }
        check_compose_pointwise(f, g);
    }
}
