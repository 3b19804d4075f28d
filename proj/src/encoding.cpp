#include "plgroup/encoding.hpp"

#include <algorithm>

namespace plgroup {

bool validate_tuple(const BreakTuple& t) { return defines_pl_map(t.points); }

BreakTuple encode(const PLMap& f) { return BreakTuple{f.breaks()}; }

PLMap decode(const BreakTuple& t) {
    try {
        return PLMap::from_breaks(t.points);
    } catch (const Error& e) {
        throw InvalidTuple(e.what());
    }
}

PLMap sample_An(std::size_t n, long denominator_bound, Rng& rng) {
    if (n == 0) return PLMap();
    for (;;) {
        std::vector<Rational> xs, ys;
        for (std::size_t i = 0; i < n; ++i) {
            xs.push_back(rng.unit_fraction(denominator_bound));
            ys.push_back(rng.unit_fraction(denominator_bound));
        }
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.emplace_back(xs[i], ys[i]);
        if (defines_pl_map(pts)) return PLMap::from_breaks(std::move(pts));
    }
}

PLMap sample_An(std::size_t n, const SampleConfig& cfg) {
    Rng rng(cfg.seed);
    return sample_An(n, cfg.denominator_bound, rng);
}

bool hits_break_hyperplane(const PLMap& f, const PLMap& g) {
    auto targets = break_points(f);
    for (const Point& b : g.breaks()) {
        if (std::find(targets.begin(), targets.end(), b.y) != targets.end()) return true;
    }
    return false;
}

CategoryReport category_experiment(const PLMap& f, std::size_t m, const SampleConfig& cfg) {
    CategoryReport report;
    report.n = f.break_count();
    report.m = m;
    report.trials = cfg.trials;
    for (long t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::split(cfg.seed, static_cast<std::uint64_t>(t));
        PLMap g = sample_An(m, cfg.denominator_bound, rng);
        std::size_t nb = compose(f, g).break_count();
        if (nb == report.n + m) {
            ++report.maximal_count;
        } else {
            report.deficient.push_back({t, g, nb});
        }
    }
    return report;
}

}  // namespace plgroup
