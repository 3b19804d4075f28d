#pragma once

#include <cstdint>
#include <vector>

#include "plgroup/pl_map.hpp"
#include "plgroup/rng.hpp"

namespace plgroup {

// An n-tuple of candidate break coordinates in Z^n, Z = (0,1)x(0,1).  Valid
// tuples (conditions (1),(2)) are exactly the coordinate images of n-break
// maps.
struct BreakTuple {
    std::vector<Point> points;
    bool operator==(const BreakTuple&) const = default;
};

struct SampleConfig {
    std::uint64_t seed = 0;
    long denominator_bound = 1000;
    long trials = 1;
};

struct DeficientExample {
    long trial = 0;
    PLMap g;
    std::size_t product_breaks = 0;
};

// Statistic for the generic-break-count experiment: how often #B(fg) attains
// the maximum #B(f)+m over random g in A_m.
struct CategoryReport {
    std::size_t n = 0;
    std::size_t m = 0;
    long trials = 0;
    long maximal_count = 0;
    std::vector<DeficientExample> deficient;
};

bool validate_tuple(const BreakTuple& t);

BreakTuple encode(const PLMap& f);
PLMap decode(const BreakTuple& t);  // throws InvalidTuple

// Uniform break-coordinate sampling with rejection; exactly n breaks,
// deterministic given cfg.seed.
PLMap sample_An(std::size_t n, const SampleConfig& cfg);
PLMap sample_An(std::size_t n, long denominator_bound, Rng& rng);

CategoryReport category_experiment(const PLMap& f, std::size_t m, const SampleConfig& cfg);

// The exceptional condition from the generic-count argument: some break of g
// lands on a break of f, i.e. exists x0 in B(g) with g(x0) in B(f).  Break
// deficiency of fg happens exactly on this set.
bool hits_break_hyperplane(const PLMap& f, const PLMap& g);

}  // namespace plgroup
