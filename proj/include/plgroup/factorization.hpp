#pragma once

#include <vector>

#include "plgroup/pl_map.hpp"

namespace plgroup {

// f = factors[0] o factors[1] o ... o factors[last], each factor with at
// most one break, and exactly #B(f) factors.
struct Factorization {
    std::vector<PLMap> factors;
};

// Peel one-break maps off f, least break first.  The one-break map g with
// break at (x1, x1/(x1 + r(1-x1))) has slope ratio r at x1, so f o g^{-1}
// loses the break at x1 and keeps all others.
Factorization factor_one_break(const PLMap& f);

// The single peeled factor for the least break of f (identity when f is).
PLMap peel_factor(const PLMap& f);

bool is_in_Bn(const PLMap& f, std::size_t n);

PLMap compose_all(const std::vector<PLMap>& factors);

}  // namespace plgroup
