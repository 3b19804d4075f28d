#include "plgroup/factorization.hpp"

#include <algorithm>

namespace plgroup {

PLMap peel_factor(const PLMap& f) {
    if (f.is_identity()) return PLMap();
    const Point& first = f.breaks().front();
    const Rational& x1 = first.x;
    Rational r = slope_ratio(f, x1);
    Rational yg = x1 / (x1 + r * (1 - x1));
    return PLMap::from_breaks({Point(x1, yg)});
}

Factorization factor_one_break(const PLMap& f) {
    Factorization out;
    PLMap h = f;
    while (!h.is_identity()) {
        PLMap g = peel_factor(h);
        h = compose(h, invert(g));
        out.factors.push_back(std::move(g));
    }
    // peeled g1 first, but f = h_last o ... o g1
    std::reverse(out.factors.begin(), out.factors.end());
    return out;
}

bool is_in_Bn(const PLMap& f, std::size_t n) { return f.break_count() <= n; }

PLMap compose_all(const std::vector<PLMap>& factors) {
    PLMap acc;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(*it, acc);
    return acc;
}

}  // namespace plgroup
