#pragma once

#include <vector>

#include "plgroup/interval.hpp"
#include "plgroup/pl_map.hpp"

namespace plgroup {

// Hoelder exponent eps = p/q in (0,1), lowest terms.
struct HoelderExponent {
    long p = 1;
    long q = 2;

    static HoelderExponent checked(long p, long q);
};

// Increasing C^1 self-map of [0,1] with piecewise-linear derivative, stored
// as the derivative profile: knots (x, f'(x)) spanning [0,1] with positive
// values, integrating to exactly 1.  The map itself is piecewise quadratic.
class PQMap {
public:
    PQMap();  // identity: derivative constantly 1

    static PQMap from_profile(std::vector<Point> profile);

    const std::vector<Point>& profile() const { return profile_; }
    bool operator==(const PQMap&) const = default;

private:
    std::vector<Point> profile_;
};

Rational evaluate(const PQMap& f, const Rational& x);
Rational derivative_at(const PQMap& f, const Rational& x);
Rational max_derivative(const PQMap& f);

// Exact integral of the derivative profile over [lo, hi] (trapezoids).
Rational profile_integral(const std::vector<Point>& profile, const Rational& lo,
                          const Rational& hi);

// Validates a positive profile over J with exact area |J| and extends it by
// 1 into a full-interval map.  Throws NonPositiveDerivative / AreaMismatch.
PQMap antiderivative_map(const std::vector<Point>& profile_on_J, const Interval& J);

// Disjoint intervals with inf-distance at least max of the two lengths.
struct SeparatedFamily {
    std::vector<Interval> intervals;

    static SeparatedFamily checked(std::vector<Interval> intervals);
};

enum class Hoelder3 { Yes, No, Unknown };

// Is g' n-Hoelder on J?  NO on an exact two-point witness among profile
// knots; YES under the sufficient segment-slope bound S |J|^{1-eps} <= n
// (decided by q-th powers); UNKNOWN otherwise.
Hoelder3 hoelder_case_test(const PQMap& g, const Interval& J, long n, const HoelderExponent& eps);

// Same question for (g^{-1})' on g(J), evaluated through (g^{-1})'(g(x)) = 1/g'(x).
Hoelder3 hoelder_case_test_inverse(const PQMap& g, const Interval& J, long n,
                                   const HoelderExponent& eps);

// Diagonal construction: on every interval whose adversary passes both
// Hoelder tests, the symmetric derivative spike with apex 1 + l^eps (n+1)^4
// and dip 1 - l^eps; derivative 1 elsewhere.  Interval lengths must be exact
// q-th powers so l^eps stays rational.
PQMap build_escape_hoelder(long n, const HoelderExponent& eps, const SeparatedFamily& J,
                           const std::vector<PQMap>& adversaries);

struct HoelderRecord {
    std::size_t k = 0;
    int case_id = 0;
    Rational witness_a;     // a_k
    Rational witness_x;     // x_k (midpoint)
    Rational lhs;           // |f'(x_k)/g'(x_k) - f'(a_k)/g'(a_k)|
    Rational rhs_base;      // |g(x_k) - g(a_k)|
    Rational lhs_pow;       // lhs^q
    Rational rhs_pow;       // (n(n+1))^q rhs_base^p
};

struct HoelderCertificate {
    PQMap f;
    long n = 0;
    HoelderExponent eps;
    SeparatedFamily family;
    std::vector<PQMap> adversaries;
    std::vector<HoelderRecord> per_k;
    Rational holder_constant;  // C = 2((n+1)^4+1)(n+1)^4
};

// Certifies the escape: per case-2 interval the strict power comparison
// lhs^q > (n(n+1))^q rhs^p, per case-1 interval coincidence of f with the
// identity, plus the global C-Hoelder bound on f' (segment slopes, knot
// pairs, and the cross-interval substitution argument).
HoelderCertificate verify_escape_hoelder(const PQMap& f, long n, const HoelderExponent& eps,
                                         const SeparatedFamily& J,
                                         const std::vector<PQMap>& adversaries);

// Sanity invariant: an n-Hoelder derivative is bounded by n+1.  False when a
// YES-classified map contradicts the bound.
bool derivative_sup_bound_check(const PQMap& f, long n, const HoelderExponent& eps);

// Least integer strictly greater than [(n+1) + (n+1)^{1+eps}] n, by integer
// q-th-power comparison.
long compose_hoelder_bound(long n, const HoelderExponent& eps);

}  // namespace plgroup
