#pragma once

#include <optional>
#include <vector>

#include "plgroup/encoding.hpp"
#include "plgroup/interval.hpp"
#include "plgroup/pl_map.hpp"

namespace plgroup {

// Non-identity map supported exactly on U = (a,b): single apex at the
// midpoint m, displaced upward by (b-a)/8, endpoint breaks only when
// interior to (0,1).
PLMap bump(const Interval& U);

PLMap commutator(const PLMap& f, const PLMap& g);  // f g f^-1 g^-1

// Maximal open intervals where f(x) != x.
std::vector<Interval> support(const PLMap& f);

bool supports_disjoint(const PLMap& f, const PLMap& g);

// Exact witness that f fails to commute with a bump supported in W.
struct NonCommuteWitness {
    Interval w_prime;  // support of the bump, inside W
    PLMap bump_map;
    Rational z;
    Rational left;   // (f o bump)(z)
    Rational right;  // (bump o f)(z)
};

// Present iff f moves some point of W.  The witness interval W' is shrunk
// around a moved point x so that f(W') and W' are disjoint.
std::optional<NonCommuteWitness> noncommute_witness(const PLMap& f, const Interval& W);

// f(closure U) inside closure V, by endpoint images.
bool cuv_direct(const PLMap& f, const Interval& U, const Interval& V);

struct CuvProbeResult {
    bool member = false;
    long probes_run = 0;
    // violating (U', W') when member is false
    std::optional<std::pair<Interval, Interval>> violation;
};

// Commutator surrogate for the containment check: samples U' in U and W' in
// the complement of closure(V) and requires [f bump(U') f^-1, bump(W')] = e;
// when the direct check fails, a guided search produces an exact violating
// pair.  Throws VacuousCase when closure(V) = [0,1].
CuvProbeResult cuv_commutator_probe(const PLMap& f, const Interval& U, const Interval& V,
                                    const SampleConfig& cfg);

}  // namespace plgroup
