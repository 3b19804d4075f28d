#pragma once

#include <vector>

#include "plgroup/interval.hpp"
#include "plgroup/pl_map.hpp"

namespace plgroup {

// Pairwise disjoint open intervals inside (0,1).
struct IntervalFamily {
    std::vector<Interval> intervals;

    static IntervalFamily checked(std::vector<Interval> intervals);
};

enum class LipSide { map_side, inverse_side };

struct LipRecord {
    std::size_t k = 0;
    int case_id = 0;  // 1: adversary already violates, 2: diagonal break
    Rational witness_p;
    Rational witness_q;
    Rational quotient;
    LipSide side = LipSide::map_side;
};

struct LipEscapeCertificate {
    PLMap f;
    long n = 0;
    IntervalFamily family;
    std::vector<PLMap> adversaries;
    std::vector<LipRecord> per_k;
    Rational bilipschitz;
};

// Strict two-point Lipschitz bound on J; for PL maps this is exactly
// max segment slope over J < n.
bool is_n_lipschitz_on(const PLMap& f, const Interval& J, const Rational& n);

// True when g is n-Lipschitz on J and g^{-1} is n-Lipschitz on g(J) (the
// construction's case 2).
bool lipschitz_case2(const PLMap& g, const Interval& J, long n);

// Diagonal construction: on each interval whose adversary passes the
// two-sided n-Lipschitz test, one break at x_k = a_k + l_k/(n^2+1) mapped to
// b_k - l_k/(n^2+1); identity elsewhere.  Requires n >= 2.
PLMap build_escape_lip(long n, const IntervalFamily& J, const std::vector<PLMap>& adversaries);

// Certifies that f g_k^{-1} escapes the n-Lipschitz class on every interval,
// and that f itself is (n^2+1)-bi-Lipschitz.  Throws CertificateFailure.
LipEscapeCertificate verify_escape_lip(const PLMap& f, long n, const IntervalFamily& J,
                                       const std::vector<PLMap>& adversaries);

}  // namespace plgroup
