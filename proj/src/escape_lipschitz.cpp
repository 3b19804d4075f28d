#include "plgroup/escape_lipschitz.hpp"

#include <algorithm>

namespace plgroup {

namespace {

struct SlopeWitness {
    Rational slope;
    Rational u, v;  // clipped segment endpoints attaining it
};

SlopeWitness max_slope_witness(const PLMap& f, const Interval& J) {
    auto k = f.knots();
    SlopeWitness best;
    bool found = false;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        Rational lo = k[i].x > J.lo ? k[i].x : J.lo;
        Rational hi = k[i + 1].x < J.hi ? k[i + 1].x : J.hi;
        if (!(lo < hi)) continue;
        Rational s = (k[i + 1].y - k[i].y) / (k[i + 1].x - k[i].x);
        if (!found || s > best.slope) best = {s, lo, hi};
        found = true;
    }
    if (!found) throw OutOfDomain("interval misses [0,1]");
    return best;
}

}  // namespace

IntervalFamily IntervalFamily::checked(std::vector<Interval> intervals) {
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        if (intervals[i].lo < 0 || intervals[i].hi > 1)
            throw DegenerateInterval("family interval outside [0,1]");
        for (std::size_t j = i + 1; j < intervals.size(); ++j)
            if (!disjoint_open(intervals[i], intervals[j]))
                throw DisjointnessViolated("intervals " + std::to_string(i) + " and " +
                                           std::to_string(j) + " overlap");
    }
    return IntervalFamily{std::move(intervals)};
}

bool is_n_lipschitz_on(const PLMap& f, const Interval& J, const Rational& n) {
    return max_slope_on(f, J) < n;
}

bool lipschitz_case2(const PLMap& g, const Interval& J, long n) {
    return is_n_lipschitz_on(g, J, rat(n)) &&
           is_n_lipschitz_on(invert(g), image_closure(g, J), rat(n));
}

PLMap build_escape_lip(long n, const IntervalFamily& J, const std::vector<PLMap>& adversaries) {
    if (n < 2) throw OutOfDomain("escape construction needs n >= 2");
    if (adversaries.size() != J.intervals.size())
        throw ArityMismatch("one adversary per interval required");
    IntervalFamily::checked(J.intervals);

    Rational shrink = rat(1, n * n + 1);
    std::vector<Point> breaks;
    for (std::size_t k = 0; k < J.intervals.size(); ++k) {
        const Interval& jk = J.intervals[k];
        if (!lipschitz_case2(adversaries[k], jk, n)) continue;  // case 1: identity
        Rational len = jk.length();
        if (jk.lo > 0) breaks.emplace_back(jk.lo, jk.lo);
        breaks.emplace_back(jk.lo + len * shrink, jk.hi - len * shrink);
        if (jk.hi < 1) breaks.emplace_back(jk.hi, jk.hi);
    }
    std::sort(breaks.begin(), breaks.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    // adjacent intervals contribute their shared endpoint twice
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return PLMap::from_breaks(std::move(breaks));
}

LipEscapeCertificate verify_escape_lip(const PLMap& f, long n, const IntervalFamily& J,
                                       const std::vector<PLMap>& adversaries) {
    if (n < 2) throw OutOfDomain("escape certificate needs n >= 2");
    if (adversaries.size() != J.intervals.size())
        throw ArityMismatch("one adversary per interval required");
    IntervalFamily::checked(J.intervals);

    LipEscapeCertificate cert;
    cert.f = f;
    cert.n = n;
    cert.family = J;
    cert.adversaries = adversaries;
    Rational nn = rat(n);

    for (std::size_t k = 0; k < J.intervals.size(); ++k) {
        const Interval& jk = J.intervals[k];
        const PLMap& g = adversaries[k];
        LipRecord rec;
        rec.k = k;
        if (lipschitz_case2(g, jk, n)) {
            rec.case_id = 2;
            // Witness points g(a_k), g(x_k); the quotient of f g^{-1} between
            // them must exceed n.
            Rational xk = jk.lo + jk.length() / (n * n + 1);
            rec.witness_p = evaluate(g, jk.lo);
            rec.witness_q = evaluate(g, xk);
            rec.quotient =
                (evaluate(f, xk) - evaluate(f, jk.lo)) / (rec.witness_q - rec.witness_p);
            rec.side = LipSide::map_side;
            if (!(rec.quotient > nn))
                throw CertificateFailure("interval " + std::to_string(k) +
                                         ": quotient " + to_string(rec.quotient) +
                                         " does not exceed " + std::to_string(n));
        } else {
            rec.case_id = 1;
            // f must coincide with the identity on J_k, so f g^{-1} inherits
            // the adversary's own violation; record it.
            bool f_identity = evaluate(f, jk.lo) == jk.lo && evaluate(f, jk.hi) == jk.hi;
            for (const Point& b : f.breaks())
                if (b.x > jk.lo && b.x < jk.hi) f_identity = false;
            if (!f_identity)
                throw CertificateFailure("interval " + std::to_string(k) +
                                         ": case-1 coincidence fails, f is not the identity there");
            SlopeWitness fwd = max_slope_witness(g, jk);
            if (fwd.slope >= nn) {
                rec.witness_p = fwd.u;
                rec.witness_q = fwd.v;
                rec.quotient = fwd.slope;
                rec.side = LipSide::map_side;
            } else {
                SlopeWitness bwd = max_slope_witness(invert(g), image_closure(g, jk));
                if (!(bwd.slope >= nn))
                    throw CertificateFailure("interval " + std::to_string(k) +
                                             ": adversary violates neither Lipschitz side");
                rec.witness_p = bwd.u;
                rec.witness_q = bwd.v;
                rec.quotient = bwd.slope;
                rec.side = LipSide::inverse_side;
            }
        }
        cert.per_k.push_back(std::move(rec));
    }

    cert.bilipschitz = bilipschitz_constant(f);
    if (!(cert.bilipschitz <= rat(n * n + 1)))
        throw CertificateFailure("bilipschitz constant " + to_string(cert.bilipschitz) +
                                 " exceeds n^2+1");
    return cert;
}

}  // namespace plgroup
