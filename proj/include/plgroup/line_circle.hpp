#pragma once

#include <optional>
#include <vector>

#include "plgroup/encoding.hpp"
#include "plgroup/pl_map.hpp"

namespace plgroup {

// Increasing PL self-homeomorphism of the real line with finitely many
// breaks and affine tails.  With no breaks the map is the affine
// x -> left_slope x + offset (and the two tail slopes coincide); with
// breaks, offset is fixed at 0 and the tails hang off the extreme breaks.
struct LineMap {
    std::vector<Point> breaks;
    Rational left_slope = 1;
    Rational right_slope = 1;
    Rational offset = 0;

    static LineMap checked(std::vector<Point> breaks, Rational left_slope,
                           Rational right_slope, Rational offset = Rational(0));
    static LineMap translation(const Rational& c);

    bool is_identity() const {
        return breaks.empty() && left_slope == 1 && offset == 0;
    }
    bool operator==(const LineMap&) const = default;
};

Rational evaluate_line(const LineMap& f, const Rational& x);
Rational evaluate_line_inverse(const LineMap& f, const Rational& y);
LineMap compose_line(const LineMap& f, const LineMap& g);
LineMap invert_line(const LineMap& f);

// Interval map extended by the identity off [0,1].
LineMap embed_interval(const PLMap& f);

// Non-identity line map supported exactly on (a, b).
LineMap bump_line(const Interval& U);

// Support of f contained in [0,1], decided structurally (identity tails and
// fixed extreme breaks).
bool fixes_complement_of_unit(const LineMap& f);

struct CentralizerProbeResult {
    bool member = false;
    long probes_run = 0;
    std::optional<LineMap> witness;  // non-commuting bump fixing [0,1]
};

// h lies in the embedded copy of the interval group iff it commutes with
// every map fixing [0,1] pointwise; probes with bumps outside [0,1], and a
// guided search finds an exact witness for non-members.
CentralizerProbeResult centralizer_membership_probe(const LineMap& h, const SampleConfig& cfg);

// Degree-one periodic map of the line (period 2), a circle map of R/2Z.
// Breaks are the canonical representatives with x in [0,2); with no breaks
// the map is the rotation x -> x + offset.
struct CircleMap {
    std::vector<Point> breaks;
    Rational offset = 0;

    static CircleMap checked(std::vector<Point> breaks, Rational offset = Rational(0));
    bool operator==(const CircleMap&) const = default;
};

// Structural periodicity check f(x+2) = f(x) + 2 on the representative data.
bool is_periodic_representative(const CircleMap& f);

Rational evaluate_circle(const CircleMap& f, const Rational& x);
CircleMap compose_circle(const CircleMap& f, const CircleMap& g);
CircleMap invert_circle(const CircleMap& f);

// Periodization of an interval map into [0,2) + 2Z.
CircleMap periodize(const PLMap& f);
CircleMap circle_rotation(const Rational& c);

}  // namespace plgroup
