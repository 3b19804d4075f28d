#include "plgroup/serialization.hpp"

#include "plgroup/errors.hpp"

namespace plgroup {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

namespace {

json point_pair(const Point& p) {
    return json::array({rational_to_json(p.x), rational_to_json(p.y)});
}

Point pair_point(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be a two-element array");
    return Point{rational_from_json(j[0]), rational_from_json(j[1])};
}

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(point_pair(p));
    return a;
}

std::vector<Point> points_from(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of points");
    std::vector<Point> pts;
    pts.reserve(j.size());
    for (const auto& e : j) pts.push_back(pair_point(e));
    return pts;
}

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

}  // namespace

void to_json(json& j, const Point& p) { j = point_pair(p); }
void from_json(const json& j, Point& p) { p = pair_point(j); }

void to_json(json& j, const Interval& iv) {
    j = json::array({rational_to_json(iv.lo), rational_to_json(iv.hi)});
}

void from_json(const json& j, Interval& iv) {
    if (!j.is_array() || j.size() != 2) throw ParseError("interval must be [\"a\",\"b\"]");
    iv = Interval(rational_from_json(j[0]), rational_from_json(j[1]));
}

void to_json(json& j, const PLMap& f) { j = json{{"breaks", points_json(f.breaks())}}; }

void from_json(const json& j, PLMap& f) {
    if (!j.is_object()) throw ParseError("map must be an object with \"breaks\"");
    f = PLMap::from_breaks(points_from(field(j, "breaks")));
}

void to_json(json& j, const BreakTuple& t) { j = json{{"breaks", points_json(t.points)}}; }

void from_json(const json& j, BreakTuple& t) {
    if (!j.is_object()) throw ParseError("tuple must be an object with \"breaks\"");
    t.points = points_from(field(j, "breaks"));
}

void to_json(json& j, const CategoryReport& r) {
    json def = json::array();
    for (const auto& d : r.deficient) {
        def.push_back(json{{"trial", d.trial},
                           {"g", d.g},
                           {"product_breaks", d.product_breaks}});
    }
    j = json{{"n", r.n},
             {"m", r.m},
             {"trials", r.trials},
             {"maximal_count", r.maximal_count},
             {"deficient", def}};
}

void from_json(const json& j, CategoryReport& r) {
    r.n = field(j, "n").get<std::size_t>();
    r.m = field(j, "m").get<std::size_t>();
    r.trials = field(j, "trials").get<long>();
    r.maximal_count = field(j, "maximal_count").get<long>();
    r.deficient.clear();
    for (const auto& e : field(j, "deficient")) {
        DeficientExample d;
        d.trial = field(e, "trial").get<long>();
        d.g = field(e, "g").get<PLMap>();
        d.product_breaks = field(e, "product_breaks").get<std::size_t>();
        r.deficient.push_back(std::move(d));
    }
}

void to_json(json& j, const Factorization& f) {
    json fs = json::array();
    for (const auto& g : f.factors) fs.push_back(g);
    j = json{{"factors", fs}};
}

void from_json(const json& j, Factorization& f) {
    f.factors.clear();
    for (const auto& e : field(j, "factors")) f.factors.push_back(e.get<PLMap>());
}

void to_json(json& j, const NonCommuteWitness& w) {
    j = json{{"w_prime", w.w_prime},
             {"bump", w.bump_map},
             {"z", rational_to_json(w.z)},
             {"left", rational_to_json(w.left)},
             {"right", rational_to_json(w.right)}};
}

void from_json(const json& j, NonCommuteWitness& w) {
    w.w_prime = field(j, "w_prime").get<Interval>();
    w.bump_map = field(j, "bump").get<PLMap>();
    w.z = rational_from_json(field(j, "z"));
    w.left = rational_from_json(field(j, "left"));
    w.right = rational_from_json(field(j, "right"));
}

void to_json(json& j, const LineMap& f) {
    j = json{{"breaks", points_json(f.breaks)},
             {"left_slope", rational_to_json(f.left_slope)},
             {"right_slope", rational_to_json(f.right_slope)},
             {"offset", rational_to_json(f.offset)}};
}

void from_json(const json& j, LineMap& f) {
    Rational offset = 0;
    if (j.contains("offset")) offset = rational_from_json(j["offset"]);
    f = LineMap::checked(points_from(field(j, "breaks")),
                         rational_from_json(field(j, "left_slope")),
                         rational_from_json(field(j, "right_slope")), offset);
}

void to_json(json& j, const CircleMap& f) {
    j = json{{"breaks", points_json(f.breaks)},
             {"offset", rational_to_json(f.offset)},
             {"periodic", true}};
}

void from_json(const json& j, CircleMap& f) {
    if (!field(j, "periodic").get<bool>()) throw ParseError("circle map must set \"periodic\": true");
    f = CircleMap::checked(points_from(field(j, "breaks")),
                           rational_from_json(field(j, "offset")));
}

void to_json(json& j, const PQMap& f) {
    const auto& prof = f.profile();
    json interior = json::array();
    for (const auto& p : prof) {
        if (p.x > 0 && p.x < 1) interior.push_back(point_pair(p));
    }
    j = json{{"derivative_breaks", interior},
             {"boundary", json::array({rational_to_json(prof.front().y),
                                       rational_to_json(prof.back().y)})}};
}

void from_json(const json& j, PQMap& f) {
    const json& b = field(j, "boundary");
    if (!b.is_array() || b.size() != 2) throw ParseError("boundary must be [\"d0\",\"d1\"]");
    std::vector<Point> prof;
    prof.push_back(Point{Rational(0), rational_from_json(b[0])});
    for (const auto& p : points_from(field(j, "derivative_breaks"))) prof.push_back(p);
    prof.push_back(Point{Rational(1), rational_from_json(b[1])});
    f = PQMap::from_profile(std::move(prof));
}

namespace {

json intervals_json(const std::vector<Interval>& ivs) {
    json a = json::array();
    for (const auto& iv : ivs) a.push_back(json(iv));
    return a;
}

std::vector<Interval> intervals_from(const json& j) {
    std::vector<Interval> ivs;
    for (const auto& e : j) ivs.push_back(e.get<Interval>());
    return ivs;
}

}  // namespace

void to_json(json& j, const LipEscapeCertificate& c) {
    json adv = json::array();
    for (const auto& g : c.adversaries) adv.push_back(g);
    json per = json::array();
    for (const auto& r : c.per_k) {
        per.push_back(json{{"k", r.k},
                           {"case", r.case_id},
                           {"witness", json::array({rational_to_json(r.witness_p),
                                                    rational_to_json(r.witness_q)})},
                           {"quotient", rational_to_json(r.quotient)},
                           {"side", r.side == LipSide::map_side ? "map" : "inverse"}});
    }
    j = json{{"type", "escape-lip"},
             {"n", c.n},
             {"f", c.f},
             {"intervals", intervals_json(c.family.intervals)},
             {"adversaries", adv},
             {"per_k", per},
             {"bilipschitz", rational_to_json(c.bilipschitz)}};
}

void from_json(const json& j, LipEscapeCertificate& c) {
    if (field(j, "type").get<std::string>() != "escape-lip")
        throw ParseError("certificate type mismatch: expected escape-lip");
    c.n = field(j, "n").get<long>();
    c.f = field(j, "f").get<PLMap>();
    c.family = IntervalFamily::checked(intervals_from(field(j, "intervals")));
    c.adversaries.clear();
    for (const auto& e : field(j, "adversaries")) c.adversaries.push_back(e.get<PLMap>());
    c.per_k.clear();
    for (const auto& e : field(j, "per_k")) {
        LipRecord r;
        r.k = field(e, "k").get<std::size_t>();
        r.case_id = field(e, "case").get<int>();
        const json& w = field(e, "witness");
        r.witness_p = rational_from_json(w[0]);
        r.witness_q = rational_from_json(w[1]);
        r.quotient = rational_from_json(field(e, "quotient"));
        r.side = field(e, "side").get<std::string>() == "inverse" ? LipSide::inverse_side
                                                                  : LipSide::map_side;
        c.per_k.push_back(std::move(r));
    }
    c.bilipschitz = rational_from_json(field(j, "bilipschitz"));
}

void to_json(json& j, const HoelderCertificate& c) {
    json adv = json::array();
    for (const auto& g : c.adversaries) adv.push_back(g);
    json per = json::array();
    for (const auto& r : c.per_k) {
        per.push_back(json{{"k", r.k},
                           {"case", r.case_id},
                           {"witness", json::array({rational_to_json(r.witness_a),
                                                    rational_to_json(r.witness_x)})},
                           {"lhs", rational_to_json(r.lhs)},
                           {"rhs_base", rational_to_json(r.rhs_base)},
                           {"lhs_pow", rational_to_json(r.lhs_pow)},
                           {"rhs_pow", rational_to_json(r.rhs_pow)}});
    }
    j = json{{"type", "escape-hoelder"},
             {"n", c.n},
             {"epsilon", rational_to_json(Rational(c.eps.p, c.eps.q))},
             {"f", c.f},
             {"intervals", intervals_json(c.family.intervals)},
             {"adversaries", adv},
             {"per_k", per},
             {"holder_constant", rational_to_json(c.holder_constant)}};
}

void from_json(const json& j, HoelderCertificate& c) {
    if (field(j, "type").get<std::string>() != "escape-hoelder")
        throw ParseError("certificate type mismatch: expected escape-hoelder");
    c.n = field(j, "n").get<long>();
    Rational eps = rational_from_json(field(j, "epsilon"));
    c.eps = HoelderExponent::checked(eps.get_num().get_si(), eps.get_den().get_si());
    c.f = field(j, "f").get<PQMap>();
    c.family = SeparatedFamily::checked(intervals_from(field(j, "intervals")));
    c.adversaries.clear();
    for (const auto& e : field(j, "adversaries")) c.adversaries.push_back(e.get<PQMap>());
    c.per_k.clear();
    for (const auto& e : field(j, "per_k")) {
        HoelderRecord r;
        r.k = field(e, "k").get<std::size_t>();
        r.case_id = field(e, "case").get<int>();
        const json& w = field(e, "witness");
        r.witness_a = rational_from_json(w[0]);
        r.witness_x = rational_from_json(w[1]);
        r.lhs = rational_from_json(field(e, "lhs"));
        r.rhs_base = rational_from_json(field(e, "rhs_base"));
        r.lhs_pow = rational_from_json(field(e, "lhs_pow"));
        r.rhs_pow = rational_from_json(field(e, "rhs_pow"));
        c.per_k.push_back(std::move(r));
    }
    c.holder_constant = rational_from_json(field(j, "holder_constant"));
}

}  // namespace plgroup
