#pragma once

#include <nlohmann/json.hpp>

#include "plgroup/commutation.hpp"
#include "plgroup/encoding.hpp"
#include "plgroup/escape_hoelder.hpp"
#include "plgroup/escape_lipschitz.hpp"
#include "plgroup/factorization.hpp"
#include "plgroup/line_circle.hpp"
#include "plgroup/pl_map.hpp"

namespace plgroup {

using json = nlohmann::json;

// Rationals travel as reduced "p/q" strings (plain "p" when q = 1); maps as
// {"breaks": [["p/q","r/s"], ...]}.  Round trips are bit-exact.

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

void to_json(json& j, const Point& p);
void from_json(const json& j, Point& p);

void to_json(json& j, const Interval& iv);
void from_json(const json& j, Interval& iv);

void to_json(json& j, const PLMap& f);
void from_json(const json& j, PLMap& f);

void to_json(json& j, const BreakTuple& t);
void from_json(const json& j, BreakTuple& t);

void to_json(json& j, const CategoryReport& r);
void from_json(const json& j, CategoryReport& r);

void to_json(json& j, const Factorization& f);
void from_json(const json& j, Factorization& f);

void to_json(json& j, const NonCommuteWitness& w);
void from_json(const json& j, NonCommuteWitness& w);

void to_json(json& j, const LineMap& f);
void from_json(const json& j, LineMap& f);

void to_json(json& j, const CircleMap& f);
void from_json(const json& j, CircleMap& f);

void to_json(json& j, const PQMap& f);
void from_json(const json& j, PQMap& f);

void to_json(json& j, const LipEscapeCertificate& c);
void from_json(const json& j, LipEscapeCertificate& c);

void to_json(json& j, const HoelderCertificate& c);
void from_json(const json& j, HoelderCertificate& c);

}  // namespace plgroup
