#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "plgroup/errors.hpp"

namespace plgroup {

// Arbitrary-precision exact fraction, always stored in lowest terms with a
// positive denominator (gmp keeps mpq_class canonical through arithmetic).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ParseError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// "p/q" with q omitted when 1, e.g. "3/4", "-1/2", "4".
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(Integer(s), 1);
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

inline Integer floor_div(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // already canonical: powers of coprime values stay coprime
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Exact q-th root of a nonnegative rational, when one exists.
inline std::optional<Rational> exact_root(const Rational& r, unsigned long q) {
    if (r < 0) return std::nullopt;
    Integer num, den;
    int num_exact = mpz_root(num.get_mpz_t(), r.get_num().get_mpz_t(), q);
    int den_exact = mpz_root(den.get_mpz_t(), r.get_den().get_mpz_t(), q);
    if (!num_exact || !den_exact) return std::nullopt;
    return make_rational(num, den);
}

inline Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace plgroup
