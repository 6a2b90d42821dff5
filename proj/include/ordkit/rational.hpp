#pragma once

#include <gmpxx.h>

#include <string>

#include "ordkit/errors.hpp"

namespace ordkit {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long p, long q = 1) {
    if (q == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& p, const Int& q) {
    if (q == 0) throw DivisionByZero("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline int sgn(const Rat& x) { return ::sgn(x); }

inline Rat abs(const Rat& x) { return ::abs(x); }

// Exact floor of a rational.
inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// 10^-k as an exact rational.
inline Rat pow10_neg(unsigned long k) { return rat(Int(1), pow_int(10, k)); }

inline Rat pow2_neg(unsigned long k) { return rat(Int(1), pow_int(2, k)); }

// Base-10 integer parse (the mpz string constructor auto-detects bases, so
// leading zeros would otherwise read as octal).
inline Int parse_int(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad integer literal: " + s);
    }
}

// Parses "p", "p/q" or "-p/q"; anything else is a ParseError.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    return rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

inline std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace ordkit
