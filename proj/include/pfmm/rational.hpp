#pragma once

#include <gmpxx.h>

#include <string>

#include "pfmm/errors.hpp"

namespace pfmm {

// Exact arbitrary-precision arithmetic, backed by GMP. mpq_class already
// maintains the canonical form we need (gcd-reduced, positive denominator,
// zero stored as 0/1).
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Serialized as "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("malformed rational: " + s);
    if (r.get_den() == 0) throw DivisionByZero("zero denominator in: " + s);
    r.canonicalize();
    return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// base^e for any integer exponent; negative powers require base != 0.
inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0 && base == 0) throw DivisionByZero("0 raised to a negative power");
    Rational num = 1, out;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(),
               static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(num.get_den_mpz_t(), base.get_den_mpz_t(),
               static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0) {
        out = 1 / num;
    } else {
        out = num;
    }
    out.canonicalize();
    return out;
}

inline Rational factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

}  // namespace pfmm
