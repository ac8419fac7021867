#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace stable_schur {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw DomainError("malformed rational: '" + text + "'");
    q.canonicalize();
    return q;
}

// num/den in lowest terms; the two-argument mpq_class constructor does not reduce.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Narrow an exact integer to int64, failing loudly instead of wrapping.
inline std::int64_t to_int64(const BigInt& z) {
    if (!z.fits_slong_p()) throw DomainError("integer overflow: " + z.get_str());
    return z.get_si();
}

inline std::int64_t to_int64(const Rational& q) {
    if (q.get_den() != 1) throw DomainError("expected an integer, got " + q.get_str());
    return to_int64(BigInt(q.get_num()));
}

}  // namespace stable_schur
