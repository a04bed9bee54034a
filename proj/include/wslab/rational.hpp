#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace wslab {

/* Exact rational scalar. All arithmetic in the library is exact; there is no
 * floating point anywhere in the evaluation paths. */
using Rational = mpq_class;
using Integer = mpz_class;

/* Build a canonical rational from integer strings (decimal, optional sign). */
inline Rational make_rational(const std::string& num, const std::string& den = "1") {
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

/* "n" when the denominator is 1, otherwise "n/d"; sign on the numerator. */
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace wslab
