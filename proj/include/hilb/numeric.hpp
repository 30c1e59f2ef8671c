#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hilb {

// Exact arithmetic everywhere: arbitrary-precision integers and canonical
// rationals (denominator > 0, fully reduced), provided by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Quotient a/b, required to be exact; a non-exact division signals a broken
// invariant in the caller and is raised loudly.
inline Integer exact_div(const Integer& a, const Integer& b, const char* what) {
    if (b == 0)
        throw std::logic_error(std::string("exact_div by zero in ") + what);
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw std::logic_error(std::string("non-exact division in ") + what);
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// "p" when integral, "p/q" otherwise.
inline std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace hilb
