#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cue {

// All exact arithmetic is carried by GMP. mpq_class keeps fractions in
// lowest terms with positive denominator, which is exactly the invariant
// the coefficient ring needs.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string int_to_string(const Int& v) { return v.get_str(); }

// Canonical "p/q" form; the "/q" part is omitted when q == 1.
inline std::string rat_to_string(const Rat& v) { return v.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0^negative");
        Rat inv = Rat(1) / base;
        return rat_pow(inv, -e);
    }
    Rat r = 1;
    Rat b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// Exact quotient; throws if the division has a remainder.
inline Int divexact(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact integer division");
    return q;
}

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("Int does not fit long");
    return v.get_si();
}

}  // namespace cue
