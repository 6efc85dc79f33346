#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eorec {

// Arbitrary-precision rational, GMP-backed. Always canonical (reduced,
// positive denominator).
using Rat = mpq_class;

inline Rat rat_of(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q".
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact square root of a rational if it is a perfect square.
inline bool rat_sqrt(const Rat& r, Rat& out) {
    if (sgn(r) < 0) return false;
    if (sgn(r) == 0) { out = 0; return true; }
    const mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rat(sn, sd);
    out.canonicalize();
    return true;
}

inline Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? r : Rat(1) / r;
    unsigned long k = e > 0 ? e : -e;
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline Rat factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

// (2n-1)!! extended to n = -1 by (-3)!! = -1, (-1)!! = 1.
inline Rat double_factorial_odd(long n) {
    if (n < -1) {
        if (n == -1) return Rat(1);
        // (2n+1)!! = (2n+1)(2n-1)!!  =>  (2n-1)!! = (2n+1)!!/(2n+1)
        Rat acc(1);
        for (long m = n; m < -1; ++m) acc /= Rat(2 * m + 1);
        return acc;
    }
    Rat acc(1);
    for (long k = 1; k <= n; ++k) acc *= Rat(2 * k - 1);
    return acc;
}

inline Rat binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(b);
}

}  // namespace eorec
