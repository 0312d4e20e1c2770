#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iqw {

// Arbitrary-precision rational, canonical (gcd 1, positive denominator).
// GMP keeps mpq_class canonical as long as canonicalize() runs after raw
// numerator/denominator surgery; every constructor here does so.
using BigRat = mpq_class;
using BigInt = mpz_class;

inline BigRat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("BigRat: zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q" and decimal strings like "0.25" (exact binary-free parse).
inline BigRat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        size_t frac_len = text.size() - dot - 1;
        BigInt num(digits);
        BigInt den(1);
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        BigRat r(num, den);
        r.canonicalize();
        return r;
    }
    BigRat r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const BigRat& r) { return r.get_str(); }

inline double rat_to_double(const BigRat& r) { return r.get_d(); }

inline BigRat rat_pow(const BigRat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        BigRat inv = 1 / base;
        return rat_pow(inv, -e);
    }
    BigRat acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace iqw
