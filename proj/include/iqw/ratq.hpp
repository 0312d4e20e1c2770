#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "iqw/rational.hpp"
#include "iqw/upoly.hpp"

namespace iqw {

using PolyQ = Upoly<BigRat>;   // polynomial in the formal parameter q
using PolyZ = Upoly<BigInt>;

template <>
struct ScalarCast<double, BigRat> {
    static double cast(const BigRat& s) { return s.get_d(); }
};

inline PolyQ polyq_from_ints(std::initializer_list<long> coeffs) {
    std::vector<BigRat> v;
    for (long x : coeffs) v.emplace_back(x);
    return PolyQ(std::move(v));
}

// ---- integer polynomial helpers (gcd backend) ----

inline BigInt content(const PolyZ& f) {
    BigInt g(0);
    for (const auto& x : f.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline PolyZ primitive_part(PolyZ f) {
    if (f.is_zero()) return f;
    BigInt g = content(f);
    if (g != 1)
        for (auto& x : f.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    if (f.leading() < 0)
        for (auto& x : f.c) x = -x;
    return f;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, entirely in Z[q].
inline PolyZ prem(PolyZ a, const PolyZ& b) {
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        BigInt la = a.leading();
        size_t shift = static_cast<size_t>(a.degree() - b.degree());
        for (auto& x : a.c) x *= lb;
        for (size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= la * b.c[i];
        a.trim();
    }
    return a;
}

inline PolyZ gcd_int(PolyZ a, PolyZ b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        PolyZ r = primitive_part(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Scale f by the unique positive rational making its coefficients integer and
// coprime; returns that primitive integer polynomial (sign of leading kept).
inline PolyZ to_int_primitive(const PolyQ& f) {
    if (f.is_zero()) return PolyZ();
    BigInt lcm_den(1);
    for (const auto& x : f.c)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den().get_mpz_t());
    PolyZ g;
    g.c.reserve(f.c.size());
    for (const auto& x : f.c) {
        BigRat scaled = x * BigRat(lcm_den);
        g.c.push_back(scaled.get_num());
    }
    BigInt cont = content(g);
    if (cont != 1)
        for (auto& x : g.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cont.get_mpz_t());
    return g;
}

inline PolyQ to_polyq(const PolyZ& f) {
    PolyQ g;
    g.c.reserve(f.c.size());
    for (const auto& x : f.c) g.c.emplace_back(x);
    return g;
}

// gcd over Q[q], returned as a primitive integer polynomial with positive
// leading coefficient (the canonical representative of the gcd class).
inline PolyQ gcd_polyq(const PolyQ& a, const PolyQ& b) {
    return to_polyq(gcd_int(to_int_primitive(a), to_int_primitive(b)));
}

// ---- the coefficient field Q(q) ----

// Canonical form: gcd(num, den) = 1 over Q[q]; den has integer coprime
// coefficients with positive leading coefficient. Equality is representation
// equality.
class RatQ {
public:
    PolyQ num;
    PolyQ den;  // never zero

    RatQ() : num(), den(PolyQ::constant(BigRat(1))) {}
    RatQ(int v) : RatQ(BigRat(v)) {}
    RatQ(long v) : RatQ(BigRat(v)) {}
    RatQ(const BigRat& v) : num(PolyQ::constant(v)), den(PolyQ::constant(BigRat(1))) {}
    RatQ(PolyQ n, PolyQ d) { assign(std::move(n), std::move(d)); }
    explicit RatQ(PolyQ n) : num(std::move(n)), den(PolyQ::constant(BigRat(1))) {}

    static RatQ q() { return RatQ(PolyQ::monomial(BigRat(1), 1)); }
    static RatQ q_pow(long k) { return RatQ(PolyQ::monomial(BigRat(1), static_cast<size_t>(k))); }
    static RatQ one() { return RatQ(1); }
    static RatQ zero() { return RatQ(); }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return den.degree() == 0 && num == den; }
    bool is_polynomial() const { return den.degree() == 0; }

    friend bool operator==(const RatQ& a, const RatQ& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const RatQ& a, const RatQ& b) { return !(a == b); }

    RatQ operator-() const {
        RatQ r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatQ operator+(const RatQ& a, const RatQ& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den == b.den) return RatQ(a.num + b.num, a.den);
        return RatQ(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatQ operator-(const RatQ& a, const RatQ& b) { return a + (-b); }
    friend RatQ operator*(const RatQ& a, const RatQ& b) {
        if (a.is_zero() || b.is_zero()) return RatQ();
        return RatQ(a.num * b.num, a.den * b.den);
    }
    friend RatQ operator/(const RatQ& a, const RatQ& b) {
        if (b.is_zero()) throw std::domain_error("RatQ: division by zero");
        if (a.is_zero()) return RatQ();
        return RatQ(a.num * b.den, a.den * b.num);
    }
    RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
    RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
    RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
    RatQ& operator/=(const RatQ& o) { return *this = *this / o; }

    RatQ pow(long e) const {
        if (e < 0) return one() / pow(-e);
        RatQ acc = one(), b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    double eval_double(double qv) const {
        double n = num.eval(qv);
        double d = den.eval(qv);
        return n / d;
    }
    BigRat eval_rat(const BigRat& qv) const {
        BigRat n = num.eval(qv);
        BigRat d = den.eval(qv);
        if (d == 0) throw std::domain_error("RatQ: pole at given q");
        return n / d;
    }

    // Coefficients of num as a polynomial (valid when is_polynomial()).
    const PolyQ& poly() const {
        if (!is_polynomial()) throw std::domain_error("RatQ: not a polynomial");
        return num;
    }

    std::string to_string() const {
        std::string s = poly_to_string(num);
        if (!(den.degree() == 0 && den.c[0] == BigRat(1))) s += " / " + poly_to_string(den);
        return s;
    }

    static std::string poly_to_string(const PolyQ& p) {
        if (p.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t k = p.c.size(); k-- > 0;) {
            if (p.c[k] == BigRat(0)) continue;
            if (!first) os << " + ";
            first = false;
            if (k == 0)
                os << p.c[k].get_str();
            else
                os << p.c[k].get_str() << "*q^" << k;
        }
        return os.str();
    }

private:
    void assign(PolyQ n, PolyQ d) {
        if (d.is_zero()) throw std::domain_error("RatQ: zero denominator");
        if (n.is_zero()) {
            num = PolyQ();
            den = PolyQ::constant(BigRat(1));
            return;
        }
        if (d.degree() == 0) {  // constant denominator: scale through
            BigRat r = d.c[0];
            if (r == 1) {
                num = std::move(n);
            } else {
                num = n.scaled(BigRat(1) / r);
            }
            den = PolyQ::constant(BigRat(1));
            return;
        }
        if (n.degree() > 0 && d.degree() > 0) {
            PolyQ g = gcd_polyq(n, d);
            if (g.degree() > 0) {
                n = divexact(n, g);
                d = divexact(d, g);
            }
        }
        // Scale so den is integer-primitive with positive leading coefficient.
        PolyZ dz = to_int_primitive(d);
        if (dz.leading() < 0)
            for (auto& x : dz.c) x = -x;
        // d = r * dz for the rational r = lc(d)/lc(dz).
        BigRat r = d.leading() / BigRat(dz.leading());
        num = n.scaled(BigRat(1) / r);
        den = to_polyq(dz);
    }
};

// ---- q-Pochhammer and Gaussian binomial ----

// (x;q)_k = prod_{i=0}^{k-1} (1 - x q^i) in any commutative ring containing q.
template <class S>
S qpoch(const S& x, const S& qv, long k) {
    if (k < 0) throw std::domain_error("qpoch: negative length");
    S acc(1), qp(1);
    for (long i = 0; i < k; ++i) {
        acc = acc * (S(1) - x * qp);
        qp = qp * qv;
    }
    return acc;
}

inline RatQ qpoch_q(long k) { return qpoch(RatQ::q(), RatQ::q(), k); }  // (q;q)_k

// Gaussian binomial as an integer polynomial in q; zero outside 0<=k<=n.
inline PolyQ qbinom(long n, long k) {
    if (k < 0 || k > n || n < 0) return PolyQ();
    if (k == 0 || k == n) return PolyQ::constant(BigRat(1));
    // Pascal-type recurrence: [n,k] = [n-1,k-1] + q^k [n-1,k].
    std::vector<PolyQ> row(static_cast<size_t>(n) + 1);
    row[0] = PolyQ::constant(BigRat(1));
    for (long i = 1; i <= n; ++i) {
        for (long j = std::min<long>(i, k); j >= 1; --j) {
            PolyQ t = row[static_cast<size_t>(j)];
            if (!t.is_zero()) {
                PolyQ shifted = t * PolyQ::monomial(BigRat(1), static_cast<size_t>(j));
                row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + shifted;
            } else {
                row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)];
            }
        }
    }
    return row[static_cast<size_t>(k)];
}

// Numeric (x;q)_infinity for |q| < 1: the product is truncated once the
// multiplicative correction |x q^i| drops below tol*(1-|q|).
inline double qpoch_infinite(double x, double q, double tol) {
    if (std::abs(q) >= 1.0) throw std::domain_error("qpoch_infinite: |q| must be < 1");
    if (tol <= 0) throw std::domain_error("qpoch_infinite: tol must be positive");
    double acc = 1.0, term = x;
    double cutoff = tol * (1.0 - std::abs(q));
    while (std::abs(term) >= cutoff) {
        acc *= (1.0 - term);
        term *= q;
        if (term == 0.0) break;
    }
    return acc;
}

}  // namespace iqw
