#pragma once

#include "iqw/multipoly.hpp"
#include "iqw/partition.hpp"
#include "iqw/ratq.hpp"

namespace iqw {

// Polynomials in the second formal parameter t over Q(q).
using PolyT = Upoly<RatQ>;

inline PolyT gcd_polyt(PolyT a, PolyT b) {
    while (!b.is_zero()) {
        PolyT r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        RatQ lead = a.leading();
        for (auto& c : a.c) c /= lead;  // monic representative
    }
    return a;
}

// The two-parameter scalar field Q(q)(t), used only by the Macdonald family.
// Canonical form: monic denominator, gcd(num, den) = 1 over Q(q)[t].
class Rat2 {
public:
    PolyT num, den;

    Rat2() : num(), den(PolyT::constant(RatQ::one())) {}
    Rat2(int v) : Rat2(RatQ(v)) {}
    Rat2(const RatQ& v) : num(PolyT::constant(v)), den(PolyT::constant(RatQ::one())) {}
    Rat2(PolyT n, PolyT d) { assign(std::move(n), std::move(d)); }

    static Rat2 t() { return Rat2(PolyT::monomial(RatQ::one(), 1), PolyT::constant(RatQ::one())); }
    static Rat2 q() { return Rat2(RatQ::q()); }
    static Rat2 one() { return Rat2(1); }
    static Rat2 zero() { return Rat2(); }

    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const Rat2& a, const Rat2& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat2& a, const Rat2& b) { return !(a == b); }

    Rat2 operator-() const {
        Rat2 r = *this;
        r.num = -r.num;
        return r;
    }
    friend Rat2 operator+(const Rat2& a, const Rat2& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den == b.den) return Rat2(a.num + b.num, a.den);
        return Rat2(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat2 operator-(const Rat2& a, const Rat2& b) { return a + (-b); }
    friend Rat2 operator*(const Rat2& a, const Rat2& b) {
        if (a.is_zero() || b.is_zero()) return Rat2();
        return Rat2(a.num * b.num, a.den * b.den);
    }
    friend Rat2 operator/(const Rat2& a, const Rat2& b) {
        if (b.is_zero()) throw std::domain_error("Rat2: division by zero");
        if (a.is_zero()) return Rat2();
        return Rat2(a.num * b.den, a.den * b.num);
    }
    Rat2& operator+=(const Rat2& o) { return *this = *this + o; }
    Rat2& operator-=(const Rat2& o) { return *this = *this - o; }
    Rat2& operator*=(const Rat2& o) { return *this = *this * o; }
    Rat2& operator/=(const Rat2& o) { return *this = *this / o; }

    Rat2 pow(long e) const {
        if (e < 0) return one() / pow(-e);
        Rat2 acc = one(), b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }

    // Substitute a Q(q) value for t.
    RatQ subst_t(const RatQ& tv) const {
        RatQ n = num.eval(tv);
        RatQ d = den.eval(tv);
        if (d.is_zero()) throw std::domain_error("Rat2: pole at the requested t");
        return n / d;
    }
    RatQ at_t_zero() const { return subst_t(RatQ::zero()); }
    RatQ at_t_equal_q() const { return subst_t(RatQ::q()); }

private:
    void assign(PolyT n, PolyT d) {
        if (d.is_zero()) throw std::domain_error("Rat2: zero denominator");
        if (n.is_zero()) {
            num = PolyT();
            den = PolyT::constant(RatQ::one());
            return;
        }
        if (n.degree() > 0 && d.degree() > 0) {
            PolyT g = gcd_polyt(n, d);
            if (g.degree() > 0) {
                n = divexact(n, g);
                d = divexact(d, g);
            }
        }
        RatQ lead = d.leading();
        for (auto& c : d.c) c /= lead;
        for (auto& c : n.c) c /= lead;
        num = std::move(n);
        den = std::move(d);
    }
};

using MultiPoly2 = MultiPoly<Rat2>;

// ---- Macdonald box weights ----

// b_lambda(i,j) = (1 - q^{lambda_i - j} t^{lambda'_j - i + 1}) /
//                 (1 - q^{lambda_i - j + 1} t^{lambda'_j - i}); 1 outside lambda.
Rat2 macd_box(const Partition& lambda, const Partition& lconj, int i, int j);

Rat2 b_macdonald(const Partition& lambda);
Rat2 psi_macdonald(const Partition& lambda, const Partition& mu);     // rows minus columns
Rat2 psibar_macdonald(const Partition& lambda, const Partition& mu);  // columns

// b_lambda / b_mu, the factor converting P_{lambda/mu} to Q_{lambda/mu}.
Rat2 macd_q_from_p(const Partition& lambda, const Partition& mu);

enum class MacdKind { P, Q };

// One-variable skew Macdonald weight (psi or psibar times x^{|skew|}).
Upoly<Rat2> macd_one_var(MacdKind kind, const Partition& lambda, const Partition& mu);

// n-variable skew Macdonald polynomial over Q(q)(t) by the branching rule,
// truncated to total degree <= cap when cap >= 0.
MultiPoly2 macd_expand(MacdKind kind, const Partition& lambda, const Partition& mu, int n,
                       long cap = -1);

}  // namespace iqw
