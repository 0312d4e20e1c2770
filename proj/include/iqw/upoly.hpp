#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace iqw {

// Dense univariate polynomial with coefficients in a commutative ring S.
// coeffs[k] is the coefficient of x^k; the top stored coefficient is nonzero
// (zero polynomial = empty vector).
// Conversion hook used by Upoly::eval; specialized where a plain construction
// does not exist (e.g. double from a GMP rational).
template <class T, class S>
struct ScalarCast {
    static T cast(const S& s) { return T(s); }
};

template <class S>
class Upoly {
public:
    std::vector<S> c;

    Upoly() = default;
    Upoly(int v) {
        if (v != 0) c.push_back(S(v));
    }
    explicit Upoly(std::vector<S> coeffs) : c(std::move(coeffs)) { trim(); }
    static Upoly zero() { return Upoly(); }
    static Upoly constant(const S& s) {
        Upoly p;
        if (!(s == S(0))) p.c.push_back(s);
        return p;
    }
    static Upoly monomial(const S& s, size_t k) {
        Upoly p;
        if (s == S(0)) return p;
        p.c.assign(k + 1, S(0));
        p.c[k] = s;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
    const S& leading() const { return c.back(); }
    S at(size_t k) const { return k < c.size() ? c[k] : S(0); }

    void trim() {
        while (!c.empty() && c.back() == S(0)) c.pop_back();
    }

    friend bool operator==(const Upoly& a, const Upoly& b) { return a.c == b.c; }
    friend bool operator!=(const Upoly& a, const Upoly& b) { return !(a == b); }

    Upoly operator-() const {
        Upoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Upoly operator+(const Upoly& a, const Upoly& b) {
        Upoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), S(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Upoly operator-(const Upoly& a, const Upoly& b) { return a + (-b); }
    friend Upoly operator*(const Upoly& a, const Upoly& b) {
        if (a.is_zero() || b.is_zero()) return Upoly();
        Upoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, S(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == S(0)) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    Upoly& operator+=(const Upoly& o) { return *this = *this + o; }
    Upoly& operator-=(const Upoly& o) { return *this = *this - o; }
    Upoly& operator*=(const Upoly& o) { return *this = *this * o; }

    Upoly scaled(const S& s) const {
        if (s == S(0)) return Upoly();
        Upoly r = *this;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    // Product truncated to degree <= cap (series arithmetic).
    static Upoly mul_trunc(const Upoly& a, const Upoly& b, size_t cap) {
        Upoly r;
        if (a.is_zero() || b.is_zero()) return r;
        size_t n = std::min(a.c.size() + b.c.size() - 1, cap + 1);
        r.c.assign(n, S(0));
        for (size_t i = 0; i < a.c.size() && i <= cap; ++i) {
            if (a.c[i] == S(0)) continue;
            for (size_t j = 0; j < b.c.size() && i + j <= cap; ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }

    Upoly truncated(size_t cap) const {
        Upoly r = *this;
        if (r.c.size() > cap + 1) r.c.resize(cap + 1);
        r.trim();
        return r;
    }

    template <class T>
    T eval(const T& x) const {
        T acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + ScalarCast<T, S>::cast(c[i]);
        return acc;
    }

    Upoly pow(long e) const {
        if (e < 0) throw std::domain_error("Upoly::pow: negative exponent");
        Upoly acc = constant(S(1)), b = *this;
        while (e > 0) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }
};

// Exact division over a coefficient field; throws if the division is inexact.
template <class S>
Upoly<S> divexact(const Upoly<S>& a, const Upoly<S>& b) {
    if (b.is_zero()) throw std::domain_error("Upoly divexact: division by zero");
    Upoly<S> rem = a, quot;
    if (a.is_zero()) return quot;
    quot.c.assign(a.c.size() - b.c.size() + 1, S(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        S f = rem.leading() / b.leading();
        size_t shift = static_cast<size_t>(rem.degree() - b.degree());
        quot.c[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw std::domain_error("Upoly divexact: inexact division");
    quot.trim();
    return quot;
}

// Remainder of polynomial division over a coefficient field.
template <class S>
Upoly<S> poly_mod(Upoly<S> a, const Upoly<S>& b) {
    if (b.is_zero()) throw std::domain_error("Upoly mod: division by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        S f = a.leading() / b.leading();
        size_t shift = static_cast<size_t>(a.degree() - b.degree());
        for (size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= f * b.c[i];
        a.trim();
    }
    return a;
}

}  // namespace iqw
