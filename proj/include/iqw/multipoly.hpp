#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "iqw/partition.hpp"
#include "iqw/ratq.hpp"

namespace iqw {

using Exponents = std::vector<int>;

// Multivariate polynomial in x_1..x_n over a commutative coefficient ring S,
// keyed by exponent sequences of length exactly n. No zero coefficients are
// stored.
template <class S>
class MultiPoly {
public:
    int n = 0;
    std::map<Exponents, S> terms;

    MultiPoly() = default;
    explicit MultiPoly(int nvars) : n(nvars) {}

    static MultiPoly constant(int nvars, const S& s) {
        MultiPoly p(nvars);
        if (!(s == S(0))) p.terms.emplace(Exponents(static_cast<size_t>(nvars), 0), s);
        return p;
    }
    static MultiPoly one(int nvars) { return constant(nvars, S(1)); }
    static MultiPoly variable(int nvars, int i) {  // x_{i+1}, 0-indexed slot i
        MultiPoly p(nvars);
        Exponents e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = 1;
        p.terms.emplace(std::move(e), S(1));
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Exponents& e, const S& coeff) {
        if (coeff == S(0)) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, coeff);
        } else {
            it->second += coeff;
            if (it->second == S(0)) terms.erase(it);
        }
    }

    S coeff(const Exponents& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? S(0) : it->second;
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms) {
            long t = 0;
            for (int x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }
    long min_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms) {
            long t = 0;
            for (int x : e) t += x;
            if (d < 0 || t < d) d = t;
        }
        return d;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n == b.n && a.terms == b.terms;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        if (a.n != b.n) throw std::invalid_argument("MultiPoly: variable-count mismatch");
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        return mul_capped(a, b, -1);
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const S& s) const {
        MultiPoly r(n);
        if (s == S(0)) return r;
        for (const auto& [e, c] : terms) {
            S v = c * s;
            if (!(v == S(0))) r.terms.emplace(e, v);
        }
        return r;
    }

    // Product truncated to total degree <= cap (cap < 0 means exact).
    static MultiPoly mul_capped(const MultiPoly& a, const MultiPoly& b, long cap) {
        if (a.n != b.n) throw std::invalid_argument("MultiPoly: variable-count mismatch");
        MultiPoly r(a.n);
        if (a.is_zero() || b.is_zero()) return r;
        std::vector<std::pair<Exponents, long>> bdeg;
        bdeg.reserve(b.terms.size());
        for (const auto& [e, c] : b.terms) {
            long t = 0;
            for (int x : e) t += x;
            bdeg.emplace_back(e, t);
        }
        Exponents sum(static_cast<size_t>(a.n));
        for (const auto& [ea, ca] : a.terms) {
            long da = 0;
            for (int x : ea) da += x;
            size_t idx = 0;
            for (const auto& [eb, cb] : b.terms) {
                long db = bdeg[idx++].second;
                if (cap >= 0 && da + db > cap) continue;
                for (size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
                r.add_term(sum, ca * cb);
            }
        }
        return r;
    }

    // Multiply by a univariate polynomial placed in variable slot `var`,
    // truncating to total degree <= cap when cap >= 0.
    MultiPoly mul_univariate(const Upoly<S>& w, int var, long cap = -1) const {
        MultiPoly r(n);
        Exponents e2;
        for (const auto& [e, c] : terms) {
            long d = 0;
            for (int x : e) d += x;
            for (size_t k = 0; k < w.c.size(); ++k) {
                if (w.c[k] == S(0)) continue;
                if (cap >= 0 && d + static_cast<long>(k) > cap) break;
                e2 = e;
                e2[static_cast<size_t>(var)] += static_cast<int>(k);
                r.add_term(e2, c * w.c[k]);
            }
        }
        return r;
    }

    MultiPoly homogeneous_component(long d) const {
        MultiPoly r(n);
        for (const auto& [e, c] : terms) {
            long t = 0;
            for (int x : e) t += x;
            if (t == d) r.terms.emplace(e, c);
        }
        return r;
    }

    MultiPoly truncated(long cap) const {
        MultiPoly r(n);
        for (const auto& [e, c] : terms) {
            long t = 0;
            for (int x : e) t += x;
            if (t <= cap) r.terms.emplace(e, c);
        }
        return r;
    }

    // Substitute 0 for the last variable and drop it.
    MultiPoly drop_last_variable() const {
        if (n == 0) throw std::invalid_argument("MultiPoly: no variable to drop");
        MultiPoly r(n - 1);
        for (const auto& [e, c] : terms) {
            if (e.back() != 0) continue;
            Exponents e2(e.begin(), e.end() - 1);
            r.add_term(e2, c);
        }
        return r;
    }

    template <class T>
    T substitute(const std::vector<T>& values) const {
        if (static_cast<int>(values.size()) != n)
            throw std::invalid_argument("MultiPoly::substitute: wrong value count");
        T acc(0);
        for (const auto& [e, c] : terms) {
            T term = ScalarCast<T, S>::cast(c);
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term = term * values[i];
            acc = acc + term;
        }
        return acc;
    }

    MultiPoly swap_variables(int i, int j) const {
        MultiPoly r(n);
        for (const auto& [e, c] : terms) {
            Exponents e2 = e;
            std::swap(e2[static_cast<size_t>(i)], e2[static_cast<size_t>(j)]);
            r.add_term(e2, c);
        }
        return r;
    }

    // Symmetric under every adjacent transposition? Returns the witnessing
    // transposition index when not.
    std::optional<int> symmetry_witness() const {
        for (int i = 0; i + 1 < n; ++i)
            if (swap_variables(i, i + 1) != *this) return i;
        return std::nullopt;
    }
};

using MultiPolyQ = MultiPoly<RatQ>;

inline std::string exponents_key(const Exponents& e) {
    std::ostringstream os;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    return os.str();
}

}  // namespace iqw
