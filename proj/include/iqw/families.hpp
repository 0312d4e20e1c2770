#pragma once

#include <string>
#include <vector>

#include "iqw/multipoly.hpp"
#include "iqw/partition.hpp"
#include "iqw/ratq.hpp"

namespace iqw {

// Branching families over Q(q). All of them step along chains
// mu <= nu^1 < nu^2 < ... with horizontal-strip increments; the one-variable
// weight is zero whenever the strip indicator fails.
enum class Family { F, Ftilde, W, HLQ, hl_j, hl_J };

const char* family_name(Family f);
Family family_from_string(const std::string& s);

// One-variable skew weight num(x) / (1+x)^denom_pow. Only the J family uses a
// nonzero denominator exponent, where it equals r(mu/lambda-tilde) + |lambda/mu|.
struct UniWeight {
    Upoly<RatQ> num;
    int denom_pow = 0;

    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const UniWeight& a, const UniWeight& b) {
        return a.num == b.num && a.denom_pow == b.denom_pow;
    }

    // Truncated power series in x of num/(1+x)^denom_pow.
    Upoly<RatQ> series(long cap) const;

    // Exact evaluation; throws on the J pole x = -1.
    template <class T>
    T value(const T& x) const {
        T numeric = num.eval(x);
        if (denom_pow == 0) return numeric;
        T d = T(1) + x;
        if (d == T(0)) throw std::domain_error("UniWeight: pole at x = -1");
        for (int i = 0; i < denom_pow; ++i) numeric = numeric / d;
        return numeric;
    }
};

UniWeight one_var(Family fam, const Partition& lambda, const Partition& mu,
                  FSetReading reading = FSetReading::column_occupancy);

// Exact n-variable skew polynomial by the branching recursion (memoized).
// Rejects the rational J family; use expand_skew_J / expand_skew_series.
MultiPolyQ expand_skew(Family fam, const Partition& lambda, const Partition& mu, int n);

// J is rational: num / prod_i (1+x_i)^{denom_pows[i]}.
struct JRational {
    MultiPolyQ num;
    std::vector<int> denom_pows;
};
JRational expand_skew_J(const Partition& lambda, const Partition& mu, int n);

// Power-series expansion truncated to total degree <= cap; supports every
// family (for the polynomial ones this is just a truncation of expand_skew).
MultiPolyQ expand_skew_series(Family fam, const Partition& lambda, const Partition& mu, int n,
                              long cap, FSetReading reading = FSetReading::column_occupancy);

// Scalar branching DP: equals substituting `values` into expand_skew but runs
// in time polynomial in |lambda| and the number of values.
template <class T>
T eval_skew(Family fam, const Partition& lambda, const Partition& mu, const std::vector<T>& values,
            const T& qv);

// One-variable weight evaluated in an arbitrary scalar ring (q given as a
// value of that ring).
template <class T>
T one_var_value(Family fam, const Partition& lambda, const Partition& mu, const T& x, const T& qv,
                FSetReading reading = FSetReading::column_occupancy);

// ---- implementation of the scalar templates ----

namespace detail_families {

template <class T>
T qq_poch(const T& qv, int k) {  // (q;q)_k in T
    return qpoch(qv, qv, k);
}

template <class T>
T pow_int(T base, int e) {
    T acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace detail_families

template <class T>
T one_var_value(Family fam, const Partition& lambda, const Partition& mu, const T& x, const T& qv,
                FSetReading reading) {
    using detail_families::pow_int;
    using detail_families::qq_poch;
    if (!is_horizontal_strip(mu, lambda)) return T(0);
    const long skew = lambda.size() - mu.size();
    switch (fam) {
        case Family::W:
        case Family::F: {
            T acc = pow_int(x, static_cast<int>(skew));
            for (int r = 1; r <= lambda.length(); ++r) {
                acc = acc * qq_poch(qv, lambda.part(r) - lambda.part(r + 1));
                acc = acc / qq_poch(qv, lambda.part(r) - mu.part(r));
                acc = acc / qq_poch(qv, mu.part(r) - lambda.part(r + 1));
                if (fam == Family::F) acc = acc * qpoch(x, qv, mu.part(r) - lambda.part(r + 1));
            }
            return acc;
        }
        case Family::Ftilde: {
            T acc(1);
            for (int r = 1; r <= lambda.length(); ++r) {
                acc = acc * qq_poch(qv, mu.part(r) - mu.part(r + 1));
                acc = acc / qq_poch(qv, lambda.part(r) - mu.part(r));
                acc = acc / qq_poch(qv, mu.part(r) - lambda.part(r + 1));
                for (int i = 1; i <= lambda.part(r) - mu.part(r); ++i)
                    acc = acc * (x - pow_int(qv, i - 1));
            }
            return acc;
        }
        case Family::HLQ: {
            T acc = pow_int(x, static_cast<int>(skew));
            for (int i = 1; i <= lambda.first(); ++i) {
                int ml = lambda.multiplicity(i);
                if (ml == mu.multiplicity(i) + 1) acc = acc * (T(1) - pow_int(qv, ml));
            }
            return acc;
        }
        case Family::hl_j: {
            auto stats = skew_stats(lambda, mu, reading);
            T acc = pow_int(x, stats.col_runs);
            for (int i = 1; i <= lambda.first(); ++i) {
                int ml = lambda.multiplicity(i);
                if (ml == mu.multiplicity(i) + 1) acc = acc * (T(1) - pow_int(qv, ml));
            }
            for (int i : stats.F_set) acc = acc * (x + pow_int(qv, lambda.multiplicity(i)));
            return acc;
        }
        case Family::hl_J: {
            auto stats = skew_stats(lambda, mu, reading);
            T denom = T(1) + x;
            if (denom == T(0)) throw std::domain_error("J weight: pole at x = -1");
            T acc(1);
            for (int i = 1; i <= lambda.first(); ++i) {
                int ml = lambda.multiplicity(i);
                if (ml == mu.multiplicity(i) + 1) acc = acc * (T(1) - pow_int(qv, ml));
            }
            int rt = stats.r_tilde.value_or(0);
            for (int i = 0; i < rt; ++i) acc = acc / denom;
            for (long i = 0; i < skew; ++i) acc = acc * x / denom;
            for (int i : stats.E_set) acc = acc * (T(1) + x * pow_int(qv, lambda.multiplicity(i)));
            return acc;
        }
    }
    throw std::logic_error("one_var_value: unreachable");
}

template <class T>
T eval_skew(Family fam, const Partition& lambda, const Partition& mu, const std::vector<T>& values,
            const T& qv) {
    if (!lambda.contains(mu)) return T(0);
    PartMap<T> cur;
    cur.emplace(mu, T(1));
    for (const T& x : values) {
        PartMap<T> next;
        for (const auto& [nu, val] : cur) {
            int budget = static_cast<int>(lambda.size() - nu.size());
            for (const auto& lam2 : strip_successors(nu, budget)) {
                if (!lambda.contains(lam2)) continue;
                T w = one_var_value(fam, lam2, nu, x, qv);
                if (w == T(0)) continue;
                auto it = next.find(lam2);
                if (it == next.end())
                    next.emplace(lam2, val * w);
                else
                    it->second += val * w;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(lambda);
    return it == cur.end() ? T(0) : it->second;
}

}  // namespace iqw
