#include "iqw/symfunc.hpp"

#include <algorithm>
#include <map>

namespace iqw {

namespace detail {

namespace {

using MatQ = std::vector<std::vector<BigRat>>;

MultiPoly<BigRat> elementary_poly(int nvars, int k) {
    MultiPoly<BigRat> r(nvars);
    if (k == 0) return MultiPoly<BigRat>::one(nvars);
    if (k > nvars) return r;
    std::vector<int> idx(static_cast<size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            Exponents e(static_cast<size_t>(nvars), 0);
            for (int i : idx) e[static_cast<size_t>(i)] = 1;
            r.add_term(e, BigRat(1));
            return;
        }
        for (int i = start; i < nvars; ++i) {
            idx[static_cast<size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return r;
}

MultiPoly<BigRat> power_poly(int nvars, int k) {
    MultiPoly<BigRat> r(nvars);
    for (int i = 0; i < nvars; ++i) {
        Exponents e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(i)] = k;
        r.add_term(e, BigRat(1));
    }
    return r;
}

std::vector<BigRat> collect_m_row(const MultiPoly<BigRat>& f, const std::vector<Partition>& parts) {
    std::vector<BigRat> row(parts.size(), BigRat(0));
    for (size_t j = 0; j < parts.size(); ++j) {
        Exponents e(static_cast<size_t>(f.n), 0);
        const auto& p = parts[j].parts();
        for (size_t i = 0; i < p.size(); ++i) e[i] = p[i];
        row[j] = f.coeff(e);
    }
    return row;
}

}  // namespace

MatQ invert_matrix(MatQ a) {
    size_t n = a.size();
    MatQ inv(n, std::vector<BigRat>(n, BigRat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) piv++;
        if (piv == n) throw std::runtime_error("invert_matrix: singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        BigRat f = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= f;
            inv[col][j] /= f;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            BigRat g = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= g * a[col][j];
                inv[r][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

const TransitionTables& transition_tables(int d) {
    static std::map<int, TransitionTables> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    TransitionTables t;
    t.parts = partitions_of(d);
    int nvars = std::max(d, 1);
    for (const auto& kappa : t.parts) {
        MultiPoly<BigRat> e = MultiPoly<BigRat>::one(nvars);
        MultiPoly<BigRat> p = MultiPoly<BigRat>::one(nvars);
        for (int part : kappa.parts()) {
            e *= elementary_poly(nvars, part);
            p *= power_poly(nvars, part);
        }
        t.e_to_m.push_back(collect_m_row(e, t.parts));
        t.p_to_m.push_back(collect_m_row(p, t.parts));
    }
    if (!t.parts.empty()) {
        t.m_to_e = invert_matrix(t.e_to_m);
        t.m_to_p = invert_matrix(t.p_to_m);
    }
    return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace detail

namespace {

// out_j = sum_i in_i M[i][j] on the degree-d layer
void apply_transition(const SymFuncTrunc& in, SymFuncTrunc& out, int d,
                      const std::vector<std::vector<BigRat>>& M) {
    const auto& tables = detail::transition_tables(d);
    std::vector<RatQ> vec(tables.parts.size(), RatQ::zero());
    bool any = false;
    for (size_t i = 0; i < tables.parts.size(); ++i) {
        RatQ c = in.coeff(tables.parts[i]);
        if (!c.is_zero()) {
            vec[i] = c;
            any = true;
        }
    }
    if (!any) return;
    for (size_t j = 0; j < tables.parts.size(); ++j) {
        RatQ acc = RatQ::zero();
        for (size_t i = 0; i < tables.parts.size(); ++i) {
            if (vec[i].is_zero() || M[i][j] == 0) continue;
            acc += vec[i] * RatQ(BigRat(M[i][j]));
        }
        out.add_term(tables.parts[j], acc);
    }
}

}  // namespace

SymFuncTrunc to_mbasis(const MultiPolyQ& f) {
    if (auto w = f.symmetry_witness()) throw NotSymmetric(*w);
    SymFuncTrunc r(SymBasis::monomial, static_cast<int>(std::max<long>(f.total_degree(), 0)));
    for (const auto& [e, c] : f.terms) {
        Exponents sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != e) continue;  // only the dominant representative counts
        std::vector<int> parts;
        for (int x : sorted)
            if (x > 0) parts.push_back(x);
        r.coeffs.emplace(Partition(parts), c);
    }
    return r;
}

MultiPolyQ mbasis_to_poly(const SymFuncTrunc& f, int nvars) {
    if (f.basis != SymBasis::monomial)
        throw std::invalid_argument("mbasis_to_poly: input must be in the monomial basis");
    MultiPolyQ r(nvars);
    for (const auto& [kappa, c] : f.coeffs) {
        if (kappa.length() > nvars) continue;  // vanishes in this many variables
        Exponents e(static_cast<size_t>(nvars), 0);
        const auto& p = kappa.parts();
        for (size_t i = 0; i < p.size(); ++i) e[i] = p[i];
        std::sort(e.begin(), e.end());
        do {
            r.add_term(e, c);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return r;
}

SymFuncTrunc lift(const MultiPolyQ& f, int D) {
    if (f.n < D) throw std::invalid_argument("lift: need at least D variables");
    if (auto w = f.symmetry_witness()) throw NotSymmetric(*w);
    SymFuncTrunc r(SymBasis::monomial, D);
    for (const auto& [e, c] : f.terms) {
        Exponents sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != e) continue;
        long total = 0;
        for (int x : sorted) total += x;
        if (total > D) continue;
        std::vector<int> parts;
        for (int x : sorted)
            if (x > 0) parts.push_back(x);
        r.coeffs.emplace(Partition(parts), c);
    }
    return r;
}

SymFuncTrunc basis_change(const SymFuncTrunc& f, SymBasis target) {
    if (f.basis == target) return f;
    // route everything through the monomial basis
    SymFuncTrunc m(SymBasis::monomial, f.max_degree);
    if (f.basis == SymBasis::monomial) {
        m = f;
    } else {
        for (int d = 0; d <= f.max_degree; ++d) {
            const auto& tables = detail::transition_tables(d);
            apply_transition(f, m, d,
                             f.basis == SymBasis::elementary ? tables.e_to_m : tables.p_to_m);
        }
    }
    if (target == SymBasis::monomial) return m;
    SymFuncTrunc out(target, f.max_degree);
    for (int d = 0; d <= f.max_degree; ++d) {
        const auto& tables = detail::transition_tables(d);
        apply_transition(m, out, d,
                         target == SymBasis::elementary ? tables.m_to_e : tables.m_to_p);
    }
    return out;
}

SymFuncTrunc omega(const SymFuncTrunc& f, OmegaMode mode) {
    SymFuncTrunc p = basis_change(f, SymBasis::power);
    SymFuncTrunc out(SymBasis::power, f.max_degree);
    for (const auto& [kappa, c] : p.coeffs) {
        RatQ factor = RatQ::one();
        for (int part : kappa.parts()) {
            RatQ sign = (part % 2 == 0) ? -RatQ::one() : RatQ::one();
            switch (mode) {
                case OmegaMode::from_hl:
                    factor *= sign / (RatQ::one() - RatQ::q_pow(part));
                    break;
                case OmegaMode::to_hl:
                    factor *= sign * (RatQ::one() - RatQ::q_pow(part));
                    break;
                case OmegaMode::classical:
                    factor *= sign;
                    break;
            }
        }
        out.add_term(kappa, c * factor);
    }
    return basis_change(out, f.basis);
}

}  // namespace iqw
