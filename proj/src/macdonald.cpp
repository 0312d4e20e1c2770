#include "iqw/macdonald.hpp"

namespace iqw {

Rat2 macd_box(const Partition& lambda, const Partition& lconj, int i, int j) {
    if (i < 1 || j < 1 || j > lambda.part(i)) return Rat2::one();
    int arm = lambda.part(i) - j;
    int leg = lconj.part(j) - i;
    // (1 - q^arm t^{leg+1}) / (1 - q^{arm+1} t^leg)
    PolyT num = PolyT::constant(RatQ::one()) - PolyT::monomial(RatQ::q_pow(arm), static_cast<size_t>(leg) + 1);
    PolyT den = PolyT::constant(RatQ::one()) - PolyT::monomial(RatQ::q_pow(arm + 1), static_cast<size_t>(leg));
    return Rat2(num, den);
}

Rat2 b_macdonald(const Partition& lambda) {
    Partition lc = lambda.conjugate();
    Rat2 acc = Rat2::one();
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) acc *= macd_box(lambda, lc, i, j);
    return acc;
}

namespace {

// Rows and columns of the skew strip lambda/mu (1-indexed).
struct StripRC {
    std::vector<bool> row, col;  // row[i], col[j] true when the strip meets them
};

StripRC strip_rows_cols(const Partition& lambda, const Partition& mu) {
    StripRC rc;
    rc.row.assign(static_cast<size_t>(lambda.length()) + 2, false);
    rc.col.assign(static_cast<size_t>(lambda.first()) + 2, false);
    for (int i = 1; i <= lambda.length(); ++i) {
        if (lambda.part(i) > mu.part(i)) {
            rc.row[static_cast<size_t>(i)] = true;
            for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j)
                rc.col[static_cast<size_t>(j)] = true;
        }
    }
    return rc;
}

}  // namespace

Rat2 psi_macdonald(const Partition& lambda, const Partition& mu) {
    if (!is_horizontal_strip(mu, lambda))
        throw std::invalid_argument("psi_macdonald: lambda/mu is not a horizontal strip");
    Partition lc = lambda.conjugate(), mc = mu.conjugate();
    StripRC rc = strip_rows_cols(lambda, mu);
    Rat2 acc = Rat2::one();
    for (int i = 1; i <= lambda.length(); ++i) {
        if (!rc.row[static_cast<size_t>(i)]) continue;
        for (int j = 1; j <= lambda.part(i); ++j) {
            if (rc.col[static_cast<size_t>(j)]) continue;
            acc *= macd_box(mu, mc, i, j) / macd_box(lambda, lc, i, j);
        }
    }
    return acc;
}

Rat2 psibar_macdonald(const Partition& lambda, const Partition& mu) {
    if (!is_horizontal_strip(mu, lambda))
        throw std::invalid_argument("psibar_macdonald: lambda/mu is not a horizontal strip");
    Partition lc = lambda.conjugate(), mc = mu.conjugate();
    StripRC rc = strip_rows_cols(lambda, mu);
    Rat2 acc = Rat2::one();
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            if (j < static_cast<int>(rc.col.size()) && rc.col[static_cast<size_t>(j)])
                acc *= macd_box(lambda, lc, i, j) / macd_box(mu, mc, i, j);
        }
    }
    return acc;
}

Rat2 macd_q_from_p(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw std::invalid_argument("macd_q_from_p: mu not inside lambda");
    return b_macdonald(lambda) / b_macdonald(mu);
}

Upoly<Rat2> macd_one_var(MacdKind kind, const Partition& lambda, const Partition& mu) {
    if (!is_horizontal_strip(mu, lambda)) return Upoly<Rat2>();
    Rat2 coeff = (kind == MacdKind::P) ? psi_macdonald(lambda, mu) : psibar_macdonald(lambda, mu);
    return Upoly<Rat2>::monomial(coeff, static_cast<size_t>(lambda.size() - mu.size()));
}

MultiPoly2 macd_expand(MacdKind kind, const Partition& lambda, const Partition& mu, int n, long cap) {
    MultiPoly2 zero(n);
    if (!lambda.contains(mu)) return zero;
    PartMap<MultiPoly2> cur;
    cur.emplace(mu, MultiPoly2::one(n));
    for (int var = 0; var < n; ++var) {
        PartMap<MultiPoly2> next;
        for (const auto& [nu, poly] : cur) {
            int budget = static_cast<int>(lambda.size() - nu.size());
            for (const auto& lam2 : strip_successors(nu, budget)) {
                if (!lambda.contains(lam2)) continue;
                Upoly<Rat2> w = macd_one_var(kind, lam2, nu);
                if (w.is_zero()) continue;
                MultiPoly2 contrib = poly.mul_univariate(w, var, cap);
                if (contrib.is_zero()) continue;
                auto it = next.find(lam2);
                if (it == next.end())
                    next.emplace(lam2, std::move(contrib));
                else
                    it->second += contrib;
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(lambda);
    return it == cur.end() ? zero : it->second;
}

}  // namespace iqw
