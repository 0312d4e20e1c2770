#include "iqw/families.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace iqw {

const char* family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::Ftilde: return "Ftilde";
        case Family::W: return "W";
        case Family::HLQ: return "HLQ";
        case Family::hl_j: return "j";
        case Family::hl_J: return "J";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "F") return Family::F;
    if (s == "Ftilde" || s == "F~") return Family::Ftilde;
    if (s == "W") return Family::W;
    if (s == "HLQ" || s == "Q") return Family::HLQ;
    if (s == "j") return Family::hl_j;
    if (s == "J") return Family::hl_J;
    throw std::invalid_argument("unknown family '" + s + "'");
}

Upoly<RatQ> UniWeight::series(long cap) const {
    Upoly<RatQ> r = num.truncated(static_cast<size_t>(cap));
    if (denom_pow == 0) return r;
    // (1+x)^{-k} = sum_j (-1)^j binom(k+j-1, j) x^j
    Upoly<RatQ> inv;
    inv.c.reserve(static_cast<size_t>(cap) + 1);
    for (long j = 0; j <= cap; ++j) {
        BigInt b = binomial(denom_pow + j - 1, j);
        BigRat c(b);
        if (j % 2 == 1) c = -c;
        inv.c.push_back(RatQ(c));
    }
    inv.trim();
    return Upoly<RatQ>::mul_trunc(r, inv, static_cast<size_t>(cap));
}

UniWeight one_var(Family fam, const Partition& lambda, const Partition& mu, FSetReading reading) {
    UniWeight w;
    if (!is_horizontal_strip(mu, lambda)) return w;
    using PX = Upoly<RatQ>;
    const long skew = lambda.size() - mu.size();
    const PX x = PX::monomial(RatQ::one(), 1);
    switch (fam) {
        case Family::W:
        case Family::F: {
            RatQ coeff = RatQ::one();
            for (int r = 1; r <= lambda.length(); ++r) {
                coeff *= qpoch_q(lambda.part(r) - lambda.part(r + 1));
                coeff /= qpoch_q(lambda.part(r) - mu.part(r));
                coeff /= qpoch_q(mu.part(r) - lambda.part(r + 1));
            }
            PX p = PX::monomial(coeff, static_cast<size_t>(skew));
            if (fam == Family::F) {
                PX qc = PX::constant(RatQ::q());
                for (int r = 1; r <= lambda.length(); ++r)
                    p *= qpoch(x, qc, mu.part(r) - lambda.part(r + 1));
            }
            w.num = p;
            return w;
        }
        case Family::Ftilde: {
            PX p = PX::constant(eta(lambda, mu));
            for (int r = 1; r <= lambda.length(); ++r)
                for (int i = 1; i <= lambda.part(r) - mu.part(r); ++i)
                    p *= (x - PX::constant(RatQ::q_pow(i - 1)));
            w.num = p;
            return w;
        }
        case Family::HLQ: {
            w.num = PX::monomial(kappa(lambda, mu), static_cast<size_t>(skew));
            return w;
        }
        case Family::hl_j: {
            // x-exponent counts maximal runs of occupied columns so that the
            // total degree is |lambda/mu| and the top coefficient is the
            // Hall-Littlewood kappa.
            auto stats = skew_stats(lambda, mu, reading);
            PX p = PX::monomial(kappa(lambda, mu), static_cast<size_t>(stats.col_runs));
            for (int i : stats.F_set) p *= (x + PX::constant(RatQ::q_pow(lambda.multiplicity(i))));
            w.num = p;
            return w;
        }
        case Family::hl_J: {
            auto stats = skew_stats(lambda, mu, reading);
            PX p = PX::monomial(kappa(lambda, mu), static_cast<size_t>(skew));
            for (int i : stats.E_set)
                p *= (PX::constant(RatQ::one()) + x.scaled(RatQ::q_pow(lambda.multiplicity(i))));
            w.num = p;
            w.denom_pow = stats.r_tilde.value_or(0) + static_cast<int>(skew);
            return w;
        }
    }
    throw std::logic_error("one_var: unreachable");
}

namespace {

std::string memo_key(Family fam, const Partition& lambda, const Partition& mu, int n, long cap,
                     FSetReading reading) {
    std::ostringstream os;
    os << family_name(fam) << '|' << lambda.to_string() << '|' << mu.to_string() << '|' << n << '|'
       << cap << '|' << static_cast<int>(reading);
    return os.str();
}

std::mutex memo_mutex;
std::unordered_map<std::string, MultiPolyQ> memo_exact;
std::unordered_map<std::string, MultiPolyQ> memo_series;

// Branching DP over horizontal-strip chains; cap < 0 runs exact, otherwise
// partial polynomials are truncated to total degree <= cap.
MultiPolyQ branch_dp(Family fam, const Partition& lambda, const Partition& mu, int n, long cap,
                     FSetReading reading) {
    MultiPolyQ zero(n);
    if (!lambda.contains(mu)) return zero;
    PartMap<MultiPolyQ> cur;
    cur.emplace(mu, MultiPolyQ::one(n));
    for (int var = 0; var < n; ++var) {
        PartMap<MultiPolyQ> next;
        for (const auto& [nu, poly] : cur) {
            int budget = static_cast<int>(lambda.size() - nu.size());
            for (const auto& lam2 : strip_successors(nu, budget)) {
                if (!lambda.contains(lam2)) continue;
                UniWeight w = one_var(fam, lam2, nu, reading);
                if (w.is_zero()) continue;
                Upoly<RatQ> wx = (fam == Family::hl_J) ? w.series(cap) : w.num;
                MultiPolyQ contrib = poly.mul_univariate(wx, var, cap);
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

}  // namespace

MultiPolyQ expand_skew(Family fam, const Partition& lambda, const Partition& mu, int n) {
    if (fam == Family::hl_J)
        throw std::invalid_argument(
            "expand_skew: J is rational; use expand_skew_J or the series form");
    std::string key = memo_key(fam, lambda, mu, n, -1, FSetReading::column_occupancy);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo_exact.find(key);
        if (it != memo_exact.end()) return it->second;
    }
    MultiPolyQ result = branch_dp(fam, lambda, mu, n, -1, FSetReading::column_occupancy);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo_exact.emplace(key, std::move(result)).first->second;
}

MultiPolyQ expand_skew_series(Family fam, const Partition& lambda, const Partition& mu, int n,
                              long cap, FSetReading reading) {
    std::string key = memo_key(fam, lambda, mu, n, cap, reading);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo_series.find(key);
        if (it != memo_series.end()) return it->second;
    }
    MultiPolyQ result = branch_dp(fam, lambda, mu, n, cap, reading);
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo_series.emplace(key, std::move(result)).first->second;
}

JRational expand_skew_J(const Partition& lambda, const Partition& mu, int n) {
    JRational zero{MultiPolyQ(n), std::vector<int>(static_cast<size_t>(n), 0)};
    if (!lambda.contains(mu)) return zero;
    struct State {
        MultiPolyQ num;
        std::vector<int> pows;
    };
    // Merge partial sums over the common denominator prod (1+x_i)^{pows[i]}.
    auto unify = [n](State& a, State b) {
        Upoly<RatQ> onepx(std::vector<RatQ>{RatQ::one(), RatQ::one()});
        for (int i = 0; i < n; ++i) {
            int target = std::max(a.pows[static_cast<size_t>(i)], b.pows[static_cast<size_t>(i)]);
            auto raise = [&](State& s) {
                for (int k = s.pows[static_cast<size_t>(i)]; k < target; ++k)
                    s.num = s.num.mul_univariate(onepx, i);
                s.pows[static_cast<size_t>(i)] = target;
            };
            raise(a);
            raise(b);
        }
        a.num += b.num;
    };
    PartMap<State> cur;
    cur.emplace(mu, State{MultiPolyQ::one(n), std::vector<int>(static_cast<size_t>(n), 0)});
    for (int var = 0; var < n; ++var) {
        PartMap<State> next;
        for (const auto& [nu, state] : cur) {
            int budget = static_cast<int>(lambda.size() - nu.size());
            for (const auto& lam2 : strip_successors(nu, budget)) {
                if (!lambda.contains(lam2)) continue;
                UniWeight w = one_var(Family::hl_J, lam2, nu);
                if (w.is_zero()) continue;
                State contrib;
                contrib.num = state.num.mul_univariate(w.num, var);
                contrib.pows = state.pows;
                contrib.pows[static_cast<size_t>(var)] += w.denom_pow;
                auto it = next.find(lam2);
                if (it == next.end())
                    next.emplace(lam2, std::move(contrib));
                else
                    unify(it->second, std::move(contrib));
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(lambda);
    if (it == cur.end()) return zero;
    return JRational{it->second.num, it->second.pows};
}

}  // namespace iqw
