#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "iqw/multipoly.hpp"
#include "iqw/partition.hpp"
#include "iqw/ratq.hpp"

namespace iqw {

enum class SymBasis { monomial, elementary, power };

inline const char* basis_name(SymBasis b) {
    switch (b) {
        case SymBasis::monomial: return "m";
        case SymBasis::elementary: return "e";
        default: return "p";
    }
}

struct NotSymmetric : std::runtime_error {
    int witness;  // adjacent transposition (witness, witness+1), 0-indexed
    explicit NotSymmetric(int w)
        : std::runtime_error("polynomial is not symmetric; witnessing transposition swaps x" +
                             std::to_string(w + 1) + " and x" + std::to_string(w + 2)),
          witness(w) {}
};

// ---- integer transition data between m / e / p, cached per degree ----

namespace detail {

// m-expansions of e_kappa (resp. p_kappa) for all kappa of degree d, as rows
// of a matrix indexed by the canonical partition order.
struct TransitionTables {
    std::vector<Partition> parts;                       // partitions of d, canonical order
    std::vector<std::vector<BigRat>> e_to_m, p_to_m;    // row = kappa, col = m-coefficient
    std::vector<std::vector<BigRat>> m_to_e, m_to_p;    // inverses
};

const TransitionTables& transition_tables(int d);

std::vector<std::vector<BigRat>> invert_matrix(std::vector<std::vector<BigRat>> a);

}  // namespace detail

// Degree-truncated element of the ring of symmetric functions in a tagged
// basis. In the elementary/power bases the key kappa indexes the product
// e_kappa = prod e_{kappa_i} (resp. p_kappa).
class SymFuncTrunc {
public:
    SymBasis basis = SymBasis::monomial;
    int max_degree = 0;
    PartMap<RatQ> coeffs;

    SymFuncTrunc() = default;
    SymFuncTrunc(SymBasis b, int D) : basis(b), max_degree(D) {}

    bool is_zero() const { return coeffs.empty(); }

    void add_term(const Partition& kappa, const RatQ& c) {
        if (c.is_zero()) return;
        if (kappa.size() > max_degree) return;  // truncated away
        auto it = coeffs.find(kappa);
        if (it == coeffs.end()) {
            coeffs.emplace(kappa, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    RatQ coeff(const Partition& kappa) const {
        auto it = coeffs.find(kappa);
        return it == coeffs.end() ? RatQ::zero() : it->second;
    }

    friend bool operator==(const SymFuncTrunc& a, const SymFuncTrunc& b) {
        return a.basis == b.basis && a.max_degree == b.max_degree && a.coeffs == b.coeffs;
    }

    SymFuncTrunc operator-() const {
        SymFuncTrunc r = *this;
        for (auto& [k, c] : r.coeffs) c = -c;
        return r;
    }
    friend SymFuncTrunc operator+(const SymFuncTrunc& a, const SymFuncTrunc& b) {
        if (a.basis != b.basis || a.max_degree != b.max_degree)
            throw std::invalid_argument("SymFuncTrunc: basis/degree mismatch");
        SymFuncTrunc r = a;
        for (const auto& [k, c] : b.coeffs) r.add_term(k, c);
        return r;
    }
    friend SymFuncTrunc operator-(const SymFuncTrunc& a, const SymFuncTrunc& b) { return a + (-b); }
    SymFuncTrunc scaled(const RatQ& s) const {
        SymFuncTrunc r(basis, max_degree);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : coeffs) r.coeffs.emplace(k, c * s);
        return r;
    }

    // Lowest degree with a nonzero coefficient; -1 when zero.
    long min_degree() const {
        long d = -1;
        for (const auto& [k, c] : coeffs)
            if (d < 0 || k.size() < d) d = k.size();
        return d;
    }

    SymFuncTrunc degree_slice(long d) const {
        SymFuncTrunc r(basis, max_degree);
        for (const auto& [k, c] : coeffs)
            if (k.size() == d) r.coeffs.emplace(k, c);
        return r;
    }
};

// Collect a symmetric polynomial into monomial-symmetric coordinates.
// Throws NotSymmetric with a witnessing transposition on non-symmetric input.
SymFuncTrunc to_mbasis(const MultiPolyQ& f);

// Inverse of to_mbasis for degrees <= n: expand sum of m_kappa back into
// monomials of an n-variable polynomial.
MultiPolyQ mbasis_to_poly(const SymFuncTrunc& f, int nvars);

// Degree-truncating lift: requires f symmetric and n >= D; keeps |kappa| <= D.
SymFuncTrunc lift(const MultiPolyQ& f, int D);

SymFuncTrunc basis_change(const SymFuncTrunc& f, SymBasis target);

// The two one-parameter specializations of the Macdonald involution, plus the
// parameter-free collapse. `to_hl` multiplies p_n by (-1)^{n-1}(1-q^n) and
// sends W to HL Q (and F to J); `from_hl` is its inverse.
enum class OmegaMode {
    to_hl,    // p_n -> (-1)^{n-1} (1-q^n) p_n
    from_hl,  // p_n -> (-1)^{n-1} p_n / (1-q^n)
    classical // p_n -> (-1)^{n-1} p_n  (the q = t collapse)
};

SymFuncTrunc omega(const SymFuncTrunc& f, OmegaMode mode);

}  // namespace iqw
