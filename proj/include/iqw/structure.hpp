#pragma once

#include "iqw/expansion.hpp"
#include "iqw/families.hpp"
#include "iqw/symfunc.hpp"

namespace iqw {

// Cached monomial coordinates of straight basis elements in a fixed number of
// variables. Every element is unitriangular on its leading homogeneous
// component with respect to the canonical order (W_lambda = m_lambda + lower).
class BasisProvider {
public:
    BasisProvider(Family fam, int nvars) : fam_(fam), nvars_(nvars) {}

    Family family() const { return fam_; }
    int nvars() const { return nvars_; }

    // Exact m-coordinates of expand_skew(fam, lambda, empty, nvars).
    const SymFuncTrunc& coords(const Partition& lambda);

private:
    Family fam_;
    int nvars_;
    PartMap<SymFuncTrunc> cache_;
};

// Expand a homogeneous degree-d element (monomial coordinates) over the
// q-Whittaker basis in `nvars` variables; exact and unique by unitriangular
// elimination. Throws when the remainder fails to clear.
Expansion w_expand_homogeneous(const SymFuncTrunc& f, int nvars);

// Same elimination against Hall-Littlewood Q (diagonal entries b_lambda).
Expansion hlq_expand_homogeneous(const SymFuncTrunc& f, int nvars);

enum class ProductAlgo { direct, dual };

// Structure constants of Gamma^q: F_mu * F_nu = sum c^lambda_{mu,nu} F_lambda.
Expansion product_F(const Partition& mu, const Partition& nu,
                    ProductAlgo algo = ProductAlgo::direct);

// Closed-form box Pieri rule: F_box * F_nu over rook strips lambda/nu.
Expansion pieri_F(const Partition& nu);

// (1/(q;q)_i) W_i W_nu = sum over strips of size i of d_{lambda/nu} W_lambda.
Expansion pieri_W(int i, const Partition& nu);

// j_mu * j_nu = sum d^lambda_{mu,nu} j_lambda (inhomogeneous Hall-Littlewood).
Expansion product_j(const Partition& mu, const Partition& nu);

// F_{lambda/mu} = sum_nu (b_{lambda'}/(b_{mu'} b_{nu'})) d^{lambda'}_{mu',nu'} F_nu.
// Validated against the branching polynomial identity before returning.
Expansion skew_F_expand(const Partition& lambda, const Partition& mu);

// W_lambda = sum a_{lambda,mu}(q) F_mu, truncated to |mu| <= D.
Expansion a_expand(const Partition& lambda, int D);
// F_lambda = sum b_{lambda,mu}(q) W_mu, truncated to |mu| <= D.
Expansion b_expand(const Partition& lambda, int D);

}  // namespace iqw
