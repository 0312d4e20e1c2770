#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iqw/ratq.hpp"

namespace iqw {

// Integer partition: strictly positive weakly decreasing parts, no trailing
// zeros. part(r) is 1-indexed and returns 0 beyond the length, matching the
// convention used silently by all product formulas.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& text);  // "3,1,1"; "" or "0" is empty
    static Partition single_row(int k) { return k > 0 ? Partition({k}) : Partition(); }
    static Partition single_column(int k) { return k > 0 ? Partition(std::vector<int>(k, 1)) : Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long size() const;
    bool empty() const { return parts_.empty(); }
    int part(int r) const { return (r >= 1 && r <= length()) ? parts_[r - 1] : 0; }
    int first() const { return part(1); }

    Partition conjugate() const;
    Partition drop_first_row() const;  // (lambda_2, lambda_3, ...)
    bool contains(const Partition& mu) const;  // mu subseteq *this
    int multiplicity(int i) const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    std::vector<int> parts_;
};

// Canonical order: graded (smaller |lambda| first); within a degree, graded
// reverse-lexicographic with the dominance-larger partition first ((3) before
// (2,1) before (1,1,1)). This is the pivot order of every elimination and the
// print order of every expansion.
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

template <class T>
using PartMap = std::map<Partition, T, CanonicalLess>;
using PartSet = std::set<Partition, CanonicalLess>;

// True iff lambda/mu is a horizontal strip (mu interlaces lambda from below).
bool is_horizontal_strip(const Partition& mu, const Partition& lambda);

// ---- enumeration (all results in canonical order) ----

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_in_box(int rows, int cols);
// lambda with nu prec lambda and |lambda/nu| <= max_growth
std::vector<Partition> strip_successors(const Partition& nu, int max_growth);
std::vector<Partition> subpartitions(const Partition& lambda);
// lambda containing mu with |lambda| <= size_cap and l(lambda) <= row_cap
std::vector<Partition> superpartitions(const Partition& mu, long size_cap, int row_cap);

// ---- scalar weights ----

// b_lambda = prod_i (q;q)_{m_i(lambda)}
RatQ b_hl(const Partition& lambda);

// prod over {i : m_i(lambda) = m_i(mu) + 1} of (1 - q^{m_i(lambda)});
// requires mu subseteq lambda.
RatQ kappa(const Partition& lambda, const Partition& mu);

// eta_{lambda/nu} = prod_j (q;q)_{nu_j-nu_{j+1}} / ((q;q)_{lambda_j-nu_j} (q;q)_{nu_j-lambda_{j+1}}),
// defined for horizontal strips. The q-Whittaker Pieri coefficient d_{lambda/nu}
// is the same product.
RatQ eta(const Partition& lambda, const Partition& nu);
inline RatQ d_whit(const Partition& lambda, const Partition& nu) { return eta(lambda, nu); }

// How the F-set of a skew shape is read off the diagram: "columns i and i+1
// of lambda/mu are nonempty" (column occupancy, the production reading), or
// the narrower "some row holds boxes in both columns" probe variant kept for
// the reading experiments.
enum class FSetReading { column_occupancy, same_row_pairs };

struct SkewStats {
    int rows = 0;                   // number of nonempty rows
    int col_runs = 0;               // maximal runs of consecutive occupied columns
    std::set<int> F_set;            // adjacent occupied column pairs (j weights)
    std::set<int> E_set;            // adjacent empty column pairs with m_i != 0 (J weights)
    std::optional<int> r_tilde;     // r(mu / lambda-tilde), when lambda-tilde subseteq mu
};

SkewStats skew_stats(const Partition& lambda, const Partition& mu,
                     FSetReading reading = FSetReading::column_occupancy);

}  // namespace iqw
