#include "iqw/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace iqw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "0") return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
}

long Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[static_cast<size_t>(j)]++;
    return Partition(std::move(conj));
}

Partition Partition::drop_first_row() const {
    if (parts_.empty()) return Partition();
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int r = 1; r <= mu.length(); ++r)
        if (mu.part(r) > part(r)) return false;
    return true;
}

int Partition::multiplicity(int i) const {
    int count = 0;
    for (int p : parts_) count += (p == i);
    return count;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

bool canonical_less(const Partition& a, const Partition& b) {
    long sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    // Same degree: a earlier iff a is grevlex-greater, i.e. the last nonzero
    // entry of a - b (componentwise, zero-padded) is negative.
    int len = std::max(a.length(), b.length());
    for (int r = len; r >= 1; --r) {
        int d = a.part(r) - b.part(r);
        if (d != 0) return d < 0;
    }
    return false;  // equal
}

bool is_horizontal_strip(const Partition& mu, const Partition& lambda) {
    if (!lambda.contains(mu)) return false;
    for (int r = 1; r <= lambda.length(); ++r)
        if (lambda.part(r + 1) > mu.part(r)) return false;
    return true;
}

namespace {

void gen_partitions_of(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions_of(n - p, p, acc, out);
        acc.pop_back();
    }
}

void gen_in_box(int rows, int cols, std::vector<int>& acc, std::vector<Partition>& out) {
    out.emplace_back(acc);
    if (static_cast<int>(acc.size()) >= rows) return;
    int top = acc.empty() ? cols : acc.back();
    for (int p = top; p >= 1; --p) {
        acc.push_back(p);
        gen_in_box(rows, cols, acc, out);
        acc.pop_back();
    }
}

void sort_canonical(std::vector<Partition>& v) { std::sort(v.begin(), v.end(), CanonicalLess{}); }

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> acc;
    gen_partitions_of(n, n, acc, out);
    sort_canonical(out);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    if (rows < 0 || cols < 0) return out;
    std::vector<int> acc;
    gen_in_box(rows, cols, acc, out);
    sort_canonical(out);
    return out;
}

std::vector<Partition> strip_successors(const Partition& nu, int max_growth) {
    std::vector<Partition> out;
    if (max_growth < 0) return out;
    // Interlacing: lambda_1 >= nu_1 >= lambda_2 >= nu_2 >= ...; at most
    // l(nu)+1 rows, only lambda_1 is unbounded (capped by the growth budget).
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int r, int budget) {
        if (r > nu.length() + 1) {
            out.emplace_back(Partition(acc));
            return;
        }
        int lo = nu.part(r);
        int hi = (r == 1) ? nu.part(1) + budget : std::min(nu.part(r - 1), nu.part(r) + budget);
        for (int v = hi; v >= lo; --v) {
            if (v == 0) {
                out.emplace_back(Partition(acc));
                return;
            }
            acc.push_back(v);
            rec(r + 1, budget - (v - lo));
            acc.pop_back();
        }
    };
    rec(1, max_growth);
    sort_canonical(out);
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int)> rec = [&](int r) {
        if (r > lambda.length()) {
            out.emplace_back(Partition(acc));
            return;
        }
        int hi = std::min(lambda.part(r), r == 1 ? lambda.part(1) : acc.back());
        for (int v = hi; v >= 1; --v) {
            acc.push_back(v);
            rec(r + 1);
            acc.pop_back();
        }
        out.emplace_back(Partition(acc));  // mu stops before row r
    };
    rec(1);
    sort_canonical(out);
    return out;
}

std::vector<Partition> superpartitions(const Partition& mu, long size_cap, int row_cap) {
    std::vector<Partition> out;
    if (size_cap < mu.size() || mu.length() > row_cap) return out;
    std::vector<int> acc;
    std::function<void(int, long)> rec = [&](int r, long budget) {
        if (r > row_cap) {
            out.emplace_back(Partition(acc));
            return;
        }
        int lo = mu.part(r);
        int hi = static_cast<int>(r == 1 ? mu.part(1) + budget
                                         : std::min<long>(acc.back(), mu.part(r) + budget));
        for (int v = hi; v >= std::max(lo, 1); --v) {
            acc.push_back(v);
            rec(r + 1, budget - (v - lo));
            acc.pop_back();
        }
        if (lo == 0) out.emplace_back(Partition(acc));  // lambda stops before row r
    };
    rec(1, size_cap - mu.size());
    sort_canonical(out);
    return out;
}

RatQ b_hl(const Partition& lambda) {
    RatQ acc = RatQ::one();
    std::set<int> sizes(lambda.parts().begin(), lambda.parts().end());
    for (int i : sizes) acc *= qpoch_q(lambda.multiplicity(i));
    return acc;
}

RatQ kappa(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) throw std::invalid_argument("kappa: mu not contained in lambda");
    RatQ acc = RatQ::one();
    std::set<int> sizes(lambda.parts().begin(), lambda.parts().end());
    for (int i : sizes) {
        int ml = lambda.multiplicity(i);
        if (ml == mu.multiplicity(i) + 1) acc *= RatQ::one() - RatQ::q_pow(ml);
    }
    return acc;
}

RatQ eta(const Partition& lambda, const Partition& nu) {
    if (!is_horizontal_strip(nu, lambda))
        throw std::invalid_argument("eta: lambda/nu is not a horizontal strip");
    RatQ acc = RatQ::one();
    for (int j = 1; j <= lambda.length(); ++j) {
        acc *= RatQ(qpoch_q(nu.part(j) - nu.part(j + 1)));
        acc /= qpoch_q(lambda.part(j) - nu.part(j));
        acc /= qpoch_q(nu.part(j) - lambda.part(j + 1));
    }
    return acc;
}

SkewStats skew_stats(const Partition& lambda, const Partition& mu, FSetReading reading) {
    if (!lambda.contains(mu)) throw std::invalid_argument("skew_stats: mu not contained in lambda");
    SkewStats s;
    for (int r = 1; r <= lambda.length(); ++r)
        if (lambda.part(r) > mu.part(r)) s.rows++;

    Partition lc = lambda.conjugate(), mc = mu.conjugate();
    auto column_nonempty = [&](int c) { return c >= 1 && lc.part(c) > mc.part(c); };

    bool prev = false;
    for (int c = 1; c <= lambda.part(1); ++c) {
        bool occ = column_nonempty(c);
        if (occ && !prev) s.col_runs++;
        prev = occ;
    }

    if (reading == FSetReading::column_occupancy) {
        for (int i = 1; i + 1 <= lambda.part(1); ++i)
            if (column_nonempty(i) && column_nonempty(i + 1)) s.F_set.insert(i);
    } else {
        for (int r = 1; r <= lambda.length(); ++r)
            for (int i = mu.part(r) + 1; i <= lambda.part(r) - 1; ++i) s.F_set.insert(i);
    }

    for (int i = 1; i <= lambda.part(1); ++i)
        if (lambda.multiplicity(i) != 0 && !column_nonempty(i) && !column_nonempty(i + 1))
            s.E_set.insert(i);

    Partition lt = lambda.drop_first_row();
    if (mu.contains(lt)) {
        int rt = 0;
        for (int r = 1; r <= mu.length(); ++r)
            if (mu.part(r) > lt.part(r)) rt++;
        s.r_tilde = rt;
    }
    return s;
}

}  // namespace iqw
