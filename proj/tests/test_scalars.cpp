#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "iqw/ratq.hpp"

using namespace iqw;

namespace {

std::mt19937_64 rng(20250809);

BigRat random_rat() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    return make_rat(num(rng), den(rng));
}

PolyQ random_polyq(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<BigRat> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rat());
    return PolyQ(std::move(c));
}

RatQ random_ratq() {
    PolyQ n = random_polyq(3);
    PolyQ d;
    do {
        d = random_polyq(2);
    } while (d.is_zero());
    return RatQ(n, d);
}

}  // namespace

TEST_CASE("polyq arithmetic and exact division") {
    PolyQ a = polyq_from_ints({1, 2, 1});   // (1+q)^2
    PolyQ b = polyq_from_ints({1, 1});      // 1+q
    CHECK(divexact(a, b) == b);
    CHECK(a * b == polyq_from_ints({1, 3, 3, 1}));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(divexact(polyq_from_ints({1, 0, 1}), b), std::domain_error);
}

TEST_CASE("gcd over Q[q] is a primitive positive-leading representative") {
    PolyQ f = polyq_from_ints({-1, 0, 1});  // q^2 - 1
    PolyQ g = polyq_from_ints({1, 1});      // q + 1
    CHECK(gcd_polyq(f, g) == g);
    PolyQ h = polyq_from_ints({-2, 2});     // 2q - 2 -> primitive gcd with q^2-1 is q-1
    CHECK(gcd_polyq(f, h) == polyq_from_ints({-1, 1}));
}

TEST_CASE("RatQ is a field with canonical representatives") {
    for (int trial = 0; trial < 60; ++trial) {
        RatQ a = random_ratq();
        RatQ b = random_ratq();
        if (b.is_zero()) continue;
        CHECK((a * b) / b == a);
        CHECK(a - a == RatQ::zero());
        if (!a.is_zero()) CHECK(a / a == RatQ::one());
    }
    // canonical form is idempotent: building from scaled num/den gives the
    // same representation
    RatQ q = RatQ::q();
    RatQ x = (RatQ::one() - q) / (RatQ::one() + q);
    PolyQ scale = polyq_from_ints({3, 0, 6});
    RatQ y(x.num * scale, x.den * scale);
    CHECK(x == y);
    CHECK(x.num == y.num);
    CHECK(x.den == y.den);
    // denominator is integer-coprime with positive leading coefficient
    RatQ z(polyq_from_ints({1}), PolyQ(std::vector<BigRat>{make_rat(-1, 2), make_rat(-3, 2)}));
    CHECK(z.den == polyq_from_ints({1, 3}));
    CHECK(z.num == PolyQ(std::vector<BigRat>{make_rat(-2)}));
}

TEST_CASE("RatQ printing is deterministic") {
    CHECK(RatQ::one().to_string() == "1");
    CHECK((RatQ::one() - RatQ::q()).to_string() == "-1*q^1 + 1");
    // canonical denominator has positive leading coefficient, so 1/(1-q)
    // is stored as -1/(q-1)
    RatQ r = RatQ::one() / (RatQ::one() - RatQ::q());
    CHECK(r.to_string() == "-1 / 1*q^1 + -1");
}

TEST_CASE("qpoch basic examples") {
    // qpoch(x, 0) = 1
    RatQ x = RatQ(make_rat(2, 3));
    CHECK(qpoch(x, RatQ::q(), 0) == RatQ::one());
    // qpoch(q, 2) = (1-q)(1-q^2) as a polynomial
    RatQ p = qpoch(RatQ::q(), RatQ::q(), 2);
    PolyQ expect = polyq_from_ints({1, -1}) * polyq_from_ints({1, 0, -1});
    CHECK(p == RatQ(expect));
}

TEST_CASE("qpoch with formal x matches hand expansion") {
    using PX = Upoly<RatQ>;
    PX xf = PX::monomial(RatQ::one(), 1);
    PX qc = PX::constant(RatQ::q());
    PX got = qpoch(xf, qc, 2);
    // (1-x)(1-qx) = 1 - (1+q) x + q x^2
    PX expect(std::vector<RatQ>{RatQ::one(), -(RatQ::one() + RatQ::q()), RatQ::q()});
    CHECK(got == expect);
}

TEST_CASE("qpoch splitting identity") {
    using PX = Upoly<RatQ>;
    PX xf = PX::monomial(RatQ::one(), 1);
    PX qc = PX::constant(RatQ::q());
    for (int j = 0; j <= 6; ++j) {
        for (int k = 0; k + j <= 6; ++k) {
            PX lhs = qpoch(xf, qc, j + k);
            PX shifted = xf.scaled(RatQ::q_pow(j));
            PX rhs = qpoch(xf, qc, j) * qpoch(shifted, qc, k);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("qbinom examples and oracle") {
    CHECK(qbinom(2, 1) == polyq_from_ints({1, 1}));
    CHECK(qbinom(3, -1).is_zero());
    CHECK(qbinom(4, 2) == polyq_from_ints({1, 1, 2, 1, 1}));
    // exact polynomial division oracle: (q;q)_n / ((q;q)_k (q;q)_{n-k})
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            PolyQ num = qpoch_q(n).poly();
            PolyQ den = (qpoch_q(k) * qpoch_q(n - k)).poly();
            CHECK(qbinom(n, k) == divexact(num, den));
            CHECK(qbinom(n, k) == qbinom(n, n - k));
            for (const auto& c : qbinom(n, k).c) {
                CHECK(c.get_den() == 1);
                CHECK(c >= 0);
            }
        }
    }
}

TEST_CASE("qpoch_infinite") {
    CHECK(qpoch_infinite(0.0, 0.5, 1e-12) == doctest::Approx(1.0));
    CHECK(qpoch_infinite(0.5, 0.0, 1e-12) == doctest::Approx(0.5));
    double brute = 1.0;
    for (int i = 0; i < 200; ++i) brute *= (1.0 - 0.3 * std::pow(0.5, i));
    CHECK(qpoch_infinite(0.3, 0.5, 1e-12) == doctest::Approx(brute).epsilon(1e-10));
    CHECK_THROWS_AS(qpoch_infinite(0.3, 1.0, 1e-12), std::domain_error);
}
