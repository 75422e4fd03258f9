#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perichain/jet.hpp"
#include "perichain/rational.hpp"

using namespace perichain;

namespace {

// deterministic generator of small random rationals
struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    Rational rational() {
        long long num = (long long)(next() % 41) - 20;
        long long den = 1 + (long long)(next() % 12);
        return Rational(num, den);
    }
    Rational nonzero() {
        Rational r = rational();
        while (r.is_zero()) r = rational();
        return r;
    }
};

} // namespace

TEST_CASE("rational normalization and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(3, 1).str() == "3");
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(5, 3).den() > 0);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), NotInvertible);
}

TEST_CASE("rational field axioms on randomized operands") {
    Rng rng(0x9e3779b97f4a7c15ull);
    for (int trial = 0; trial < 300; ++trial) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Rational(1));
            CHECK(a / a == Rational(1));
        }
    }
}

TEST_CASE("rational ordering by cross-multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 5) > Rational(4, 3));
}

TEST_CASE("jet ring axioms and truncation") {
    using J = Jet<3>;
    Rng rng(0xdeadbeef12345ull);
    auto rand_jet = [&] {
        J j;
        for (unsigned k = 0; k <= 3; ++k) j.coeff(k) = rng.rational();
        return j;
    };
    for (int trial = 0; trial < 120; ++trial) {
        J a = rand_jet(), b = rand_jet(), c = rand_jet();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a * J(1) == a);
    }
    // truncation at degree D: xi^3 * xi = 0 in Jet<3>
    J xi = J::variable();
    CHECK((xi * xi * xi * xi).is_zero());
}

TEST_CASE("degree-0 jets behave like their rational value") {
    using J = Jet<2>;
    Rng rng(0x5eedull);
    for (int trial = 0; trial < 60; ++trial) {
        Rational a = rng.rational(), b = rng.rational();
        CHECK(J(a) * J(b) == J(a * b));
        CHECK(J(a) + J(b) == J(a + b));
        if (!a.is_zero()) CHECK(J(a).inverse() == J(a.inverse()));
    }
}

TEST_CASE("jet_invert frozen examples") {
    // (1 + xi), D=2 -> 1 - xi + xi^2 (geometric series)
    Jet<2> a = Jet<2>(1) + Jet<2>::variable();
    Jet<2> inv = jet_invert(a);
    CHECK(inv.coeff(0) == Rational(1));
    CHECK(inv.coeff(1) == Rational(-1));
    CHECK(inv.coeff(2) == Rational(1));

    // (2), D=1 -> 1/2
    Jet<1> two(2);
    CHECK(jet_invert(two).coeff(0) == Rational(1, 2));
    CHECK(jet_invert(two).coeff(1) == Rational(0));

    // (1 + 3 xi + xi^2), D=2 -> 1 - 3 xi + 8 xi^2; multiplying back gives 1
    Jet<2> b;
    b.coeff(0) = Rational(1);
    b.coeff(1) = Rational(3);
    b.coeff(2) = Rational(1);
    Jet<2> binv = jet_invert(b);
    CHECK(binv.coeff(0) == Rational(1));
    CHECK(binv.coeff(1) == Rational(-3));
    CHECK(binv.coeff(2) == Rational(8));
    CHECK((b * binv).is_one());

    CHECK_THROWS_AS(jet_invert(Jet<2>::variable()), NotInvertible);
}

TEST_CASE("jet_invert is a two-sided inverse for random units") {
    using J = Jet<4>;
    Rng rng(0xabcdefull);
    for (int trial = 0; trial < 80; ++trial) {
        J a;
        a.coeff(0) = rng.nonzero();
        for (unsigned k = 1; k <= 4; ++k) a.coeff(k) = rng.rational();
        CHECK((a * jet_invert(a)).is_one());
        CHECK((jet_invert(a) * a).is_one());
    }
}
