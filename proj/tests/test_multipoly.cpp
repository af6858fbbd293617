#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fmcy/multipoly.hpp"

using namespace fmcy;

namespace {
MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> e(0, 3), c(-4, 4);
    MultiPoly p;
    for (int i = 0; i < 5; ++i)
        p = p + MultiPoly::monomial(e(rng), e(rng), Rational(c(rng)));
    return p;
}

// independent oracle: shift one monomial term-by-term via Pascal's triangle
MultiPoly shift_oracle(const MultiPoly& p, int var, const Rational& delta) {
    long long pascal[8][8] = {};
    for (int n = 0; n < 8; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
    }
    MultiPoly out;
    for (const auto& [e, c] : p.terms()) {
        int n = var == 0 ? e.first : e.second;
        Rational dpow = 1;
        for (int k = 0; k <= n; ++k) {
            Rational coeff = c * Rational(pascal[n][k]) * dpow;
            out = out + (var == 0 ? MultiPoly::monomial(e.first - k, e.second, coeff)
                                  : MultiPoly::monomial(e.first, e.second - k, coeff));
            dpow = dpow * delta;
        }
    }
    return out;
}
} // namespace

TEST_CASE("basic shifts") {
    MultiPoly t1 = MultiPoly::var("t1");
    CHECK(t1.shift("t1", Rational(1)) == t1 + MultiPoly::constant(1));

    MultiPoly cube = MultiPoly::monomial(3, 0, Rational(1));
    MultiPoly expect = cube + MultiPoly::monomial(2, 0, Rational(3)) +
                       MultiPoly::monomial(1, 0, Rational(3)) + MultiPoly::constant(1);
    CHECK(cube.shift("t1", Rational(1)) == expect);
}

TEST_CASE("mixed shift expands and collects exactly") {
    // 2/3 t1^3 + t1^2 t2, shifted in t1 by 1
    MultiPoly p = MultiPoly::monomial(3, 0, Rational(2, 3)) + MultiPoly::monomial(2, 1, Rational(1));
    MultiPoly shifted = p.shift("t1", Rational(1));
    MultiPoly expect = shift_oracle(p, 0, Rational(1));
    CHECK(shifted == expect);
    // and the explicit collected form
    MultiPoly manual = MultiPoly::monomial(3, 0, Rational(2, 3)) +
                       MultiPoly::monomial(2, 1, Rational(1)) +
                       MultiPoly::monomial(2, 0, Rational(2)) +
                       MultiPoly::monomial(1, 1, Rational(2)) +
                       MultiPoly::monomial(1, 0, Rational(2)) +
                       MultiPoly::monomial(0, 1, Rational(1)) + MultiPoly::constant(Rational(2, 3));
    CHECK(shifted == manual);
}

TEST_CASE("shift round-trips") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        MultiPoly p = random_poly(rng);
        CHECK(p.shift("t1", Rational(1)).shift("t1", Rational(-1)) == p);
        CHECK(p.shift("t2", Rational(2, 3)).shift("t2", Rational(-2, 3)) == p);
        CHECK(p.shift("t1", Rational(1)) == shift_oracle(p, 0, Rational(1)));
    }
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("derivatives and evaluation") {
    MultiPoly f = MultiPoly::monomial(3, 0, Rational(-2, 3)) +
                  MultiPoly::monomial(2, 1, Rational(-1)) +
                  MultiPoly::monomial(1, 0, Rational(13, 6)) + MultiPoly::monomial(0, 1, Rational(1));
    MultiPoly f1 = f.derivative("t1");
    CHECK(f1.coeff(2, 0) == Rational(-2));
    CHECK(f1.coeff(1, 1) == Rational(-2));
    CHECK(f1.coeff(0, 0) == Rational(13, 6));
    CHECK(f.eval(Rational(1), Rational(2)) == Rational(-2, 3) - 2 + Rational(13, 6) + 2);
}

TEST_CASE("unknown variables raise a name error") {
    CHECK_THROWS_AS(MultiPoly::var("t3"), NameError);
    CHECK_THROWS_AS(MultiPoly::constant(1).shift("q", Rational(1)), NameError);
}

TEST_CASE("no zero terms are stored") {
    MultiPoly p = MultiPoly::monomial(1, 1, Rational(2)) + MultiPoly::monomial(1, 1, Rational(-2));
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
}
