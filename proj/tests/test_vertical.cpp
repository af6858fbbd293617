#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fmcy/vertical.hpp"

using namespace fmcy;

namespace {
Rational rnd(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(-6, 6), d(1, 4);
    return Rational(n(rng), d(rng));
}
BaseClass rnd_base(const Geometry& g, std::mt19937_64& rng) {
    BaseClass c(g.rank());
    for (auto& x : c.coeff)
        x = rnd(rng);
    return c;
}
VerticalClass rnd_class(const Geometry& g, std::mt19937_64& rng) {
    return {g, rnd(rng), rnd(rng), rnd_base(g, rng), rnd_base(g, rng), rnd(rng), rnd(rng)};
}
std::vector<Geometry> geoms() {
    BaseSurfaceData odd;
    odd.basis_labels = {"u", "v"};
    odd.intersection_form = RMatrix::from_rows({{2, 1}, {1, -3}});
    odd.c1 = BaseClass{Rational(1), Rational(-2)};
    odd.c2 = 7;
    return {Geometry::projective_plane(), Geometry(BaseSurfaceData::quadric()), Geometry(odd)};
}
} // namespace

TEST_CASE("the plane-base ring reproduces the degree-18 intersection table") {
    Geometry g = Geometry::projective_plane();
    VerticalClass E = VerticalClass::sigma(g);
    VerticalClass L = VerticalClass::pullback(g, BaseClass{Rational(1)});
    CHECK((E * L * L).integrate() == Rational(1));
    CHECK((E * E * L).integrate() == Rational(-3));
    CHECK((L * L * L).integrate() == Rational(0));
    CHECK((E * E * E).integrate() == Rational(9));
    // sigma^2 = -sigma pi*c1 lands in the eta slot
    CHECK((E * E).eta() == BaseClass{Rational(-3)});
    // H = 3L + E relations
    VerticalClass H = Rational(3) * L + E;
    CHECK((H * H * H).integrate() == Rational(9));
    CHECK((H * H * L).integrate() == Rational(3));
    CHECK((H * L * L).integrate() == Rational(1));
    CHECK((H * E * L).integrate() == Rational(0));
    CHECK(VerticalClass::unit(g) * E == E);
    std::mt19937_64 rng(1);
    CHECK((VerticalClass::fibre(g) * VerticalClass::fibre(g) * rnd_class(g, rng)).is_zero());
}

TEST_CASE("the ring is associative and commutative on random triples") {
    std::mt19937_64 rng(21);
    for (const Geometry& g : geoms())
        for (int i = 0; i < 170; ++i) {
            VerticalClass a = rnd_class(g, rng), b = rnd_class(g, rng), c = rnd_class(g, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
}

TEST_CASE("pushforward follows the section and fibration rules") {
    Geometry g = Geometry::projective_plane();
    CHECK(VerticalClass::sigma(g).pushforward().h0 == Rational(1));
    CHECK(VerticalClass::fibre(g).pushforward() == BaseTotal(1));
    CHECK(VerticalClass::unit(g).pushforward() == BaseTotal(1));
    BaseClass eta{Rational(5)};
    VerticalClass v = VerticalClass::sigma_pullback(g, eta) + Rational(3) * VerticalClass::fibre(g);
    BaseTotal t = v.pushforward();
    CHECK(t.h0 == Rational(0));
    CHECK(t.h2 == eta);
    CHECK(t.h4 == Rational(0));
    CHECK(VerticalClass::point(g).pushforward().h4 == Rational(1));
}

TEST_CASE("projection formula relates pushforward and integration") {
    std::mt19937_64 rng(31);
    for (const Geometry& g : geoms())
        for (int i = 0; i < 40; ++i) {
            VerticalClass v = rnd_class(g, rng);
            BaseClass alpha = rnd_base(g, rng);
            Rational lhs = (v * VerticalClass::pullback(g, alpha)).integrate();
            Rational rhs = g.pair(v.pushforward().h2, alpha);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("Todd classes have the stated slot values") {
    Geometry g = Geometry::projective_plane();
    VerticalClass tn = todd_normal(g);
    CHECK(tn.r() == Rational(1));
    CHECK(tn.S() == BaseClass{Rational(-3, 2)});
    CHECK(tn.a() == Rational(3, 4));
    CHECK(tn.s() == Rational(0));
    // 12 (Td(X) - 1) integrates against classes like c2(X)
    VerticalClass c2x = Rational(12) * (todd_X(g) - VerticalClass::unit(g));
    VerticalClass L = VerticalClass::pullback(g, BaseClass{Rational(1)});
    CHECK((c2x * L).integrate() == Rational(36));
    CHECK((c2x * VerticalClass::sigma(g)).integrate() == Rational(-6));
    // Td(X) = Td(relative) . pullback(Td(B)) exactly
    VerticalClass tdB(g, 1, 0, Rational(1, 2) * g.c1(), g.zero_class(),
                      (g.c1_sq() + g.c2()) / Rational(12), 0);
    CHECK(todd_relative(g) * tdB == todd_X(g));
}

TEST_CASE("series square roots and inverses") {
    Geometry g = Geometry::projective_plane();
    CHECK(series_sqrt(VerticalClass::unit(g)) == VerticalClass::unit(g));
    VerticalClass half = series_sqrt(todd_normal(g));
    CHECK(half == VerticalClass(g, 1, 0, BaseClass{Rational(-3, 4)}, BaseClass{Rational(0)},
                                Rational(9, 96), 0));
    CHECK(half * half == todd_normal(g));
    VerticalClass half_inv = series_inverse(half);
    CHECK(half_inv == VerticalClass(g, 1, 0, BaseClass{Rational(3, 4)}, BaseClass{Rational(0)},
                                    Rational(45, 96), 0));
    CHECK(half_inv * half == VerticalClass::unit(g));

    std::mt19937_64 rng(41);
    for (const Geometry& gg : geoms())
        for (int i = 0; i < 35; ++i) {
            VerticalClass u = rnd_class(gg, rng);
            VerticalClass series =
                VerticalClass::unit(gg) + u - u.graded(0); // unit leading term
            CHECK(series_sqrt(series) * series_sqrt(series) == series);
            CHECK(series_inverse(series) * series == VerticalClass::unit(gg));
        }
    VerticalClass bad = Rational(2) * VerticalClass::unit(g);
    CHECK_THROWS_AS(series_sqrt(bad), SeriesError);
    CHECK_THROWS_AS(series_inverse(bad), SeriesError);
}

TEST_CASE("divisor exponentials") {
    Geometry g = Geometry::projective_plane();
    CHECK(exp_divisor(VerticalClass(g)) == VerticalClass::unit(g));
    VerticalClass L = VerticalClass::pullback(g, BaseClass{Rational(1)});
    // L^2 = F since the line squares to the base point class
    VerticalClass eL = exp_divisor(L);
    CHECK(eL == VerticalClass::unit(g) + L + Rational(1, 2) * VerticalClass::fibre(g));
    std::mt19937_64 rng(51);
    for (const Geometry& gg : geoms())
        for (int i = 0; i < 30; ++i) {
            VerticalClass d(gg, 0, rnd(rng), rnd_base(gg, rng), gg.zero_class(), 0, 0);
            CHECK(exp_divisor(d) * exp_divisor(Rational(-1) * d) == VerticalClass::unit(gg));
        }
    CHECK_THROWS_AS(exp_divisor(VerticalClass::point(g)), GradingError);
    CHECK_THROWS_AS(exp_divisor(VerticalClass::unit(g)), GradingError);
}

TEST_CASE("classes over different bases do not mix") {
    Geometry a = Geometry::projective_plane();
    Geometry b(BaseSurfaceData::quadric());
    CHECK_THROWS_AS(VerticalClass::sigma(a) * VerticalClass::sigma(b), GeometryError);
    CHECK_THROWS_AS(VerticalClass::sigma(a) + VerticalClass::sigma(b), GeometryError);
    // structurally equal geometries are compatible
    Geometry a2 = Geometry::projective_plane();
    CHECK(VerticalClass::sigma(a) * VerticalClass::sigma(a2) ==
          VerticalClass::sigma(a) * VerticalClass::sigma(a));
}

TEST_CASE("K3 ring: section squares to -2 points") {
    K3Class sigma{0, 1, 0, 0}, fibre{0, 0, 1, 0};
    CHECK(sigma * sigma == K3Class{0, 0, 0, -2});
    CHECK(sigma * fibre == K3Class{0, 0, 0, 1});
    CHECK(fibre * fibre == K3Class{0, 0, 0, 0});
}
