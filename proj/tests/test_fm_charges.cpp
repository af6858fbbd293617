#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fmcy/fibre_square.hpp"
#include "fmcy/fm_charges.hpp"

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
VerticalClass rnd_class(const Geometry& g, std::mt19937_64& rng, bool degree0 = false) {
    return {g, rnd(rng), degree0 ? Rational(0) : rnd(rng), rnd_base(g, rng), rnd_base(g, rng),
            rnd(rng), rnd(rng)};
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

TEST_CASE("closed-form transforms on the named charges") {
    Geometry g = Geometry::projective_plane();
    // section: (0, 1, 0, c1/2, 0, c1^2/6) -> (1,0,0,0,0,0)
    VerticalClass osigma = section_charge(g);
    CHECK(osigma == VerticalClass(g, 0, 1, g.zero_class(), Rational(1, 2) * g.c1(), 0,
                                  g.c1_sq() / Rational(6)));
    CHECK(fm_forward(osigma) == VerticalClass::unit(g));
    // skyscraper -> pure fibre class
    CHECK(fm_forward(VerticalClass::point(g)) == VerticalClass::fibre(g));
    // structure sheaf (deg18 numbers): (1,0,...) -> (0,-1,0,(3/2)l,0,-3/2)
    CHECK(fm_forward(VerticalClass::unit(g)) ==
          VerticalClass(g, 0, -1, g.zero_class(), BaseClass{Rational(3, 2)}, 0, Rational(-3, 2)));
}

TEST_CASE("closed-form inverse transform examples") {
    Geometry g = Geometry::projective_plane();
    // (2, 0, 0, l, 0, 0) -> (0, -2, l, -3l, 3/2, -3)
    VerticalClass v(g, 2, 0, g.zero_class(), BaseClass{Rational(1)}, 0, 0);
    CHECK(fm_inverse(v) == VerticalClass(g, 0, -2, BaseClass{Rational(1)},
                                         BaseClass{Rational(-3)}, Rational(3, 2), Rational(-3)));
    CHECK(fm_inverse(VerticalClass(g)).is_zero());
    // general degree-0 charge against the printed column vector
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        VerticalClass u = rnd_class(g, rng, /*degree0=*/true);
        VerticalClass w = fm_inverse(u);
        CHECK(w.r() == Rational(0));
        CHECK(w.x() == -u.r());
        CHECK(w.S() == u.eta());
        CHECK(w.eta() == Rational(-1, 2) * u.r() * g.c1() - u.S());
        CHECK(w.a() == u.s() + g.pair(u.eta(), g.c1()) / Rational(2));
        CHECK(w.s() == Rational(-1, 6) * u.r() * g.c1_sq() - u.a() -
                           g.pair(g.c1(), u.S()) / Rational(2));
    }
}

TEST_CASE("transforms are linear") {
    std::mt19937_64 rng(17);
    for (const Geometry& g : geoms())
        for (int i = 0; i < 20; ++i) {
            VerticalClass u = rnd_class(g, rng), v = rnd_class(g, rng);
            Rational a = rnd(rng), b = rnd(rng);
            CHECK(fm_forward(a * u + b * v) == a * fm_forward(u) + b * fm_forward(v));
            CHECK(fm_inverse(a * u + b * v) == a * fm_inverse(u) + b * fm_inverse(v));
        }
}

TEST_CASE("oracle equivalence on random charges including nonzero fibre degree") {
    std::mt19937_64 rng(27);
    for (const Geometry& g : geoms()) {
        FibreSquareClass fwd = ch_poincare(g);
        FibreSquareClass inv = poincare_inverse_kernel(g);
        for (int i = 0; i < 40; ++i) {
            VerticalClass v = rnd_class(g, rng);
            CHECK(grr_transform(v, fwd, Direction::forward) == fm_forward(v));
            CHECK(grr_transform(v, inv, Direction::inverse) == fm_inverse(v));
        }
    }
}

TEST_CASE("the degree-6 inverse coefficient is forced by invertibility") {
    // adding kappa * x * c1^2 to the bottom slot of the inverse transform
    // breaks the composition identity for every kappa except zero
    std::mt19937_64 rng(37);
    Geometry g = Geometry::projective_plane();
    auto variant = [&](const VerticalClass& v, const Rational& kappa) {
        VerticalClass w = fm_inverse(v);
        return w + kappa * v.x() * g.c1_sq() * VerticalClass::point(g);
    };
    VerticalClass probe = rnd_class(g, rng) + VerticalClass::sigma(g);
    for (long long k = -2; k <= 2; ++k) {
        bool holds = variant(fm_forward(probe), Rational(k)) == Rational(-1) * probe;
        CHECK(holds == (k == 0));
    }
}

TEST_CASE("double transform is minus the identity") {
    std::mt19937_64 rng(47);
    for (const Geometry& g : geoms())
        for (int i = 0; i < 40; ++i) {
            VerticalClass v = rnd_class(g, rng);
            CHECK(double_transform(v) == Rational(-1) * v);
            CHECK(fm_forward(fm_inverse(v)) == Rational(-1) * v);
        }
    Geometry g = Geometry::projective_plane();
    CHECK(double_transform(VerticalClass(g)).is_zero());
    CHECK(double_transform(section_charge(g)) == Rational(-1) * section_charge(g));
}

TEST_CASE("numerical invariants evaluate through the ring") {
    Geometry g = Geometry::projective_plane();
    std::mt19937_64 rng(57);
    for (int i = 0; i < 20; ++i) {
        VerticalClass v = rnd_class(g, rng);
        NumericalInvariants inv = numerical_invariants(v);
        CHECK(inv.n == v.r());
        CHECK(inv.d == v.x());
        CHECK(inv.s == v.s());
        CHECK(inv.g == -v.x() * g.c1_sq() + g.pair(v.S(), g.c1()));
        CHECK(inv.c == -g.pair(g.c1(), v.eta()) + v.a());
        CHECK(inv.f == g.pair(v.eta(), g.c1()));
    }
}

TEST_CASE("twisted charges") {
    Geometry g = Geometry::projective_plane();
    // only the top slot of a skyscraper is populated; the twist cannot move it
    CHECK(twisted_charge(VerticalClass::point(g), 0).value == VerticalClass::point(g));
    // degree-0 sheaf: Q = ch . (1 + c1/4 + 5 c1^2/96)
    std::mt19937_64 rng(67);
    VerticalClass v = rnd_class(g, rng);
    VerticalClass expect =
        v * VerticalClass(g, 1, 0, Rational(1, 4) * g.c1(), g.zero_class(),
                          Rational(5, 96) * g.c1_sq(), 0);
    CHECK(twisted_charge(v, 0).value == expect);
    // shifted complexes carry the positive half power
    CHECK(twisted_charge(v, 1).value == v * series_sqrt(todd_normal(g)));
}

TEST_CASE("duality identities for degree-0 charges") {
    std::mt19937_64 rng(77);
    for (const Geometry& g : geoms())
        for (int i = 0; i < 50; ++i) {
            MRelationsReport rep = verify_m_relations(rnd_class(g, rng, /*degree0=*/true));
            CHECK(rep.td_times_inverse);
            CHECK(rep.td_inv_times_forward);
            CHECK(rep.twisted_charges);
        }
    Geometry g = Geometry::projective_plane();
    CHECK(verify_m_relations(VerticalClass(g)).all());
    VerticalClass bad = VerticalClass::sigma(g);
    CHECK_THROWS_AS(verify_m_relations(bad), PreconditionError);
    CHECK_THROWS_WITH(verify_m_relations(bad),
                      Catch::Matchers::ContainsSubstring("fibrewise of degree 0"));
}

TEST_CASE("duality matrices") {
    Geometry g = Geometry::projective_plane();
    RMatrix m = m_matrix(g);
    CHECK(m.rows() == 6);
    CHECK(m * m == Rational(-1) * RMatrix::identity(6));
    CHECK(m.at(0, 1) == Rational(1));
    CHECK(m.at(1, 0) == Rational(-1));
    // matrix form matches the slot map
    std::mt19937_64 rng(87);
    VerticalClass v = rnd_class(g, rng);
    CHECK(charge_coords(v.m_apply()) == m * charge_coords(v));

    RMatrix tdn = tdn_matrix(g, TdnSign::minus);
    CHECK(tdn.at(2, 0) == Rational(-3, 2));
    CHECK(tdn.at(4, 0) == Rational(3, 4));
    CHECK(tdn_matrix(g, TdnSign::plus) * tdn == RMatrix::identity(6));
    Geometry g2(BaseSurfaceData::quadric());
    CHECK_THROWS_AS(tdn_matrix(g2, TdnSign::minus), RepresentationError);
    // the block matrix exists for any base rank
    RMatrix m8 = m_matrix(g2);
    CHECK(m8.rows() == 8);
    CHECK(m8 * m8 == Rational(-1) * RMatrix::identity(8));
}

TEST_CASE("canonical catalog rows") {
    Geometry g = Geometry::projective_plane();
    auto rows = canonical_catalog(g);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].name == "skyscraper");
    CHECK(rows[0].forward == VerticalClass::fibre(g));
    CHECK(rows[0].forward_index == 0);
    CHECK(rows[1].forward == VerticalClass::unit(g));
    // structure sheaf transforms (in index 1) to the canonical-twisted section
    VerticalClass twisted_section =
        section_charge(g) * exp_divisor(VerticalClass::pullback(g, Rational(-1) * g.c1()));
    CHECK(rows[2].forward == Rational(-1) * twisted_section);
    CHECK(rows[2].forward_index == 1);
    // base-curve sheaf transforms to its pullback
    BaseTotal curve(g.rank());
    curve.h2 = g.c1();
    CHECK(rows[3].input == section_sheaf_charge(g, curve));
    CHECK(rows[3].forward == VerticalClass::pullback(g, curve));
    // every row: the forward of the inverse image is minus the input
    for (const auto& r : rows)
        CHECK(fm_forward(r.inverse) == Rational(-1) * r.input);
}

TEST_CASE("K3 duality") {
    RMatrix m4 = k3_m_matrix();
    CHECK(m4 * m4 == Rational(-1) * RMatrix::identity(4));
    // (0, n, k, n) -> (n, 0, n, -k)
    CHECK(k3_fm(K3Class{0, 3, 7, 3}) == K3Class{3, 0, 3, -7});
    CHECK(k3_fm(K3Class{0, 0, 0, 0}) == K3Class{0, 0, 0, 0});
    // the image is the bundle charge twisted by (1 + F)
    K3Class cover{0, 3, 7, 3};
    K3Class bundle{3, 0, 0, -7};
    K3Class one_plus_f{1, 0, 1, 0};
    CHECK(k3_fm(cover) == bundle * one_plus_f);
    // matrix application agrees with the slot map
    std::vector<Rational> v = {Rational(0), Rational(3), Rational(7), Rational(3)};
    auto mv = m4 * v;
    CHECK(mv == std::vector<Rational>{Rational(3), Rational(0), Rational(3), Rational(-7)});
}
