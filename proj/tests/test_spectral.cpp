#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fmcy/spectral.hpp"

using namespace fmcy;

namespace {
std::vector<Geometry> geoms() {
    BaseSurfaceData odd;
    odd.basis_labels = {"u", "v"};
    odd.intersection_form = RMatrix::from_rows({{2, 1}, {1, -3}});
    odd.c1 = BaseClass{Rational(1), Rational(-2)};
    odd.c2 = 7;
    return {Geometry::projective_plane(), Geometry(BaseSurfaceData::quadric()), Geometry(odd)};
}
SpectralData rnd_data(const Geometry& g, std::mt19937_64& rng) {
    SpectralData sd;
    sd.n = std::uniform_int_distribution<int>(1, 5)(rng);
    sd.eta = BaseClass(g.rank());
    for (auto& x : sd.eta.coeff)
        x = Rational(std::uniform_int_distribution<int>(-6, 6)(rng));
    sd.lambda = Rational(std::uniform_int_distribution<int>(-4, 4)(rng), 2);
    return sd;
}
} // namespace

TEST_CASE("gamma class") {
    Geometry g = Geometry::projective_plane();
    SpectralData zero{2, BaseClass{Rational(6)}, Rational(0)};
    CHECK(gamma_class(zero, g).is_zero());

    SpectralData sd{2, BaseClass{Rational(6)}, Rational(1, 2)};
    VerticalClass gam = gamma_class(sd, g);
    CHECK(gam.x() == Rational(1)); // lambda * n
    CHECK(gam.S() == BaseClass{Rational(0)}); // (n c1 - eta)/2 = (6l - 6l)/2
    CHECK(gam.pure_degree(2));

    // gamma spans the kernel of the cover pushforward: pi_*(C . gamma) = 0
    std::mt19937_64 rng(3);
    for (const Geometry& gg : geoms())
        for (int i = 0; i < 25; ++i) {
            SpectralData r = rnd_data(gg, rng);
            VerticalClass cg = cover_class(r, gg) * gamma_class(r, gg);
            CHECK(cg.pushforward().h2.is_zero());
            CHECK(cg.x().is_zero());
        }
}

TEST_CASE("cover sheaf charge") {
    Geometry g = Geometry::projective_plane();
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        SpectralData sd = rnd_data(g, rng);
        VerticalClass iL = ch_spectral_sheaf(sd, g);
        CHECK(iL.r() == Rational(0));
        // ch1 = C
        CHECK(iL.graded(2) == cover_class(sd, g));
    }
    // lambda = 0, eta = n c1: gamma vanishes and ch2 = C . c1/2
    SpectralData special{2, Rational(2) * g.c1(), Rational(0)};
    VerticalClass iL = ch_spectral_sheaf(special, g);
    VerticalClass expect =
        cover_class(special, g) * VerticalClass::pullback(g, Rational(1, 2) * g.c1());
    CHECK(iL.graded(4) == expect.graded(4));
    // full deg18-style vector, frozen from the ring expansion
    SpectralData sd{2, BaseClass{Rational(6)}, Rational(1, 2)};
    VerticalClass v = ch_spectral_sheaf(sd, g);
    CHECK(v.x() == Rational(2));
    CHECK(v.S() == BaseClass{Rational(6)});
    CHECK(v.eta() == BaseClass{Rational(3)});
    CHECK(v.a() == Rational(9));
    CHECK(v.s() == Rational(21, 4));
}

TEST_CASE("bundle charge from the cover data") {
    std::mt19937_64 rng(23);
    for (const Geometry& g : geoms())
        for (int i = 0; i < 25; ++i) {
            SpectralData sd = rnd_data(g, rng);
            VerticalClass v = ch_bundle_from_spectral(sd, g);
            CHECK(v.r() == Rational(sd.n));
            CHECK(v.graded(2).is_zero());
            CHECK(v.eta() == Rational(-1) * sd.eta);
            // ch3 = lambda eta.(eta - n c1)
            CHECK(v.s() ==
                  sd.lambda * g.pair(sd.eta, sd.eta - Rational(sd.n) * g.c1()));
            if (sd.lambda.is_zero())
                CHECK(v.s().is_zero());
        }
}

TEST_CASE("the amended-twist relation is the defining cross-check") {
    std::mt19937_64 rng(33);
    for (const Geometry& g : geoms())
        for (int i = 0; i < 30; ++i) {
            SpectralData sd = rnd_data(g, rng);
            VerticalClass v = ch_bundle_from_spectral(sd, g);
            VerticalClass iL = ch_spectral_sheaf(sd, g);
            CHECK(v == (iL * todd_normal(g)).m_apply());
            CHECK(fm_forward(iL) == v);
            CHECK(amended_t_residual(sd, g).is_zero());
        }
}

TEST_CASE("the half-canonical twist misses by n c1^2 / 24") {
    Geometry g = Geometry::projective_plane();
    SpectralData sd{2, BaseClass{Rational(6)}, Rational(1, 2)};
    CHECK(t_question_mismatch(sd, g) == Rational(3, 4)); // 2 * 9 / 24
    std::mt19937_64 rng(43);
    for (const Geometry& gg : geoms())
        for (int i = 0; i < 25; ++i) {
            SpectralData r = rnd_data(gg, rng);
            CHECK(t_question_mismatch(r, gg) == Rational(r.n) * gg.c1_sq() / Rational(24));
        }
}

TEST_CASE("parity and degree preconditions") {
    Geometry g = Geometry::projective_plane();
    SpectralData bad_lambda{2, BaseClass{Rational(1)}, Rational(1, 3)};
    CHECK_THROWS_AS(gamma_class(bad_lambda, g), ParityError);
    SpectralData bad_rank{0, BaseClass{Rational(1)}, Rational(1, 2)};
    CHECK_THROWS_AS(cover_class(bad_rank, g), PreconditionError);
}
