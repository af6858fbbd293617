#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fmcy/serialize.hpp"
#include "fmcy/verify.hpp"

using namespace fmcy;

TEST_CASE("rationals serialize as p/q strings") {
    CHECK(to_json(Rational(3, 4)) == Json("3/4"));
    CHECK(to_json(Rational(-5)) == Json("-5"));
    CHECK(rational_from_json(Json("7/2")) == Rational(7, 2));
    CHECK(rational_from_json(Json(3)) == Rational(3));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
}

TEST_CASE("charge documents round-trip bit-exactly") {
    ModelRegistry registry = ModelRegistry::standard();
    Geometry g = *registry.at("deg18").geometry;
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> n(-20, 20), d(1, 7);
    for (int i = 0; i < 50; ++i) {
        VerticalClass v(g, Rational(n(rng), d(rng)), Rational(n(rng), d(rng)),
                        BaseClass{Rational(n(rng), d(rng))}, BaseClass{Rational(n(rng), d(rng))},
                        Rational(n(rng), d(rng)), Rational(n(rng), d(rng)));
        ChargeDocument doc(g, v);
        doc.model = "deg18";
        Json j = to_json(doc);
        ChargeDocument back = charge_document_from_json(Json::parse(j.dump()), registry);
        CHECK(back.charge == v);
        CHECK(back.geometry.compatible(g));
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("inline geometries parse and validate") {
    ModelRegistry registry = ModelRegistry::standard();
    Json j = Json::parse(R"({
        "geometry": {
            "basis_labels": ["f1", "f2"],
            "intersection_form": [["0", "1"], ["1", "0"]],
            "c1": ["2", "2"],
            "c2": "4"
        },
        "charge": {"n": "1", "x": "0", "S": ["0", "0"], "eta": ["0", "0"], "a": "0", "s": "0"}
    })");
    ChargeDocument doc = charge_document_from_json(j, registry);
    CHECK(doc.geometry.rank() == 2);
    CHECK(doc.charge.r() == Rational(1));
    // asymmetric pairing matrices are rejected
    Json bad = j;
    bad["geometry"]["intersection_form"] = Json::parse(R"([["0","1"],["2","0"]])");
    CHECK_THROWS_AS(charge_document_from_json(bad, registry), GeometryError);
    // a K3-fibred model has no elliptic geometry to resolve
    Json k3 = j;
    k3["geometry"] = "deg8";
    CHECK_THROWS_AS(charge_document_from_json(k3, registry), PreconditionError);
}

TEST_CASE("model definitions round-trip through their canonical serialization") {
    ModelRegistry registry = ModelRegistry::standard();
    for (const auto& name : registry.names()) {
        const ModelDefinition& m = registry.at(name);
        ModelDefinition back = model_from_json(to_json(m));
        CHECK(to_json(back) == to_json(m));
        CHECK(model_fingerprint(back) == model_fingerprint(m));
        CHECK(back.matrices.size() == m.matrices.size());
        for (const auto& [key, mat] : m.matrices)
            CHECK(back.matrix(key) == mat);
    }
}

TEST_CASE("fingerprints pin every stored matrix entry") {
    ModelRegistry registry = ModelRegistry::standard();
    std::uint64_t fp = model_fingerprint(registry.at("deg8"));
    ModelRegistry mutated = ModelRegistry::standard();
    mutated.mutate("deg8", "m", 2, 3, Rational(1));
    CHECK(model_fingerprint(mutated.at("deg8")) != fp);
    mutated = ModelRegistry::standard();
    mutated.mutate("deg8", "K", 1, 2, Rational(1, 7));
    CHECK(model_fingerprint(mutated.at("deg8")) != fp);
}

TEST_CASE("multipoly and matrix serialization") {
    const ModelDefinition& m = ModelRegistry::standard().at("deg12");
    CHECK(matrix_from_json(to_json(m.matrix("S_H"))) == m.matrix("S_H"));
    CHECK(multipoly_from_json(to_json(m.prepotential)) == m.prepotential);
    CHECK_THROWS_AS(matrix_from_json(Json::array()), ParseError);
}
