#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fmcy/errors.hpp"
#include "fmcy/models.hpp"
#include "fmcy/moduli.hpp"
#include "fmcy/report.hpp"
#include "fmcy/vertical.hpp"

namespace fmcy {

using Json = nlohmann::ordered_json;

// Rationals are serialized as "p/q" strings, never floats, so documents
// round-trip bit-exactly and golden files diff cleanly.

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return Rational((long long)j.get<long long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    throw ParseError("expected a rational as \"p/q\" string");
}

inline Json to_json(const BaseClass& c) {
    Json a = Json::array();
    for (const auto& x : c.coeff)
        a.push_back(to_json(x));
    return a;
}

inline BaseClass base_class_from_json(const Json& j) {
    if (!j.is_array())
        throw ParseError("expected an array of rationals");
    BaseClass c;
    for (const auto& x : j)
        c.coeff.push_back(rational_from_json(x));
    return c;
}

inline Json to_json(const RMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline RMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("expected a non-empty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw ParseError("expected an array of rows");
        std::vector<Rational> row;
        for (const auto& x : r)
            row.push_back(rational_from_json(x));
        rows.push_back(std::move(row));
    }
    return RMatrix::from_rows(rows);
}

inline Json to_json(const BaseSurfaceData& b) {
    Json j;
    j["basis_labels"] = b.basis_labels;
    j["intersection_form"] = to_json(b.intersection_form);
    j["c1"] = to_json(b.c1);
    j["c2"] = to_json(b.c2);
    return j;
}

inline BaseSurfaceData base_surface_from_json(const Json& j) {
    BaseSurfaceData b;
    for (const auto& l : j.at("basis_labels"))
        b.basis_labels.push_back(l.get<std::string>());
    b.intersection_form = matrix_from_json(j.at("intersection_form"));
    b.c1 = base_class_from_json(j.at("c1"));
    b.c2 = rational_from_json(j.at("c2"));
    b.validate();
    return b;
}

inline Json to_json(const VerticalClass& v) {
    Json j;
    j["n"] = to_json(v.r());
    j["x"] = to_json(v.x());
    j["S"] = to_json(v.S());
    j["eta"] = to_json(v.eta());
    j["a"] = to_json(v.a());
    j["s"] = to_json(v.s());
    return j;
}

inline VerticalClass charge_from_json(const Geometry& g, const Json& j) {
    return {g,
            rational_from_json(j.at("n")),
            rational_from_json(j.at("x")),
            base_class_from_json(j.at("S")),
            base_class_from_json(j.at("eta")),
            rational_from_json(j.at("a")),
            rational_from_json(j.at("s"))};
}

inline Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json::array({e.first, e.second, to_json(c)}));
    Json j;
    j["variables"] = {"t1", "t2"};
    j["terms"] = terms;
    j["display"] = p.str();
    return j;
}

inline MultiPoly multipoly_from_json(const Json& j) {
    MultiPoly p;
    for (const auto& t : j.at("terms"))
        p = p + MultiPoly::monomial(t.at(0).get<int>(), t.at(1).get<int>(),
                                    rational_from_json(t.at(2)));
    return p;
}

inline Json to_json(const BPSCharge& n) {
    Json j;
    j["n6"] = to_json(n.n6);
    j["n4_1"] = to_json(n.n4_1);
    j["n4_2"] = to_json(n.n4_2);
    j["n0"] = to_json(n.n0);
    j["n2_1"] = to_json(n.n2_1);
    j["n2_2"] = to_json(n.n2_2);
    return j;
}

inline BPSCharge bps_from_json(const Json& j) {
    return {rational_from_json(j.at("n6")), rational_from_json(j.at("n4_1")),
            rational_from_json(j.at("n4_2")), rational_from_json(j.at("n0")),
            rational_from_json(j.at("n2_1")), rational_from_json(j.at("n2_2"))};
}

/// Canonical serialization of a model: intersection numbers, prepotential,
/// matrices, geometry. Bit-exact round trip.
inline Json to_json(const ModelDefinition& m) {
    Json j;
    j["name"] = m.name;
    j["elliptic"] = m.elliptic;
    j["h_coeff"] = m.h_coeff;
    j["intersections"] = {{"E3", to_json(m.E3)},
                          {"E2L", to_json(m.E2L)},
                          {"EL2", to_json(m.EL2)},
                          {"L3", to_json(m.L3)}};
    j["c2_pairings"] = {{"E", to_json(m.c2E)}, {"L", to_json(m.c2L)}};
    j["curve_basis"] = {m.curve_basis[0], m.curve_basis[1]};
    j["printed_periods"] = m.printed_periods;
    j["prepotential"] = to_json(m.prepotential);
    if (m.geometry)
        j["geometry"] = to_json(m.geometry->base());
    else
        j["k3_section_self_intersection"] = to_json(m.k3_section_self_intersection);
    Json mats;
    for (const auto& [name, mat] : m.matrices)
        mats[name] = to_json(mat);
    j["matrices"] = mats;
    return j;
}

inline ModelDefinition model_from_json(const Json& j) {
    ModelDefinition m;
    m.name = j.at("name").get<std::string>();
    m.elliptic = j.at("elliptic").get<bool>();
    m.h_coeff = j.at("h_coeff").get<long long>();
    m.E3 = rational_from_json(j.at("intersections").at("E3"));
    m.E2L = rational_from_json(j.at("intersections").at("E2L"));
    m.EL2 = rational_from_json(j.at("intersections").at("EL2"));
    m.L3 = rational_from_json(j.at("intersections").at("L3"));
    m.c2E = rational_from_json(j.at("c2_pairings").at("E"));
    m.c2L = rational_from_json(j.at("c2_pairings").at("L"));
    m.curve_basis = {j.at("curve_basis").at(0).get<std::string>(),
                     j.at("curve_basis").at(1).get<std::string>()};
    m.printed_periods = j.at("printed_periods").get<bool>();
    m.prepotential = multipoly_from_json(j.at("prepotential"));
    if (j.contains("geometry"))
        m.geometry = Geometry(base_surface_from_json(j.at("geometry")));
    if (j.contains("k3_section_self_intersection"))
        m.k3_section_self_intersection =
            rational_from_json(j.at("k3_section_self_intersection"));
    for (const auto& [name, mat] : j.at("matrices").items())
        m.matrices[name] = matrix_from_json(mat);
    return m;
}

/// A charge plus the geometry it lives over, referencing either a registered
/// model or inline base-surface data.
struct ChargeDocument {
    std::optional<std::string> model;
    std::optional<BaseSurfaceData> inline_geometry;
    Geometry geometry;
    VerticalClass charge;

    ChargeDocument(Geometry g, VerticalClass ch)
        : geometry(std::move(g)), charge(std::move(ch)) {}
};

inline Json to_json(const ChargeDocument& doc) {
    Json j;
    if (doc.model)
        j["geometry"] = *doc.model;
    else
        j["geometry"] = to_json(doc.geometry.base());
    j["charge"] = to_json(doc.charge);
    return j;
}

inline ChargeDocument charge_document_from_json(const Json& j, const ModelRegistry& registry) {
    if (!j.contains("geometry"))
        throw ParseError("charge document needs a geometry");
    Geometry g;
    std::optional<std::string> model;
    std::optional<BaseSurfaceData> inline_geom;
    const Json& geo = j.at("geometry");
    if (geo.is_string()) {
        model = geo.get<std::string>();
        const ModelDefinition& m = registry.at(*model);
        if (!m.geometry)
            throw PreconditionError("model " + *model + " carries no elliptic geometry");
        g = *m.geometry;
    } else {
        inline_geom = base_surface_from_json(geo);
        g = Geometry(*inline_geom);
    }
    ChargeDocument doc(g, charge_from_json(g, j.at("charge")));
    doc.model = model;
    doc.inline_geometry = inline_geom;
    return doc;
}

inline Json to_json(const Report& rep, const std::string& suite) {
    Json ids = Json::array();
    for (const auto& id : rep.identities) {
        Json e;
        e["identity"] = id.name;
        e["pass"] = id.pass;
        if (id.informational)
            e["informational"] = true;
        if (!id.detail.empty())
            e["detail"] = id.detail;
        ids.push_back(e);
    }
    Json j;
    j["suite"] = suite;
    j["pass"] = rep.pass();
    j["identities"] = ids;
    return j;
}

/// Stable fingerprint of a model's stored data (FNV-1a over the canonical
/// serialization); pins every matrix entry in the verification suites.
inline std::uint64_t model_fingerprint(const ModelDefinition& m) {
    std::string s = to_json(m).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace fmcy
