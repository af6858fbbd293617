#pragma once

#include <string>
#include <vector>

#include "fmcy/errors.hpp"
#include "fmcy/fibre_square.hpp"
#include "fmcy/matrix.hpp"
#include "fmcy/vertical.hpp"

namespace fmcy {

/// Charge of the fibrewise transform of a class (n, x, S, eta, a, s):
///
///   ch0 = x
///   ch1 = -n sigma + eta - x c1 / 2
///   ch2 = (n c1/2 - S) sigma + (s - eta.c1/2 + x c1^2/12) F
///   ch3 = -n c1^2/6 - a + c1.S/2
///
/// The convention is the derived-category alternating sum over the transform
/// sheaves, so single-sheaf statements pick up the index sign.
inline VerticalClass fm_forward(const VerticalClass& v) {
    const Geometry& g = v.geom();
    const BaseClass& c1 = g.c1();
    Rational g2 = g.c1_sq();
    return VerticalClass(
        g, v.x(), -v.r(), v.eta() + Rational(-1, 2) * v.x() * c1,
        Rational(1, 2) * v.r() * c1 - v.S(),
        v.s() - g.pair(v.eta(), c1) / Rational(2) + v.x() * g2 / Rational(12),
        Rational(-1, 6) * v.r() * g2 - v.a() + g.pair(c1, v.S()) / Rational(2));
}

/// Charge of the inverse fibrewise transform:
///
///   ch0 = x
///   ch1 = -n sigma + eta + x c1 / 2
///   ch2 = (-n c1/2 - S) sigma + (s + eta.c1/2 + x c1^2/12) F
///   ch3 = -n c1^2/6 - a - c1.S/2
///
/// The degree-6 slot has no x term: the composition with fm_forward must be
/// minus the identity, which fixes that coefficient to zero (see the tests).
inline VerticalClass fm_inverse(const VerticalClass& v) {
    const Geometry& g = v.geom();
    const BaseClass& c1 = g.c1();
    Rational g2 = g.c1_sq();
    return VerticalClass(
        g, v.x(), -v.r(), v.eta() + Rational(1, 2) * v.x() * c1,
        Rational(-1, 2) * v.r() * c1 - v.S(),
        v.s() + g.pair(v.eta(), c1) / Rational(2) + v.x() * g2 / Rational(12),
        Rational(-1, 6) * v.r() * g2 - v.a() - g.pair(c1, v.S()) / Rational(2));
}

/// Round trip of the two transforms; equals -ch for every charge.
inline VerticalClass double_transform(const VerticalClass& v) {
    return fm_inverse(fm_forward(v));
}

/// The six numerical invariants of a charge:
/// n = rank, d = ch1.F, s = ch3, g = ch1.sigma.c1, c = ch2.sigma, f = ch2.c1,
/// each evaluated as a ring product.
struct NumericalInvariants {
    Rational n, d, s, g, c, f;
    friend bool operator==(const NumericalInvariants&, const NumericalInvariants&) = default;
};

inline NumericalInvariants numerical_invariants(const VerticalClass& v) {
    const Geometry& g = v.geom();
    VerticalClass ch1 = v.graded(2);
    VerticalClass ch2 = v.graded(4);
    VerticalClass sig = VerticalClass::sigma(g);
    VerticalClass c1 = VerticalClass::pullback(g, g.c1());
    NumericalInvariants inv;
    inv.n = v.r();
    inv.d = (ch1 * VerticalClass::fibre(g)).integrate();
    inv.s = v.s();
    inv.g = (ch1 * sig * c1).integrate();
    inv.c = (ch2 * sig).integrate();
    inv.f = (ch2 * c1).integrate();
    return inv;
}

/// Charge twisted by the half Todd class of the section's normal bundle;
/// the power alternates with the shift parity of the complex.
struct TwistedChargeN {
    VerticalClass value;
};

inline TwistedChargeN twisted_charge(const VerticalClass& ch, int shift_parity) {
    VerticalClass half = series_sqrt(todd_normal(ch.geom()));
    bool positive = shift_parity % 2 != 0; // exponent (-1)^(parity+1)
    return {ch * (positive ? half : series_inverse(half))};
}

/// Mukai charge ch . sqrt(Td(X)).
struct MukaiCharge {
    VerticalClass value;
};

inline MukaiCharge mukai_charge(const VerticalClass& ch) {
    return {ch * series_sqrt(todd_X(ch.geom()))};
}

/// Flattening of a charge to a coordinate vector
/// (n, x, S_1..S_k, eta_1..eta_k, a, s).
inline std::vector<Rational> charge_coords(const VerticalClass& v) {
    std::vector<Rational> c;
    c.reserve(4 + 2 * v.geom().rank());
    c.push_back(v.r());
    c.push_back(v.x());
    for (const auto& t : v.S().coeff)
        c.push_back(t);
    for (const auto& t : v.eta().coeff)
        c.push_back(t);
    c.push_back(v.a());
    c.push_back(v.s());
    return c;
}

inline VerticalClass charge_from_coords(const Geometry& g, const std::vector<Rational>& c) {
    std::size_t k = g.rank();
    if (c.size() != 4 + 2 * k)
        throw ShapeError("charge coordinate vector has wrong length");
    BaseClass S(k), eta(k);
    for (std::size_t i = 0; i < k; ++i) {
        S.coeff[i] = c[2 + i];
        eta.coeff[i] = c[2 + k + i];
    }
    return {g, c[0], c[1], S, eta, c[2 + 2 * k], c[3 + 2 * k]};
}

/// The block-antisymmetric duality matrix in the (n, x, S, eta, a, s)
/// ordering; (4 + 2k)-square, which is 6x6 for a one-generator base.
inline RMatrix m_matrix(const Geometry& g) {
    std::size_t k = g.rank();
    std::size_t n = 4 + 2 * k;
    RMatrix m(n, n);
    m.at(0, 1) = 1;
    m.at(1, 0) = -1;
    for (std::size_t i = 0; i < k; ++i) {
        m.at(2 + i, 2 + k + i) = 1;
        m.at(2 + k + i, 2 + i) = -1;
    }
    m.at(2 + 2 * k, 3 + 2 * k) = 1;
    m.at(3 + 2 * k, 2 + 2 * k) = -1;
    return m;
}

enum class TdnSign { plus, minus };

/// Multiplication by Td(N)^{-1} (plus) or Td(N) (minus) as a 6x6 matrix.
/// Only defined over a one-generator base, where c1 has numeric entries;
/// use ring multiplication by todd_normal otherwise.
inline RMatrix tdn_matrix(const Geometry& g, TdnSign sign) {
    if (g.rank() != 1)
        throw RepresentationError(
            "Td(N) matrix form needs a one-generator base; use ring multiplication instead");
    VerticalClass t = todd_normal(g);
    if (sign == TdnSign::plus)
        t = series_inverse(t);
    RMatrix m(6, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        std::vector<Rational> e(6);
        e[j] = 1;
        auto col = charge_coords(charge_from_coords(g, e) * t);
        for (std::size_t i = 0; i < 6; ++i)
            m.at(i, j) = col[i];
    }
    return m;
}

/// Pass/fail record of the three duality identities for a fibrewise
/// degree-0 charge.
struct MRelationsReport {
    bool td_times_inverse;  // Td(N) . ch(inverse transform) = M . ch
    bool td_inv_times_forward; // Td(N)^{-1} . ch(forward transform) = M . ch
    bool twisted_charges;   // Q(inverse transform, shift 1) = M . Q(ch, shift 0)
    bool all() const { return td_times_inverse && td_inv_times_forward && twisted_charges; }
};

inline MRelationsReport verify_m_relations(const VerticalClass& ch) {
    if (!ch.x().is_zero())
        throw PreconditionError("the duality identities require a charge fibrewise of degree 0");
    const Geometry& g = ch.geom();
    VerticalClass tdn = todd_normal(g);
    VerticalClass m_ch = ch.m_apply();
    MRelationsReport rep;
    rep.td_times_inverse = fm_inverse(ch) * tdn == m_ch;
    rep.td_inv_times_forward = fm_forward(ch) * series_inverse(tdn) == m_ch;
    rep.twisted_charges =
        twisted_charge(fm_inverse(ch), 1).value == twisted_charge(ch, 0).value.m_apply();
    return rep;
}

/// One row of the sheaf-level duality catalog: a named charge with its
/// forward and inverse images, plus the single-sheaf transform when the
/// object sits in one index (carrying the index sign).
struct CatalogEntry {
    std::string name;
    std::string duality; // brane bookkeeping, e.g. "D0 -> D2 (fibre)"
    VerticalClass input;
    VerticalClass forward;
    VerticalClass inverse;
    int forward_index; // index i with the transform concentrated in degree i
};

/// ch(O_sigma) = sigma . Td(N)^{-1}, computed by Riemann-Roch for the
/// section embedding.
inline VerticalClass section_charge(const Geometry& g) {
    return VerticalClass::sigma(g) * series_inverse(todd_normal(g));
}

/// ch(O_sigma x pi^*(t)) for a full base class t.
inline VerticalClass section_sheaf_charge(const Geometry& g, const BaseTotal& t) {
    return section_charge(g) * VerticalClass::pullback(g, t);
}

inline std::vector<CatalogEntry> canonical_catalog(const Geometry& g) {
    std::vector<CatalogEntry> rows;
    auto add = [&](std::string name, std::string duality, VerticalClass in, int index) {
        rows.push_back({std::move(name), std::move(duality), in, fm_forward(in), fm_inverse(in),
                        index});
    };
    // skyscraper sheaf of a point
    add("skyscraper", "D0 -> D2 (fibre)", VerticalClass::point(g), 0);
    // structure sheaf of the section
    add("section", "D4 (base) -> D6", section_charge(g), 0);
    // structure sheaf of X
    add("structure-sheaf", "D6 -> D4 (base)", VerticalClass::unit(g), 1);
    // sheaf on a curve in the base, pushed in along the section
    BaseTotal curve(g.rank());
    curve.h2 = g.c1(); // a representative curve class; any degree-2 class works
    add("section-curve-sheaf", "D2 (base) -> D4 (fibre)", section_sheaf_charge(g, curve), 0);
    return rows;
}

// ---------------------------------------------------------------------------
// K3 case

/// The 4x4 duality matrix in the (H^0, sigma, F, H^4) ordering.
inline RMatrix k3_m_matrix() {
    return RMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
}

/// Charge-level fibrewise duality for an elliptic K3 with section, with the
/// half-canonical twist folded in so untwisted charges map to untwisted
/// charges: ch -> M4 . ch.
inline K3Class k3_fm(const K3Class& ch) {
    return {ch.sigma, -ch.r, ch.s, -ch.f};
}

} // namespace fmcy
