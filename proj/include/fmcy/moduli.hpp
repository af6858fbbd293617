#pragma once

#include "fmcy/errors.hpp"
#include "fmcy/models.hpp"
#include "fmcy/multipoly.hpp"
#include "fmcy/vertical.hpp"

namespace fmcy {

/// Hodge numbers of a spectral cover surface entering the dimension counts.
struct HodgeInput {
    long long h01 = 0; // h^{0,1}(C)
    long long h20 = 0; // h^{2,0}(C)
    long long h10 = 0; // h^{1,0}(C)

    void validate() const {
        if (h01 < 0 || h20 < 0 || h10 < 0)
            throw PreconditionError("Hodge numbers must be nonnegative");
    }
};

/// The alternating sum of Ext groups of End(V) on a Calabi-Yau threefold
/// vanishes by Serre duality; kept as a checked statement.
inline Rational serre_index() { return Rational(0); }

/// Fixed-point sum of c2(V) over the involution locus:
/// 2 * (sigma.ch1^2) + (sigma.eta.c1) - 4a.
inline Rational c2_fixed_point_sum(const Rational& s2, const Rational& eta_c1,
                                   const Rational& a) {
    return Rational(2) * s2 + eta_c1 - Rational(4) * a;
}

/// Moduli dimension from the character-valued index:
/// rank - sum of c2(V) + 2 h^{1,0}(C).
inline Rational dim_moduli_tau(const Rational& rank, const Rational& c2sum, long long h10) {
    return rank - c2sum + Rational(2 * h10);
}

/// The degree-18 moduli dimension
/// h^1 = n6 - 3 n2^2 + 6 n4^2 + 4 n2^1 - 2 (n4^2)^2, valid for n4^1 = 0.
inline Rational dim_moduli_deg18(const BPSCharge& n) {
    if (!n.n4_1.is_zero())
        throw PreconditionError("the dimension formula assumes n4^1 = 0");
    return n.n6 - Rational(3) * n.n2_2 + Rational(6) * n.n4_2 + Rational(4) * n.n2_1 -
           Rational(2) * n.n4_2 * n.n4_2;
}

/// BPS vector of an involution-invariant spectral bundle with eta = a c1(B):
/// n2^2 = -3a, n2^1 = (3(n^3 - n) + 9a(a - n)n)/8, n6 = n; n even, a odd.
inline BPSCharge fmw_bps_dictionary(long long rank, long long a) {
    if (rank <= 0 || rank % 2 != 0)
        throw ParityError("rank must be a positive even integer");
    if (a % 2 == 0)
        throw ParityError("the twist coefficient must be odd");
    BPSCharge n;
    n.n6 = rank;
    n.n2_2 = Rational(-3 * a);
    n.n2_1 = Rational(3 * (rank * rank * rank - rank) + 9 * a * (a - rank) * rank, 8);
    return n;
}

/// c2(V) = eta sigma - ((n^3 - n)/24) c1^2 - (n/8) eta.(eta - n c1),
/// evaluated in the ring with the corrections in the fibre slot.
inline VerticalClass c2_fmw(long long rank, const BaseClass& eta, const Geometry& g) {
    Rational n(rank);
    Rational corr = (n * n * n - n) / Rational(24) * g.c1_sq() +
                    n / Rational(8) * g.pair(eta, eta - n * g.c1());
    return VerticalClass::sigma_pullback(g, eta) - corr * VerticalClass::fibre(g);
}

/// Ext dimensions on the cover and on the ambient space.
struct ExtDimensions {
    Rational ext1_on_cover; // h^{0,1}(C)
    Rational ext1_on_X;     // h^{0,1}(C) + h^{2,0}(C)
    Rational h1_endV;       // h^{2,0}(C) + h^{1,0}(C)
    friend bool operator==(const ExtDimensions&, const ExtDimensions&) = default;
};

inline ExtDimensions ext_dimensions(const HodgeInput& h) {
    h.validate();
    return {Rational(h.h01), Rational(h.h01 + h.h20), Rational(h.h20 + h.h10)};
}

/// Integrability constraint of the deg18 model: the polynomial
/// (3 t1^2 + 2 t1 t2) n4^2, which must vanish for a supersymmetric solution.
inline MultiPoly duy_constraint(const ModelDefinition& m, const BPSCharge& n) {
    if (m.name != "deg18")
        throw PreconditionError("the integrability constraint is recorded for deg18");
    return n.n4_2 * (MultiPoly::monomial(2, 0, Rational(3)) + MultiPoly::monomial(1, 1, Rational(2)));
}

} // namespace fmcy
