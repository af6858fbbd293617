#pragma once

#include "fmcy/errors.hpp"
#include "fmcy/fm_charges.hpp"
#include "fmcy/vertical.hpp"

namespace fmcy {

/// Data of a rank-n spectral cover: cover class C = n sigma + pi*eta and the
/// half-integral twist parameter lambda of the line-bundle freedom
/// gamma = lambda (n sigma - pi*(eta - n c1)).
struct SpectralData {
    long long n;
    BaseClass eta;
    Rational lambda;

    void validate() const {
        if (n <= 0)
            throw PreconditionError("spectral cover degree must be positive");
        Rational twice = Rational(2) * lambda;
        if (!twice.is_integer())
            throw ParityError("lambda must be half-integral");
    }
};

/// The cover class C = n sigma + pi*eta.
inline VerticalClass cover_class(const SpectralData& sd, const Geometry& g) {
    sd.validate();
    return Rational(sd.n) * VerticalClass::sigma(g) + VerticalClass::pullback(g, sd.eta);
}

/// gamma = lambda (n sigma - pi*eta + n pi*c1), the degree-2 class spanning
/// the kernel of the cover pushforward.
inline VerticalClass gamma_class(const SpectralData& sd, const Geometry& g) {
    sd.validate();
    BaseClass base = Rational(sd.n) * g.c1() - sd.eta;
    return sd.lambda * (Rational(sd.n) * VerticalClass::sigma(g) +
                        VerticalClass::pullback(g, base));
}

/// ch of the line-bundle pushforward from the cover,
///   (0, C, i_*(c1/2 + gamma), i_*((C^2 + 3c1^2)/24 + gamma(c1 + gamma)/2)),
/// with every cover pushforward realized as C-multiplication in the ring.
inline VerticalClass ch_spectral_sheaf(const SpectralData& sd, const Geometry& g) {
    VerticalClass C = cover_class(sd, g);
    VerticalClass gam = gamma_class(sd, g);
    VerticalClass c1 = VerticalClass::pullback(g, g.c1());
    VerticalClass half_c1 = Rational(1, 2) * c1;
    VerticalClass ch2 = C * (half_c1 + gam);
    VerticalClass ch3 =
        C * (Rational(1, 24) * (C * C + Rational(3) * (c1 * c1)) +
             Rational(1, 2) * (gam * (c1 + gam)));
    return C + ch2 + ch3;
}

/// ch of the rank-n bundle the cover encodes:
///   (n, 0, -eta sigma + (pi_*(C^2/24 + gamma^2/2) - n c1^2/24) F,
///    lambda eta.(eta - n c1)).
inline VerticalClass ch_bundle_from_spectral(const SpectralData& sd, const Geometry& g) {
    VerticalClass C = cover_class(sd, g);
    VerticalClass gam = gamma_class(sd, g);
    Rational fibre_part =
        (C * (Rational(1, 24) * (C * C) + Rational(1, 2) * (gam * gam))).integrate() -
        Rational(sd.n) * g.c1_sq() / Rational(24);
    Rational ch3 = sd.lambda * g.pair(sd.eta, sd.eta - Rational(sd.n) * g.c1());
    return VerticalClass(g, Rational(sd.n), 0, g.zero_class(), Rational(-1) * sd.eta,
                         fibre_part, ch3);
}

/// Charge of the half-canonical-twist transform of the bundle, as the
/// alternating-sum charge: fm_forward(ch V) . exp(c1/2).
inline VerticalClass half_canonical_transform(const SpectralData& sd, const Geometry& g) {
    VerticalClass half_c1 = VerticalClass::pullback(g, Rational(1, 2) * g.c1());
    return fm_forward(ch_bundle_from_spectral(sd, g)) * exp_divisor(half_c1);
}

/// Defect of the half-canonical twist: the degree-6 slot of
/// M.ch(V) - ch(transform). Equals n c1^2 / 24 identically; the twist by
/// Td(N)^{-1} instead removes the defect in every slot.
inline Rational t_question_mismatch(const SpectralData& sd, const Geometry& g) {
    VerticalClass v = ch_bundle_from_spectral(sd, g);
    return v.m_apply().s() - half_canonical_transform(sd, g).s();
}

/// Residual of the amended twist: M.ch(V) - fm_forward(ch V) . Td(N)^{-1}.
/// Zero for every spectral datum.
inline VerticalClass amended_t_residual(const SpectralData& sd, const Geometry& g) {
    VerticalClass v = ch_bundle_from_spectral(sd, g);
    return v.m_apply() - fm_forward(v) * series_inverse(todd_normal(g));
}

} // namespace fmcy
