#pragma once

#include "fmcy/errors.hpp"
#include "fmcy/fm_charges.hpp"
#include "fmcy/vertical.hpp"

namespace fmcy {

/// ch(V x O(D)) = ch(V) . exp(D) for a degree-2 divisor class D.
inline VerticalClass line_bundle_twist(const VerticalClass& ch, const VerticalClass& divisor) {
    return ch * exp_divisor(divisor);
}

/// The conifold operation gamma -> gamma - (integral of gamma.Td(X)) 1_X:
/// only the degree-0 slot changes, by minus the Euler integral.
inline VerticalClass gamma_shift(const VerticalClass& ch) {
    VerticalClass out = ch;
    return out - ch.euler_integral() * VerticalClass::unit(ch.geom());
}

/// Transform with kernel the structure sheaf of the full product: the Euler
/// integral in degree 0 and nothing else.
inline VerticalClass ch_structure_product(const VerticalClass& ch) {
    return ch.euler_integral() * VerticalClass::unit(ch.geom());
}

/// Transform with kernel the ideal sheaf of the diagonal of the full
/// product: (integral of ch.Td(X)) - ch. Minus the gamma shift.
inline VerticalClass ch_diagonal_ideal(const VerticalClass& ch) {
    return ch_structure_product(ch) - ch;
}

/// Transform with kernel the ideal of the fibre square inside the full
/// product:
///   ch0 = (ch3 + ch1.c2(X)/12) - x
///   ch1 = -n c1 - eta + x c1/2          (a pure pullback class)
///   ch2 = ((n/2 - x/12) c1^2 - c1.S + eta.c1/2 - s) F
///   ch3 = 0
inline VerticalClass ch_embedding_ideal(const VerticalClass& ch) {
    const Geometry& g = ch.geom();
    const BaseClass& c1 = g.c1();
    Rational g2 = g.c1_sq();
    Rational ch0 = ch.euler_integral() - ch.x();
    BaseClass ch1 = Rational(-ch.r()) * c1 - ch.eta() + Rational(1, 2) * ch.x() * c1;
    Rational ch2 = (Rational(1, 2) * ch.r() - ch.x() / Rational(12)) * g2 -
                   g.pair(c1, ch.S()) + g.pair(ch.eta(), c1) / Rational(2) - ch.s();
    return VerticalClass(g, ch0, 0, ch1, g.zero_class(), ch2, 0);
}

/// Transform with kernel the ideal sheaf of the diagonal inside the fibre
/// square (pushed into the full product):
///   ch0 = x - n
///   ch1 = -x sigma - S + (n - x/2) c1 + eta
///   ch2 = -eta sigma + (-a - (n/2 - x/12) c1^2 + c1.S - eta.c1/2 + s) F
///   ch3 = -s
inline VerticalClass ch_fibre_ideal(const VerticalClass& ch) {
    const Geometry& g = ch.geom();
    const BaseClass& c1 = g.c1();
    Rational g2 = g.c1_sq();
    BaseClass ch1 = Rational(-1) * ch.S() + (ch.r() - ch.x() / Rational(2)) * c1 + ch.eta();
    Rational fibre = -ch.a() - (Rational(1, 2) * ch.r() - ch.x() / Rational(12)) * g2 +
                     g.pair(c1, ch.S()) - g.pair(ch.eta(), c1) / Rational(2) + ch.s();
    return VerticalClass(g, ch.x() - ch.r(), -ch.x(), ch1, Rational(-1) * ch.eta(), fibre,
                         -ch.s());
}

/// The twist intermediate of the factored inverse transform: ch(V . O(sigma)).
inline VerticalClass factor_intermediate(const VerticalClass& ch) {
    return line_bundle_twist(ch, VerticalClass::sigma(ch.geom()));
}

/// The inverse fibrewise transform factored into full-product transforms:
/// twist by O(sigma), fibre-square ideal kernel, twist by O(sigma), twist by
/// the square of the anticanonical pullback.
inline VerticalClass factor_inverse_fm(const VerticalClass& ch) {
    const Geometry& g = ch.geom();
    VerticalClass sigma = VerticalClass::sigma(g);
    VerticalClass two_c1 = VerticalClass::pullback(g, Rational(2) * g.c1());
    VerticalClass step = ch_fibre_ideal(factor_intermediate(ch));
    return line_bundle_twist(line_bundle_twist(step, sigma), two_c1);
}

/// Descriptor for the charge-level kernels of this module.
struct KernelDescriptor {
    enum class Kind { diagonal_twist, diagonal_ideal, fibre_ideal, structure_product };
    Kind kind = Kind::diagonal_twist;
    VerticalClass divisor; // used by diagonal_twist only

    static KernelDescriptor twist(VerticalClass d) {
        return {Kind::diagonal_twist, std::move(d)};
    }
    static KernelDescriptor diagonal_ideal(const Geometry& g) {
        return {Kind::diagonal_ideal, VerticalClass(g)};
    }
    static KernelDescriptor fibre_ideal(const Geometry& g) {
        return {Kind::fibre_ideal, VerticalClass(g)};
    }
    static KernelDescriptor structure_product(const Geometry& g) {
        return {Kind::structure_product, VerticalClass(g)};
    }
};

inline VerticalClass apply_kernel(const KernelDescriptor& k, const VerticalClass& ch) {
    switch (k.kind) {
    case KernelDescriptor::Kind::diagonal_twist: return line_bundle_twist(ch, k.divisor);
    case KernelDescriptor::Kind::diagonal_ideal: return ch_diagonal_ideal(ch);
    case KernelDescriptor::Kind::fibre_ideal: return ch_fibre_ideal(ch);
    case KernelDescriptor::Kind::structure_product: return ch_structure_product(ch);
    }
    throw Error("unknown kernel kind");
}

} // namespace fmcy
