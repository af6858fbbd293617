#pragma once

#include <utility>

#include "fmcy/errors.hpp"
#include "fmcy/geometry.hpp"

namespace fmcy {

/// Element of the vertical even cohomology of an elliptic Calabi-Yau
/// threefold X over a surface B with section sigma and fibre class F:
///
///     v = r + x*sigma + pi*S + sigma*pi*eta + a*F + s*[pt]
///
/// in the six-slot decomposition (r, x, S, eta, a, s). The ring structure is
/// generated by sigma^2 = -sigma*pi*c1, sigma*F = [pt], pi*A*pi*B = (A.B)*F
/// and F^2 = 0; everything else follows by linearity. All values are
/// immutable and safe to share across threads.
class VerticalClass {
  public:
    explicit VerticalClass(Geometry g)
        : g_(std::move(g)), S_(g_.rank()), eta_(g_.rank()) {}

    VerticalClass(Geometry g, Rational r, Rational x, BaseClass S, BaseClass eta, Rational a,
                  Rational s)
        : g_(std::move(g)), r_(std::move(r)), x_(std::move(x)), S_(std::move(S)),
          eta_(std::move(eta)), a_(std::move(a)), s_(std::move(s)) {
        if (S_.size() != g_.rank() || eta_.size() != g_.rank())
            throw GeometryError("slot length does not match the base rank");
    }

    static VerticalClass unit(const Geometry& g) {
        VerticalClass v(g);
        v.r_ = 1;
        return v;
    }
    static VerticalClass sigma(const Geometry& g) {
        VerticalClass v(g);
        v.x_ = 1;
        return v;
    }
    static VerticalClass fibre(const Geometry& g) {
        VerticalClass v(g);
        v.a_ = 1;
        return v;
    }
    static VerticalClass point(const Geometry& g) {
        VerticalClass v(g);
        v.s_ = 1;
        return v;
    }
    /// pi^* of a degree-2 base class.
    static VerticalClass pullback(const Geometry& g, const BaseClass& c) {
        VerticalClass v(g);
        v.S_ = c;
        return v;
    }
    /// sigma * pi^* of a degree-2 base class.
    static VerticalClass sigma_pullback(const Geometry& g, const BaseClass& c) {
        VerticalClass v(g);
        v.eta_ = c;
        return v;
    }
    /// pi^* of a full base value: h0 + pi*h2 + h4*F.
    static VerticalClass pullback(const Geometry& g, const BaseTotal& t) {
        VerticalClass v(g);
        v.r_ = t.h0;
        v.S_ = t.h2;
        v.a_ = t.h4;
        return v;
    }

    const Geometry& geom() const { return g_; }
    const Rational& r() const { return r_; }
    const Rational& x() const { return x_; }
    const BaseClass& S() const { return S_; }
    const BaseClass& eta() const { return eta_; }
    const Rational& a() const { return a_; }
    const Rational& s() const { return s_; }

    bool is_zero() const {
        return r_.is_zero() && x_.is_zero() && S_.is_zero() && eta_.is_zero() && a_.is_zero() &&
               s_.is_zero();
    }

    friend bool operator==(const VerticalClass& u, const VerticalClass& v) {
        return u.g_.compatible(v.g_) && u.r_ == v.r_ && u.x_ == v.x_ && u.S_ == v.S_ &&
               u.eta_ == v.eta_ && u.a_ == v.a_ && u.s_ == v.s_;
    }

    friend VerticalClass operator+(const VerticalClass& u, const VerticalClass& v) {
        u.g_.require_compatible(v.g_);
        return {u.g_, u.r_ + v.r_, u.x_ + v.x_, u.S_ + v.S_, u.eta_ + v.eta_, u.a_ + v.a_,
                u.s_ + v.s_};
    }
    friend VerticalClass operator-(const VerticalClass& u, const VerticalClass& v) {
        return u + Rational(-1) * v;
    }
    friend VerticalClass operator*(const Rational& c, const VerticalClass& v) {
        return {v.g_, c * v.r_, c * v.x_, c * v.S_, c * v.eta_, c * v.a_, c * v.s_};
    }

    /// Graded-commutative product, truncated above degree 6.
    friend VerticalClass operator*(const VerticalClass& u, const VerticalClass& v) {
        u.g_.require_compatible(v.g_);
        const Geometry& g = u.g_;
        const BaseClass& c1 = g.c1();
        Rational r = u.r_ * v.r_;
        Rational x = u.r_ * v.x_ + u.x_ * v.r_;
        BaseClass S = u.r_ * v.S_ + v.r_ * u.S_;
        // sigma^2 = -sigma*pi*c1 feeds the x*x term into the eta slot
        BaseClass eta = u.r_ * v.eta_ + v.r_ * u.eta_ + u.x_ * v.S_ + v.x_ * u.S_ +
                        (-(u.x_ * v.x_)) * c1;
        Rational a = u.r_ * v.a_ + v.r_ * u.a_ + g.pair(u.S_, v.S_);
        Rational s = u.r_ * v.s_ + v.r_ * u.s_ + u.x_ * v.a_ + v.x_ * u.a_ +
                     g.pair(u.S_, v.eta_) + g.pair(v.S_, u.eta_) - u.x_ * g.pair(c1, v.eta_) -
                     v.x_ * g.pair(c1, u.eta_);
        return {g, r, x, S, eta, a, s};
    }

    /// Coefficient of the point class.
    const Rational& integrate() const { return s_; }

    /// pi_*: sigma -> 1, sigma*pi*eta -> eta, [pt] -> [pt_B], rest -> 0.
    BaseTotal pushforward() const {
        BaseTotal t(g_.rank());
        t.h0 = x_;
        t.h2 = eta_;
        t.h4 = s_;
        return t;
    }

    /// Part of the class in cohomological degree d (0, 2, 4 or 6).
    VerticalClass graded(int d) const {
        VerticalClass v(g_);
        switch (d) {
        case 0: v.r_ = r_; break;
        case 2: v.x_ = x_; v.S_ = S_; break;
        case 4: v.eta_ = eta_; v.a_ = a_; break;
        case 6: v.s_ = s_; break;
        default: break;
        }
        return v;
    }

    bool pure_degree(int d) const { return *this == graded(d); }

    /// Charge of the dual object: ch_i -> (-1)^i ch_i.
    VerticalClass dual_charge() const {
        return {g_, r_, -x_, Rational(-1) * S_, eta_, a_, -s_};
    }

    /// The block rotation (n, x, S, eta, a, s) -> (x, -n, eta, -S, s, -a).
    VerticalClass m_apply() const {
        return {g_, x_, -r_, eta_, Rational(-1) * S_, s_, -a_};
    }

    /// Integral of ch * Td(X) over X (the holomorphic Euler number when the
    /// class is a Chern character).
    Rational euler_integral() const {
        return s_ + g_.pair(S_, g_.c1()) + x_ * (g_.c2() - g_.c1_sq()) / Rational(12);
    }

  private:
    Geometry g_;
    Rational r_, x_;
    BaseClass S_, eta_;
    Rational a_, s_;
};

/// Td(X) = 1 + (c2 + 11 c1^2 + 12 sigma c1)/12 on a Calabi-Yau threefold.
inline VerticalClass todd_X(const Geometry& g) {
    VerticalClass v = VerticalClass::unit(g);
    return v + VerticalClass::sigma_pullback(g, g.c1()) +
           ((g.c2() + Rational(11) * g.c1_sq()) / Rational(12)) * VerticalClass::fibre(g);
}

/// Td of the relative tangent bundle:
/// 1 - c1/2 + (13 c1^2 + 12 sigma c1)/12 - sigma c1^2 / 2.
inline VerticalClass todd_relative(const Geometry& g) {
    Rational g2 = g.c1_sq();
    return VerticalClass(g, 1, 0, Rational(-1, 2) * g.c1(), g.c1(), Rational(13, 12) * g2,
                         Rational(-1, 2) * g2);
}

/// Td(N) = 1 - c1/2 + c1^2/12 for the normal bundle of the section
/// (pullbacks understood).
inline VerticalClass todd_normal(const Geometry& g) {
    return VerticalClass(g, 1, 0, Rational(-1, 2) * g.c1(), g.zero_class(),
                         g.c1_sq() / Rational(12), 0);
}

/// Multiplicative inverse of a series with unit degree-0 slot.
inline VerticalClass series_inverse(const VerticalClass& v) {
    if (v.r() != Rational(1))
        throw SeriesError("series inverse requires degree-0 slot 1");
    // (1 - e) with e of degree >= 2 is nilpotent: geometric series terminates.
    VerticalClass e = VerticalClass::unit(v.geom()) - v;
    VerticalClass acc = VerticalClass::unit(v.geom());
    VerticalClass term = VerticalClass::unit(v.geom());
    for (int i = 0; i < 3; ++i) {
        term = term * e;
        acc = acc + term;
    }
    return acc;
}

/// Square root of a series with unit degree-0 slot, solved degree by degree.
inline VerticalClass series_sqrt(const VerticalClass& v) {
    if (v.r() != Rational(1))
        throw SeriesError("series square root requires degree-0 slot 1");
    const Geometry& g = v.geom();
    VerticalClass w2 = Rational(1, 2) * v.graded(2);
    VerticalClass w4 = Rational(1, 2) * (v.graded(4) - (w2 * w2).graded(4));
    VerticalClass w6 = Rational(1, 2) * (v.graded(6) - Rational(2) * (w2 * w4).graded(6));
    return VerticalClass::unit(g) + w2 + w4 + w6;
}

/// ch of the line bundle O(d) for a degree-2 divisor class d.
inline VerticalClass exp_divisor(const VerticalClass& d) {
    if (!d.pure_degree(2))
        throw GradingError("exp_divisor requires a pure degree-2 class");
    VerticalClass one = VerticalClass::unit(d.geom());
    VerticalClass d2 = d * d;
    return one + d + Rational(1, 2) * d2 + Rational(1, 6) * (d2 * d);
}

/// Element of the even cohomology of an elliptic K3 with section, in the
/// slot order (H^0, sigma, F, H^4). The section is a -2 curve.
struct K3Class {
    Rational r, sigma, f, s;

    friend bool operator==(const K3Class&, const K3Class&) = default;
    friend K3Class operator+(const K3Class& a, const K3Class& b) {
        return {a.r + b.r, a.sigma + b.sigma, a.f + b.f, a.s + b.s};
    }
    friend K3Class operator*(const Rational& c, const K3Class& a) {
        return {c * a.r, c * a.sigma, c * a.f, c * a.s};
    }
    friend K3Class operator*(const K3Class& u, const K3Class& v) {
        // sigma^2 = -2 pt, sigma.F = pt, F^2 = 0
        return {u.r * v.r, u.r * v.sigma + v.r * u.sigma, u.r * v.f + v.r * u.f,
                u.r * v.s + v.r * u.s + u.sigma * v.f + v.sigma * u.f -
                    Rational(2) * u.sigma * v.sigma};
    }
};

} // namespace fmcy
