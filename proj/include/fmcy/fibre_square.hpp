#pragma once

#include <array>
#include <utility>

#include "fmcy/errors.hpp"
#include "fmcy/geometry.hpp"
#include "fmcy/vertical.hpp"

namespace fmcy {

/// Class on the fibre square X x_B X with diagonal terms. Canonical form:
///
///   sum_{i,j in {0,1}} p1*sigma^i . p2*sigma^j . q*(plain[i][j])
///   + Delta . p2*(diag)
///
/// with plain[i][j] a full base class (q = pi o p1 = pi o p2, so base
/// pullbacks carry no side) and diagonal terms normalized to p2* factors.
/// Reduction rules: (p_k*sigma)^2 = -p_k*sigma . q*c1 on either side,
/// (p1*u p2*v).Delta p2*w = Delta p2*(u v w), and
/// (Delta p2*u)(Delta p2*v) = -Delta p2*(u v pi*c1), the self-intersection
/// of the diagonal divisor read off from the relative tangent bundle.
class FibreSquareClass {
  public:
    explicit FibreSquareClass(Geometry g)
        : g_(std::move(g)), diag_(g_) {
        for (auto& row : plain_)
            for (auto& c : row)
                c = BaseTotal(g_.rank());
    }

    static FibreSquareClass one(const Geometry& g) {
        FibreSquareClass z(g);
        z.plain_[0][0].h0 = 1;
        return z;
    }
    /// Delta . p2*(w)
    static FibreSquareClass diagonal(const VerticalClass& w) {
        FibreSquareClass z(w.geom());
        z.diag_ = w;
        return z;
    }
    /// p1* of a vertical class.
    static FibreSquareClass pull_left(const VerticalClass& w) {
        FibreSquareClass z(w.geom());
        z.plain_[0][0] = BaseTotal{w.r(), w.S(), w.a()};
        z.plain_[1][0] = BaseTotal{w.x(), w.eta(), w.s()};
        return z;
    }
    /// p2* of a vertical class.
    static FibreSquareClass pull_right(const VerticalClass& w) {
        FibreSquareClass z(w.geom());
        z.plain_[0][0] = BaseTotal{w.r(), w.S(), w.a()};
        z.plain_[0][1] = BaseTotal{w.x(), w.eta(), w.s()};
        return z;
    }

    const Geometry& geom() const { return g_; }
    const BaseTotal& plain(int left_sigma, int right_sigma) const {
        return plain_[left_sigma][right_sigma];
    }
    const VerticalClass& diag() const { return diag_; }

    friend bool operator==(const FibreSquareClass& a, const FibreSquareClass& b) {
        return a.g_.compatible(b.g_) && a.plain_ == b.plain_ && a.diag_ == b.diag_;
    }

    friend FibreSquareClass operator+(const FibreSquareClass& a, const FibreSquareClass& b) {
        a.g_.require_compatible(b.g_);
        FibreSquareClass r = a;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.plain_[i][j] = r.plain_[i][j] + b.plain_[i][j];
        r.diag_ = r.diag_ + b.diag_;
        return r;
    }
    friend FibreSquareClass operator-(const FibreSquareClass& a, const FibreSquareClass& b) {
        return a + Rational(-1) * b;
    }
    friend FibreSquareClass operator*(const Rational& c, const FibreSquareClass& a) {
        FibreSquareClass r = a;
        for (auto& row : r.plain_)
            for (auto& bt : row)
                bt = c * bt;
        r.diag_ = c * r.diag_;
        return r;
    }

    friend FibreSquareClass operator*(const FibreSquareClass& a, const FibreSquareClass& b) {
        a.g_.require_compatible(b.g_);
        const Geometry& g = a.g_;
        FibreSquareClass r(g);
        BaseTotal c1bt(g.rank());
        c1bt.h2 = g.c1();
        // plain x plain with sigma^2 reduction on each side
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        BaseTotal q = mul(a.plain_[i][j], b.plain_[k][l], g);
                        if (q.is_zero())
                            continue;
                        int el = i + k, er = j + l;
                        if (el == 2) {
                            el = 1;
                            q = Rational(-1) * mul(q, c1bt, g);
                        }
                        if (er == 2) {
                            er = 1;
                            q = Rational(-1) * mul(q, c1bt, g);
                        }
                        r.plain_[el][er] = r.plain_[el][er] + q;
                    }
        // plain x diag: restrict the plain factor to the diagonal
        auto fold = [&](const std::array<std::array<BaseTotal, 2>, 2>& plain,
                        const VerticalClass& d, VerticalClass& acc) {
            if (d.is_zero())
                return;
            VerticalClass sig = VerticalClass::sigma(g);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    if (plain[i][j].is_zero())
                        continue;
                    VerticalClass w = VerticalClass::pullback(g, plain[i][j]) * d;
                    for (int e = 0; e < i + j; ++e)
                        w = w * sig;
                    acc = acc + w;
                }
        };
        VerticalClass dacc(g);
        fold(a.plain_, b.diag_, dacc);
        fold(b.plain_, a.diag_, dacc);
        // diag x diag: excess intersection along the diagonal divisor
        if (!a.diag_.is_zero() && !b.diag_.is_zero())
            dacc = dacc - a.diag_ * b.diag_ * VerticalClass::pullback(g, g.c1());
        r.diag_ = dacc;
        return r;
    }

    /// p_1* (drops one fibre dimension; only right sigma factors survive).
    VerticalClass push_left() const {
        VerticalClass out = diag_;
        for (int e = 0; e < 2; ++e) {
            if (plain_[e][1].is_zero())
                continue;
            VerticalClass w = VerticalClass::pullback(g_, plain_[e][1]);
            if (e == 1)
                w = w * VerticalClass::sigma(g_);
            out = out + w;
        }
        return out;
    }
    /// p_2*.
    VerticalClass push_right() const {
        VerticalClass out = diag_;
        for (int e = 0; e < 2; ++e) {
            if (plain_[1][e].is_zero())
                continue;
            VerticalClass w = VerticalClass::pullback(g_, plain_[1][e]);
            if (e == 1)
                w = w * VerticalClass::sigma(g_);
            out = out + w;
        }
        return out;
    }

    /// Exchanges the two factors.
    FibreSquareClass swap_factors() const {
        FibreSquareClass r = *this;
        std::swap(r.plain_[0][1], r.plain_[1][0]);
        return r;
    }

    /// Charge of the dual object: the degree-2k component picks up (-1)^k.
    FibreSquareClass dual() const {
        FibreSquareClass r(g_);
        auto sgn = [](int deg) { return (deg / 2) % 2 ? Rational(-1) : Rational(1); };
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                int base = 2 * i + 2 * j;
                r.plain_[i][j].h0 = sgn(base) * plain_[i][j].h0;
                r.plain_[i][j].h2 = sgn(base + 2) * plain_[i][j].h2;
                r.plain_[i][j].h4 = sgn(base + 4) * plain_[i][j].h4;
            }
        // Delta p2*(w) sits in degree 2 + deg w
        const VerticalClass& d = diag_;
        r.diag_ = VerticalClass(g_, -d.r(), d.x(), d.S(), Rational(-1) * d.eta(), -d.a(), d.s());
        return r;
    }

  private:
    Geometry g_;
    std::array<std::array<BaseTotal, 2>, 2> plain_;
    VerticalClass diag_;
};

/// Geometric-series inverse of a fibre-square class with unit leading term.
inline FibreSquareClass fs_inverse(const FibreSquareClass& z) {
    if (z.plain(0, 0).h0 != Rational(1))
        throw SeriesError("fibre-square series inverse requires unit leading term");
    const Geometry& g = z.geom();
    FibreSquareClass e = FibreSquareClass::one(g) - z;
    FibreSquareClass acc = FibreSquareClass::one(g);
    FibreSquareClass term = FibreSquareClass::one(g);
    for (int i = 0; i < 4; ++i) {
        term = term * e;
        acc = acc + term;
    }
    return acc;
}

/// Td(X x_B X) = p2*Td(X) . p1*Td(T_{X/B}).
inline FibreSquareClass todd_fibre_square(const Geometry& g) {
    return FibreSquareClass::pull_right(todd_X(g)) *
           FibreSquareClass::pull_left(todd_relative(g));
}

/// ch of the pushforward of the structure sheaf along the diagonal,
/// computed by Riemann-Roch on the fibre square.
inline FibreSquareClass ch_diagonal_structure(const Geometry& g) {
    return FibreSquareClass::diagonal(todd_X(g)) * fs_inverse(todd_fibre_square(g));
}

/// ch of the ideal sheaf of the diagonal:
/// 1 - Delta - Delta p2*c1/2 + Delta p2*(sigma c1) + 5/6 Delta p2*(c1^2)
///   + Delta p2*(sigma c1^2)/2.
inline FibreSquareClass ch_ideal(const Geometry& g) {
    Rational g2 = g.c1_sq();
    VerticalClass d(g, -1, 0, Rational(-1, 2) * g.c1(), g.c1(), Rational(5, 6) * g2,
                    Rational(1, 2) * g2);
    return FibreSquareClass::one(g) + FibreSquareClass::diagonal(d);
}

/// ch of the dual of the ideal sheaf. The sheaf is torsion free but not
/// locally free, so this is defined at charge level by dualization.
inline FibreSquareClass ch_ideal_dual(const Geometry& g) { return ch_ideal(g).dual(); }

/// ch of the universal fibrewise-degree-0 kernel, normalized trivially along
/// the section in both factors:
/// ch(I^*) . exp(-p1*sigma) . exp(-p2*sigma) . exp(-q*c1).
inline FibreSquareClass ch_poincare(const Geometry& g) {
    VerticalClass minus_sigma = Rational(-1) * VerticalClass::sigma(g);
    VerticalClass minus_c1 = VerticalClass::pullback(g, Rational(-1) * g.c1());
    return ch_ideal_dual(g) * FibreSquareClass::pull_left(exp_divisor(minus_sigma)) *
           FibreSquareClass::pull_right(exp_divisor(minus_sigma)) *
           FibreSquareClass::pull_right(exp_divisor(minus_c1));
}

/// Kernel of the inverse transform: the ddual kernel twisted by q*K_B^{-1}.
inline FibreSquareClass poincare_inverse_kernel(const Geometry& g) {
    return ch_poincare(g).dual() *
           FibreSquareClass::pull_right(exp_divisor(VerticalClass::pullback(g, g.c1())));
}

enum class Direction { forward, inverse };

/// Riemann-Roch pushforward engine: the charge of the transform with the
/// given kernel. The relative Todd factor of a pushforward is pulled back
/// from the *other* factor (the relative tangent of p1 comes from the second
/// factor and vice versa).
inline VerticalClass grr_transform(const VerticalClass& ch, const FibreSquareClass& kernel,
                                   Direction dir) {
    const Geometry& g = ch.geom();
    g.require_compatible(kernel.geom());
    FibreSquareClass tr = dir == Direction::forward
                              ? FibreSquareClass::pull_right(todd_relative(g))
                              : FibreSquareClass::pull_left(todd_relative(g));
    if (dir == Direction::forward)
        return (FibreSquareClass::pull_right(ch) * kernel * tr).push_left();
    return (FibreSquareClass::pull_left(ch) * kernel * tr).push_right();
}

enum class FMapVariant { relative, absolute };

/// Cohomological transform x -> p_1*(p_2*(x) . Z) with
/// Z = sqrt(p2*Td) . ch(P) . sqrt(p1*Td), Td relative or absolute.
inline VerticalClass f_map(const VerticalClass& x, FMapVariant variant) {
    const Geometry& g = x.geom();
    VerticalClass st =
        series_sqrt(variant == FMapVariant::relative ? todd_relative(g) : todd_X(g));
    FibreSquareClass z = FibreSquareClass::pull_right(st) * ch_poincare(g) *
                         FibreSquareClass::pull_left(st);
    return (FibreSquareClass::pull_right(x) * z).push_left();
}

} // namespace fmcy
