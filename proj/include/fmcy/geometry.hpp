#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fmcy/errors.hpp"
#include "fmcy/matrix.hpp"
#include "fmcy/rational.hpp"

namespace fmcy {

/// Element of H^2(B) in the chosen basis e_1..e_k.
struct BaseClass {
    std::vector<Rational> coeff;

    BaseClass() = default;
    explicit BaseClass(std::size_t k) : coeff(k) {}
    BaseClass(std::initializer_list<Rational> c) : coeff(c) {}

    std::size_t size() const { return coeff.size(); }
    bool is_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero())
                return false;
        return true;
    }

    friend BaseClass operator+(const BaseClass& a, const BaseClass& b) {
        if (a.size() != b.size())
            throw GeometryError("base classes over different bases");
        BaseClass r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r.coeff[i] += b.coeff[i];
        return r;
    }
    friend BaseClass operator-(const BaseClass& a, const BaseClass& b) {
        if (a.size() != b.size())
            throw GeometryError("base classes over different bases");
        BaseClass r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r.coeff[i] -= b.coeff[i];
        return r;
    }
    friend BaseClass operator*(const Rational& c, const BaseClass& a) {
        BaseClass r = a;
        for (auto& x : r.coeff)
            x *= c;
        return r;
    }
    friend bool operator==(const BaseClass&, const BaseClass&) = default;
};

/// Intersection data of the base surface B: a basis of H^2(B) with its
/// pairing matrix (in units of the point class), the coefficients of c1(B),
/// and the number c2(B).
struct BaseSurfaceData {
    std::vector<std::string> basis_labels;
    RMatrix intersection_form;
    BaseClass c1;
    Rational c2;

    std::size_t rank() const { return basis_labels.size(); }

    void validate() const {
        std::size_t k = rank();
        if (intersection_form.rows() != k || intersection_form.cols() != k)
            throw GeometryError("intersection form has wrong shape");
        if (c1.size() != k)
            throw GeometryError("c1 has wrong length");
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (intersection_form(i, j) != intersection_form(j, i))
                    throw GeometryError("intersection form is not symmetric");
    }

    Rational pair(const BaseClass& a, const BaseClass& b) const {
        if (a.size() != rank() || b.size() != rank())
            throw GeometryError("pairing with class over a different base");
        Rational sum = 0;
        for (std::size_t i = 0; i < rank(); ++i) {
            if (a.coeff[i].is_zero())
                continue;
            for (std::size_t j = 0; j < rank(); ++j)
                sum += a.coeff[i] * intersection_form(i, j) * b.coeff[j];
        }
        return sum;
    }

    friend bool operator==(const BaseSurfaceData&, const BaseSurfaceData&) = default;

    /// B = P^2: one generator (the hyperplane line), c1 = 3l, c2 = 3.
    static BaseSurfaceData projective_plane() {
        BaseSurfaceData b;
        b.basis_labels = {"l"};
        b.intersection_form = RMatrix::from_rows({{1}});
        b.c1 = BaseClass{Rational(3)};
        b.c2 = 3;
        return b;
    }
    /// B = P^1 x P^1: two rulings, c1 = 2f1 + 2f2, c2 = 4.
    static BaseSurfaceData quadric() {
        BaseSurfaceData b;
        b.basis_labels = {"f1", "f2"};
        b.intersection_form = RMatrix::from_rows({{0, 1}, {1, 0}});
        b.c1 = BaseClass{Rational(2), Rational(2)};
        b.c2 = 4;
        return b;
    }
    /// P^2 blown up in a point: basis (l, e), c1 = 3l - e, c2 = 4.
    static BaseSurfaceData blown_up_plane() {
        BaseSurfaceData b;
        b.basis_labels = {"l", "e"};
        b.intersection_form = RMatrix::from_rows({{1, 0}, {0, -1}});
        b.c1 = BaseClass{Rational(3), Rational(-1)};
        b.c2 = 4;
        return b;
    }
};

/// Shared handle to the base-surface data of an elliptic fibration with
/// section. Compatibility of classes is checked structurally, so two
/// independently built copies of the same surface interoperate.
class Geometry {
  public:
    Geometry() = default;
    explicit Geometry(BaseSurfaceData data)
        : data_(std::make_shared<const BaseSurfaceData>(std::move(data))) {
        data_->validate();
    }

    static Geometry projective_plane() { return Geometry(BaseSurfaceData::projective_plane()); }

    const BaseSurfaceData& base() const { return *data_; }
    std::size_t rank() const { return data_->rank(); }
    const BaseClass& c1() const { return data_->c1; }
    const Rational& c2() const { return data_->c2; }
    Rational pair(const BaseClass& a, const BaseClass& b) const { return data_->pair(a, b); }
    Rational c1_sq() const { return data_->pair(data_->c1, data_->c1); }
    BaseClass zero_class() const { return BaseClass(rank()); }

    bool compatible(const Geometry& o) const {
        return data_ == o.data_ || (data_ && o.data_ && *data_ == *o.data_);
    }
    void require_compatible(const Geometry& o) const {
        if (!compatible(o))
            throw GeometryError("operands live over different base surfaces");
    }
    friend bool operator==(const Geometry& a, const Geometry& b) { return a.compatible(b); }

  private:
    std::shared_ptr<const BaseSurfaceData> data_;
};

/// Full base cohomology value (H^0 + H^2 + H^4)(B); the image of the
/// fibration pushforward and the coefficient ring of the fibre square.
struct BaseTotal {
    Rational h0;
    BaseClass h2;
    Rational h4;

    BaseTotal() = default;
    explicit BaseTotal(std::size_t k) : h2(k) {}
    BaseTotal(Rational h0_, BaseClass h2_, Rational h4_)
        : h0(std::move(h0_)), h2(std::move(h2_)), h4(std::move(h4_)) {}

    bool is_zero() const { return h0.is_zero() && h2.is_zero() && h4.is_zero(); }

    friend BaseTotal operator+(const BaseTotal& a, const BaseTotal& b) {
        BaseTotal r;
        r.h0 = a.h0 + b.h0;
        r.h2 = a.h2 + b.h2;
        r.h4 = a.h4 + b.h4;
        return r;
    }
    friend BaseTotal operator*(const Rational& c, const BaseTotal& a) {
        BaseTotal r;
        r.h0 = c * a.h0;
        r.h2 = c * a.h2;
        r.h4 = c * a.h4;
        return r;
    }
    friend bool operator==(const BaseTotal&, const BaseTotal&) = default;
};

/// Product in H^*(B), truncated above the top degree of a surface.
inline BaseTotal mul(const BaseTotal& a, const BaseTotal& b, const Geometry& g) {
    BaseTotal r(g.rank());
    r.h0 = a.h0 * b.h0;
    r.h2 = a.h0 * b.h2 + b.h0 * a.h2;
    r.h4 = a.h0 * b.h4 + b.h0 * a.h4 + g.pair(a.h2, b.h2);
    return r;
}

} // namespace fmcy
