#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fmcy/errors.hpp"
#include "fmcy/rational.hpp"

namespace fmcy {

/// Dense matrix of exact rationals. Immutable in spirit: every operation
/// returns a fresh matrix, so results can be shared freely across threads.
class RMatrix {
  public:
    RMatrix() : rows_(0), cols_(0) {}
    RMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RMatrix identity(std::size_t n) {
        RMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static RMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        RMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_)
                throw ShapeError("ragged row in matrix literal");
            std::size_t j = 0;
            for (long long v : row)
                m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    static RMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        RMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw ShapeError("ragged row in matrix literal");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    friend bool operator==(const RMatrix& a, const RMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend RMatrix operator+(const RMatrix& a, const RMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeError("matrix sum shape mismatch");
        RMatrix r = a;
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] += b.entries_[k];
        return r;
    }
    friend RMatrix operator-(const RMatrix& a, const RMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeError("matrix difference shape mismatch");
        RMatrix r = a;
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] -= b.entries_[k];
        return r;
    }
    friend RMatrix operator*(const Rational& c, const RMatrix& a) {
        RMatrix r = a;
        for (auto& e : r.entries_)
            e *= c;
        return r;
    }
    friend RMatrix operator*(const RMatrix& a, const RMatrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                             std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                             std::to_string(b.cols_));
        RMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend std::vector<Rational> operator*(const RMatrix& a, const std::vector<Rational>& v) {
        if (a.cols_ != v.size())
            throw ShapeError("matrix-vector shape mismatch");
        std::vector<Rational> r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                r[i] += a.at(i, j) * v[j];
        return r;
    }

    RMatrix transpose() const {
        RMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    bool is_square() const { return rows_ == cols_; }

    Rational determinant() const;
    RMatrix inverse() const;
    RMatrix pow(long long k) const;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j)
                s += (j ? " " : "") + at(i, j).str();
            s += "]\n";
        }
        return s;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

inline Rational RMatrix::determinant() const {
    if (!is_square())
        throw ShapeError("determinant of a non-square matrix");
    RMatrix a = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && a.at(p, c).is_zero())
            ++p;
        if (p == rows_)
            return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(a.at(p, j), a.at(c, j));
            det = -det;
        }
        det *= a.at(c, c);
        Rational inv = a.at(c, c).inverse();
        for (std::size_t j = c; j < cols_; ++j)
            a.at(c, j) *= inv;
        for (std::size_t r = c + 1; r < rows_; ++r) {
            Rational f = a.at(r, c);
            if (f.is_zero())
                continue;
            for (std::size_t j = c; j < cols_; ++j)
                a.at(r, j) -= f * a.at(c, j);
        }
    }
    return det;
}

/// Solves a x = b exactly by Gauss-Jordan elimination on the augmented matrix.
/// Accepts rectangular a as long as the solution is unique; an inconsistent or
/// underdetermined system raises SingularityError.
inline RMatrix linear_solve(const RMatrix& a, const RMatrix& b) {
    if (a.rows() != b.rows())
        throw ShapeError("linear_solve: row counts differ");
    const std::size_t m = a.rows(), n = a.cols(), w = b.cols();
    RMatrix aug(m, n + w);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < w; ++j)
            aug.at(i, n + j) = b.at(i, j);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && aug.at(p, c).is_zero())
            ++p;
        if (p == m)
            throw SingularityError("singular system: no pivot in column " + std::to_string(c));
        if (p != rank)
            for (std::size_t j = 0; j < n + w; ++j)
                std::swap(aug.at(p, j), aug.at(rank, j));
        Rational inv = aug.at(rank, c).inverse();
        for (std::size_t j = c; j < n + w; ++j)
            aug.at(rank, j) *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank)
                continue;
            Rational f = aug.at(r, c);
            if (f.is_zero())
                continue;
            for (std::size_t j = c; j < n + w; ++j)
                aug.at(r, j) -= f * aug.at(rank, j);
        }
        ++rank;
    }
    if (rank < n)
        throw SingularityError("singular system: rank " + std::to_string(rank) + " < " +
                               std::to_string(n) + " unknowns");
    for (std::size_t r = rank; r < m; ++r)
        for (std::size_t j = 0; j < w; ++j)
            if (!aug.at(r, n + j).is_zero())
                throw SingularityError("inconsistent system: zero row " + std::to_string(r) +
                                       " with nonzero right-hand side");
    RMatrix x(n, w);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j)
            x.at(i, j) = aug.at(i, n + j);
    return x;
}

inline RMatrix RMatrix::inverse() const {
    if (!is_square())
        throw ShapeError("inverse of a non-square matrix");
    return linear_solve(*this, identity(rows_));
}

inline RMatrix RMatrix::pow(long long k) const {
    if (!is_square())
        throw ShapeError("power of a non-square matrix");
    RMatrix base = k < 0 ? inverse() : *this;
    if (k < 0)
        k = -k;
    RMatrix r = identity(rows_);
    while (k > 0) {
        if (k & 1)
            r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

} // namespace fmcy
