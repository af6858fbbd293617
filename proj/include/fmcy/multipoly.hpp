#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fmcy/errors.hpp"
#include "fmcy/rational.hpp"

namespace fmcy {

/// Exact polynomial in the two Kahler parameters t1, t2. The variable set is
/// fixed at construction of the ring; zero coefficients are never stored.
class MultiPoly {
  public:
    using Exponents = std::pair<int, int>;

    MultiPoly() = default;

    static MultiPoly constant(const Rational& c) {
        MultiPoly p;
        p.add_term(0, 0, c);
        return p;
    }
    static MultiPoly var(const std::string& name) {
        MultiPoly p;
        int i = var_index(name);
        p.add_term(i == 0 ? 1 : 0, i == 1 ? 1 : 0, Rational(1));
        return p;
    }
    /// c * t1^e1 * t2^e2
    static MultiPoly monomial(int e1, int e2, const Rational& c) {
        MultiPoly p;
        p.add_term(e1, e2, c);
        return p;
    }

    static int var_index(const std::string& name) {
        if (name == "t1")
            return 0;
        if (name == "t2")
            return 1;
        throw NameError("unknown variable: " + name);
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational coeff(int e1, int e2) const {
        auto it = terms_.find({e1, e2});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e.first + e.second);
        return d;
    }

    /// Sum of terms with total degree exactly d.
    MultiPoly homogeneous_part(int d) const {
        MultiPoly p;
        for (const auto& [e, c] : terms_)
            if (e.first + e.second == d)
                p.add_term(e.first, e.second, c);
        return p;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e.first, e.second, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e.first, e.second, -c);
        return r;
    }
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) {
        MultiPoly r;
        if (c.is_zero())
            return r;
        for (const auto& [e, k] : a.terms_)
            r.add_term(e.first, e.second, c * k);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Substitutes var := var + delta, expanded exactly.
    MultiPoly shift(const std::string& name, const Rational& delta) const {
        int v = var_index(name);
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            int n = v == 0 ? e.first : e.second;
            // binomial expansion of (t + delta)^n
            Rational binom = 1, dpow = 1;
            for (int k = 0; k <= n; ++k) {
                Rational coeff = c * binom * dpow;
                if (v == 0)
                    r.add_term(e.first - k, e.second, coeff);
                else
                    r.add_term(e.first, e.second - k, coeff);
                binom *= Rational(n - k, k + 1);
                dpow *= delta;
            }
        }
        return r;
    }

    MultiPoly derivative(const std::string& name) const {
        int v = var_index(name);
        MultiPoly r;
        for (const auto& [e, c] : terms_) {
            if (v == 0 && e.first > 0)
                r.add_term(e.first - 1, e.second, Rational(e.first) * c);
            if (v == 1 && e.second > 0)
                r.add_term(e.first, e.second - 1, Rational(e.second) * c);
        }
        return r;
    }

    Rational eval(const Rational& t1, const Rational& t2) const {
        Rational sum = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (int k = 0; k < e.first; ++k)
                term *= t1;
            for (int k = 0; k < e.second; ++k)
                term *= t2;
            sum += term;
        }
        return sum;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!s.empty())
                s += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0)
                s += "-";
            Rational ac = c.sign() < 0 ? -c : c;
            std::string mono;
            if (e.first)
                mono += "t1" + (e.first > 1 ? "^" + std::to_string(e.first) : "");
            if (e.second)
                mono += std::string(mono.empty() ? "" : "*") + "t2" +
                        (e.second > 1 ? "^" + std::to_string(e.second) : "");
            if (mono.empty())
                s += ac.str();
            else
                s += (ac == Rational(1) ? mono : ac.str() + "*" + mono);
        }
        return s;
    }

  private:
    void add_term(int e1, int e2, const Rational& c) {
        if (c.is_zero())
            return;
        auto key = Exponents{e1, e2};
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    std::map<Exponents, Rational> terms_;
};

} // namespace fmcy
