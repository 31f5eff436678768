/*
   Copyright 2026 The mvwlib Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MVW_POLY_HPP
#define MVW_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "common.hpp"

namespace mvw {

/// Dense univariate polynomial over an exact field K, coefficients stored
/// lowest degree first.  The zero polynomial has an empty coefficient list.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<K> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<K> cs) : c_(std::move(cs)) { trim(); }

    static Poly constant(const K& k) { return Poly(std::vector<K>{k}); }
    /// t^n with unit coefficient `one`.
    static Poly monomial(std::size_t n, const K& one) {
        std::vector<K> cs(n + 1, one - one);
        cs[n] = one;
        return Poly(std::move(cs));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(std::size_t i) const {
        if (i < c_.size()) return c_[i];
        if (!c_.empty()) return c_[0] - c_[0];
        return K{};  // meaningful for coefficient types with a default zero
    }
    const K& leading() const {
        check_internal(!c_.empty(), "leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), a.zero_or(b));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, a.c_[0] - a.c_[0]);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const K& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }

    /// Euclidean division; K must be a field.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        require(!b.is_zero(), "polynomial division by zero");
        q = Poly();
        r = a;
        const K& lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            K f = r.leading() / lb;
            std::vector<K> qc(shift + 1, f - f);
            qc[shift] = f;
            Poly t(std::move(qc));
            q = q + t;
            r = r - t * b;
        }
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        return r;
    }

    /// Exact division; throws if the remainder is nonzero.
    static Poly divexact(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        check_internal(r.is_zero(), "inexact polynomial division");
        return q;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, c_[0] - c_[0]);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K k = c_[0] - c_[0];
            for (std::size_t j = 0; j < i; ++j) k = k + c_[i];  // i * c_[i] without an int->K cast
            r[i - 1] = k;
        }
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        if (c_.empty()) return zero_();
        K acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly monic() const {
        require(!is_zero(), "monic normalization of zero polynomial");
        const K& l = leading();
        Poly r = *this;
        for (auto& x : r.c_) x = x / l;
        return r;
    }

    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    /// Extended gcd: g = gcd(a,b) monic with g = s*a + t*b.
    static Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
        Poly r0 = a, r1 = b;
        Poly s0 = one_like(a, b), s1;
        Poly t0, t1 = one_like(a, b);
        while (!r1.is_zero()) {
            Poly q, r;
            divmod(r0, r1, q, r);
            Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = std::move(r1); r1 = std::move(r);
            s0 = std::move(s1); s1 = std::move(s2);
            t0 = std::move(t1); t1 = std::move(t2);
        }
        if (r0.is_zero()) { s = s0; t = t0; return r0; }
        K l = r0.leading();
        K inv = (l / l) / l;
        s = inv * s0;
        t = inv * t0;
        return inv * r0;
    }

private:
    std::vector<K> c_;

    void trim() {
        while (!c_.empty() && c_.back() == c_.back() - c_.back()) c_.pop_back();
    }

    K zero_() const {
        check_internal(!c_.empty(), "no exemplar for zero coefficient");
        return c_[0] - c_[0];
    }
    K zero_or(const Poly& other) const {
        if (!c_.empty()) return c_[0] - c_[0];
        check_internal(!other.c_.empty(), "no exemplar coefficient");
        return other.c_[0] - other.c_[0];
    }
    static Poly one_like(const Poly& a, const Poly& b) {
        const Poly& src = a.is_zero() ? b : a;
        check_internal(!src.is_zero(), "xgcd of two zero polynomials");
        K one = src.leading() / src.leading();
        return constant(one);
    }
};

using QPoly = Poly<Rat>;

inline QPoly qpoly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return QPoly(std::move(v));
}

/// p / gcd(p, p'): monic, squarefree, same roots as p.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
    require(!p.is_zero(), "zero input");
    if (p.degree() == 0) return p.monic();
    Poly<K> g = Poly<K>::gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return Poly<K>::divexact(p, g).monic();
}

}  // namespace mvw

#endif
