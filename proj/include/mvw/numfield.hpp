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

#ifndef MVW_NUMFIELD_HPP
#define MVW_NUMFIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "factor.hpp"
#include "matrix.hpp"

namespace mvw {

/// Absolute number field Q[t]/(p) for p monic irreducible.  Q itself is the
/// degree-one field with modulus t.
class NumberField {
public:
    static std::shared_ptr<const NumberField> create(const QPoly& modulus) {
        require(!modulus.is_zero() && modulus.leading() == Rat(1), "modulus must be monic");
        require(modulus.degree() >= 1, "modulus must have positive degree");
        if (modulus.degree() > 1)
            require(is_irreducible(modulus), "modulus is reducible over Q");
        return std::shared_ptr<const NumberField>(new NumberField(modulus));
    }

    static std::shared_ptr<const NumberField> rationals() {
        static std::shared_ptr<const NumberField> q =
            std::shared_ptr<const NumberField>(new NumberField(qpoly({0, 1})));
        return q;
    }

    const QPoly& modulus() const { return modulus_; }
    std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
    bool is_rationals() const { return degree() == 1; }

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.modulus_ == b.modulus_;
    }

private:
    explicit NumberField(QPoly modulus) : modulus_(std::move(modulus)) {}
    QPoly modulus_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field, reduced modulo the field modulus.
class NFElem {
public:
    NFElem() = default;
    NFElem(NumberFieldPtr F, QPoly coeffs) : F_(std::move(F)) {
        check_internal(static_cast<bool>(F_), "element of null field");
        c_ = std::move(coeffs) % F_->modulus();
    }
    NFElem(NumberFieldPtr F, const Rat& r)
        : NFElem(std::move(F), QPoly::constant(r)) {}

    static NFElem zero(const NumberFieldPtr& F) { return NFElem(F, QPoly()); }
    static NFElem one(const NumberFieldPtr& F) { return NFElem(F, Rat(1)); }
    /// The class of t.
    static NFElem gen(const NumberFieldPtr& F) {
        return NFElem(F, QPoly::monomial(1, Rat(1)));
    }

    const NumberFieldPtr& field() const { return F_; }
    const QPoly& coeffs() const { return c_; }
    bool is_zero() const { return c_.is_zero(); }
    bool is_rational() const { return c_.degree() <= 0; }
    Rat rational_part() const {
        require(is_rational(), "element is not rational");
        return c_.is_zero() ? Rat(0) : c_.coeff(0);
    }

    friend bool operator==(const NFElem& a, const NFElem& b) {
        check_field(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    friend NFElem operator+(const NFElem& a, const NFElem& b) {
        check_field(a, b);
        return NFElem(a.F_, a.c_ + b.c_);
    }
    friend NFElem operator-(const NFElem& a, const NFElem& b) {
        check_field(a, b);
        return NFElem(a.F_, a.c_ - b.c_);
    }
    NFElem operator-() const { return NFElem(F_, -c_); }
    friend NFElem operator*(const NFElem& a, const NFElem& b) {
        check_field(a, b);
        return NFElem(a.F_, a.c_ * b.c_);
    }
    NFElem inverse() const {
        require(!is_zero(), "inverse of zero");
        QPoly s, t;
        QPoly g = QPoly::xgcd(c_, F_->modulus(), s, t);
        check_internal(g.degree() == 0, "modulus not coprime to nonzero element");
        Rat lead = g.coeff(0);
        return NFElem(F_, Rat(1) / lead * s);
    }
    friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

    /// Matrix of multiplication by this element in the power basis.
    QMat mult_matrix() const {
        const std::size_t d = F_->degree();
        QMat m(d, d, Rat(0));
        QPoly cur = c_;
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < d; ++i) m(i, j) = cur.coeff(i);
            cur = (cur * QPoly::monomial(1, Rat(1))) % F_->modulus();
        }
        return m;
    }

    /// Field trace down to Q.
    Rat trace() const {
        if (is_zero()) return Rat(0);
        return mult_matrix().trace();
    }

    /// Field norm down to Q.
    Rat norm() const {
        if (is_zero()) return Rat(0);
        return det(mult_matrix());
    }

    /// Image under the automorphism sending the generator to `gen_image`.
    NFElem apply_automorphism(const NFElem& gen_image) const {
        check_field(*this, gen_image);
        NFElem acc = NFElem::zero(F_);
        for (std::size_t i = c_.coeffs().size(); i-- > 0;)
            acc = acc * gen_image + NFElem(F_, c_.coeff(i));
        return acc;
    }

private:
    NumberFieldPtr F_;
    QPoly c_;

    static void check_field(const NFElem& a, const NFElem& b) {
        check_internal(a.F_ && b.F_, "null field element");
        require(a.F_ == b.F_ || *a.F_ == *b.F_, "number field mismatch");
    }
};

inline NFElem zero_like(const NFElem& x) { return NFElem::zero(x.field()); }
inline NFElem one_like(const NFElem& x) { return NFElem::one(x.field()); }

}  // namespace mvw

#endif
