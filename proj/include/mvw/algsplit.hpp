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

#ifndef MVW_ALGSPLIT_HPP
#define MVW_ALGSPLIT_HPP

#include <functional>
#include <vector>

#include "invalg.hpp"

namespace mvw {

// ---------------------------------------------------------------------------
// Constructive splitting of the commutative semisimple subalgebra of matrices
// generated by given commuting semisimple elements: a product of number
// fields, realized by a primitive element and its CRT idempotents.
// ---------------------------------------------------------------------------

namespace algdetail {

inline std::vector<Rat> vec_of_mat(const QMat& m) {
    std::vector<Rat> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

}  // namespace algdetail

struct SplitFieldFactor {
    NumberFieldPtr K;   // Q[t]/(p_m)
    QPoly modulus;      // p_m
    QMat idempotent;    // primitive idempotent e_m as a matrix
    QPoly idem_poly;    // e_m in Q[z]-coordinates
};

/// A split commutative semisimple matrix algebra with a primitive element.
struct AlgebraRealization {
    std::size_t ambient_dim = 0;
    QMat z;             // primitive element; the algebra is Q[z]
    QPoly zmin;         // minimal polynomial of z, = product of the moduli
    std::vector<SplitFieldFactor> fields;

    /// Coordinates of x in the basis {z^0, ..., z^(d-1)}; throws if x is
    /// outside the algebra.
    QPoly poly_of(const QMat& x) const {
        const std::size_t d = static_cast<std::size_t>(zmin.degree());
        QMat basis(ambient_dim * ambient_dim, d, Rat(0));
        QMat cur = QMat::identity(ambient_dim, Rat(0));
        for (std::size_t k = 0; k < d; ++k) {
            basis.set_col(k, algdetail::vec_of_mat(cur));
            cur = cur * z;
        }
        auto sol = solve_linear(basis, algdetail::vec_of_mat(x));
        require(sol.consistent, "matrix is not in the split algebra");
        return QPoly(sol.particular);
    }

    /// Evaluates a polynomial at z.
    QMat mat_of_poly(const QPoly& p) const {
        QMat acc = QMat::zero(ambient_dim, ambient_dim, Rat(0));
        for (std::size_t i = p.coeffs().size(); i-- > 0;)
            acc = acc * z + p.coeff(i) * QMat::identity(ambient_dim, Rat(0));
        return acc;
    }

    /// Component of x in field m.
    NFElem component(const QMat& x, std::size_t m) const {
        return NFElem(fields[m].K, poly_of(x));
    }

    std::size_t dim() const { return static_cast<std::size_t>(zmin.degree()); }

    /// tr_{A/Q}(x) for x in the algebra: trace of multiplication on A itself.
    Rat algebra_trace(const QPoly& xpoly) const {
        const std::size_t d = dim();
        QMat mult(d, d, Rat(0));
        QPoly cur = xpoly % zmin;
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t i = 0; i < d; ++i) mult(i, j) = cur.coeff(i);
            cur = (cur * QPoly::monomial(1, Rat(1))) % zmin;
        }
        return mult.trace();
    }
};

/// Splits the unital algebra generated by pairwise commuting semisimple
/// matrices into a product of number fields with primitive idempotents.
inline AlgebraRealization split_semisimple_algebra(const std::vector<QMat>& generators) {
    require(!generators.empty(), "no generators");
    const std::size_t n = generators[0].rows();
    for (const auto& g : generators) {
        require(g.rows() == n && g.cols() == n, "generators must be square of equal size");
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            require(generators[i] * generators[j] == generators[j] * generators[i],
                    "not commutative");
    for (const auto& g : generators) {
        QPoly mp = minimal_polynomial(g);
        require(QPoly::gcd(mp, mp.derivative()).degree() == 0, "not semisimple");
    }

    // Dimension of the generated unital algebra: close the span under
    // multiplication by generators.
    std::vector<std::vector<Rat>> span_vecs;
    std::vector<QMat> span_mats;
    auto dim_with = [&](const QMat& m) {
        QMat test(n * n, span_vecs.size() + 1, Rat(0));
        for (std::size_t c = 0; c < span_vecs.size(); ++c) test.set_col(c, span_vecs[c]);
        test.set_col(span_vecs.size(), algdetail::vec_of_mat(m));
        return rank_of(test);
    };
    auto add_if_new = [&](const QMat& m) {
        if (dim_with(m) > span_vecs.size()) {
            span_vecs.push_back(algdetail::vec_of_mat(m));
            span_mats.push_back(m);
            return true;
        }
        return false;
    };
    add_if_new(QMat::identity(n, Rat(0)));
    for (const auto& g : generators) add_if_new(g);
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < span_mats.size(); ++i)
            for (const auto& g : generators)
                if (add_if_new(span_mats[i] * g)) grew = true;
    }
    const std::size_t d = span_vecs.size();

    // Primitive element: deterministic small combinations z = sum c_i g_i.
    AlgebraRealization out;
    out.ambient_dim = n;
    const std::size_t k = generators.size();
    bool found = false;
    for (long bound = 1; bound <= 8 && !found; ++bound) {
        std::vector<long> c(k, 1);
        std::function<bool(std::size_t)> enumerate = [&](std::size_t idx) -> bool {
            if (idx == k) {
                bool at_bound = false;
                for (long ci : c)
                    if (ci == bound) at_bound = true;
                if (!at_bound && bound > 1) return false;
                QMat z = QMat::zero(n, n, Rat(0));
                for (std::size_t i = 0; i < k; ++i) z = z + Rat(c[i]) * generators[i];
                QPoly mp = minimal_polynomial(z);
                if (static_cast<std::size_t>(mp.degree()) == d) {
                    out.z = z;
                    out.zmin = mp;
                    return true;
                }
                return false;
            }
            for (long v = 1; v <= bound; ++v) {
                c[idx] = v;
                if (enumerate(idx + 1)) return true;
            }
            return false;
        };
        found = enumerate(0);
    }
    check_internal(found, "primitive element search failed");

    // Factor the minimal polynomial and build CRT idempotents.
    auto fz = factor_rationals(out.zmin);
    for (const auto& [pm, mult] : fz.factors) {
        check_internal(mult == 1, "primitive element has non-squarefree minimal polynomial");
        QPoly cofactor = QPoly::divexact(out.zmin, pm);
        QPoly s, t;
        QPoly g = QPoly::xgcd(cofactor, pm, s, t);
        check_internal(g.degree() == 0 && g.coeff(0) == Rat(1), "moduli not coprime");
        QPoly idem = (s * cofactor) % out.zmin;  // = 1 mod pm, 0 mod others
        SplitFieldFactor f;
        f.K = NumberField::create(pm);
        f.modulus = pm;
        f.idempotent = out.mat_of_poly(idem);
        f.idem_poly = idem;
        out.fields.push_back(std::move(f));
    }

    // Exactness audit: idempotents are orthogonal and sum to the identity.
    QMat sum = QMat::zero(n, n, Rat(0));
    for (std::size_t i = 0; i < out.fields.size(); ++i) {
        const QMat& ei = out.fields[i].idempotent;
        check_internal(ei * ei == ei, "idempotent is not idempotent");
        for (std::size_t j = i + 1; j < out.fields.size(); ++j)
            check_internal((ei * out.fields[j].idempotent).is_zero(),
                           "idempotents are not orthogonal");
        sum = sum + ei;
    }
    check_internal(sum == QMat::identity(n, Rat(0)), "idempotents do not sum to identity");
    return out;
}

/// Grouping of the split fields into simple involutive factors.
struct InvFactorRealization {
    FactorKind kind;
    std::size_t field0;  // index into AlgebraRealization::fields
    std::size_t field1;  // SplitPair only: the swapped partner
};

/// A split algebra together with an involution grouped into simple factors.
struct InvolutiveRealization {
    AlgebraRealization alg;
    InvolutiveAlgebraPtr A;
    std::vector<InvFactorRealization> groups;
    QPoly tau_z_poly;  // coordinates of tau(z) in Q[z]

    /// tau on algebra elements given in Q[z]-coordinates.
    QPoly tau_poly(const QPoly& xpoly) const {
        QPoly acc;
        for (std::size_t i = xpoly.coeffs().size(); i-- > 0;)
            acc = (acc * tau_z_poly + QPoly::constant(xpoly.coeff(i))) % alg.zmin;
        return acc;
    }

    /// Abstract element of A from a matrix in the algebra.
    AElem aelem_of(const QMat& x) const {
        QPoly px = alg.poly_of(x);
        std::vector<std::vector<NFElem>> comps;
        for (const auto& g : groups) {
            const auto& f0 = alg.fields[g.field0];
            if (g.kind == FactorKind::SplitPair) {
                QPoly tx = tau_poly(px);
                comps.push_back({NFElem(f0.K, px % f0.modulus), NFElem(f0.K, tx % f0.modulus)});
            } else {
                comps.push_back({NFElem(f0.K, px % f0.modulus)});
            }
        }
        return AElem(A, std::move(comps));
    }

    /// Matrix realization of an abstract element of A.
    QMat mat_of(const AElem& a) const {
        const std::size_t n = alg.ambient_dim;
        QMat acc = QMat::zero(n, n, Rat(0));
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const auto& g = groups[gi];
            const auto& f0 = alg.fields[g.field0];
            QPoly q0 = (a.comp(gi, 0).coeffs() * f0.idem_poly) % alg.zmin;
            acc = acc + alg.mat_of_poly(q0);
            if (g.kind == FactorKind::SplitPair) {
                // Second coordinate b corresponds to tau(b(z) e0).
                QPoly q1 = (a.comp(gi, 1).coeffs() * f0.idem_poly) % alg.zmin;
                acc = acc + alg.mat_of_poly(tau_poly(q1));
            }
        }
        return acc;
    }
};

/// Attaches an involution (given as a map on matrices) to a split algebra,
/// grouping the field factors into simple involutive factors: fixed
/// idempotents give field factors (trivial or quadratic involution),
/// two-cycles give split pairs.
inline InvolutiveRealization attach_involution(AlgebraRealization alg,
                                               const std::function<QMat(const QMat&)>& tau) {
    InvolutiveRealization out;
    const std::size_t n = alg.ambient_dim;

    QMat tz = tau(alg.z);
    out.tau_z_poly = alg.poly_of(tz);  // throws if tau does not stabilize the algebra
    // tau must be an involution on the algebra.
    {
        QPoly twice;
        {
            // tau(tau(z)) via polynomial composition.
            QPoly acc;
            for (std::size_t i = out.tau_z_poly.coeffs().size(); i-- > 0;)
                acc = (acc * out.tau_z_poly + QPoly::constant(out.tau_z_poly.coeff(i))) % alg.zmin;
            twice = acc;
        }
        require(twice == qpoly({0, 1}) % alg.zmin, "tau is not an involution on the algebra");
    }

    // Permutation action on the primitive idempotents.
    const std::size_t r = alg.fields.size();
    std::vector<long> image(r, -1);
    for (std::size_t m = 0; m < r; ++m) {
        QMat te = tau(alg.fields[m].idempotent);
        for (std::size_t m2 = 0; m2 < r; ++m2)
            if (te == alg.fields[m2].idempotent) {
                image[m] = static_cast<long>(m2);
                break;
            }
        require(image[m] >= 0, "tau does not permute the primitive idempotents");
    }

    std::vector<SimpleFactor> simple;
    std::vector<InvFactorRealization> groups;
    std::vector<bool> used(r, false);
    for (std::size_t m = 0; m < r; ++m) {
        if (used[m]) continue;
        used[m] = true;
        std::size_t im = static_cast<std::size_t>(image[m]);
        if (im == m) {
            // Induced automorphism on K_m: image of the generator.
            QPoly tz_m = QPoly();
            {
                QPoly p = out.tau_z_poly % alg.fields[m].modulus;
                tz_m = p;
            }
            NFElem gen_image(alg.fields[m].K, tz_m);
            if (gen_image == NFElem::gen(alg.fields[m].K)) {
                simple.push_back(make_field_trivial(alg.fields[m].K));
            } else {
                simple.push_back(make_field_quadratic(alg.fields[m].K, gen_image));
            }
            groups.push_back({simple.back().kind, m, m});
        } else {
            check_internal(!used[im] && image[im] == static_cast<long>(m),
                           "idempotent permutation is not an involution");
            used[im] = true;
            // Both constituents are isomorphic via tau; represent on K_m.
            simple.push_back(make_split_pair(alg.fields[m].K));
            groups.push_back({FactorKind::SplitPair, m, im});
        }
    }

    out.alg = std::move(alg);
    out.A = InvolutiveAlgebra::create(std::move(simple));
    out.groups = std::move(groups);

    // Audit: aelem_of respects the involution.
    {
        QMat z = out.alg.z;
        AElem a = out.aelem_of(z);
        AElem b = out.aelem_of(tau(z));
        check_internal(apply_involution(a) == b, "involution bookkeeping mismatch");
        (void)n;
    }
    return out;
}

}  // namespace mvw

#endif
