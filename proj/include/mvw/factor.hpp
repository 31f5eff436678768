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

#ifndef MVW_FACTOR_HPP
#define MVW_FACTOR_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace mvw {

// ---------------------------------------------------------------------------
// Factorization of univariate polynomials over Q.
//
// Classic Zassenhaus pipeline: reduce to a monic integer polynomial, factor
// modulo a deterministically chosen small prime (Berlekamp), Hensel-lift the
// modular factors above the Landau-Mignotte coefficient bound, and recombine
// by subset search.  Degrees here stay small, so subset recombination is
// never a bottleneck.
// ---------------------------------------------------------------------------

namespace detail {

// Integer polynomials, lowest degree first.
using ZPoly = std::vector<Int>;

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Polynomials over GF(p), p a small prime.
struct ModP {
    std::int64_t p;

    std::int64_t norm(std::int64_t a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
    std::int64_t inv(std::int64_t a) const {
        std::int64_t t = 0, nt = 1, r = p, nr = norm(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        check_internal(r == 1, "mod-p inverse of non-unit");
        return norm(t);
    }

    using P = std::vector<std::int64_t>;

    void trim(P& a) const {
        while (!a.empty() && a.back() % p == 0) a.pop_back();
    }
    P reduce(const ZPoly& f) const {
        P r(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            r[i] = norm(mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p)));
        trim(r);
        return r;
    }
    P mulp(const P& a, const P& b) const {
        if (a.empty() || b.empty()) return {};
        P r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        trim(r);
        return r;
    }
    P subp(P a, const P& b) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = norm(a[i] - b[i]);
        trim(a);
        return a;
    }
    void divmodp(const P& a, const P& b, P& q, P& r) const {
        q.clear();
        r = a;
        trim(r);
        std::int64_t li = inv(b.back());
        if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
        while (r.size() >= b.size() && !r.empty()) {
            std::size_t shift = r.size() - b.size();
            std::int64_t f = mul(r.back(), li);
            q[shift] = f;
            for (std::size_t i = 0; i < b.size(); ++i)
                r[shift + i] = norm(r[shift + i] - f * b[i] % p);
            trim(r);
        }
    }
    P modp(const P& a, const P& b) const {
        P q, r;
        divmodp(a, b, q, r);
        return r;
    }
    P gcdp(P a, P b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            P r = modp(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.empty()) {
            std::int64_t li = inv(a.back());
            for (auto& c : a) c = mul(norm(c), li);
        }
        return a;
    }
    P derivp(const P& a) const {
        if (a.size() <= 1) return {};
        P r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = (a[i] * static_cast<std::int64_t>(i % p)) % p;
        trim(r);
        return r;
    }
    P powmod(P base, Int e, const P& m) const {
        P r{1};
        base = modp(base, m);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = modp(mulp(r, base), m);
            base = modp(mulp(base, base), m);
            e >>= 1;
        }
        return r;
    }
};

/// Berlekamp factorization of a squarefree monic polynomial over GF(p).
/// Splitting gcds run over all c in GF(p); p is small by construction.
inline std::vector<ModP::P> berlekamp(const ModP& F, const ModP::P& f) {
    const std::size_t n = f.size() - 1;
    if (n <= 1) return {f};

    // Frobenius matrix: columns are x^(p*i) mod f.
    std::vector<std::vector<std::int64_t>> Q(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        ModP::P xi = F.powmod(ModP::P{0, 1}, Int(F.p) * static_cast<long>(i), f);
        for (std::size_t r = 0; r < n; ++r) Q[r][i] = r < xi.size() ? xi[r] : 0;
    }
    for (std::size_t i = 0; i < n; ++i) Q[i][i] = F.norm(Q[i][i] - 1);

    // Nullspace of Q - I over GF(p).
    std::vector<std::vector<std::int64_t>> M = Q;
    std::vector<long> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = rank;
        while (sel < n && M[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(M[sel], M[rank]);
        std::int64_t li = F.inv(M[rank][col]);
        for (std::size_t j = 0; j < n; ++j) M[rank][j] = F.mul(F.norm(M[rank][j]), li);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || M[r][col] == 0) continue;
            std::int64_t fmul = M[r][col];
            for (std::size_t j = 0; j < n; ++j) M[r][j] = F.norm(M[r][j] - fmul * M[rank][j]);
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    std::vector<ModP::P> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        ModP::P v(n, 0);
        v[col] = 1;
        for (std::size_t c2 = 0; c2 < n; ++c2)
            if (pivot_of_col[c2] >= 0) v[c2] = F.norm(-M[static_cast<std::size_t>(pivot_of_col[c2])][col]);
        F.trim(v);
        basis.push_back(v);
    }

    std::vector<ModP::P> factors{f};
    const std::size_t target = basis.size();  // number of irreducible factors
    for (const auto& v : basis) {
        if (factors.size() >= target) break;
        std::vector<ModP::P> next;
        for (const auto& g : factors) {
            if (g.size() - 1 <= 1) {
                next.push_back(g);
                continue;
            }
            ModP::P rem = g;
            for (std::int64_t c = 0; c < F.p && rem.size() > 1; ++c) {
                ModP::P vc = v;
                if (vc.empty()) vc.assign(1, 0);
                vc.resize(std::max<std::size_t>(vc.size(), 1));
                vc[0] = F.norm(vc[0] - c);
                F.trim(vc);
                ModP::P d = vc.empty() ? ModP::P{} : F.gcdp(rem, vc);
                if (d.size() > 1 && d.size() < rem.size()) {
                    next.push_back(d);
                    ModP::P q, r;
                    F.divmodp(rem, d, q, r);
                    rem = q;
                }
            }
            if (rem.size() > 1) next.push_back(rem);
            else if (rem.size() == 1) { /* unit, drop */ }
        }
        factors = std::move(next);
    }
    return factors;
}

inline Int centered(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

/// One quadratic Hensel step: given f = g*h (mod m) with s*g + t*h = 1
/// (mod m), all monic-ish and coprime, produce the same data mod m^2.
struct HenselPair {
    ZPoly g, h, s, t;
};

inline ZPoly zmod(const ZPoly& a, const Int& m) {
    ZPoly r = a;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(r);
    return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

/// Division with remainder mod m by a monic divisor.
inline void zdivmod_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    r = zmod(a, m);
    q.clear();
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Int(0));
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t shift = r.size() - b.size();
        Int f = r.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            r[shift + i] -= f * b[i];
            r[shift + i] %= m;
        }
        ztrim(r);
        r = zmod(r, m);
    }
    q = zmod(q, m);
}

inline void hensel_step(HenselPair& P, const ZPoly& f, const Int& m) {
    // Lift f = g*h from mod m to mod m^2.  (von zur Gathen & Gerhard, 15.10)
    Int m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(P.g, P.h)), m2);
    ZPoly q, r;
    zdivmod_monic(zmod(zmul(P.s, e), m2), P.h, m2, q, r);
    ZPoly g1 = zmod(zadd(zadd(P.g, zmod(zmul(P.t, e), m2)), zmul(q, P.g)), m2);
    ZPoly h1 = zmod(zadd(P.h, r), m2);

    ZPoly b = zmod(zsub(zadd(zmul(P.s, g1), zmul(P.t, h1)), ZPoly{Int(1)}), m2);
    ZPoly c, d;
    zdivmod_monic(zmod(zmul(P.s, b), m2), h1, m2, c, d);
    ZPoly s1 = zmod(zsub(P.s, d), m2);
    ZPoly t1 = zmod(zsub(zsub(P.t, zmod(zmul(P.t, b), m2)), zmul(c, g1)), m2);
    P = {g1, h1, s1, t1};
}

/// Lift a full modular factorization of monic f to modulus >= bound.
/// Binary-splitting tree of two-factor lifts.
inline std::vector<ZPoly> hensel_lift_tree(const ModP& F, const ZPoly& f,
                                           std::vector<ModP::P> mod_factors, const Int& bound,
                                           Int& modulus_out) {
    // Merge modular factors pairwise into a product tree; lift each split.
    struct Node {
        ZPoly poly;                 // product over Z, coefficients mod current modulus
        std::vector<ModP::P> leaves;
    };

    std::function<std::vector<ZPoly>(const ZPoly&, std::vector<ModP::P>, Int)> lift =
        [&](const ZPoly& target, std::vector<ModP::P> leaves, Int m) -> std::vector<ZPoly> {
        if (leaves.size() == 1) return {zmod(target, m)};
        std::size_t half = leaves.size() / 2;
        std::vector<ModP::P> left(leaves.begin(), leaves.begin() + static_cast<long>(half));
        std::vector<ModP::P> right(leaves.begin() + static_cast<long>(half), leaves.end());
        ModP::P gl{1}, hr{1};
        for (const auto& x : left) gl = F.mulp(gl, x);
        for (const auto& x : right) hr = F.mulp(hr, x);
        // Bezout data mod p.
        ModP::P s, t, g0 = gl, h0 = hr;
        {
            // extended gcd over GF(p)
            ModP::P r0 = g0, r1 = h0, s0{1}, s1{}, t0{}, t1{1};
            while (!r1.empty()) {
                ModP::P q, r;
                F.divmodp(r0, r1, q, r);
                ModP::P s2 = F.subp(s0, F.mulp(q, s1));
                ModP::P t2 = F.subp(t0, F.mulp(q, t1));
                r0 = r1; r1 = r;
                s0 = s1; s1 = s2;
                t0 = t1; t1 = t2;
            }
            check_internal(r0.size() == 1, "modular factors not coprime");
            std::int64_t li = F.inv(r0[0]);
            for (auto& c : s0) c = F.mul(c, li);
            for (auto& c : t0) c = F.mul(c, li);
            s = s0;
            t = t0;
        }
        auto to_z = [](const ModP::P& a) {
            ZPoly r(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
            return r;
        };
        HenselPair hp{to_z(g0), to_z(hr), to_z(s), to_z(t)};
        Int mcur(F.p);
        while (mcur < m) {
            hensel_step(hp, target, mcur);
            mcur *= mcur;
        }
        // Center and recurse.
        auto res_l = lift(hp.g, left, m);
        auto res_r = lift(hp.h, right, m);
        res_l.insert(res_l.end(), res_r.begin(), res_r.end());
        return res_l;
    };

    Int m(F.p);
    while (m < bound) m *= m;
    modulus_out = m;
    return lift(zmod(f, m), std::move(mod_factors), m);
}

}  // namespace detail

/// Factors a nonzero rational polynomial into monic irreducible factors with
/// multiplicities.  The product of factors, times the returned content,
/// reproduces the input exactly.
struct QFactorization {
    Rat content;  // leading coefficient of the input
    std::vector<std::pair<QPoly, int>> factors;
};

namespace detail {

/// Factor a squarefree monic integer polynomial (deg >= 1).
inline std::vector<ZPoly> factor_squarefree_monic_z(const ZPoly& f) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return {f};

    // Deterministic prime: smallest p >= 3 keeping f squarefree mod p.
    std::int64_t p = 3;
    for (;;) {
        ModP F{p};
        ModP::P fp = F.reduce(f);
        if (fp.size() == f.size()) {
            ModP::P g = F.gcdp(fp, F.derivp(fp));
            if (g.size() == 1) break;
        }
        do { ++p; } while ([&] {
            for (std::int64_t d = 2; d * d <= p; ++d)
                if (p % d == 0) return true;
            return false;
        }());
    }
    ModP F{p};
    ModP::P fp = F.reduce(f);
    std::int64_t li = F.inv(fp.back());
    for (auto& c : fp) c = F.mul(c, li);

    std::vector<ModP::P> mod_factors = berlekamp(F, fp);
    if (mod_factors.size() == 1) return {f};

    // Landau-Mignotte bound for coefficients of monic factors.
    Rat norm2sq(0);
    for (const auto& c : f) norm2sq += Rat(c) * Rat(c);
    Int norm2 = norm2sq.get_num() / norm2sq.get_den();
    mpz_sqrt(norm2.get_mpz_t(), norm2.get_mpz_t());
    norm2 += 1;
    Int bound = (norm2 + 1);
    for (std::size_t i = 0; i < n; ++i) bound *= 2;
    bound = 2 * bound + 1;

    Int modulus;
    std::vector<ZPoly> lifted = hensel_lift_tree(F, f, mod_factors, bound, modulus);

    // Zassenhaus subset recombination.
    std::vector<ZPoly> result;
    std::vector<int> alive(lifted.size(), 1);
    std::size_t alive_count = lifted.size();
    ZPoly remaining = f;

    auto divides_exactly = [&](const ZPoly& cand, ZPoly& quotient) -> bool {
        std::vector<Rat> cv(cand.size()), rv(remaining.size());
        for (std::size_t i = 0; i < cand.size(); ++i) cv[i] = Rat(cand[i]);
        for (std::size_t i = 0; i < remaining.size(); ++i) rv[i] = Rat(remaining[i]);
        QPoly q, r;
        QPoly::divmod(QPoly(std::move(rv)), QPoly(std::move(cv)), q, r);
        if (!r.is_zero()) return false;
        quotient.assign(q.coeffs().size(), Int(0));
        for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
            check_internal(q.coeffs()[i].get_den() == 1, "non-integer cofactor in recombination");
            quotient[i] = q.coeffs()[i].get_num();
        }
        return true;
    };

    std::function<bool(std::vector<std::size_t>&, std::size_t, std::size_t)> try_subsets =
        [&](std::vector<std::size_t>& current, std::size_t start, std::size_t k) -> bool {
        if (current.size() == k) {
            ZPoly cand{Int(1)};
            for (std::size_t idx : current) cand = zmul(cand, lifted[idx]);
            cand = zmod(cand, modulus);
            for (auto& c : cand) c = centered(c, modulus);
            ztrim(cand);
            ZPoly quotient;
            if (!divides_exactly(cand, quotient)) return false;
            result.push_back(cand);
            for (std::size_t idx : current) alive[idx] = 0;
            alive_count -= current.size();
            remaining = std::move(quotient);
            return true;
        }
        for (std::size_t i = start; i < lifted.size(); ++i) {
            if (!alive[i]) continue;
            current.push_back(i);
            if (try_subsets(current, i + 1, k)) return true;
            current.pop_back();
        }
        return false;
    };

    for (std::size_t k = 1; alive_count > 0 && 2 * k <= alive_count; ++k) {
        for (;;) {
            if (alive_count == 0 || 2 * k > alive_count) break;
            std::vector<std::size_t> cur;
            if (!try_subsets(cur, 0, k)) break;
        }
    }
    if (remaining.size() > 1) result.push_back(remaining);
    return result;
}

}  // namespace detail

inline QFactorization factor_rationals(const QPoly& p) {
    require(!p.is_zero(), "zero input");
    QFactorization out;
    out.content = p.leading();
    QPoly mono = p.monic();
    if (mono.degree() == 0) return out;

    // Peel multiplicities off the squarefree part.
    QPoly rest = mono;
    QPoly sf = squarefree_part(mono);

    // Convert the squarefree part to a monic integer polynomial via
    // t -> t/c scaling with c the lcm of denominators, then y = c t.
    std::vector<std::pair<QPoly, int>> irreducibles;
    {
        Int den(1);
        for (const auto& c : sf.coeffs()) den = lcm(den, c.get_den());
        // g(y) = den^(deg) * sf(y/den) is monic integral in y = den*t.
        const std::size_t n = static_cast<std::size_t>(sf.degree());
        detail::ZPoly g(n + 1);
        Int pw(1);
        for (std::size_t i = 0; i <= n; ++i) {
            const Rat& c = sf.coeff(n - i);
            Rat scaled = Rat(pw) * c;
            check_internal(scaled.get_den() == 1, "scaling failed to clear denominators");
            g[n - i] = scaled.get_num();
            pw *= den;
        }
        std::vector<detail::ZPoly> zf = detail::factor_squarefree_monic_z(g);
        for (const auto& zq : zf) {
            // Back-substitute y = den*t and renormalize monic over Q.
            std::vector<Rat> cs(zq.size());
            Int pw2(1);
            for (std::size_t i = 0; i < zq.size(); ++i) {
                cs[i] = Rat(zq[i]) * Rat(pw2);
                pw2 *= den;
            }
            QPoly q(std::move(cs));
            irreducibles.emplace_back(q.monic(), 0);
        }
    }

    // Multiplicity of each irreducible by exact division.
    for (auto& [q, m] : irreducibles) {
        QPoly cur = mono;
        for (;;) {
            QPoly quo, rem;
            QPoly::divmod(cur, q, quo, rem);
            if (!rem.is_zero()) break;
            ++m;
            cur = quo;
        }
        check_internal(m >= 1, "lost factor during multiplicity count");
    }
    out.factors = std::move(irreducibles);

    // Exactness audit: product of factors times content equals the input.
    QPoly prod = QPoly::constant(Rat(1));
    for (const auto& [q, m] : out.factors)
        for (int i = 0; i < m; ++i) prod = prod * q;
    check_internal(out.content * prod == p, "factorization does not reproduce input");
    return out;
}

/// Certifies irreducibility over Q.
inline bool is_irreducible(const QPoly& p) {
    if (p.degree() <= 0) return false;
    auto f = factor_rationals(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace mvw

#endif
