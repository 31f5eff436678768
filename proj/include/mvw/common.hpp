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

#ifndef MVW_COMMON_HPP
#define MVW_COMMON_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mvw {

using Int = mpz_class;
using Rat = mpq_class;

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (CLI exit code 2).
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

/// A sound-but-incomplete search ran out of budget (CLI exit code 1).
struct search_exhausted : error {
    explicit search_exhausted(const std::string& what) : error(what) {}
};

/// A mathematically guaranteed step failed; indicates a bug.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error("internal: " + msg);
}

/// Parses "p/q" or "p" (optional leading '-'), canonicalizing the fraction.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw input_error("bad rational literal: " + s);
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw input_error("bad rational literal: " + s);
    if (q.get_den() == 0) throw input_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_of(long n, long d = 1) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

/// Exact square root of a rational, if it is a perfect square.
inline bool rat_sqrt(const Rat& q, Rat& out) {
    if (sgn(q) < 0) return false;
    Int n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

/// Signed squarefree part of a nonzero rational: the canonical
/// representative of its square class (a squarefree integer).
/// Trial division up to 10^6; beyond that the residual cofactor is
/// classified by perfect-square checks, which is exhaustive for
/// residuals below 10^18.
inline Int square_class_rep(const Rat& q) {
    if (sgn(q) == 0) throw input_error("square class of zero");
    Int n = q.get_num() * q.get_den();
    int sign = sgn(n) < 0 ? -1 : 1;
    n = abs(n);
    Int core = 1;
    const unsigned long bound = 1000000UL;
    for (unsigned long p = 2; p <= bound && n > 1; p == 2 ? p = 3 : p += 2) {
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e % 2) core *= p;
        if (n == 1) break;
        Int b2;
        mpz_ui_pow_ui(b2.get_mpz_t(), p, 2);
        if (n < b2 * p) break;  // residual has no factor <= p^... stop early when n < p^3 impossible-to-miss
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            // residual is p^2 (or a square of a large prime product)
        } else {
            Int lim;
            mpz_ui_pow_ui(lim.get_mpz_t(), bound, 3);
            if (n >= lim)
                throw error("square-class normalization overflow: residual too large to certify");
            core *= n;  // residual is a prime or product of two distinct large primes
        }
    }
    return sign < 0 ? -core : core;
}

}  // namespace mvw

#endif
