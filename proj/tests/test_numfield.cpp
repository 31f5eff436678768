#include <catch2/catch_amalgamated.hpp>

#include "mvw/factor.hpp"
#include "mvw/matrix.hpp"
#include "mvw/numfield.hpp"
#include "mvw/rng.hpp"

using namespace mvw;

namespace {

QPoly rand_poly(Rng& rng, int maxdeg) {
    int d = static_cast<int>(rng.range(0, maxdeg));
    std::vector<Rat> cs;
    for (int i = 0; i <= d; ++i) cs.push_back(rng.small_rat());
    return QPoly(std::move(cs));
}

QMat qmat(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    QMat m(r, c, Rat(0));
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rational parsing and printing round-trips") {
    REQUIRE(rat_str(parse_rat("-3/7")) == "-3/7");
    REQUIRE(parse_rat("4/6") == rat_of(2, 3));
    REQUIRE_THROWS_AS(parse_rat("1/0"), input_error);
    REQUIRE_THROWS_AS(parse_rat("abc"), input_error);
}

TEST_CASE("square class representative is a signed squarefree integer") {
    REQUIRE(square_class_rep(rat_of(4)) == 1);
    REQUIRE(square_class_rep(rat_of(-8)) == -2);
    REQUIRE(square_class_rep(rat_of(1, 2)) == 2);
    REQUIRE(square_class_rep(rat_of(45)) == 5);
    REQUIRE(square_class_rep(rat_of(-45, 49)) == -5);
}

TEST_CASE("squarefree part collapses repeated roots") {
    // (t-1)^2 -> t-1
    QPoly p = qpoly({1, -2, 1});
    REQUIRE(squarefree_part(p) == qpoly({-1, 1}));
    // t^3 - t is already squarefree
    QPoly q = qpoly({0, -1, 0, 1});
    REQUIRE(squarefree_part(q) == q);
    // (t^2+1)^2 (t-2) -> (t^2+1)(t-2)
    QPoly f = qpoly({1, 0, 1}) * qpoly({1, 0, 1}) * qpoly({-2, 1});
    REQUIRE(squarefree_part(f) == qpoly({1, 0, 1}) * qpoly({-2, 1}));
    REQUIRE_THROWS_AS(squarefree_part(QPoly()), input_error);
}

TEST_CASE("squarefree part is coprime to its derivative") {
    Rng rng(7);
    for (int it = 0; it < 40; ++it) {
        QPoly p = rand_poly(rng, 5);
        if (p.is_zero()) continue;
        QPoly s = squarefree_part(p);
        if (s.degree() <= 0) continue;
        REQUIRE(QPoly::gcd(s, s.derivative()).degree() == 0);
    }
}

TEST_CASE("polynomial gcd divides both arguments exactly") {
    Rng rng(11);
    for (int it = 0; it < 40; ++it) {
        QPoly p = rand_poly(rng, 4), q = rand_poly(rng, 4);
        if (p.is_zero() || q.is_zero()) continue;
        QPoly g = QPoly::gcd(p, q);
        REQUIRE((p % g).is_zero());
        REQUIRE((q % g).is_zero());
    }
}

TEST_CASE("factorization of simple polynomials") {
    SECTION("difference of squares") {
        auto f = factor_rationals(qpoly({-1, 0, 1}));
        REQUIRE(f.factors.size() == 2);
        REQUIRE(f.content == Rat(1));
        for (auto& [q, m] : f.factors) {
            REQUIRE(m == 1);
            REQUIRE(q.degree() == 1);
        }
    }
    SECTION("t^2+1 stays irreducible") {
        auto f = factor_rationals(qpoly({1, 0, 1}));
        REQUIRE(f.factors.size() == 1);
        REQUIRE(f.factors[0].second == 1);
        REQUIRE(f.factors[0].first == qpoly({1, 0, 1}));
    }
    SECTION("rational roots 1/2 and 1/3") {
        // t^2 - (5/6) t + 1/6 = (t - 1/2)(t - 1/3)
        QPoly p({rat_of(1, 6), rat_of(-5, 6), Rat(1)});
        auto f = factor_rationals(p);
        REQUIRE(f.factors.size() == 2);
        std::vector<QPoly> qs{f.factors[0].first, f.factors[1].first};
        QPoly a({rat_of(-1, 2), Rat(1)}), b({rat_of(-1, 3), Rat(1)});
        REQUIRE(((qs[0] == a && qs[1] == b) || (qs[0] == b && qs[1] == a)));
    }
    SECTION("zero polynomial is rejected") {
        REQUIRE_THROWS_AS(factor_rationals(QPoly()), input_error);
    }
}

TEST_CASE("factorization reproduces random products bit-exactly") {
    Rng rng(23);
    std::vector<QPoly> pool = {
        qpoly({-1, 1}), qpoly({1, 1}),  qpoly({-2, 1}), qpoly({1, 0, 1}),
        qpoly({2, 0, 1}), qpoly({-2, 0, 1}), qpoly({1, 1, 1}), qpoly({1, -1, 0, 1}),
        QPoly({rat_of(-1, 2), Rat(1)}),
    };
    for (int it = 0; it < 30; ++it) {
        QPoly p = QPoly::constant(rng.small_rat_nonzero());
        int nf = static_cast<int>(rng.range(1, 4));
        std::size_t expected_distinct = 0;
        std::vector<int> used(pool.size(), 0);
        for (int i = 0; i < nf; ++i) {
            std::size_t pick = rng.below(pool.size());
            p = p * pool[pick];
            if (!used[pick]) ++expected_distinct;
            used[pick] = 1;
        }
        auto f = factor_rationals(p);
        QPoly prod = QPoly::constant(f.content);
        for (auto& [q, m] : f.factors) {
            REQUIRE(is_irreducible(q));
            for (int i = 0; i < m; ++i) prod = prod * q;
        }
        REQUIRE(prod == p);
        REQUIRE(f.factors.size() == expected_distinct);
    }
}

TEST_CASE("minimal polynomial of small matrices") {
    REQUIRE(minimal_polynomial(qmat({{1, 0}, {0, 1}})) == qpoly({-1, 1}));
    REQUIRE(minimal_polynomial(qmat({{1, 0}, {0, 2}})) == qpoly({2, -3, 1}));
    // Rotation by 90 degrees: verify independently that m^2 + I = 0 and that
    // no degree-one polynomial annihilates it.
    QMat J = qmat({{0, 1}, {-1, 0}});
    REQUIRE((J * J + QMat::identity(2, Rat(0))).is_zero());
    QPoly mp = minimal_polynomial(J);
    REQUIRE(mp == qpoly({1, 0, 1}));
    REQUIRE_THROWS_AS(minimal_polynomial(QMat(2, 3, Rat(0))), input_error);
}

TEST_CASE("solve_linear on the worked examples") {
    SECTION("identity system") {
        auto s = solve_linear(QMat::identity(2, Rat(0)), std::vector<Rat>{Rat(1), Rat(0)});
        REQUIRE(s.consistent);
        REQUIRE(s.particular == std::vector<Rat>{Rat(1), Rat(0)});
        REQUIRE(s.kernel.empty());
    }
    SECTION("zero matrix, zero rhs") {
        auto s = solve_linear(QMat(2, 2, Rat(0)), std::vector<Rat>{Rat(0), Rat(0)});
        REQUIRE(s.consistent);
        REQUIRE(s.particular == std::vector<Rat>{Rat(0), Rat(0)});
        REQUIRE(s.kernel.size() == 2);
    }
    SECTION("rank-one system") {
        auto s = solve_linear(qmat({{1, 1}, {2, 2}}), std::vector<Rat>{Rat(1), Rat(2)});
        REQUIRE(s.consistent);
        REQUIRE(s.particular[0] + s.particular[1] == Rat(1));
        REQUIRE(s.kernel.size() == 1);
        REQUIRE(s.kernel[0][0] + s.kernel[0][1] == Rat(0));
    }
    SECTION("inconsistent system") {
        auto s = solve_linear(qmat({{1, 1}, {2, 2}}), std::vector<Rat>{Rat(1), Rat(3)});
        REQUIRE_FALSE(s.consistent);
    }
    SECTION("dimension mismatch") {
        REQUIRE_THROWS_AS(solve_linear(qmat({{1, 1}, {2, 2}}), std::vector<Rat>{Rat(1)}),
                          input_error);
    }
}

TEST_CASE("solve_linear exactness on random systems") {
    Rng rng(31);
    for (int it = 0; it < 40; ++it) {
        std::size_t r = static_cast<std::size_t>(rng.range(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.range(1, 5));
        QMat A(r, c, Rat(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) A(i, j) = rng.small_rat();
        std::vector<Rat> x0;
        for (std::size_t j = 0; j < c; ++j) x0.push_back(rng.small_rat());
        std::vector<Rat> b = A.apply(x0);
        auto s = solve_linear(A, b);
        REQUIRE(s.consistent);
        REQUIRE(A.apply(s.particular) == b);
        for (auto& k : s.kernel) {
            auto img = A.apply(k);
            for (auto& v : img) REQUIRE(v == Rat(0));
        }
        REQUIRE(s.kernel.size() == c - rank_of(A));
    }
}

TEST_CASE("number field arithmetic in Q(i)") {
    auto F = NumberField::create(qpoly({1, 0, 1}));
    NFElem i = NFElem::gen(F);
    REQUIRE(i * i == NFElem(F, Rat(-1)));
    NFElem a = NFElem(F, Rat(3)) + NFElem(F, Rat(4)) * i;  // 3 + 4i
    REQUIRE(a.trace() == Rat(6));
    REQUIRE(a.norm() == Rat(25));
    REQUIRE(a * a.inverse() == NFElem::one(F));

    // conjugation automorphism t -> -t
    NFElem conj = a.apply_automorphism(-i);
    REQUIRE(conj + a == NFElem(F, Rat(6)));
}

TEST_CASE("field inverse property on random elements") {
    auto F = NumberField::create(qpoly({-2, 0, 0, 1}));  // Q(cbrt(2))
    Rng rng(41);
    for (int it = 0; it < 30; ++it) {
        std::vector<Rat> ca, cb;
        for (int k = 0; k < 3; ++k) {
            ca.push_back(rng.small_rat());
            cb.push_back(rng.small_rat());
        }
        NFElem a(F, QPoly(std::move(ca))), b(F, QPoly(std::move(cb)));
        if (a.is_zero()) continue;
        REQUIRE((a * b) * a.inverse() == b);
    }
}

TEST_CASE("number field construction rejects bad moduli") {
    REQUIRE_THROWS_AS(NumberField::create(qpoly({-1, 0, 1})), input_error);  // reducible
    REQUIRE_THROWS_AS(NumberField::create(qpoly({1, 0, 2})), input_error);   // not monic
}

TEST_CASE("matrix inverse and determinant are exact") {
    Rng rng(53);
    for (int it = 0; it < 25; ++it) {
        std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
        QMat A(n, n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.small_rat();
        if (det(A) == Rat(0)) continue;
        REQUIRE(A * inverse(A) == QMat::identity(n, Rat(0)));
    }
}
