#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewschur/polyring.hpp"

using namespace skewschur;

namespace {

Monomial m(std::initializer_list<std::pair<Variable, int>> factors) {
    Monomial out;
    for (const auto& [v, e] : factors) out = out * Monomial::variable(v, e);
    return out;
}

Monomial randomMonomial(std::mt19937_64& rng) {
    Monomial out;
    int nvars = static_cast<int>(rng() % 4);
    for (int k = 0; k < nvars; ++k) {
        Variable v{static_cast<int>(rng() % 3) + 1, static_cast<int>(rng() % 3) + 1};
        out = out * Monomial::variable(v, static_cast<int>(rng() % 3) + 1);
    }
    return out;
}

SparsePoly randomPoly(std::mt19937_64& rng) {
    SparsePoly p;
    int terms = static_cast<int>(rng() % 4) + 1;
    for (int k = 0; k < terms; ++k)
        p += SparsePoly::term(randomMonomial(rng),
                              static_cast<int>(rng() % 9) - 4);
    return p;
}

}  // namespace

TEST_CASE("monomial order") {
    // The exponent of the smallest differing variable decides, and a smaller
    // exponent means a smaller monomial.
    Monomial a = m({{{1, 2}, 3}});
    Monomial b = m({{{1, 1}, 1}});
    CHECK(compareMonomials(a, b) == std::strong_ordering::less);
    CHECK(compareMonomials(b, a) == std::strong_ordering::greater);
    CHECK(compareMonomials(a, a) == std::strong_ordering::equal);
    CHECK(compareMonomials(Monomial{}, b) == std::strong_ordering::less);
    CHECK(compareMonomials(m({{{1, 1}, 1}}), m({{{1, 1}, 2}})) ==
          std::strong_ordering::less);
}

TEST_CASE("monomial order is multiplicative") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 500; ++k) {
        Monomial m1 = randomMonomial(rng), m2 = randomMonomial(rng);
        Monomial n1 = randomMonomial(rng), n2 = randomMonomial(rng);
        if (compareMonomials(m1, m2) == std::strong_ordering::less &&
            compareMonomials(n1, n2) != std::strong_ordering::greater)
            CHECK(compareMonomials(m1 * n1, m2 * n2) ==
                  std::strong_ordering::less);
    }
}

TEST_CASE("monomial order is total") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        Monomial a = randomMonomial(rng), b = randomMonomial(rng),
                 c = randomMonomial(rng);
        auto ab = compareMonomials(a, b);
        auto ba = compareMonomials(b, a);
        CHECK((ab == std::strong_ordering::less) ==
              (ba == std::strong_ordering::greater));
        if (ab == std::strong_ordering::less &&
            compareMonomials(b, c) == std::strong_ordering::less)
            CHECK(compareMonomials(a, c) == std::strong_ordering::less);
        CHECK((ab == std::strong_ordering::equal) == (a == b));
    }
}

TEST_CASE("polynomial ring arithmetic") {
    SparsePoly z11 = SparsePoly::variable({1, 1});
    SparsePoly z12 = SparsePoly::variable({1, 2});
    CHECK((z11 + (-z11)).isZero());
    CHECK((z11 + z12) * (z11 - z12) == z11 * z11 - z12 * z12);
    CHECK(SparsePoly::constant(0).isZero());
    CHECK(z11.scaled(0).isZero());

    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
        SparsePoly p = randomPoly(rng), q = randomPoly(rng);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK(p - p == SparsePoly{});
    }
}

TEST_CASE("leading term") {
    SparsePoly p = SparsePoly::variable({1, 1}) +
                   SparsePoly::term(m({{{1, 2}, 3}}), 1);
    auto [lm, lc] = p.leadingTerm();
    CHECK(lm == m({{{1, 1}, 1}}));
    CHECK(lc == 1);
    CHECK_THROWS_AS(SparsePoly{}.leadingTerm(), std::invalid_argument);

    // Over the integers leading terms never cancel, so the leading term of
    // a product is the product of the leading terms.
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
        SparsePoly a = randomPoly(rng), b = randomPoly(rng);
        if (a.isZero() || b.isZero()) continue;
        auto [la, ca] = a.leadingTerm();
        auto [lb, cb] = b.leadingTerm();
        auto [lp, cp] = (a * b).leadingTerm();
        CHECK(lp == la * lb);
        CHECK(cp == ca * cb);
    }
}

TEST_CASE("coefficientOf") {
    CHECK(SparsePoly{}.coefficientOf(m({{{1, 1}, 1}})) == 0);
    Monomial mm = m({{{1, 1}, 1}, {{2, 2}, 1}});
    CHECK(SparsePoly::term(mm, 3).coefficientOf(mm) == 3);
}

TEST_CASE("string form") {
    SparsePoly p = SparsePoly::term(m({{{1, 1}, 1}, {{2, 2}, 2}}), 3);
    CHECK(p.str() == "+3*Z[1,1]*Z[2,2]^2");
    CHECK(SparsePoly{}.str() == "0");
    CHECK((-SparsePoly::variable({1, 2})).str() == "-Z[1,2]");
    CHECK(SparsePoly::constant(-2).str() == "-2");
}

TEST_CASE("determinant basics") {
    SymbolicMatrix diag(2);
    diag.at(0, 0) = SparsePoly::variable({1, 1});
    diag.at(1, 1) = SparsePoly::variable({2, 2});
    CHECK(determinant(diag) ==
          SparsePoly::variable({1, 1}) * SparsePoly::variable({2, 2}));

    SymbolicMatrix g(2);
    SparsePoly a = SparsePoly::variable({1, 1}), b = SparsePoly::variable({1, 2});
    SparsePoly c = SparsePoly::variable({2, 1}), d = SparsePoly::variable({2, 2});
    g.at(0, 0) = a;
    g.at(0, 1) = b;
    g.at(1, 0) = c;
    g.at(1, 1) = d;
    CHECK(determinant(g) == a * d - b * c);

    CHECK(determinant(SymbolicMatrix(0)) == SparsePoly::constant(1));
}

TEST_CASE("determinant matches numeric specialization") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        SymbolicMatrix sm(4);
        long long numeric[4][4];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                numeric[i][j] = static_cast<long long>(rng() % 11) - 5;
                sm.at(i, j) = SparsePoly::constant(numeric[i][j]);
            }
        Int expected = 0;
        int perm[4] = {0, 1, 2, 3};
        do {
            int inv = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (perm[i] > perm[j]) ++inv;
            Int prod = inv % 2 == 0 ? 1 : -1;
            for (int i = 0; i < 4; ++i) prod *= numeric[i][perm[i]];
            expected += prod;
        } while (std::next_permutation(perm, perm + 4));
        SparsePoly det = determinant(sm);
        Int got = det.isZero() ? Int(0) : det.leadingTerm().second;
        CHECK(got == expected);
    }
}

TEST_CASE("determinant is alternating") {
    SymbolicMatrix sm(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            sm.at(i, j) = SparsePoly::variable({i + 1, j + 1});
    SparsePoly base = determinant(sm);

    SymbolicMatrix swapped(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            swapped.at(i, j) = sm.at(i, j == 0 ? 1 : j == 1 ? 0 : j);
    CHECK(determinant(swapped) == -base);

    for (int n : {3, 4}) {
        SymbolicMatrix dup(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dup.at(i, j) = SparsePoly::variable({i + 1, j == 1 ? 1 : j + 1});
        CHECK(determinant(dup).isZero());
    }
}

TEST_CASE("evaluate") {
    SparsePoly p = SparsePoly::variable({1, 1}) * SparsePoly::variable({1, 1}) +
                   SparsePoly::variable({2, 1}).scaled(3);
    Int v = p.evaluate([](Variable var) { return Int(var.row + var.letter); });
    CHECK(v == 4 + 9);
}
