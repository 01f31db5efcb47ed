#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewschur/garnir.hpp"
#include "skewschur/straighten.hpp"
#include "skewschur/sweeps.hpp"

using namespace skewschur;

namespace {

Expansion unit(TableauSetPtr ts, BasisKind basis, int i) {
    Expansion e;
    e.basis = basis;
    e.context = std::move(ts);
    e.add(i, 1);
    return e;
}

}  // namespace

TEST_CASE("D-basis of the worked example") {
    TableauSetPtr ts = enumerateSSYT(makeShape({3, 2}, {1}), {2, 1, 1}, 3);
    DBasis db = DBasis::build(ts);
    REQUIRE(db.size() == 3);

    IntMatrix r{{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}};
    IntMatrix l{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}};
    CHECK(db.rcoeffMatrix() == r);
    // D_1 = S_1, D_2 = S_2, D_3 = S_3 + S_1.
    CHECK(db.toSsyt() == l);
}

TEST_CASE("D-basis on a one-element context") {
    TableauSetPtr ts = enumerateSSYT(makeShape({2}, {}), {1, 1}, 2);
    REQUIRE(ts->size() == 1);
    DBasis db = DBasis::build(ts);
    CHECK(db.rcoeffMatrix() == IntMatrix{{1}});
    CHECK(db.toSsyt() == IntMatrix{{1}});
}

TEST_CASE("transition matrices are unitriangular inverses") {
    for (const ShapePtr& shape : skewShapesUpTo(5)) {
        int m = 3;
        for (const Content& z : allContents(shape->size(), m)) {
            TableauSetPtr ts = enumerateSSYT(shape, z, m);
            if (ts->size() == 0) continue;
            DBasis db = DBasis::build(ts);
            int n = db.size();
            const IntMatrix& r = db.rcoeffMatrix();
            const IntMatrix& l = db.toSsyt();
            for (int i = 0; i < n; ++i) {
                CHECK(r[static_cast<size_t>(i)][static_cast<size_t>(i)] == 1);
                CHECK(l[static_cast<size_t>(i)][static_cast<size_t>(i)] == 1);
                for (int j = i + 1; j < n; ++j) {
                    CHECK(r[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0);
                    CHECK(l[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0);
                }
            }
            // L R = I.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Int sum = 0;
                    for (int k = 0; k < n; ++k)
                        sum += l[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                               r[static_cast<size_t>(k)][static_cast<size_t>(j)];
                    CHECK(sum == (i == j ? 1 : 0));
                }
        }
    }
}

TEST_CASE("non-iterative straightening of the worked example") {
    ShapePtr sh = makeShape({3, 2}, {1});
    Filling f(sh, {2, 1, 3, 1}, 3);
    Expansion e = straightenNonIterative(f);
    CHECK(e.basis == BasisKind::D);
    CHECK(e.coeffs == std::map<int, Int>{{1, 1}, {2, -1}});

    Expansion s = convert(e, BasisKind::Ssyt);
    CHECK(s.basis == BasisKind::Ssyt);
    CHECK(s.coeffs == std::map<int, Int>{{0, -1}, {1, 1}, {2, -1}});

    Expansion back = convert(s, BasisKind::D);
    CHECK(back == e);
    CHECK(convert(e, BasisKind::D) == e);
}

TEST_CASE("non-iterative straightening fixes the bases") {
    TableauSetPtr ts = enumerateSSYT(makeShape({3, 2}, {1}), {2, 1, 1}, 3);
    DBasis db = DBasis::build(ts);
    for (int i = 0; i < ts->size(); ++i) {
        // [S_i] in D-coordinates is row i of the rcoeff matrix.
        Expansion e = straightenNonIterative(ts->tableau(i), ts);
        Expansion expected;
        expected.basis = BasisKind::D;
        expected.context = ts;
        for (int j = 0; j <= i; ++j)
            expected.add(j, db.rcoeffMatrix()[static_cast<size_t>(i)]
                                             [static_cast<size_t>(j)]);
        CHECK(e == expected);
        CHECK(convert(e, BasisKind::Ssyt, db) == unit(ts, BasisKind::Ssyt, i));
        CHECK(convert(unit(ts, BasisKind::D, i), BasisKind::Ssyt, db).coeffs ==
              [&] {
                  std::map<int, Int> out;
                  for (int j = 0; j <= i; ++j) {
                      Int c = db.toSsyt()[static_cast<size_t>(i)]
                                         [static_cast<size_t>(j)];
                      if (c != 0) out[j] = c;
                  }
                  return out;
              }());
    }
}

TEST_CASE("column duplicates straighten to zero") {
    ShapePtr sh = makeShape({3, 2}, {1});
    // Column 2 carries the letter 2 twice.
    Filling dup(sh, {2, 1, 1, 2}, 3);
    CHECK(straightenNonIterative(dup).isZero());
}

TEST_CASE("non-iterative equals iterative everywhere small") {
    for (const ShapePtr& shape : skewShapesUpTo(5))
        forEachFilling(shape, 3, [&](const Filling& f) {
            TableauSetPtr ts = contextFor(f);
            Expansion direct =
                convert(straightenNonIterative(f, ts), BasisKind::Ssyt);
            Expansion classic = iterativeStraighten(f, ts);
            CHECK(direct == classic);
        });
}

TEST_CASE("support bound") {
    ShapePtr sh = makeShape({3, 2}, {1});
    TableauSetPtr ts = enumerateSSYT(sh, {2, 1, 1}, 3);
    Filling f(sh, {2, 1, 3, 1}, 3);
    CHECK(supportBound(f, *ts) == 3);
    for (int i = 0; i < ts->size(); ++i)
        CHECK(supportBound(ts->tableau(i), *ts) == i + 1);
    CHECK_THROWS_AS(supportBound(Filling(sh, {2, 1, 1, 2}, 3), *ts),
                    std::invalid_argument);
}

TEST_CASE("coefficients vanish beyond the support bound") {
    Rng rng(19);
    std::vector<ShapePtr> shapes = skewShapesUpTo(6);
    for (int rep = 0; rep < 100; ++rep) {
        const ShapePtr& shape = shapes[static_cast<size_t>(
            rng.next(0, static_cast<int>(shapes.size()) - 1))];
        Filling f = randomFilling(shape, 3, rng);
        if (colsort(f).hasColumnDuplicate) continue;
        TableauSetPtr ts = contextFor(f);
        int k = supportBound(f, *ts);
        Expansion e = straightenNonIterative(f, ts);
        for (const auto& [i, c] : e.coeffs) CHECK(i < k);
        CHECK(e.coeffs.count(k - 1) == 1);  // the bound itself is attained
    }
}

TEST_CASE("gram matrix is the identity") {
    TableauSetPtr ts = enumerateSSYT(makeShape({3, 2}, {1}), {2, 1, 1}, 3);
    CHECK(isIdentity(gramMatrix(DBasis::build(ts))));

    TableauSetPtr one = enumerateSSYT(makeShape({1}, {}), {1}, 1);
    CHECK(isIdentity(gramMatrix(DBasis::build(one))));

    for (const ShapePtr& shape : skewShapesUpTo(4)) {
        for (const Content& z : allContents(shape->size(), 3)) {
            TableauSetPtr basis = enumerateSSYT(shape, z, 3);
            if (basis->size() == 0) continue;
            DBasis db = DBasis::build(basis);
            CHECK(isIdentity(gramMatrix(db)));
            CHECK(verifyGramSchmidt(db));
        }
    }
}

TEST_CASE("isIdentity") {
    CHECK(isIdentity(IntMatrix{}));
    CHECK(isIdentity(IntMatrix{{1, 0}, {0, 1}}));
    CHECK_FALSE(isIdentity(IntMatrix{{1, 0}, {1, 1}}));
    CHECK_FALSE(isIdentity(IntMatrix{{2}}));
}

TEST_CASE("inner product") {
    ShapePtr sh = makeShape({3, 2}, {1});
    Filling f(sh, {2, 1, 3, 1}, 3);
    TableauSetPtr ts = contextFor(f);
    DBasis db = DBasis::build(ts);
    Expansion e = straightenNonIterative(f, ts);
    // Norm of [f] is the sum of squared D-coefficients: 1 + 1.
    CHECK(innerProduct(e, e, db) == 2);
    Expansion s = convert(e, BasisKind::Ssyt, db);
    CHECK(innerProduct(s, s, db) == 2);
    CHECK(innerProduct(s, e, db) == innerProduct(e, s, db));

    Expansion d1 = unit(ts, BasisKind::D, 0);
    Expansion d2 = unit(ts, BasisKind::D, 1);
    CHECK(innerProduct(d1, d2, db) == 0);
    CHECK(innerProduct(d1, d1, db) == 1);
}

TEST_CASE("inner products are symmetric and positive definite") {
    Rng rng(23);
    std::vector<ShapePtr> shapes = skewShapesUpTo(5);
    for (int rep = 0; rep < 50; ++rep) {
        const ShapePtr& shape = shapes[static_cast<size_t>(
            rng.next(0, static_cast<int>(shapes.size()) - 1))];
        Filling f = randomFilling(shape, 3, rng);
        // Same content, so both straighten in one context.
        std::vector<int> entries = f.entries();
        for (size_t i = entries.size(); i > 1; --i)
            std::swap(entries[i - 1], entries[static_cast<size_t>(
                                          rng.next(0, static_cast<int>(i) - 1))]);
        Filling g = f.withEntries(std::move(entries));
        TableauSetPtr ts = contextFor(f);
        DBasis db = DBasis::build(ts);
        Expansion ef = straightenNonIterative(f, ts);
        Expansion eg = straightenNonIterative(g, ts);
        CHECK(innerProduct(ef, eg, db) == innerProduct(eg, ef, db));
        Int norm = innerProduct(ef, ef, db);
        CHECK(norm >= 0);
        CHECK((norm == 0) == ef.isZero());
    }
}
