#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewschur/rearrange.hpp"
#include "skewschur/sweeps.hpp"

using namespace skewschur;

namespace {

ColumnPermutation randomColumnPermutation(const SkewShape& sh, Rng& rng) {
    std::vector<std::vector<int>> perms;
    for (int c = 1; c <= sh.numCols(); ++c) {
        std::vector<int> p(static_cast<size_t>(sh.colHeight(c)));
        for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i) + 1;
        for (size_t i = p.size(); i > 1; --i)
            std::swap(p[i - 1],
                      p[static_cast<size_t>(rng.next(0, static_cast<int>(i) - 1))]);
        perms.push_back(std::move(p));
    }
    return ColumnPermutation(std::move(perms));
}

}  // namespace

TEST_CASE("column permutation validation and sign") {
    CHECK_THROWS_AS(ColumnPermutation({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnPermutation({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnPermutation({{3, 1}}), std::invalid_argument);
    CHECK(ColumnPermutation({{1, 2}, {2, 1}, {}}).sign() == -1);
    CHECK(ColumnPermutation({{2, 1}, {3, 1, 2}}).sign() == -1);

    ShapePtr sh = makeShape({3, 2, 1}, {1, 1});
    ColumnPermutation id = ColumnPermutation::identity(*sh);
    CHECK(id.numColumns() == 3);
    CHECK(id.column(1) == std::vector<int>{1});
    CHECK(id.column(2) == std::vector<int>{1, 2});
    CHECK(id.sign() == 1);
}

TEST_CASE("applying a column permutation") {
    ShapePtr sh = makeShape({3, 2, 1}, {1, 1});
    Filling f(sh, {2, 1, 3, 1}, 3);
    CHECK(applyColumnPermutation(f, ColumnPermutation::identity(*sh)) == f);

    ColumnPermutation swap2({{1}, {2, 1}, {1}});
    Filling moved = applyColumnPermutation(f, swap2);
    CHECK(moved.entries() == std::vector<int>{3, 1, 2, 1});

    CHECK_THROWS_AS(applyColumnPermutation(f, ColumnPermutation({{1}, {1, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        applyColumnPermutation(f, ColumnPermutation({{1}, {1}, {1, 2}})),
        std::invalid_argument);
}

TEST_CASE("composition is compatible with the left action") {
    Rng rng(13);
    for (const ShapePtr& shape : skewShapesUpTo(6)) {
        Filling f = randomFilling(shape, shape->size(), rng);
        for (int k = 0; k < 5; ++k) {
            ColumnPermutation p = randomColumnPermutation(*shape, rng);
            ColumnPermutation q = randomColumnPermutation(*shape, rng);
            ColumnPermutation pq = p.compose(q);
            CHECK(applyColumnPermutation(f, pq) ==
                  applyColumnPermutation(applyColumnPermutation(f, q), p));
            CHECK(pq.sign() == p.sign() * q.sign());
        }
    }
}

TEST_CASE("sameRowContent") {
    ShapePtr sh = makeShape({3, 2}, {1});
    Filling a(sh, {1, 2, 3, 1}, 3);
    CHECK(sameRowContent(a, Filling(sh, {2, 1, 1, 3}, 3)));
    CHECK_FALSE(sameRowContent(a, Filling(sh, {1, 3, 2, 1}, 3)));
    CHECK(sameRowContent(a, a));
    CHECK_FALSE(sameRowContent(a, Filling(makeShape({2, 2}, {}), {1, 2, 3, 1}, 3)));
}

TEST_CASE("rearrangement coefficient of the asymmetric pair") {
    ShapePtr sh = makeShape({3, 2, 1}, {1, 1});
    Filling f(sh, {2, 1, 3, 1}, 3);
    Filling s(sh, {1, 3, 2, 1}, 3);
    REQUIRE(isSSYT(s));
    CHECK(rearrangementCoefficient(f, s) == -1);
    CHECK(rearrangementCoefficient(s, f) == 0);
    CHECK(rearrangementCoefficient(f, s, RcoeffEngine::Polynomial) == -1);
    CHECK(rearrangementCoefficient(s, f, RcoeffEngine::Polynomial) == 0);
}

TEST_CASE("rearrangement coefficient basics") {
    ShapePtr sh = makeShape({3, 2}, {1});
    Filling f(sh, {2, 1, 3, 1}, 3);
    CHECK(rearrangementCoefficient(f, Filling(sh, {1, 1, 2, 2}, 3)) == 0);
    CHECK_THROWS_AS(
        rearrangementCoefficient(f, Filling(makeShape({2, 2}, {}), {1, 1, 2, 3}, 3)),
        std::invalid_argument);
}

TEST_CASE("evaluation vector of the worked example") {
    ShapePtr sh = makeShape({3, 2}, {1});
    Filling f(sh, {2, 1, 3, 1}, 3);
    TableauSetPtr ts = contextFor(f);
    REQUIRE(ts->size() == 3);
    std::vector<Int> expected{0, 1, -1};
    CHECK(evaluationVector(f, *ts) == expected);
    CHECK(evaluationVector(f, *ts, RcoeffEngine::Polynomial) == expected);
}

TEST_CASE("evaluation vector vanishes on content mismatch and duplicates") {
    ShapePtr sh = makeShape({3, 2}, {1});
    TableauSetPtr ts = enumerateSSYT(sh, {2, 1, 1}, 3);
    Filling wrong(sh, {1, 2, 2, 3}, 3);
    CHECK(evaluationVector(wrong, *ts) ==
          std::vector<Int>(static_cast<size_t>(ts->size()), Int(0)));

    // Column 2 carries the letter 2 twice.
    Filling dup(sh, {2, 1, 1, 2}, 3);
    TableauSetPtr ts2 = contextFor(dup);
    CHECK(evaluationVector(dup, *ts2) ==
          std::vector<Int>(static_cast<size_t>(ts2->size()), Int(0)));
}

TEST_CASE("the two engines agree everywhere small") {
    for (const ShapePtr& shape : skewShapesUpTo(5))
        forEachFilling(shape, 3, [&](const Filling& f) {
            TableauSetPtr ts = contextFor(f);
            CHECK(evaluationVector(f, *ts) ==
                  evaluationVector(f, *ts, RcoeffEngine::Polynomial));
        });
}

TEST_CASE("sign equivariance under column permutations") {
    Rng rng(29);
    std::vector<ShapePtr> shapes = skewShapesUpTo(6);
    for (int k = 0; k < 100; ++k) {
        const ShapePtr& shape = shapes[static_cast<size_t>(
            rng.next(0, static_cast<int>(shapes.size()) - 1))];
        Filling f = randomFilling(shape, 3, rng);
        ColumnPermutation p = randomColumnPermutation(*shape, rng);
        Filling fp = applyColumnPermutation(f, p);
        TableauSetPtr ts = contextFor(f);
        std::vector<Int> base = evaluationVector(f, *ts);
        std::vector<Int> moved = evaluationVector(fp, *ts);
        for (size_t j = 0; j < base.size(); ++j)
            CHECK(moved[j] == (p.sign() > 0 ? base[j] : -base[j]));
    }
}

TEST_CASE("leading behaviour against the sorted filling") {
    for (const ShapePtr& shape : skewShapesUpTo(5))
        forEachFilling(shape, 3, [&](const Filling& f) {
            ColsortResult cs = colsort(f);
            if (cs.hasColumnDuplicate) return;
            Filling sorted = sortFilling(f);
            CHECK(rearrangementCoefficient(f, sorted) == cs.sign);
            TableauSetPtr ts = contextFor(f);
            std::optional<int> k = ts->indexOf(sorted);
            REQUIRE(k.has_value());
            std::vector<Int> v = evaluationVector(f, *ts);
            // Everything strictly after the sorted filling in the basis
            // order is smaller in reading order and gets coefficient zero.
            for (int j = *k + 1; j < ts->size(); ++j)
                CHECK(v[static_cast<size_t>(j)] == 0);
        });
}

TEST_CASE("an SSYT evaluates to a unit vector prefix") {
    for (const ShapePtr& shape : skewShapesUpTo(5)) {
        int m = 3;
        for (const Content& z : allContents(shape->size(), m)) {
            TableauSetPtr ts = enumerateSSYT(shape, z, m);
            for (int i = 0; i < ts->size(); ++i) {
                std::vector<Int> v = evaluationVector(ts->tableau(i), *ts);
                CHECK(v[static_cast<size_t>(i)] == 1);
                for (int j = i + 1; j < ts->size(); ++j)
                    CHECK(v[static_cast<size_t>(j)] == 0);
            }
        }
    }
}
