#include "skewschur/determinantal.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace skewschur {

SymbolicMatrix columnMatrix(const Filling& f, int c) {
    const SkewShape& sh = f.shape();
    if (c < 1 || c > sh.numCols())
        throw std::invalid_argument("column index out of range");
    int h = sh.colHeight(c);
    SymbolicMatrix m(h);
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j)
            m.at(i - 1, j - 1) = SparsePoly::variable(
                {sh.colRow(c, i), f.at(sh.colRow(c, j), c)});
    return m;
}

SparsePoly columnDeterminant(const Filling& f, int c) {
    const SkewShape& sh = f.shape();
    // The determinant only depends on the row window and the column's entry
    // list, so unrelated fillings sharing a column reuse the result.
    using Key = std::tuple<int, int, std::vector<int>>;
    static std::map<Key, SparsePoly> cache;
    std::vector<int> column;
    for (int i = 1; i <= sh.colHeight(c); ++i)
        column.push_back(f.at(sh.colRow(c, i), c));
    Key key{sh.muConj(c), sh.lambdaConj(c), column};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    SparsePoly d = determinant(columnMatrix(f, c));
    cache.emplace(std::move(key), d);
    return d;
}

SparsePoly dPoly(const Filling& f) {
    SparsePoly prod = SparsePoly::constant(1);
    for (int c = 1; c <= f.shape().numCols(); ++c)
        prod = prod * columnDeterminant(f, c);
    return prod;
}

Monomial fillingMonomial(const Filling& f) {
    Monomial m;
    for (const Cell& cell : f.shape().cells())
        m = m * Monomial::variable({cell.row, f.at(cell.row, cell.col)});
    return m;
}

Monomial leadingMonomialOfSSYT(const Filling& t) {
    if (!isSSYT(t))
        throw std::invalid_argument("leading monomial requires an SSYT");
    return fillingMonomial(t);
}

SymbolicMatrix garnirBlockMatrix(const Filling& f, const GarnirData& g) {
    const SkewShape& sh = f.shape();
    if (!withinBounds(sh, g))
        throw std::invalid_argument("Garnir data out of bounds for the shape");
    int h1 = sh.colHeight(g.c1);
    int h2 = sh.colHeight(g.c2);
    SymbolicMatrix k(h1 + h2);
    for (int i = 1; i <= h1; ++i)
        for (int j = 1; j <= h1; ++j)
            k.at(i - 1, j - 1) = SparsePoly::variable(
                {sh.colRow(g.c1, i), f.at(sh.colRow(g.c1, j), g.c1)});
    for (int i = 1; i <= h2; ++i)
        for (int j = 1; j <= h2; ++j)
            k.at(h1 + i - 1, h1 + j - 1) = SparsePoly::variable(
                {sh.colRow(g.c2, i), f.at(sh.colRow(g.c2, j), g.c2)});
    // Upper right: rows of column c1 against the top-b Garnir cells of c2.
    for (int i = 1; i <= h1; ++i)
        for (int j = 1; j <= h2; ++j)
            if (j <= g.b)
                k.at(i - 1, h1 + j - 1) = SparsePoly::variable(
                    {sh.colRow(g.c1, i), f.at(sh.colRow(g.c2, j), g.c2)});
    // Lower left: rows of column c2 against the bottom-a Garnir cells of c1.
    for (int i = 1; i <= h2; ++i)
        for (int j = 1; j <= h1; ++j)
            if (j > h1 - g.a)
                k.at(h1 + i - 1, j - 1) = SparsePoly::variable(
                    {sh.colRow(g.c2, i), f.at(sh.colRow(g.c1, j), g.c1)});
    return k;
}

bool verifyGarnirDeterminantIdentity(const Filling& f, const GarnirData& g) {
    SparsePoly sum;
    for (const Shuffle& pi : shuffles(g.a, g.b)) {
        Filling moved = garnirAction(f, g, pi);
        SparsePoly d = dPoly(moved);
        sum += pi.sign > 0 ? d : -d;
    }
    return sum.isZero();
}

}  // namespace skewschur
