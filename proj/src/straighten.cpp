#include "skewschur/straighten.hpp"

#include <stdexcept>

namespace skewschur {

DBasis::DBasis(TableauSetPtr context, IntMatrix rcoeff, IntMatrix toSsyt)
    : context_(std::move(context)),
      rcoeff_(std::move(rcoeff)),
      toSsyt_(std::move(toSsyt)) {}

DBasis DBasis::build(TableauSetPtr context, RcoeffEngine engine) {
    if (!context) throw std::invalid_argument("null context");
    int n = context->size();
    IntMatrix r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        r[static_cast<size_t>(i)] =
            evaluationVector(context->tableau(i), *context, engine);
    for (int i = 0; i < n; ++i) {
        if (r[static_cast<size_t>(i)][static_cast<size_t>(i)] != 1)
            throw std::logic_error("rearrangement matrix is not unitriangular");
        for (int j = i + 1; j < n; ++j)
            if (r[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
                throw std::logic_error("rearrangement matrix is not unitriangular");
    }
    // Invert the unit lower triangular matrix by forward substitution.
    IntMatrix l(static_cast<size_t>(n),
                std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) {
        l[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        for (int j = i - 1; j >= 0; --j) {
            Int acc = 0;
            for (int k = j; k < i; ++k)
                acc += r[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                       l[static_cast<size_t>(k)][static_cast<size_t>(j)];
            l[static_cast<size_t>(i)][static_cast<size_t>(j)] = -acc;
        }
    }
    return DBasis(std::move(context), std::move(r), std::move(l));
}

Expansion straightenNonIterative(const Filling& f, TableauSetPtr context,
                                 RcoeffEngine engine) {
    if (!context) context = contextFor(f);
    if (!(context->shape() == f.shape()) || context->content() != contentOf(f))
        throw std::invalid_argument("context does not match the filling");
    Expansion e;
    e.basis = BasisKind::D;
    e.context = context;
    std::vector<Int> v = evaluationVector(f, *context, engine);
    for (size_t j = 0; j < v.size(); ++j) e.add(static_cast<int>(j), v[j]);
    return e;
}

Expansion convert(const Expansion& e, BasisKind to, const DBasis& db) {
    if (e.basis == to) return e;
    const IntMatrix& t = to == BasisKind::Ssyt ? db.toSsyt() : db.rcoeffMatrix();
    Expansion out;
    out.basis = to;
    out.context = e.context;
    for (const auto& [i, c] : e.coeffs)
        for (int j = 0; j <= i; ++j)
            out.add(j, c * t[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return out;
}

Expansion convert(const Expansion& e, BasisKind to) {
    if (e.basis == to) return e;
    return convert(e, to, DBasis::build(e.context));
}

int supportBound(const Filling& f, const TableauOrderedSet& basis) {
    ColsortResult cs = colsort(f);
    if (cs.hasColumnDuplicate)
        throw std::invalid_argument("no support bound for a column-duplicate filling");
    Filling s = rowsort(cs.filling);
    std::optional<int> idx = basis.indexOf(s);
    if (!idx) throw std::invalid_argument("sorted filling is not in the basis");
    return *idx + 1;
}

IntMatrix gramMatrix(const DBasis& db) {
    int n = db.size();
    const IntMatrix& l = db.toSsyt();
    const IntMatrix& r = db.rcoeffMatrix();
    // <D_i, D_j> = sum_a L[i][a] <S_a, D_j> = sum_a L[i][a] R[a][j].
    IntMatrix g(static_cast<size_t>(n),
                std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a) {
            const Int& lia = l[static_cast<size_t>(i)][static_cast<size_t>(a)];
            if (lia == 0) continue;
            for (int j = 0; j < n; ++j)
                g[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    lia * r[static_cast<size_t>(a)][static_cast<size_t>(j)];
        }
    return g;
}

bool isIdentity(const IntMatrix& m) {
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) return false;
        for (size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

bool verifyGramSchmidt(const DBasis& db) {
    int n = db.size();
    const IntMatrix& r = db.rcoeffMatrix();
    // Pairings of the SSYT classes: <S_i, S_a> = sum_b R[i][b] R[a][b].
    IntMatrix p(static_cast<size_t>(n),
                std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                p[static_cast<size_t>(i)][static_cast<size_t>(a)] +=
                    r[static_cast<size_t>(i)][static_cast<size_t>(b)] *
                    r[static_cast<size_t>(a)][static_cast<size_t>(b)];

    auto pair = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
        Int acc = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                acc += u[static_cast<size_t>(i)] *
                       p[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                       v[static_cast<size_t>(j)];
        return acc;
    };

    // Orthogonalize S_1..S_n; every vector must come out with norm 1, and
    // the resulting coordinates must reproduce the D-basis expansion.
    IntMatrix u;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> cur(static_cast<size_t>(n), Int(0));
        cur[static_cast<size_t>(i)] = 1;
        for (int j = 0; j < i; ++j) {
            Int proj = pair(cur, u[static_cast<size_t>(j)]);
            for (int k = 0; k < n; ++k)
                cur[static_cast<size_t>(k)] -=
                    proj * u[static_cast<size_t>(j)][static_cast<size_t>(k)];
        }
        if (pair(cur, cur) != 1) return false;
        u.push_back(std::move(cur));
    }
    return u == db.toSsyt();
}

Int innerProduct(const Expansion& u, const Expansion& v, const DBasis& db) {
    Expansion du = convert(u, BasisKind::D, db);
    Expansion dv = convert(v, BasisKind::D, db);
    Int acc = 0;
    for (const auto& [i, c] : du.coeffs) {
        auto it = dv.coeffs.find(i);
        if (it != dv.coeffs.end()) acc += c * it->second;
    }
    return acc;
}

}  // namespace skewschur
