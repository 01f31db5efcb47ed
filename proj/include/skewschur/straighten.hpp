#ifndef SKEWSCHUR_STRAIGHTEN_HPP
#define SKEWSCHUR_STRAIGHTEN_HPP

#include <vector>

#include "skewschur/expansion.hpp"
#include "skewschur/rearrange.hpp"
#include "skewschur/shapes.hpp"

namespace skewschur {

using IntMatrix = std::vector<std::vector<Int>>;

/// The D-basis of a fixed (shape, content) context, built by the recursion
/// D_i = S_i - sum_{j<i} R(S_i, S_j) D_j. Both transition matrices are
/// integer unitriangular: rcoeffMatrix() sends D-coordinates to
/// SSYT-coordinates of the same element (S_i = sum_j R[i][j] D_j) and
/// toSsyt() is its inverse (D_i = sum_j L[i][j] S_j).
class DBasis {
public:
    static DBasis build(TableauSetPtr context,
                        RcoeffEngine engine = RcoeffEngine::Backtracking);

    const TableauSetPtr& context() const { return context_; }
    int size() const { return static_cast<int>(rcoeff_.size()); }

    const IntMatrix& rcoeffMatrix() const { return rcoeff_; }
    const IntMatrix& toSsyt() const { return toSsyt_; }

private:
    DBasis(TableauSetPtr context, IntMatrix rcoeff, IntMatrix toSsyt);

    TableauSetPtr context_;
    IntMatrix rcoeff_;  // R[i][j] = R(S_i, S_j)
    IntMatrix toSsyt_;  // L = R^{-1}
};

/// Direct straightening: the D-basis coefficients are exactly the
/// rearrangement coefficients of f, with no Garnir rewriting.
Expansion straightenNonIterative(const Filling& f, TableauSetPtr context = nullptr,
                                 RcoeffEngine engine = RcoeffEngine::Backtracking);

/// Change of basis through the unitriangular transition matrices.
Expansion convert(const Expansion& e, BasisKind to, const DBasis& db);
Expansion convert(const Expansion& e, BasisKind to);

/// 1-based k with S_k = sortFilling(f); all D-coefficients with index > k
/// vanish. Throws on column-duplicate input.
int supportBound(const Filling& f, const TableauOrderedSet& basis);

/// Gram matrix <D_i, D_j> of the sesquilinear form <S_a, D_b> = R(S_a, S_b)
/// evaluated on the SSYT expansions of the D-vectors.
IntMatrix gramMatrix(const DBasis& db);

bool isIdentity(const IntMatrix& m);

/// Runs Gram-Schmidt on (S_1..S_n) under the form, using the S-S pairings
/// <S_i, S_a> induced by the D-orthonormal expansion, and checks that it
/// reproduces the D-basis transition matrix with all norms equal to 1.
bool verifyGramSchmidt(const DBasis& db);

/// <u, v> of two expansions in the same context (identity involution).
Int innerProduct(const Expansion& u, const Expansion& v, const DBasis& db);

}  // namespace skewschur

#endif
