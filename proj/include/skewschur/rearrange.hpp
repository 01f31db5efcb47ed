#ifndef SKEWSCHUR_REARRANGE_HPP
#define SKEWSCHUR_REARRANGE_HPP

#include <vector>

#include "skewschur/bigint.hpp"
#include "skewschur/shapes.hpp"

namespace skewschur {

/// Element of the column Young subgroup: one permutation per column,
/// acting on the column's cells indexed top to bottom.
class ColumnPermutation {
public:
    /// perms[c-1] is the one-line notation of the permutation of
    /// {1..colHeight(c)}; empty columns carry the empty permutation.
    explicit ColumnPermutation(std::vector<std::vector<int>> perms);

    static ColumnPermutation identity(const SkewShape& shape);

    const std::vector<int>& column(int c) const {
        return perms_[static_cast<size_t>(c - 1)];
    }
    int numColumns() const { return static_cast<int>(perms_.size()); }
    int sign() const { return sign_; }

    ColumnPermutation compose(const ColumnPermutation& other) const;

private:
    std::vector<std::vector<int>> perms_;
    int sign_;
};

/// Left action F_pi[row_{c,i}, c] = F[row_{c, pi_c^{-1}(i)}, c].
Filling applyColumnPermutation(const Filling& f, const ColumnPermutation& p);

/// True iff every row's entry multiset agrees.
bool sameRowContent(const Filling& a, const Filling& b);

enum class RcoeffEngine { Backtracking, Polynomial };

/// Rearrangement coefficient R(f,s): signed count of column permutations pi
/// with sameRowContent(f_pi, s). Zero when the contents differ. The default
/// engine prunes column by column on per-row residual multisets; the
/// polynomial engine reads the coefficient of s's monomial in dPoly(f).
Int rearrangementCoefficient(const Filling& f, const Filling& s,
                             RcoeffEngine engine = RcoeffEngine::Backtracking);

/// (R(f, S_j))_j over the basis order; zero vector on content mismatch.
/// The polynomial engine shares one dPoly expansion across all S_j.
std::vector<Int> evaluationVector(const Filling& f, const TableauOrderedSet& basis,
                                  RcoeffEngine engine = RcoeffEngine::Backtracking);

}  // namespace skewschur

#endif
