#ifndef SKEWSCHUR_GARNIR_HPP
#define SKEWSCHUR_GARNIR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "skewschur/expansion.hpp"
#include "skewschur/shapes.hpp"

namespace skewschur {

/// (a,b)-shuffle: one-line permutation of {1..a+b} increasing on the first
/// a and the last b positions.
struct Shuffle {
    std::vector<int> oneLine;
    int sign;
};

/// All C(a+b, a) shuffles, identity first, in lexicographic one-line order.
std::vector<Shuffle> shuffles(int a, int b);

/// Garnir parameters: bottom a cells of column c1, top b cells of column c2.
struct GarnirData {
    int c1;
    int c2;
    int a;
    int b;
    bool operator==(const GarnirData&) const = default;
};

/// Bounds check only: c1 < c2, 1 <= a <= colHeight(c1), 1 <= b <= colHeight(c2).
bool withinBounds(const SkewShape& shape, const GarnirData& g);

/// The Garnir overlap inequality lambda'_{c1} - a < mu'_{c2} + b.
bool isAdmissible(const SkewShape& shape, const GarnirData& g);

/// Cells of Gar^{a,b}_{c1,c2} in the eta enumeration order (c1 segment top
/// to bottom, then c2 segment top to bottom).
std::vector<Cell> garnirCells(const SkewShape& shape, const GarnirData& g);

/// Rearranges the entries on the Garnir cells by the shuffle, leaving all
/// other entries fixed. Defined for any in-bounds g, admissible or not.
Filling garnirAction(const Filling& f, const GarnirData& g, const Shuffle& pi);

/// All admissible tuples of the shape.
std::vector<GarnirData> admissibleData(const SkewShape& shape);

struct Violation {
    int row;
    int c1;
    int c2;
    bool operator==(const Violation&) const = default;
};

/// First row-descent of a column-strict filling: smallest row, then smallest
/// c1, then smallest c2 with f(row,c1) > f(row,c2). Empty iff f is an SSYT.
/// Throws if f is not strictly increasing down each column.
std::optional<Violation> violatingPair(const Filling& f);

struct IterativeStats {
    std::size_t rewrites = 0;
    std::size_t peakTerms = 0;
};

/// Classical straightening oracle: colsort, then repeatedly rewrite the
/// column-word-smallest non-SSYT term through the Garnir relation at its
/// first violation, until only SSYT remain.
Expansion iterativeStraighten(const Filling& f, TableauSetPtr context = nullptr,
                              IterativeStats* stats = nullptr);

}  // namespace skewschur

#endif
