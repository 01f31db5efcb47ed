#ifndef SKEWSCHUR_SHAPES_HPP
#define SKEWSCHUR_SHAPES_HPP

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "skewschur/bigint.hpp"

namespace skewschur {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;

    /// 1-based part access; parts beyond the length are 0.
    int part(int i) const;

    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct Cell {
    int row;
    int col;
    bool operator==(const Cell&) const = default;
};

/// Skew diagram lambda/mu with precomputed conjugates, column heights and
/// the row-major cell list. Columns with height 0 are legal.
class SkewShape {
public:
    SkewShape(Partition lambda, Partition mu);

    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }

    int numRows() const { return lambda_.length(); }
    int numCols() const { return lambda_.part(1); }
    int size() const { return static_cast<int>(cells_.size()); }

    /// 1-based column index; zero beyond numCols().
    int lambdaConj(int c) const { return lambdaConj_.part(c); }
    int muConj(int c) const { return muConj_.part(c); }
    int colHeight(int c) const { return lambdaConj(c) - muConj(c); }

    /// Row index of the i-th box (from the top, 1-based) in column c.
    int colRow(int c, int i) const { return muConj(c) + i; }

    /// Cells in row-major order (top row first, left to right).
    const std::vector<Cell>& cells() const { return cells_; }

    bool hasCell(int r, int c) const { return cellIndex(r, c) >= 0; }

    /// Index of (r,c) in the row-major cell list, or -1 if absent.
    int cellIndex(int r, int c) const;

    bool operator==(const SkewShape& other) const {
        return lambda_ == other.lambda_ && mu_ == other.mu_;
    }

private:
    Partition lambda_;
    Partition mu_;
    Partition lambdaConj_;
    Partition muConj_;
    std::vector<Cell> cells_;
    std::vector<int> rowStart_;  // index of the first cell of each row
};

using ShapePtr = std::shared_ptr<const SkewShape>;

ShapePtr makeShape(Partition lambda, Partition mu);
ShapePtr makeShape(std::vector<int> lambda, std::vector<int> mu);

/// Content vector z, z[i-1] = number of cells carrying letter i.
using Content = std::vector<int>;

/// Assignment of letters 1..m to the cells of a skew shape, stored in the
/// shape's row-major cell order (so the entry vector is the reading word).
class Filling {
public:
    Filling(ShapePtr shape, std::vector<int> entries, int alphabet);

    const SkewShape& shape() const { return *shape_; }
    const ShapePtr& shapePtr() const { return shape_; }
    int alphabet() const { return alphabet_; }

    int at(int r, int c) const;
    int atIndex(int k) const { return entries_[static_cast<size_t>(k)]; }
    const std::vector<int>& entries() const { return entries_; }

    Filling withEntries(std::vector<int> entries) const {
        return Filling(shape_, std::move(entries), alphabet_);
    }

    bool operator==(const Filling& other) const {
        return *shape_ == *other.shape_ && entries_ == other.entries_;
    }

private:
    ShapePtr shape_;
    std::vector<int> entries_;
    int alphabet_;
};

Content contentOf(const Filling& f);

bool isSSYT(const Filling& f);

/// Row-major word; identical to the entry vector by construction.
std::vector<int> readingWord(const Filling& f);

/// Rightmost column first, each column top to bottom.
std::vector<int> columnWord(const Filling& f);

struct ColsortResult {
    Filling filling;
    int sign;                 // +1 when a column duplicate exists
    bool hasColumnDuplicate;
};

ColsortResult colsort(const Filling& f);
Filling rowsort(const Filling& f);

/// rowsort(colsort(f)); an SSYT whenever f has no column duplicates.
Filling sortFilling(const Filling& f);

/// Reading-word comparison; less means strictly smaller reading word.
std::strong_ordering compareReadingOrder(const Filling& a, const Filling& b);

/// The SSYT of a fixed shape and content, sorted so index 0 carries the
/// largest reading word (labels S_1 > S_2 > ... > S_n in reading order).
class TableauOrderedSet {
public:
    TableauOrderedSet(ShapePtr shape, Content content, int alphabet,
                      std::vector<Filling> tableaux);

    const ShapePtr& shapePtr() const { return shape_; }
    const SkewShape& shape() const { return *shape_; }
    const Content& content() const { return content_; }
    int alphabet() const { return alphabet_; }

    int size() const { return static_cast<int>(tableaux_.size()); }
    const Filling& tableau(int i) const {
        return tableaux_[static_cast<size_t>(i)];
    }
    const std::vector<Filling>& tableaux() const { return tableaux_; }

    /// 0-based position of an SSYT in the fixed order, if present.
    std::optional<int> indexOf(const Filling& t) const;

private:
    ShapePtr shape_;
    Content content_;
    int alphabet_;
    std::vector<Filling> tableaux_;
    std::map<std::vector<int>, int> index_;
};

using TableauSetPtr = std::shared_ptr<const TableauOrderedSet>;

/// Complete enumeration of SSYT(shape, z) over the alphabet 1..m, by
/// per-cell backtracking with row/column feasibility pruning.
TableauSetPtr enumerateSSYT(ShapePtr shape, const Content& z, int m);

/// The ordered tableau context a filling straightens in.
TableauSetPtr contextFor(const Filling& f);

}  // namespace skewschur

#endif
