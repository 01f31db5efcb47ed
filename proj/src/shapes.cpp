#include "skewschur/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    conj.reserve(static_cast<size_t>(part(1)));
    for (int j = 1; j <= part(1); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

SkewShape::SkewShape(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (!lambda_.contains(mu_))
        throw std::invalid_argument("mu is not contained in lambda");
    lambdaConj_ = lambda_.conjugate();
    muConj_ = mu_.conjugate();
    rowStart_.reserve(static_cast<size_t>(lambda_.length()));
    for (int r = 1; r <= lambda_.length(); ++r) {
        rowStart_.push_back(static_cast<int>(cells_.size()));
        for (int c = mu_.part(r) + 1; c <= lambda_.part(r); ++c)
            cells_.push_back({r, c});
    }
}

int SkewShape::cellIndex(int r, int c) const {
    if (r < 1 || r > lambda_.length()) return -1;
    if (c <= mu_.part(r) || c > lambda_.part(r)) return -1;
    return rowStart_[static_cast<size_t>(r - 1)] + (c - mu_.part(r) - 1);
}

ShapePtr makeShape(Partition lambda, Partition mu) {
    return std::make_shared<const SkewShape>(std::move(lambda), std::move(mu));
}

ShapePtr makeShape(std::vector<int> lambda, std::vector<int> mu) {
    return makeShape(Partition(std::move(lambda)), Partition(std::move(mu)));
}

Filling::Filling(ShapePtr shape, std::vector<int> entries, int alphabet)
    : shape_(std::move(shape)), entries_(std::move(entries)), alphabet_(alphabet) {
    if (!shape_) throw std::invalid_argument("filling requires a shape");
    if (alphabet_ < 1) throw std::invalid_argument("alphabet size must be positive");
    if (entries_.size() != shape_->cells().size())
        throw std::invalid_argument("entry count does not match the shape");
    for (int e : entries_)
        if (e < 1 || e > alphabet_)
            throw std::invalid_argument("filling entry out of alphabet range");
}

int Filling::at(int r, int c) const {
    int k = shape_->cellIndex(r, c);
    if (k < 0) throw std::out_of_range("cell not in the skew shape");
    return entries_[static_cast<size_t>(k)];
}

Content contentOf(const Filling& f) {
    Content z(static_cast<size_t>(f.alphabet()), 0);
    for (int e : f.entries()) ++z[static_cast<size_t>(e - 1)];
    return z;
}

bool isSSYT(const Filling& f) {
    const SkewShape& sh = f.shape();
    for (const Cell& cell : sh.cells()) {
        if (sh.hasCell(cell.row, cell.col + 1) &&
            f.at(cell.row, cell.col) > f.at(cell.row, cell.col + 1))
            return false;
        if (sh.hasCell(cell.row + 1, cell.col) &&
            f.at(cell.row, cell.col) >= f.at(cell.row + 1, cell.col))
            return false;
    }
    return true;
}

std::vector<int> readingWord(const Filling& f) { return f.entries(); }

std::vector<int> columnWord(const Filling& f) {
    const SkewShape& sh = f.shape();
    std::vector<int> word;
    word.reserve(static_cast<size_t>(sh.size()));
    for (int c = sh.numCols(); c >= 1; --c)
        for (int i = 1; i <= sh.colHeight(c); ++i)
            word.push_back(f.at(sh.colRow(c, i), c));
    return word;
}

namespace {

// Parity of the permutation sorting `values` increasingly, by inversion
// count; meaningful only when the values are distinct.
int sortParity(const std::vector<int>& values) {
    int inversions = 0;
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j)
            if (values[i] > values[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

ColsortResult colsort(const Filling& f) {
    const SkewShape& sh = f.shape();
    std::vector<int> entries = f.entries();
    int sign = 1;
    bool hasDuplicate = false;
    for (int c = 1; c <= sh.numCols(); ++c) {
        std::vector<int> column;
        for (int i = 1; i <= sh.colHeight(c); ++i)
            column.push_back(f.at(sh.colRow(c, i), c));
        for (size_t i = 0; i + 1 < column.size(); ++i)
            for (size_t j = i + 1; j < column.size(); ++j)
                if (column[i] == column[j]) hasDuplicate = true;
        sign *= sortParity(column);
        std::sort(column.begin(), column.end());
        for (int i = 1; i <= sh.colHeight(c); ++i) {
            int k = sh.cellIndex(sh.colRow(c, i), c);
            entries[static_cast<size_t>(k)] = column[static_cast<size_t>(i - 1)];
        }
    }
    if (hasDuplicate) sign = 1;
    return {f.withEntries(std::move(entries)), sign, hasDuplicate};
}

Filling rowsort(const Filling& f) {
    const SkewShape& sh = f.shape();
    std::vector<int> entries = f.entries();
    size_t pos = 0;
    for (int r = 1; r <= sh.numRows(); ++r) {
        size_t len = static_cast<size_t>(sh.lambda().part(r) - sh.mu().part(r));
        std::sort(entries.begin() + static_cast<long>(pos),
                  entries.begin() + static_cast<long>(pos + len));
        pos += len;
    }
    return f.withEntries(std::move(entries));
}

Filling sortFilling(const Filling& f) { return rowsort(colsort(f).filling); }

std::strong_ordering compareReadingOrder(const Filling& a, const Filling& b) {
    if (!(a.shape() == b.shape()))
        throw std::invalid_argument("reading-order comparison requires equal shapes");
    return a.entries() <=> b.entries();
}

TableauOrderedSet::TableauOrderedSet(ShapePtr shape, Content content, int alphabet,
                                     std::vector<Filling> tableaux)
    : shape_(std::move(shape)),
      content_(std::move(content)),
      alphabet_(alphabet),
      tableaux_(std::move(tableaux)) {
    for (size_t i = 0; i < tableaux_.size(); ++i)
        index_.emplace(tableaux_[i].entries(), static_cast<int>(i));
}

std::optional<int> TableauOrderedSet::indexOf(const Filling& t) const {
    auto it = index_.find(t.entries());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

// Backtracks over cells in row-major order. A placed entry must respect the
// left neighbour (weakly) and the upper neighbour (strictly), and never
// exceed the remaining budget of its letter.
void enumerateRec(const ShapePtr& shape, int m, std::vector<int>& entries,
                  std::vector<int>& remaining, size_t k,
                  std::vector<Filling>& out) {
    const auto& cells = shape->cells();
    if (k == cells.size()) {
        out.emplace_back(shape, entries, m);
        return;
    }
    const Cell& cell = cells[k];
    int low = 1;
    int leftIdx = shape->cellIndex(cell.row, cell.col - 1);
    if (leftIdx >= 0) low = std::max(low, entries[static_cast<size_t>(leftIdx)]);
    int upIdx = shape->cellIndex(cell.row - 1, cell.col);
    if (upIdx >= 0) low = std::max(low, entries[static_cast<size_t>(upIdx)] + 1);
    for (int e = low; e <= m; ++e) {
        if (remaining[static_cast<size_t>(e - 1)] == 0) continue;
        --remaining[static_cast<size_t>(e - 1)];
        entries[k] = e;
        enumerateRec(shape, m, entries, remaining, k + 1, out);
        ++remaining[static_cast<size_t>(e - 1)];
    }
}

}  // namespace

TableauSetPtr enumerateSSYT(ShapePtr shape, const Content& z, int m) {
    if (static_cast<int>(z.size()) > m)
        throw std::invalid_argument("content longer than the alphabet");
    int total = std::accumulate(z.begin(), z.end(), 0);
    if (total != shape->size())
        throw std::invalid_argument("content size does not match the shape");
    std::vector<int> remaining(static_cast<size_t>(m), 0);
    std::copy(z.begin(), z.end(), remaining.begin());
    std::vector<int> entries(static_cast<size_t>(shape->size()), 0);
    std::vector<Filling> tableaux;
    if (m >= 1) enumerateRec(shape, m, entries, remaining, 0, tableaux);
    // Index 0 must carry the largest reading word.
    std::sort(tableaux.begin(), tableaux.end(),
              [](const Filling& a, const Filling& b) {
                  return a.entries() > b.entries();
              });
    Content padded(static_cast<size_t>(m), 0);
    std::copy(z.begin(), z.end(), padded.begin());
    return std::make_shared<const TableauOrderedSet>(shape, std::move(padded), m,
                                                     std::move(tableaux));
}

TableauSetPtr contextFor(const Filling& f) {
    return enumerateSSYT(f.shapePtr(), contentOf(f), f.alphabet());
}

}  // namespace skewschur
