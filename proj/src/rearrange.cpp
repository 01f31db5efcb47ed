#include "skewschur/rearrange.hpp"

#include <algorithm>
#include <stdexcept>

#include "skewschur/determinantal.hpp"

namespace skewschur {

namespace {

int permutationSign(const std::vector<int>& oneLine) {
    int inv = 0;
    for (size_t i = 0; i < oneLine.size(); ++i)
        for (size_t j = i + 1; j < oneLine.size(); ++j)
            if (oneLine[i] > oneLine[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

void checkOneLine(const std::vector<int>& oneLine) {
    std::vector<bool> seen(oneLine.size(), false);
    for (int v : oneLine) {
        if (v < 1 || v > static_cast<int>(oneLine.size()) ||
            seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("not a permutation in one-line notation");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Content trimmedContent(const Filling& f) {
    Content z = contentOf(f);
    while (!z.empty() && z.back() == 0) z.pop_back();
    return z;
}

}  // namespace

ColumnPermutation::ColumnPermutation(std::vector<std::vector<int>> perms)
    : perms_(std::move(perms)), sign_(1) {
    for (const auto& p : perms_) {
        checkOneLine(p);
        sign_ *= permutationSign(p);
    }
}

ColumnPermutation ColumnPermutation::identity(const SkewShape& shape) {
    std::vector<std::vector<int>> perms(static_cast<size_t>(shape.numCols()));
    for (int c = 1; c <= shape.numCols(); ++c) {
        auto& p = perms[static_cast<size_t>(c - 1)];
        p.resize(static_cast<size_t>(shape.colHeight(c)));
        for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i) + 1;
    }
    return ColumnPermutation(std::move(perms));
}

ColumnPermutation ColumnPermutation::compose(const ColumnPermutation& other) const {
    if (numColumns() != other.numColumns())
        throw std::invalid_argument("column counts differ");
    std::vector<std::vector<int>> perms(perms_.size());
    for (size_t c = 0; c < perms_.size(); ++c) {
        if (perms_[c].size() != other.perms_[c].size())
            throw std::invalid_argument("column heights differ");
        perms[c].resize(perms_[c].size());
        for (size_t i = 0; i < perms_[c].size(); ++i)
            perms[c][i] = perms_[c][static_cast<size_t>(other.perms_[c][i] - 1)];
    }
    return ColumnPermutation(std::move(perms));
}

Filling applyColumnPermutation(const Filling& f, const ColumnPermutation& p) {
    const SkewShape& sh = f.shape();
    if (p.numColumns() != sh.numCols())
        throw std::invalid_argument("permutation does not match the shape");
    std::vector<int> entries = f.entries();
    for (int c = 1; c <= sh.numCols(); ++c) {
        const std::vector<int>& pc = p.column(c);
        if (static_cast<int>(pc.size()) != sh.colHeight(c))
            throw std::invalid_argument("permutation does not match the shape");
        // Entry at column position j lands at position pc[j-1].
        for (int j = 1; j <= sh.colHeight(c); ++j) {
            int dst = sh.cellIndex(sh.colRow(c, pc[static_cast<size_t>(j - 1)]), c);
            entries[static_cast<size_t>(dst)] = f.at(sh.colRow(c, j), c);
        }
    }
    return f.withEntries(std::move(entries));
}

bool sameRowContent(const Filling& a, const Filling& b) {
    if (!(a.shape() == b.shape())) return false;
    const SkewShape& sh = a.shape();
    size_t pos = 0;
    for (int r = 1; r <= sh.numRows(); ++r) {
        size_t len = static_cast<size_t>(sh.lambda().part(r) - sh.mu().part(r));
        std::vector<int> ra(a.entries().begin() + static_cast<long>(pos),
                            a.entries().begin() + static_cast<long>(pos + len));
        std::vector<int> rb(b.entries().begin() + static_cast<long>(pos),
                            b.entries().begin() + static_cast<long>(pos + len));
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        if (ra != rb) return false;
        pos += len;
    }
    return true;
}

namespace {

// Signed count of ways to redistribute f's columns so each diagram row
// carries the target letter multiset. Columns are filled left to right,
// positions top to bottom; need[r-1][letter-1] is the residual demand.
struct RcoeffSearch {
    const Filling& f;
    const SkewShape& sh;
    std::vector<std::vector<int>> need;
    Int total = 0;

    void run() {
        column(1, 1);
    }

    void column(int c, int sign) {
        if (c > sh.numCols()) {
            total += sign;
            return;
        }
        int h = sh.colHeight(c);
        std::vector<int> chosen;
        chosen.reserve(static_cast<size_t>(h));
        std::vector<bool> used(static_cast<size_t>(h), false);
        place(c, 1, chosen, used, sign);
    }

    void place(int c, int i, std::vector<int>& chosen, std::vector<bool>& used,
               int sign) {
        int h = sh.colHeight(c);
        if (i > h) {
            column(c + 1, sign);
            return;
        }
        int row = sh.colRow(c, i);
        for (int j = 1; j <= h; ++j) {
            if (used[static_cast<size_t>(j - 1)]) continue;
            int letter = f.at(sh.colRow(c, j), c);
            int& slot = need[static_cast<size_t>(row - 1)][static_cast<size_t>(letter - 1)];
            if (slot == 0) continue;
            --slot;
            used[static_cast<size_t>(j - 1)] = true;
            int inv = 0;
            for (int prev : chosen)
                if (prev > j) ++inv;
            chosen.push_back(j);
            place(c, i + 1, chosen, used, inv % 2 == 0 ? sign : -sign);
            chosen.pop_back();
            used[static_cast<size_t>(j - 1)] = false;
            ++slot;
        }
    }
};

Int backtrackingRcoeff(const Filling& f, const Filling& s) {
    const SkewShape& sh = f.shape();
    int maxLetter = std::max(f.alphabet(), s.alphabet());
    std::vector<std::vector<int>> need(
        static_cast<size_t>(sh.numRows()),
        std::vector<int>(static_cast<size_t>(maxLetter), 0));
    for (const Cell& cell : sh.cells())
        ++need[static_cast<size_t>(cell.row - 1)]
              [static_cast<size_t>(s.at(cell.row, cell.col) - 1)];
    RcoeffSearch search{f, sh, std::move(need)};
    search.run();
    return search.total;
}

}  // namespace

Int rearrangementCoefficient(const Filling& f, const Filling& s,
                             RcoeffEngine engine) {
    if (!(f.shape() == s.shape()))
        throw std::invalid_argument("rearrangement coefficient requires equal shapes");
    if (trimmedContent(f) != trimmedContent(s)) return 0;
    switch (engine) {
        case RcoeffEngine::Backtracking:
            return backtrackingRcoeff(f, s);
        case RcoeffEngine::Polynomial:
            return dPoly(f).coefficientOf(fillingMonomial(s));
    }
    throw std::logic_error("unknown engine");
}

std::vector<Int> evaluationVector(const Filling& f, const TableauOrderedSet& basis,
                                  RcoeffEngine engine) {
    if (!(f.shape() == basis.shape()))
        throw std::invalid_argument("evaluation vector requires equal shapes");
    std::vector<Int> out(static_cast<size_t>(basis.size()), Int(0));
    Content zf = trimmedContent(f);
    Content zb = basis.content();
    while (!zb.empty() && zb.back() == 0) zb.pop_back();
    if (zf != zb) return out;
    if (engine == RcoeffEngine::Polynomial) {
        SparsePoly d = dPoly(f);
        for (int j = 0; j < basis.size(); ++j)
            out[static_cast<size_t>(j)] =
                d.coefficientOf(fillingMonomial(basis.tableau(j)));
        return out;
    }
    for (int j = 0; j < basis.size(); ++j)
        out[static_cast<size_t>(j)] = backtrackingRcoeff(f, basis.tableau(j));
    return out;
}

}  // namespace skewschur
