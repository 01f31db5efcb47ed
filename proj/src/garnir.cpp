#include "skewschur/garnir.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace skewschur {

std::vector<Shuffle> shuffles(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("shuffle sizes must be nonnegative");
    int n = a + b;
    // A shuffle's word is increasing on positions 1..a and a+1..a+b, so it
    // is determined by the value set of its first block; enumerating those
    // a-subsets lexicographically orders the words lexicographically, with
    // the identity first.
    std::vector<Shuffle> out;
    std::vector<int> pick(static_cast<size_t>(a));
    for (int i = 0; i < a; ++i) pick[static_cast<size_t>(i)] = i + 1;
    auto emit = [&]() {
        std::vector<int> word;
        word.reserve(static_cast<size_t>(n));
        std::vector<bool> inFirst(static_cast<size_t>(n + 1), false);
        for (int v : pick) {
            word.push_back(v);
            inFirst[static_cast<size_t>(v)] = true;
        }
        for (int v = 1; v <= n; ++v)
            if (!inFirst[static_cast<size_t>(v)]) word.push_back(v);
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (word[static_cast<size_t>(i)] > word[static_cast<size_t>(j)]) ++inv;
        out.push_back({std::move(word), inv % 2 == 0 ? 1 : -1});
    };
    if (a == 0) {
        std::vector<int> word(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = i + 1;
        return {{std::move(word), 1}};
    }
    // pick holds positions pi^{-1}(1) < ... < pi^{-1}(a); the one-line word
    // is increasing on those positions, so the pick set is exactly the set
    // of positions of the first block.
    while (true) {
        emit();
        int i = a - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - (a - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < a; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    // One-line lex order is the order of pick sets with smaller positions of
    // small values first; the combination order above produces exactly that,
    // but re-sorting keeps the contract independent of the enumeration.
    std::sort(out.begin(), out.end(),
              [](const Shuffle& x, const Shuffle& y) { return x.oneLine < y.oneLine; });
    return out;
}

bool withinBounds(const SkewShape& shape, const GarnirData& g) {
    return g.c1 >= 1 && g.c2 <= shape.numCols() && g.c1 < g.c2 && g.a >= 1 &&
           g.b >= 1 && g.a <= shape.colHeight(g.c1) && g.b <= shape.colHeight(g.c2);
}

bool isAdmissible(const SkewShape& shape, const GarnirData& g) {
    if (!withinBounds(shape, g)) return false;
    return shape.lambdaConj(g.c1) - g.a < shape.muConj(g.c2) + g.b;
}

std::vector<Cell> garnirCells(const SkewShape& shape, const GarnirData& g) {
    if (!withinBounds(shape, g))
        throw std::invalid_argument("Garnir data out of bounds for the shape");
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(g.a + g.b));
    for (int r = shape.lambdaConj(g.c1) - g.a + 1; r <= shape.lambdaConj(g.c1); ++r)
        cells.push_back({r, g.c1});
    for (int r = shape.muConj(g.c2) + 1; r <= shape.muConj(g.c2) + g.b; ++r)
        cells.push_back({r, g.c2});
    return cells;
}

Filling garnirAction(const Filling& f, const GarnirData& g, const Shuffle& pi) {
    std::vector<Cell> cells = garnirCells(f.shape(), g);
    if (pi.oneLine.size() != cells.size())
        throw std::invalid_argument("shuffle length does not match the Garnir set");
    std::vector<int> entries = f.entries();
    // F_pi[x] = F[eta^{-1}(pi(eta(x)))] with eta(cells[k-1]) = k.
    for (size_t k = 0; k < cells.size(); ++k) {
        const Cell& src = cells[static_cast<size_t>(pi.oneLine[k] - 1)];
        int dst = f.shape().cellIndex(cells[k].row, cells[k].col);
        entries[static_cast<size_t>(dst)] = f.at(src.row, src.col);
    }
    return f.withEntries(std::move(entries));
}

std::vector<GarnirData> admissibleData(const SkewShape& shape) {
    std::vector<GarnirData> out;
    for (int c1 = 1; c1 <= shape.numCols(); ++c1)
        for (int c2 = c1 + 1; c2 <= shape.numCols(); ++c2)
            for (int a = 1; a <= shape.colHeight(c1); ++a)
                for (int b = 1; b <= shape.colHeight(c2); ++b) {
                    GarnirData g{c1, c2, a, b};
                    if (isAdmissible(shape, g)) out.push_back(g);
                }
    return out;
}

std::optional<Violation> violatingPair(const Filling& f) {
    const SkewShape& sh = f.shape();
    for (const Cell& cell : sh.cells())
        if (sh.hasCell(cell.row + 1, cell.col) &&
            f.at(cell.row, cell.col) >= f.at(cell.row + 1, cell.col))
            throw std::invalid_argument("filling is not column strict");
    for (int r = 1; r <= sh.numRows(); ++r)
        for (int c1 = sh.mu().part(r) + 1; c1 < sh.lambda().part(r); ++c1)
            for (int c2 = c1 + 1; c2 <= sh.lambda().part(r); ++c2)
                if (f.at(r, c1) > f.at(r, c2)) return Violation{r, c1, c2};
    return std::nullopt;
}

namespace {

// Map keys are entry vectors of column-strict, column-sorted fillings,
// ordered by column word ascending so the first non-SSYT term is always the
// one the termination argument rewrites.
struct ColWordLess {
    const SkewShape* shape;
    int alphabet;
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> wa, wb;
        wa.reserve(a.size());
        wb.reserve(b.size());
        for (int c = shape->numCols(); c >= 1; --c)
            for (int i = 1; i <= shape->colHeight(c); ++i) {
                int k = shape->cellIndex(shape->colRow(c, i), c);
                wa.push_back(a[static_cast<size_t>(k)]);
                wb.push_back(b[static_cast<size_t>(k)]);
            }
        return wa < wb;
    }
};

}  // namespace

Expansion iterativeStraighten(const Filling& f, TableauSetPtr context,
                              IterativeStats* stats) {
    if (!context) context = contextFor(f);
    if (!(context->shape() == f.shape()) || context->content() != contentOf(f))
        throw std::invalid_argument("context does not match the filling");

    Expansion result;
    result.basis = BasisKind::Ssyt;
    result.context = context;
    if (stats) *stats = IterativeStats{};

    ColsortResult cs = colsort(f);
    if (cs.hasColumnDuplicate) return result;

    ColWordLess less{&f.shape(), f.alphabet()};
    std::map<std::vector<int>, Int, ColWordLess> pending(less);
    pending[cs.filling.entries()] = cs.sign;

    auto note = [&](size_t terms) {
        if (stats && terms > stats->peakTerms) stats->peakTerms = terms;
    };
    note(pending.size() + result.coeffs.size());

    while (!pending.empty()) {
        auto it = pending.begin();
        Filling cur = f.withEntries(it->first);
        Int coeff = it->second;
        pending.erase(it);
        if (coeff == 0) continue;

        std::optional<Violation> v = violatingPair(cur);
        if (!v) {
            std::optional<int> idx = context->indexOf(cur);
            if (!idx) throw std::logic_error("SSYT missing from its context");
            result.add(*idx, coeff);
            continue;
        }

        const SkewShape& sh = f.shape();
        GarnirData g{v->c1, v->c2, sh.lambdaConj(v->c1) - v->row + 1,
                     v->row - sh.muConj(v->c2)};
        if (stats) ++stats->rewrites;
        // [cur] = -sum_{pi != id} sgn(pi) [cur_pi]; each summand is
        // column-sorted again before re-entering the queue.
        for (const Shuffle& pi : shuffles(g.a, g.b)) {
            bool isId = true;
            for (size_t k = 0; k < pi.oneLine.size(); ++k)
                if (pi.oneLine[k] != static_cast<int>(k) + 1) {
                    isId = false;
                    break;
                }
            if (isId) continue;
            Filling moved = garnirAction(cur, g, pi);
            ColsortResult mcs = colsort(moved);
            if (mcs.hasColumnDuplicate) continue;
            Int& slot = pending[mcs.filling.entries()];
            slot += -coeff * pi.sign * mcs.sign;
            if (slot == 0) pending.erase(mcs.filling.entries());
        }
        note(pending.size() + result.coeffs.size());
    }
    return result;
}

}  // namespace skewschur
