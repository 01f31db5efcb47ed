#include "skewschur/sweeps.hpp"

#include <algorithm>

namespace skewschur {

namespace {

void partitionsRec(int remaining, int maxPart, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        cur.push_back(p);
        partitionsRec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

// Inner partitions mu of lambda leaving no empty row (mu_i < lambda_i) and
// at most `budget` skew cells in total.
void innerRec(const Partition& lambda, int row, int prev, int budget,
              std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (budget < lambda.length() - row + 1) return;  // each row needs a cell
    if (row > lambda.length()) {
        std::vector<int> trimmed = cur;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out.push_back(std::move(trimmed));
        return;
    }
    int hi = std::min(prev, lambda.part(row) - 1);
    for (int v = hi; v >= 0; --v) {
        int used = lambda.part(row) - v;
        if (used > budget) continue;
        cur.push_back(v);
        innerRec(lambda, row + 1, v, budget - used, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitionsOf(int n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    partitionsRec(n, n, cur, out);
    return out;
}

std::vector<ShapePtr> skewShapesUpTo(int maxCells) {
    std::vector<ShapePtr> out;
    // No empty rows forces len(lambda) <= cells, no empty columns forces
    // lambda_1 <= cells, so lambda ranges over partitions of 1..maxCells^2
    // inside a maxCells x maxCells box with at most maxCells excess.
    for (int size = 1; size <= maxCells * maxCells; ++size) {
        for (const Partition& lambda : partitionsOf(size)) {
            if (lambda.part(1) > maxCells || lambda.length() > maxCells) continue;
            std::vector<std::vector<int>> inners;
            std::vector<int> cur;
            innerRec(lambda, 1, lambda.part(1), maxCells, cur, inners);
            for (auto& muParts : inners) {
                Partition mu(muParts);
                ShapePtr shape = makeShape(lambda, mu);
                if (shape->size() > maxCells) continue;
                bool emptyColumn = false;
                for (int c = 1; c <= shape->numCols(); ++c)
                    if (shape->colHeight(c) == 0) emptyColumn = true;
                if (emptyColumn) continue;
                out.push_back(std::move(shape));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ShapePtr& a, const ShapePtr& b) {
        if (a->size() != b->size()) return a->size() < b->size();
        if (a->lambda().parts() != b->lambda().parts())
            return a->lambda().parts() < b->lambda().parts();
        return a->mu().parts() < b->mu().parts();
    });
    return out;
}

void forEachFilling(const ShapePtr& shape, int m,
                    const std::function<void(const Filling&)>& fn) {
    size_t n = static_cast<size_t>(shape->size());
    std::vector<int> entries(n, 1);
    while (true) {
        fn(Filling(shape, entries, m));
        size_t k = n;
        while (k > 0 && entries[k - 1] == m) entries[--k] = 1;
        if (k == 0) break;
        ++entries[k - 1];
    }
}

std::vector<Content> allContents(int total, int m) {
    std::vector<Content> out;
    Content cur(static_cast<size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == m) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, remaining - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(0, total);
    return out;
}

Filling randomFilling(const ShapePtr& shape, int m, Rng& rng) {
    std::vector<int> entries(static_cast<size_t>(shape->size()));
    for (int& e : entries) e = rng.next(1, m);
    return Filling(shape, std::move(entries), m);
}

}  // namespace skewschur
