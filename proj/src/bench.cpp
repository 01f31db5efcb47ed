#include "skewschur/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "skewschur/garnir.hpp"
#include "skewschur/straighten.hpp"
#include "skewschur/sweeps.hpp"

namespace skewschur {

namespace {

double medianOf(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t n = v.size();
    if (n == 0) return 0.0;
    return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

std::string shapeLabel(const SkewShape& sh) {
    std::ostringstream out;
    out << "(";
    for (int i = 1; i <= sh.lambda().length(); ++i)
        out << (i > 1 ? "," : "") << sh.lambda().part(i);
    out << ")/(";
    for (int i = 1; i <= sh.mu().length(); ++i)
        out << (i > 1 ? "," : "") << sh.mu().part(i);
    out << ")";
    return out.str();
}

}  // namespace

std::vector<BenchRow> runBench(const std::vector<ShapePtr>& family, int alphabet,
                               int repetitions, std::uint64_t seed) {
    using Clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    Rng rng(seed);
    for (const ShapePtr& shape : family) {
        BenchRow row;
        row.shape = shapeLabel(*shape);
        row.cells = shape->size();
        row.repetitions = repetitions;
        std::vector<double> iterMs, directMs;
        int m = alphabet > 0 ? alphabet : shape->size();
        for (int rep = 0; rep < repetitions; ++rep) {
            // Column-duplicate fillings are the zero element and exercise
            // neither method, so redraw a bounded number of times.
            Filling f = randomFilling(shape, m, rng);
            for (int tries = 0; tries < 1000 && colsort(f).hasColumnDuplicate;
                 ++tries)
                f = randomFilling(shape, m, rng);
            TableauSetPtr context = contextFor(f);

            IterativeStats stats;
            auto t0 = Clock::now();
            Expansion iter = iterativeStraighten(f, context, &stats);
            auto t1 = Clock::now();
            Expansion direct = straightenNonIterative(f, context);
            auto t2 = Clock::now();
            (void)iter;
            (void)direct;

            iterMs.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
            directMs.push_back(std::chrono::duration<double, std::milli>(t2 - t1).count());
            row.iterativePeakTerms = std::max(row.iterativePeakTerms, stats.peakTerms);
            row.iterativeRewrites = std::max(row.iterativeRewrites, stats.rewrites);
        }
        row.medianIterativeMs = medianOf(iterMs);
        row.medianNonIterativeMs = medianOf(directMs);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ShapePtr> defaultBenchFamily() {
    std::vector<ShapePtr> family;
    for (int h = 2; h <= 6; ++h) {
        std::vector<int> lambda(static_cast<size_t>(h), 2);
        family.push_back(makeShape(lambda, {}));
    }
    family.push_back(makeShape({3, 3, 2}, {1}));
    family.push_back(makeShape({3, 3, 3}, {1}));
    return family;
}

std::string benchTable(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(16) << "shape" << std::right << std::setw(7)
        << "cells" << std::setw(12) << "iter ms" << std::setw(12) << "direct ms"
        << std::setw(12) << "peak terms" << std::setw(10) << "rewrites" << "\n";
    for (const BenchRow& r : rows) {
        out << std::left << std::setw(16) << r.shape << std::right << std::setw(7)
            << r.cells << std::setw(12) << std::fixed << std::setprecision(3)
            << r.medianIterativeMs << std::setw(12) << r.medianNonIterativeMs
            << std::setw(12) << r.iterativePeakTerms << std::setw(10)
            << r.iterativeRewrites << "\n";
    }
    return out.str();
}

}  // namespace skewschur
