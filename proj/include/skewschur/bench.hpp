#ifndef SKEWSCHUR_BENCH_HPP
#define SKEWSCHUR_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "skewschur/shapes.hpp"

namespace skewschur {

struct BenchRow {
    std::string shape;          // "lambda/mu" in part-list notation
    int cells = 0;
    int repetitions = 0;
    double medianIterativeMs = 0.0;
    double medianNonIterativeMs = 0.0;
    std::size_t iterativePeakTerms = 0;   // max over the repetitions
    std::size_t iterativeRewrites = 0;    // max over the repetitions
};

/// Runs both straightening methods on identical seeded random fillings of
/// each shape and reports median wall times plus the iterative method's
/// intermediate-term growth. Purely informative. An alphabet of 0 or less
/// uses each shape's cell count.
std::vector<BenchRow> runBench(const std::vector<ShapePtr>& family, int alphabet,
                               int repetitions, std::uint64_t seed);

/// Staircase-flavoured default family of growing skew shapes.
std::vector<ShapePtr> defaultBenchFamily();

std::string benchTable(const std::vector<BenchRow>& rows);

}  // namespace skewschur

#endif
