#ifndef SKEWSCHUR_SWEEPS_HPP
#define SKEWSCHUR_SWEEPS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "skewschur/shapes.hpp"

namespace skewschur {

/// Seeded PRNG with a platform-independent stream: mt19937_64 reduced by
/// modulo, never uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform-enough draw from [lo, hi]; hi >= lo.
    int next(int lo, int hi) {
        return lo + static_cast<int>(engine_() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 engine_;
};

/// All partitions of exactly n, largest part first, in lexicographically
/// descending order of part lists.
std::vector<Partition> partitionsOf(int n);

/// All skew shapes with 1 <= |lambda/mu| <= maxCells and no empty rows or
/// columns (every row and column of lambda's diagram meets the skew part).
/// Shapes with empty rows or columns describe the same cell sets, so this
/// restriction keeps the sweep finite without losing diagrams.
std::vector<ShapePtr> skewShapesUpTo(int maxCells);

/// All m^|shape| fillings over the alphabet 1..m, in lexicographic entry
/// order.
void forEachFilling(const ShapePtr& shape, int m,
                    const std::function<void(const Filling&)>& fn);

/// All contents of total |shape| over m letters (compositions with zeros).
std::vector<Content> allContents(int total, int m);

Filling randomFilling(const ShapePtr& shape, int m, Rng& rng);

}  // namespace skewschur

#endif
