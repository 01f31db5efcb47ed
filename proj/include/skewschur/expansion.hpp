#ifndef SKEWSCHUR_EXPANSION_HPP
#define SKEWSCHUR_EXPANSION_HPP

#include <map>

#include "skewschur/bigint.hpp"
#include "skewschur/shapes.hpp"

namespace skewschur {

enum class BasisKind { Ssyt, D };

/// Finite integer combination of basis tableaux of a fixed
/// (shape, content) context. Zero coefficients are never stored.
struct Expansion {
    BasisKind basis = BasisKind::Ssyt;
    TableauSetPtr context;
    std::map<int, Int> coeffs;  // 0-based tableau index -> nonzero value

    void add(int index, const Int& value) {
        if (value == 0) return;
        Int& slot = coeffs[index];
        slot += value;
        if (slot == 0) coeffs.erase(index);
    }

    bool isZero() const { return coeffs.empty(); }

    bool operator==(const Expansion& other) const {
        return basis == other.basis && coeffs == other.coeffs;
    }
};

}  // namespace skewschur

#endif
