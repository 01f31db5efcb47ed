#ifndef SKEWSCHUR_POLYRING_HPP
#define SKEWSCHUR_POLYRING_HPP

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewschur/bigint.hpp"

namespace skewschur {

/// Indeterminate Z_{i,j}: i a diagram row index, j a letter.
struct Variable {
    int row;
    int letter;
    auto operator<=>(const Variable&) const = default;
};

/// Sparse exponent vector, kept sorted by variable ascending with all
/// exponents positive.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(Variable v, int exp = 1);

    bool isOne() const { return exps_.empty(); }
    int exponent(Variable v) const;
    int totalDegree() const;
    const std::vector<std::pair<Variable, int>>& factors() const { return exps_; }

    Monomial operator*(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::pair<Variable, int>> exps_;
};

/// Lexicographic monomial order: at the smallest variable with differing
/// exponent, the smaller exponent gives the smaller monomial.
std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compareMonomials(a, b) < 0;
    }
};

/// Multivariate polynomial over Int with exact arithmetic; no zero
/// coefficients are ever stored.
class SparsePoly {
public:
    SparsePoly() = default;
    static SparsePoly constant(Int c);
    static SparsePoly variable(Variable v);
    static SparsePoly term(Monomial m, Int c);

    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }
    const std::map<Monomial, Int, MonomialLess>& terms() const { return terms_; }

    SparsePoly operator+(const SparsePoly& other) const;
    SparsePoly operator-(const SparsePoly& other) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& other) const;
    SparsePoly scaled(const Int& c) const;

    SparsePoly& operator+=(const SparsePoly& other);

    /// Throws std::invalid_argument on the zero polynomial.
    std::pair<Monomial, Int> leadingTerm() const;

    Int coefficientOf(const Monomial& m) const;

    Int evaluate(const std::function<Int(Variable)>& value) const;

    /// Terms sorted descending by monomial order, e.g. "+3*Z[1,1]*Z[2,2]^2".
    std::string str() const;

    bool operator==(const SparsePoly& other) const { return terms_ == other.terms_; }

private:
    std::map<Monomial, Int, MonomialLess> terms_;
};

/// Square matrix of polynomials; 0x0 is legal.
class SymbolicMatrix {
public:
    explicit SymbolicMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n) {}

    int dim() const { return n_; }
    SparsePoly& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
    const SparsePoly& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * n_ + j];
    }

private:
    int n_;
    std::vector<SparsePoly> data_;
};

/// Exact determinant by Laplace expansion memoized on column subsets; the
/// 0x0 determinant is 1.
SparsePoly determinant(const SymbolicMatrix& m);

}  // namespace skewschur

#endif
