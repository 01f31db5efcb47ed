#include "skewschur/polyring.hpp"

#include <sstream>
#include <stdexcept>

namespace skewschur {

Monomial Monomial::variable(Variable v, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Monomial m;
    if (exp > 0) m.exps_.emplace_back(v, exp);
    return m;
}

int Monomial::exponent(Variable v) const {
    for (const auto& [var, e] : exps_)
        if (var == v) return e;
    return 0;
}

int Monomial::totalDegree() const {
    int d = 0;
    for (const auto& [var, e] : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.exps_.reserve(exps_.size() + other.exps_.size());
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < other.exps_.size()) {
        if (j == other.exps_.size() ||
            (i < exps_.size() && exps_[i].first < other.exps_[j].first)) {
            out.exps_.push_back(exps_[i++]);
        } else if (i == exps_.size() || other.exps_[j].first < exps_[i].first) {
            out.exps_.push_back(other.exps_[j++]);
        } else {
            out.exps_.emplace_back(exps_[i].first, exps_[i].second + other.exps_[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    size_t i = 0, j = 0;
    // Walk variables in ascending order; a variable present on one side only
    // has exponent 0 on the other, and the smaller exponent loses.
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first))
            return std::strong_ordering::greater;
        if (i == fa.size() || fb[j].first < fa[i].first)
            return std::strong_ordering::less;
        if (fa[i].second != fb[j].second)
            return fa[i].second < fb[j].second ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

SparsePoly SparsePoly::constant(Int c) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace(Monomial{}, std::move(c));
    return p;
}

SparsePoly SparsePoly::variable(Variable v) {
    return term(Monomial::variable(v), 1);
}

SparsePoly SparsePoly::term(Monomial m, Int c) {
    SparsePoly p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    for (const auto& [m, c] : other.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
    SparsePoly out = *this;
    out += other;
    return out;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
    return *this + (-other);
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
    SparsePoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m = ma * mb;
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(m), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

SparsePoly SparsePoly::scaled(const Int& c) const {
    SparsePoly out;
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

std::pair<Monomial, Int> SparsePoly::leadingTerm() const {
    if (terms_.empty())
        throw std::invalid_argument("the zero polynomial has no leading term");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

Int SparsePoly::coefficientOf(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

Int SparsePoly::evaluate(const std::function<Int(Variable)>& value) const {
    Int total = 0;
    for (const auto& [m, c] : terms_) {
        Int prod = c;
        for (const auto& [v, e] : m.factors())
            for (int k = 0; k < e; ++k) prod *= value(v);
        total += prod;
    }
    return total;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Int& c = it->second;
        out << (c < 0 ? "-" : "+");
        Int abs = c < 0 ? Int(-c) : c;
        bool wroteCoeff = false;
        if (abs != 1 || it->first.isOne()) {
            out << abs;
            wroteCoeff = true;
        }
        for (const auto& [v, e] : it->first.factors()) {
            if (wroteCoeff) out << "*";
            wroteCoeff = true;
            out << "Z[" << v.row << "," << v.letter << "]";
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// Laplace expansion along the first remaining row, memoized on the bitmask
// of remaining columns (the remaining rows are determined by popcount).
SparsePoly detRec(const SymbolicMatrix& m, unsigned cols,
                  std::map<unsigned, SparsePoly>& memo) {
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    int n = m.dim();
    int k = n - __builtin_popcount(cols);  // current row
    SparsePoly result;
    if (cols == 0) {
        result = SparsePoly::constant(1);
    } else {
        int sign = 1;
        for (int j = 0; j < n; ++j) {
            if (!(cols & (1u << j))) continue;
            SparsePoly sub = detRec(m, cols & ~(1u << j), memo);
            SparsePoly piece = m.at(k, j) * sub;
            result += sign > 0 ? piece : -piece;
            sign = -sign;
        }
    }
    memo.emplace(cols, result);
    return result;
}

}  // namespace

SparsePoly determinant(const SymbolicMatrix& m) {
    int n = m.dim();
    if (n < 0 || n > 31) throw std::invalid_argument("determinant dimension out of range");
    std::map<unsigned, SparsePoly> memo;
    unsigned full = n == 0 ? 0u : ((1u << n) - 1);
    return detRec(m, full, memo);
}

}  // namespace skewschur
