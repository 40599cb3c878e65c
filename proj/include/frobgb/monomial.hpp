#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "frobgb/errors.hpp"

namespace frobgb {

/// Declared variable ordering, listed from greatest to least. The last
/// variable is the "least" one whose degree the delta statistic measures.
class VariableOrder {
public:
    explicit VariableOrder(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw ConfigError("variable order needs at least one variable");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw ConfigError("duplicate variable name: " + names_[i]);
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of a name, or npos when unknown.
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return npos;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const VariableOrder& a, const VariableOrder& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow();
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
    return r;
}

}  // namespace detail

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

/// Exponent vector x^a over a fixed variable count. Index 0 is the greatest
/// variable, index n-1 the least.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint64_t> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<std::uint64_t> exps) : exps_(exps) {}

    std::size_t nvars() const { return exps_.size(); }
    std::uint64_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint64_t>& exponents() const { return exps_; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto e : exps_) d = detail::checked_add(d, e);
        return d;
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        check(a, b);
        std::vector<std::uint64_t> e(a.nvars());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_add(a[i], b[i]);
        return Monomial(std::move(e));
    }

    /// Exponentwise scaling by a non-negative integer (x^a -> x^{ka}).
    friend Monomial operator^(const Monomial& a, std::uint64_t k) {
        std::vector<std::uint64_t> e(a.nvars());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_mul(a[i], k);
        return Monomial(std::move(e));
    }

    static void check(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw DimensionMismatch();
    }

private:
    std::vector<std::uint64_t> exps_;
};

/// Graded reverse lexicographic comparison: lower total degree is smaller;
/// on ties the monomial with the LARGER exponent at the LAST differing
/// variable is the SMALLER one.
inline Cmp grevlex_cmp(const Monomial& a, const Monomial& b) {
    Monomial::check(a, b);
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? Cmp::Less : Cmp::Greater;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Less : Cmp::Greater;
    }
    return Cmp::Equal;
}

inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    return grevlex_cmp(a, b) == Cmp::Less;
}

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial::check(a, b);
    std::vector<std::uint64_t> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial::check(a, b);
    std::vector<std::uint64_t> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

/// Does a divide b?
inline bool divides(const Monomial& a, const Monomial& b) {
    Monomial::check(a, b);
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// a / b, requiring b | a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
    if (!divides(b, a)) throw NotDivisible();
    std::vector<std::uint64_t> e(a.nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
    return Monomial(std::move(e));
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    return gcd(a, b).is_one();
}

}  // namespace frobgb
