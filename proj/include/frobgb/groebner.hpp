#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <vector>

#include "frobgb/polynomial.hpp"

namespace frobgb {

/// Finitely generated ideal; zero generators are discarded on construction.
class Ideal {
public:
    Ideal(PrimeModulus mod, std::size_t nvars, std::vector<Polynomial> gens)
        : mod_(mod), nvars_(nvars) {
        for (auto& g : gens) {
            if (g.modulus() != mod) throw ModulusMismatch();
            if (g.nvars() != nvars) throw DimensionMismatch();
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    PrimeModulus modulus() const { return mod_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

private:
    PrimeModulus mod_;
    std::size_t nvars_;
    std::vector<Polynomial> gens_;
};

enum class PairSelection { MinLcmDegree, Fifo };

struct CompletionStrategy {
    PairSelection pair_selection = PairSelection::MinLcmDegree;
    bool use_coprime_criterion = true;
    bool use_chain_criterion = true;

    static CompletionStrategy default_strategy() { return {}; }
    static CompletionStrategy fifo_naive() {
        return {PairSelection::Fifo, false, false};
    }
};

/// Unique reduced Groebner basis: monic elements, pairwise non-divisible
/// leading monomials, no term divisible by another element's lead, sorted
/// ascending by leading monomial.
struct GroebnerBasis {
    PrimeModulus mod;
    std::size_t nvars;
    std::vector<Polynomial> elements;

    bool is_trivial_unit() const {
        return elements.size() == 1 && elements[0].size() == 1 &&
               elements[0].leading_monomial().is_one() && elements[0].leading_coeff().is_one();
    }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.mod == b.mod && a.nvars == b.nvars && a.elements == b.elements;
    }
};

namespace detail {

class PairQueue {
public:
    explicit PairQueue(PairSelection mode) : mode_(mode) {}

    void push(std::size_t i, std::size_t j, std::uint64_t lcm_deg) {
        if (mode_ == PairSelection::MinLcmDegree)
            ordered_.insert({lcm_deg, i, j});
        else
            fifo_.push_back({i, j});
    }

    bool empty() const {
        return mode_ == PairSelection::MinLcmDegree ? ordered_.empty() : fifo_.empty();
    }

    std::pair<std::size_t, std::size_t> pop() {
        if (mode_ == PairSelection::MinLcmDegree) {
            auto it = ordered_.begin();
            auto [deg, i, j] = *it;
            ordered_.erase(it);
            return {i, j};
        }
        auto pr = fifo_.front();
        fifo_.pop_front();
        return pr;
    }

private:
    PairSelection mode_;
    std::set<std::tuple<std::uint64_t, std::size_t, std::size_t>> ordered_;
    std::deque<std::pair<std::size_t, std::size_t>> fifo_;
};

}  // namespace detail

/// Buchberger completion. Returns a (not necessarily reduced) Groebner
/// basis containing the monic-normalized input generators. The coprime
/// criterion skips pairs with coprime leads; the chain criterion skips a
/// pair when a third lead divides its lcm and both companion pairs are
/// already handled.
inline std::vector<Polynomial> buchberger(const Ideal& I,
                                          CompletionStrategy strategy = {}) {
    std::vector<Polynomial> basis;
    for (const auto& g : I.generators()) basis.push_back(g.monic());

    detail::PairQueue queue(strategy.pair_selection);
    std::set<std::pair<std::size_t, std::size_t>> handled;

    auto enqueue = [&](std::size_t i, std::size_t j) {
        queue.push(i, j, lcm(basis[i].leading_monomial(), basis[j].leading_monomial()).total_degree());
    };

    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) enqueue(i, j);

    auto pair_handled = [&](std::size_t a, std::size_t b) {
        return handled.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    while (!queue.empty()) {
        auto [i, j] = queue.pop();
        handled.insert({i, j});

        const Monomial& mi = basis[i].leading_monomial();
        const Monomial& mj = basis[j].leading_monomial();
        if (strategy.use_coprime_criterion && coprime(mi, mj)) continue;
        if (strategy.use_chain_criterion) {
            Monomial L = lcm(mi, mj);
            bool skip = false;
            for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
                if (k == i || k == j) continue;
                if (divides(basis[k].leading_monomial(), L) && pair_handled(i, k) &&
                    pair_handled(j, k))
                    skip = true;
            }
            if (skip) continue;
        }

        Polynomial r = reduce(s_polynomial(basis[i], basis[j]), basis);
        if (!r.is_zero()) {
            basis.push_back(r.monic());
            std::size_t idx = basis.size() - 1;
            for (std::size_t k = 0; k < idx; ++k) enqueue(k, idx);
        }
    }
    return basis;
}

/// The unique reduced Groebner basis: minimalize leads, then inter-reduce
/// tails to a fixed point, then sort ascending by leading monomial.
inline GroebnerBasis reduced_groebner(const Ideal& I, CompletionStrategy strategy = {}) {
    std::vector<Polynomial> G = buchberger(I, strategy);

    std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<Polynomial> minimal;
    for (auto& g : G) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (divides(h.leading_monomial(), g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(g));
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t k = 0; k < minimal.size(); ++k)
                if (k != i) others.push_back(minimal[k]);
            Polynomial r = reduce(minimal[i], others);
            if (r.is_zero()) {
                minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                --i;
            } else {
                Polynomial m = r.monic();
                if (m != minimal[i]) {
                    minimal[i] = std::move(m);
                    changed = true;
                }
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_less(a.leading_monomial(), b.leading_monomial());
    });
    return GroebnerBasis{I.modulus(), I.nvars(), std::move(minimal)};
}

/// Structural check used by the test suites: monic, sorted, and no term of
/// any element divisible by another element's leading monomial.
inline bool is_reduced_basis(const GroebnerBasis& G) {
    const auto& el = G.elements;
    for (std::size_t i = 0; i < el.size(); ++i) {
        if (!el[i].leading_coeff().is_one()) return false;
        if (i + 1 < el.size() &&
            grevlex_cmp(el[i].leading_monomial(), el[i + 1].leading_monomial()) != Cmp::Less)
            return false;
        for (std::size_t j = 0; j < el.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : el[i].terms())
                if (divides(el[j].leading_monomial(), t.mono)) return false;
        }
    }
    return true;
}

inline bool ideal_equal(const Ideal& A, const Ideal& B) {
    if (A.modulus() != B.modulus()) throw ModulusMismatch();
    if (A.nvars() != B.nvars()) throw DimensionMismatch();
    return reduced_groebner(A) == reduced_groebner(B);
}

inline bool is_whole_ring(const Ideal& I) {
    return reduced_groebner(I).is_trivial_unit();
}

}  // namespace frobgb
