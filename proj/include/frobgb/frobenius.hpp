#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "frobgb/groebner.hpp"

namespace frobgb {

/// q = p^e for a non-negative integer e.
struct FrobeniusExponent {
    std::uint32_t p;
    std::uint32_t e;
    std::uint64_t q;

    FrobeniusExponent(std::uint32_t prime, std::uint32_t exponent)
        : p(prime), e(exponent), q(1) {
        for (std::uint32_t i = 0; i < e; ++i) q = detail::checked_mul(q, p);
    }
};

/// The three complexity statistics of a reduced basis: the degree in the
/// least variable, the maximal total degree, and the element count.
struct Metrics {
    std::uint64_t delta = 0;
    std::uint64_t Delta = 0;
    std::uint64_t count = 0;

    friend bool operator==(const Metrics& a, const Metrics& b) {
        return a.delta == b.delta && a.Delta == b.Delta && a.count == b.count;
    }
    friend bool operator!=(const Metrics& a, const Metrics& b) { return !(a == b); }
};

/// f^q computed by e applications of the Frobenius map: every coefficient
/// is raised to the p-th power and every exponent vector is scaled by p.
inline Polynomial frobenius_power(const Polynomial& f, const FrobeniusExponent& fe) {
    if (fe.p != f.modulus().value()) throw CharMismatch();
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    for (std::uint32_t step = 0; step < fe.e; ++step)
        for (auto& t : terms) t = Term{t.coeff.pow(fe.p), t.mono ^ fe.p};
    return Polynomial::from_terms(f.modulus(), f.nvars(), std::move(terms));
}

inline Ideal ideal_frobenius(const Ideal& I, const FrobeniusExponent& fe) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, fe));
    return Ideal(I.modulus(), I.nvars(), std::move(gens));
}

inline Metrics metrics_of(const GroebnerBasis& G) {
    Metrics m;
    m.count = G.elements.size();
    if (G.nvars == 0) return m;
    std::size_t least = G.nvars - 1;
    for (const auto& f : G.elements) {
        m.delta = std::max(m.delta, f.degree_in(least));
        m.Delta = std::max(m.Delta, f.total_degree());
    }
    return m;
}

/// One measurement: the reduced basis of J + I^[p^e] and its statistics.
struct SweepRow {
    std::uint32_t e;
    std::uint64_t q;
    Metrics metrics;
    GroebnerBasis basis;
    std::optional<std::string> matched_family;
};

/// Reduced bases of J + I^[p^e] for e in [e_lo, e_hi]. Rows are independent
/// and computed on worker threads; the result is merged in ascending e, so
/// output does not depend on scheduling.
inline std::vector<SweepRow> sweep(const Ideal& I, const Ideal& J, PrimeModulus p,
                                   std::uint32_t e_lo, std::uint32_t e_hi,
                                   CompletionStrategy strategy = {}) {
    if (I.modulus() != p || J.modulus() != p) throw CharMismatch();
    if (I.nvars() != J.nvars()) throw DimensionMismatch();
    std::vector<SweepRow> rows;
    if (e_hi < e_lo) return rows;

    auto compute = [&](std::uint32_t e) {
        FrobeniusExponent fe(p.value(), e);
        std::vector<Polynomial> gens = J.generators();
        Ideal frob = ideal_frobenius(I, fe);
        gens.insert(gens.end(), frob.generators().begin(), frob.generators().end());
        GroebnerBasis G = reduced_groebner(Ideal(p, I.nvars(), std::move(gens)), strategy);
        Metrics m = metrics_of(G);
        return SweepRow{e, fe.q, m, std::move(G), std::nullopt};
    };

    std::vector<std::future<SweepRow>> pending;
    for (std::uint32_t e = e_lo; e <= e_hi; ++e)
        pending.push_back(std::async(std::launch::async, compute, e));
    rows.reserve(pending.size());
    for (auto& f : pending) rows.push_back(f.get());
    return rows;
}

}  // namespace frobgb
