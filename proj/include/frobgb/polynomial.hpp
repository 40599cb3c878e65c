#pragma once

#include <map>
#include <utility>
#include <vector>

#include "frobgb/field.hpp"
#include "frobgb/monomial.hpp"

namespace frobgb {

/// One nonzero term c * x^a.
struct Term {
    FieldElement coeff;
    Monomial mono;

    friend bool operator==(const Term& a, const Term& b) {
        return a.coeff == b.coeff && a.mono == b.mono;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
};

/// Sparse polynomial over F_p with terms kept strictly descending in grevlex.
/// The empty term list is the zero polynomial; the first term leads.
class Polynomial {
public:
    Polynomial(PrimeModulus mod, std::size_t nvars)
        : mod_(mod), nvars_(nvars) {}

    /// Canonicalizes: merges like monomials, drops zero coefficients, sorts.
    static Polynomial from_terms(PrimeModulus mod, std::size_t nvars, std::vector<Term> terms) {
        std::map<Monomial, FieldElement, GrevlexLess> acc;
        for (auto& t : terms) {
            if (t.mono.nvars() != nvars) throw DimensionMismatch();
            if (t.coeff.modulus() != mod) throw ModulusMismatch();
            auto it = acc.find(t.mono);
            if (it == acc.end())
                acc.emplace(std::move(t.mono), t.coeff);
            else
                it->second = it->second + t.coeff;
        }
        Polynomial f(mod, nvars);
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) f.terms_.push_back(Term{it->second, it->first});
        return f;
    }

    static Polynomial zero(PrimeModulus mod, std::size_t nvars) { return Polynomial(mod, nvars); }

    static Polynomial constant(PrimeModulus mod, std::size_t nvars, std::int64_t c) {
        return from_terms(mod, nvars, {Term{FieldElement(c, mod), Monomial(nvars)}});
    }

    static Polynomial monomial(PrimeModulus mod, Monomial m, std::int64_t c = 1) {
        std::size_t n = m.nvars();
        return from_terms(mod, n, {Term{FieldElement(c, mod), std::move(m)}});
    }

    PrimeModulus modulus() const { return mod_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw ZeroPolynomial();
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const FieldElement& leading_coeff() const { return leading_term().coeff; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    /// Largest exponent of variable i across all terms.
    std::uint64_t degree_in(std::size_t i) const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono[i]);
        return d;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.mod_ == b.mod_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        Polynomial r(a.mod_, a.nvars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            Cmp c = grevlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
            if (c == Cmp::Greater) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c == Cmp::Less) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                FieldElement s = a.terms_[i].coeff + b.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back(Term{s, a.terms_[i].mono});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    /// Multiply by a single term (no merging needed: strictly monotone map).
    friend Polynomial operator*(const Term& t, const Polynomial& f) {
        if (t.coeff.is_zero()) return Polynomial(f.mod_, f.nvars_);
        Polynomial r(f.mod_, f.nvars_);
        r.terms_.reserve(f.terms_.size());
        for (const auto& ft : f.terms_)
            r.terms_.push_back(Term{t.coeff * ft.coeff, t.mono * ft.mono});
        return r;
    }

    friend Polynomial operator*(const FieldElement& c, const Polynomial& f) {
        return Term{c, Monomial(f.nvars_)} * f;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check(a, b);
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                acc.push_back(Term{ta.coeff * tb.coeff, ta.mono * tb.mono});
        return from_terms(a.mod_, a.nvars_, std::move(acc));
    }

    /// Scale so the leading coefficient is 1. Zero stays zero.
    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return leading_coeff().inv() * *this;
    }

    static void check(const Polynomial& a, const Polynomial& b) {
        if (a.mod_ != b.mod_) throw ModulusMismatch();
        if (a.nvars_ != b.nvars_) throw DimensionMismatch();
    }

private:
    PrimeModulus mod_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// Remainder plus the quotient multipliers witnessing f = sum q_i g_i + r.
struct ReductionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;
};

/// Full normal form of f modulo the list G. Every term of the result is
/// irreducible: not divisible by any leading monomial in G. Deterministic:
/// the greatest reducible term is rewritten by the first matching divisor
/// in list order.
inline ReductionResult reduce_with_quotients(const Polynomial& f,
                                             const std::vector<Polynomial>& G) {
    ReductionResult out{Polynomial::zero(f.modulus(), f.nvars()), {}};
    out.quotients.assign(G.size(), Polynomial::zero(f.modulus(), f.nvars()));
    Polynomial h = f;
    std::vector<Term> kept;
    while (!h.is_zero()) {
        const Term& lead = h.leading_term();
        bool rewritten = false;
        for (std::size_t k = 0; k < G.size(); ++k) {
            const Polynomial& g = G[k];
            if (g.is_zero()) continue;
            if (divides(g.leading_monomial(), lead.mono)) {
                Term q{lead.coeff / g.leading_coeff(), quotient(lead.mono, g.leading_monomial())};
                h = h - q * g;
                out.quotients[k] = out.quotients[k] + Polynomial::from_terms(f.modulus(), f.nvars(), {q});
                rewritten = true;
                break;
            }
        }
        if (!rewritten) {
            kept.push_back(lead);
            h = h - Polynomial::from_terms(f.modulus(), f.nvars(), {lead});
        }
    }
    out.remainder = Polynomial::from_terms(f.modulus(), f.nvars(), std::move(kept));
    return out;
}

inline Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& G) {
    // Same loop as above without the bookkeeping; this is the hot path of
    // the completion engine.
    Polynomial h = f;
    std::vector<Term> kept;
    while (!h.is_zero()) {
        const Term& lead = h.leading_term();
        bool rewritten = false;
        for (const Polynomial& g : G) {
            if (g.is_zero()) continue;
            if (divides(g.leading_monomial(), lead.mono)) {
                Term q{lead.coeff / g.leading_coeff(), quotient(lead.mono, g.leading_monomial())};
                h = h - q * g;
                rewritten = true;
                break;
            }
        }
        if (!rewritten) {
            kept.push_back(lead);
            h = h - Polynomial::from_terms(f.modulus(), f.nvars(), {lead});
        }
    }
    return Polynomial::from_terms(f.modulus(), f.nvars(), std::move(kept));
}

/// S(f,g) = (L/lt f) f - (L/lt g) g with L = lcm of the leading monomials;
/// the leading terms cancel by construction.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Polynomial::check(f, g);
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
    Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
    Term tf{f.leading_coeff().inv(), quotient(L, f.leading_monomial())};
    Term tg{g.leading_coeff().inv(), quotient(L, g.leading_monomial())};
    return tf * f - tg * g;
}

}  // namespace frobgb
