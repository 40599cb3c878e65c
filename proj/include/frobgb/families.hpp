#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobgb/frobenius.hpp"
#include "frobgb/text.hpp"

namespace frobgb {

/// x^u (x^v - c x^w) with coprime x^v, x^w and x^v > x^w in grevlex.
class PrincipalBinomial {
public:
    PrincipalBinomial(Monomial u, Monomial v, Monomial w, FieldElement coeff)
        : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), coeff_(coeff) {
        Monomial::check(u_, v_);
        Monomial::check(u_, w_);
        if (coeff_.is_zero()) throw ConfigError("binomial coefficient must be a unit");
        if (!coprime(v_, w_)) throw ConfigError("binomial parts must be coprime");
        if (grevlex_cmp(v_, w_) != Cmp::Greater) throw ConfigError("binomial must be oriented v > w");
    }

    const Monomial& pre_factor() const { return u_; }
    const Monomial& high_part() const { return v_; }
    const Monomial& low_part() const { return w_; }
    const FieldElement& coeff() const { return coeff_; }
    std::size_t nvars() const { return u_.nvars(); }
    bool is_monoidal() const { return coeff_.is_one(); }

    Polynomial to_polynomial() const {
        PrimeModulus mod = coeff_.modulus();
        return Polynomial::from_terms(mod, nvars(),
                                      {Term{FieldElement(1, mod), u_ * v_},
                                       Term{-coeff_, u_ * w_}});
    }

    Ideal to_ideal() const {
        return Ideal(coeff_.modulus(), nvars(), {to_polynomial()});
    }

private:
    Monomial u_, v_, w_;
    FieldElement coeff_;
};

/// Primitive direction (B, C) together with the integer multipliers that
/// recover each binomial's exponent pair.
struct BinomialType {
    Monomial B, C;
    std::uint64_t l = 0, m = 0;
};

namespace detail {

inline std::uint64_t content(const Monomial& a, const Monomial& b) {
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) g = std::gcd(g, a[i]);
    for (std::size_t i = 0; i < b.nvars(); ++i) g = std::gcd(g, b[i]);
    return g;
}

inline Monomial scale_down(const Monomial& a, std::uint64_t d) {
    std::vector<std::uint64_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) e[i] = a[i] / d;
    return Monomial(std::move(e));
}

}  // namespace detail

/// Two binomials have the same type when their (high, low) exponent pairs
/// are integer multiples of one primitive direction.
inline std::optional<BinomialType> same_type(const PrincipalBinomial& f,
                                             const PrincipalBinomial& g) {
    if (f.nvars() != g.nvars()) throw DimensionMismatch();
    std::uint64_t df = detail::content(f.high_part(), f.low_part());
    std::uint64_t dg = detail::content(g.high_part(), g.low_part());
    if (df == 0 || dg == 0) return std::nullopt;
    Monomial B = detail::scale_down(f.high_part(), df);
    Monomial C = detail::scale_down(f.low_part(), df);
    if (detail::scale_down(g.high_part(), dg) != B) return std::nullopt;
    if (detail::scale_down(g.low_part(), dg) != C) return std::nullopt;
    return BinomialType{std::move(B), std::move(C), df, dg};
}

/// Stable value of E_j = lcm(x^{a+jb}, x^{qu}) / x^{jb} for large j:
/// coordinate i is a_i where b_i > 0 and max(a_i, q u_i) where b_i = 0.
inline Monomial e_infinity(const Monomial& a, const Monomial& b, const Monomial& u,
                           std::uint64_t q) {
    Monomial::check(a, b);
    Monomial::check(a, u);
    std::vector<std::uint64_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        e[i] = b[i] > 0 ? a[i] : std::max(a[i], detail::checked_mul(q, u[i]));
    return Monomial(std::move(e));
}

/// Four-element basis of J + I^[q] for comaximal principal binomials
/// I = (x^u(x^v - g)), J = (x^a(x^b - h)); duplicates are collapsed.
/// Comaximality of (x^v - g x^w, x^b - h x^c) is checked and forces the
/// low parts to vanish.
inline std::vector<Polynomial> thm32_basis(const PrincipalBinomial& I,
                                           const PrincipalBinomial& J, std::uint64_t q) {
    PrimeModulus mod = I.coeff().modulus();
    std::size_t n = I.nvars();
    Polynomial cop_i = Polynomial::from_terms(
        mod, n, {Term{FieldElement(1, mod), I.high_part()}, Term{-I.coeff(), I.low_part()}});
    Polynomial cop_j = Polynomial::from_terms(
        mod, n, {Term{FieldElement(1, mod), J.high_part()}, Term{-J.coeff(), J.low_part()}});
    if (!is_whole_ring(Ideal(mod, n, {cop_i, cop_j}))) throw NotComaximal();

    const Monomial &u = I.pre_factor(), &v = I.high_part();
    const Monomial &a = J.pre_factor(), &b = J.high_part();
    FieldElement g = I.coeff(), h = J.coeff();

    Monomial qu = u ^ q, qv = v ^ q;
    std::vector<Polynomial> out;
    auto add = [&](Polynomial f) {
        for (const auto& seen : out)
            if (seen == f) return;
        out.push_back(std::move(f));
    };
    add(Polynomial::from_terms(mod, n,
                               {Term{FieldElement(1, mod), qu * qv}, Term{-g.pow(q), qu}}));
    add(Polynomial::from_terms(mod, n, {Term{FieldElement(1, mod), a * b}, Term{-h, a}}));
    add(Polynomial::monomial(mod, quotient(lcm(qu * qv, a), qv)));
    add(Polynomial::monomial(mod, e_infinity(a, b, u, q)));
    return out;
}

/// Diagonal change of variables x_i -> k_i x_i that rescales both
/// binomials to coefficient 1.
struct Monoidalization {
    PrincipalBinomial image_i;
    PrincipalBinomial image_j;
    std::vector<FieldElement> scaling;

    Ideal ideal_i() const { return image_i.to_ideal(); }
    Ideal ideal_j() const { return image_j.to_ideal(); }
};

namespace detail {

inline FieldElement eval_power(const std::vector<FieldElement>& k, const Monomial& m,
                               PrimeModulus mod) {
    FieldElement acc(1, mod);
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m[i] > 0) acc = acc * k[i].pow(m[i]);
    return acc;
}

inline PrincipalBinomial rescale(const PrincipalBinomial& f,
                                 const std::vector<FieldElement>& k, PrimeModulus mod) {
    // x^u(x^v - c x^w) maps to a unit multiple of x^u(x^v - c' x^w) with
    // c' = c k^w / k^v.
    FieldElement c = f.coeff() * eval_power(k, f.low_part(), mod) /
                     eval_power(k, f.high_part(), mod);
    return PrincipalBinomial(f.pre_factor(), f.high_part(), f.low_part(), c);
}

inline std::optional<FieldElement> nth_root(const FieldElement& target, std::uint64_t n,
                                            PrimeModulus mod) {
    for (std::uint32_t t = 1; t < mod.value(); ++t) {
        FieldElement cand(t, mod);
        if (cand.pow(n) == target) return cand;
    }
    return std::nullopt;
}

}  // namespace detail

/// Searches for a diagonal substitution making both binomials monoidal.
/// The joint-scaling search is exhaustive over (F_p^*)^n; when it fails
/// and one binomial's support misses a variable used by the other, single
/// variable root substitutions are tried. Roots absent from the base field
/// yield an empty result. Same-type inputs are rejected outright.
inline std::optional<Monoidalization> monoidalize(const PrincipalBinomial& I,
                                                  const PrincipalBinomial& J) {
    if (same_type(I, J)) throw SameTypeUnsupported();
    PrimeModulus mod = I.coeff().modulus();
    std::size_t n = I.nvars();
    std::uint64_t units = mod.value() - 1;

    double space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= double(units);
    if (space > 2e6) throw ConfigError("joint scaling search space too large");

    const Monomial &v = I.high_part(), &w = I.low_part();
    const Monomial &b = J.high_part(), &c = J.low_part();

    auto finish = [&](std::vector<FieldElement> k) -> Monoidalization {
        PrincipalBinomial ii = detail::rescale(I, k, mod);
        PrincipalBinomial jj = detail::rescale(J, k, mod);
        return Monoidalization{std::move(ii), std::move(jj), std::move(k)};
    };

    // Joint scaling: k^v = g k^w and k^b = h k^c simultaneously.
    {
        std::vector<std::uint32_t> idx(n, 1);
        while (true) {
            std::vector<FieldElement> k;
            k.reserve(n);
            for (auto t : idx) k.emplace_back(t, mod);
            if (detail::eval_power(k, v, mod) == I.coeff() * detail::eval_power(k, w, mod) &&
                detail::eval_power(k, b, mod) == J.coeff() * detail::eval_power(k, c, mod))
                return finish(std::move(k));
            std::size_t pos = 0;
            while (pos < n && ++idx[pos] == mod.value()) idx[pos++] = 1;
            if (pos == n) break;
        }
    }

    std::vector<FieldElement> k(n, FieldElement(1, mod));

    auto solve_single = [&](const PrincipalBinomial& f) -> std::optional<std::size_t> {
        // Pick any variable appearing in exactly one part of f and scale it
        // so f's coefficient becomes 1; returns the scaled index.
        for (std::size_t j = 0; j < n; ++j) {
            if (f.high_part()[j] > 0) {
                auto t = detail::nth_root(f.coeff(), f.high_part()[j], mod);
                if (!t) return std::nullopt;
                k[j] = k[j] * *t;
                return j;
            }
            if (f.low_part()[j] > 0) {
                auto t = detail::nth_root(FieldElement(1, mod) / f.coeff(), f.low_part()[j], mod);
                if (!t) return std::nullopt;
                k[j] = k[j] * *t;
                return j;
            }
        }
        return std::nullopt;
    };

    auto free_index = [&](const PrincipalBinomial& used, const PrincipalBinomial& fixed) {
        // Index touching `used` but absent from `fixed`.
        for (std::size_t i = 0; i < n; ++i)
            if (used.high_part()[i] + used.low_part()[i] > 0 &&
                fixed.high_part()[i] + fixed.low_part()[i] == 0)
                return std::optional<std::size_t>(i);
        return std::optional<std::size_t>();
    };

    if (auto i = free_index(I, J)) {
        // Normalize J by a root substitution, then repair I on index i
        // without disturbing J.
        if (!solve_single(J)) return std::nullopt;
        PrincipalBinomial i1 = detail::rescale(I, k, mod);
        FieldElement g1 = i1.coeff();
        std::optional<FieldElement> s;
        if (v[*i] > 0)
            s = detail::nth_root(g1, v[*i], mod);
        else
            s = detail::nth_root(FieldElement(1, mod) / g1, w[*i], mod);
        if (!s) return std::nullopt;
        k[*i] = k[*i] * *s;
    } else if (auto ij = free_index(J, I)) {
        if (!solve_single(I)) return std::nullopt;
        PrincipalBinomial j1 = detail::rescale(J, k, mod);
        FieldElement h1 = j1.coeff();
        std::optional<FieldElement> s;
        if (b[*ij] > 0)
            s = detail::nth_root(h1, b[*ij], mod);
        else
            s = detail::nth_root(FieldElement(1, mod) / h1, c[*ij], mod);
        if (!s) return std::nullopt;
        k[*ij] = k[*ij] * *s;
    } else {
        return std::nullopt;
    }

    PrincipalBinomial ii = detail::rescale(I, k, mod);
    PrincipalBinomial jj = detail::rescale(J, k, mod);
    if (!ii.is_monoidal() || !jj.is_monoidal()) return std::nullopt;
    return Monoidalization{std::move(ii), std::move(jj), std::move(k)};
}

}  // namespace frobgb
