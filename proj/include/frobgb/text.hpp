#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "frobgb/polynomial.hpp"

namespace frobgb {

// Surface syntax:
//   poly := ['-'] term (('+'|'-') term)*
//   term := int | int '*' mono | mono
//   mono := var ['^' uint] ('*' var ['^' uint])*
// Whitespace is ignored everywhere. Integer coefficients of any size are
// accepted and reduced modulo p.

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& src, PrimeModulus mod, const VariableOrder& vars)
        : src_(src), mod_(mod), vars_(vars) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        terms.push_back(parse_term(negate));
        skip_ws();
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            terms.push_back(parse_term(c == '-'));
            skip_ws();
        }
        return Polynomial::from_terms(mod_, vars_.size(), std::move(terms));
    }

private:
    Term parse_term(bool negate) {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("expected a term", pos_);
        FieldElement coeff(1, mod_);
        std::vector<std::uint64_t> exps(vars_.size(), 0);
        bool have_factor = false;

        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_int();
            have_factor = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                parse_mono_into(exps);
            }
        } else {
            parse_mono_into(exps);
            have_factor = true;
        }
        if (!have_factor) throw ParseError("empty term", pos_);
        if (negate) coeff = -coeff;
        return Term{coeff, Monomial(std::move(exps))};
    }

    void parse_mono_into(std::vector<std::uint64_t>& exps) {
        while (true) {
            skip_ws();
            std::size_t at = pos_;
            std::string name = parse_ident();
            std::size_t idx = vars_.index_of(name);
            if (idx == VariableOrder::npos) throw ParseError("unknown variable '" + name + "'", at);
            std::uint64_t e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                e = parse_uint();
            }
            exps[idx] = detail::checked_add(exps[idx], e);
            skip_ws();
            // A '*' continues the monomial only when a variable follows;
            // "2*x" style coefficient separators are consumed by the caller.
            if (peek() == '*') {
                std::size_t save = pos_;
                ++pos_;
                skip_ws();
                if (pos_ < src_.size() && is_ident_start(src_[pos_])) continue;
                pos_ = save;
                return;
            }
            return;
        }
    }

    FieldElement parse_int() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("expected an integer", at);
        FieldElement acc(0, mod_);
        FieldElement ten(10, mod_);
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            acc = acc * ten + FieldElement(src_[pos_] - '0', mod_);
            ++pos_;
        }
        return acc;
    }

    std::uint64_t parse_uint() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ < src_.size() && src_[pos_] == '-')
            throw ParseError("negative exponent", pos_);
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("expected an exponent", at);
        std::uint64_t acc = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            acc = detail::checked_add(detail::checked_mul(acc, 10), std::uint64_t(src_[pos_] - '0'));
            ++pos_;
        }
        return acc;
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string parse_ident() {
        if (pos_ >= src_.size() || !is_ident_start(src_[pos_]))
            throw ParseError("expected a variable", pos_);
        std::size_t start = pos_;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    const std::string& src_;
    PrimeModulus mod_;
    const VariableOrder& vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, PrimeModulus mod,
                                   const VariableOrder& vars) {
    return detail::PolyParser(text, mod, vars).parse();
}

inline std::string format_monomial(const Monomial& m, const VariableOrder& vars) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

/// Canonical printing: terms descending, residues 0..p-1, no unary minus.
inline std::string format_polynomial(const Polynomial& f, const VariableOrder& vars) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += '+';
        std::string mono = format_monomial(t.mono, vars);
        if (mono.empty()) {
            out += std::to_string(t.coeff.value());
        } else if (t.coeff.is_one()) {
            out += mono;
        } else {
            out += std::to_string(t.coeff.value()) + '*' + mono;
        }
    }
    return out;
}

}  // namespace frobgb
