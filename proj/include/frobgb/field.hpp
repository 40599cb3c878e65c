#pragma once

#include <cstdint>
#include <ostream>

#include "frobgb/errors.hpp"

namespace frobgb {

/// A validated prime modulus p with 2 <= p < 2^31, so that products of
/// residues always fit in a signed/unsigned 64-bit intermediate.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 31) || !is_prime(p))
            throw InvalidModulus("modulus must be a prime in [2, 2^31): " + std::to_string(p));
    }

    std::uint32_t value() const { return p_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }
    friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.p_ != b.p_; }

private:
    static bool is_prime(std::uint32_t n) {
        if (n < 4) return n >= 2;
        if (n % 2 == 0 || n % 3 == 0) return false;
        for (std::uint64_t d = 5; d * d <= n; d += 6)
            if (n % d == 0 || n % (d + 2) == 0) return false;
        return true;
    }

    std::uint32_t p_;
};

/// Residue in F_p, always stored fully reduced to [0, p-1].
class FieldElement {
public:
    FieldElement(std::int64_t value, PrimeModulus mod) : mod_(mod) {
        std::int64_t p = mod.value();
        std::int64_t r = value % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return value_; }
    PrimeModulus modulus() const { return mod_; }
    std::uint32_t p() const { return mod_.value(); }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.p() == b.p() && a.value_ == b.value_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        std::uint64_t s = std::uint64_t(a.value_) + b.value_;
        if (s >= a.p()) s -= a.p();
        return FieldElement(s, a.mod_, raw_tag{});
    }

    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        std::uint64_t s = a.value_ >= b.value_ ? a.value_ - b.value_
                                               : std::uint64_t(a.value_) + a.p() - b.value_;
        return FieldElement(s, a.mod_, raw_tag{});
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return FieldElement(std::uint64_t(a.value_) * b.value_ % a.p(), a.mod_, raw_tag{});
    }

    FieldElement operator-() const {
        return FieldElement(value_ == 0 ? 0 : p() - value_, mod_, raw_tag{});
    }

    /// a^n by square-and-multiply; n is an ordinary non-negative integer.
    FieldElement pow(std::uint64_t n) const {
        std::uint64_t base = value_, acc = 1, p = this->p();
        while (n) {
            if (n & 1) acc = acc * base % p;
            base = base * base % p;
            n >>= 1;
        }
        return FieldElement(acc, mod_, raw_tag{});
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    FieldElement inv() const {
        if (value_ == 0) throw DivisionByZero();
        std::int64_t r0 = p(), r1 = value_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            std::int64_t s2 = s0 - q * s1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        return FieldElement(s0, mod_);
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inv();
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
        return os << a.value_;
    }

private:
    struct raw_tag {};
    FieldElement(std::uint64_t reduced, PrimeModulus mod, raw_tag)
        : value_(static_cast<std::uint32_t>(reduced)), mod_(mod) {}

    static void check(const FieldElement& a, const FieldElement& b) {
        if (a.p() != b.p()) throw ModulusMismatch();
    }

    std::uint32_t value_;
    PrimeModulus mod_;
};

}  // namespace frobgb
