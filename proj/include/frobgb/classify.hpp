#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frobgb {

using Rational = boost::rational<long long>;

/// One measured point of a complexity series.
struct SeriesSample {
    std::uint32_t e;
    std::uint64_t q;
    std::uint64_t value;
};

enum class BehaviorKind {
    Constant,
    Linear,
    EventuallyConstant,
    EventuallyLinear,
    Periodic2Constant,
    Periodic2Linear,
    Unclassified,
};

inline const char* to_string(BehaviorKind k) {
    switch (k) {
        case BehaviorKind::Constant: return "constant";
        case BehaviorKind::Linear: return "linear";
        case BehaviorKind::EventuallyConstant: return "eventually-constant";
        case BehaviorKind::EventuallyLinear: return "eventually-linear";
        case BehaviorKind::Periodic2Constant: return "periodic2-constant";
        case BehaviorKind::Periodic2Linear: return "periodic2-linear";
        case BehaviorKind::Unclassified: return "unclassified";
    }
    return "?";
}

/// value = A*q + B, exactly.
struct AffineFit {
    Rational A, B;

    bool matches(std::uint64_t q, std::uint64_t value) const {
        return A * Rational(static_cast<long long>(q)) + B ==
               Rational(static_cast<long long>(value));
    }
    friend bool operator==(const AffineFit& a, const AffineFit& b) {
        return a.A == b.A && a.B == b.B;
    }
};

struct BehaviorClass {
    BehaviorKind kind = BehaviorKind::Unclassified;
    std::uint32_t onset = 0;
    std::optional<AffineFit> fit;       // constant / linear kinds
    std::optional<AffineFit> fit_even;  // periodic kinds, split by e mod 2
    std::optional<AffineFit> fit_odd;
};

inline std::string to_string(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

inline std::string describe(const BehaviorClass& b) {
    std::string s = to_string(b.kind);
    if (b.kind == BehaviorKind::Unclassified) return s;
    auto show = [](const AffineFit& f) {
        if (f.A == 0) return to_string(f.B);
        std::string t = to_string(f.A) + "*q";
        if (f.B > 0) t += "+" + to_string(f.B);
        if (f.B < 0) t += "-" + to_string(-f.B);
        return t;
    };
    if (b.fit) s += " [" + show(*b.fit) + "]";
    if (b.fit_even && b.fit_odd)
        s += " [even e: " + show(*b.fit_even) + ", odd e: " + show(*b.fit_odd) + "]";
    s += " (onset e=" + std::to_string(b.onset) + ")";
    return s;
}

namespace detail {

inline std::optional<AffineFit> line_through(const std::vector<SeriesSample>& pts) {
    // Exact line through a class of samples, or nothing. A single sample
    // does not pin a line.
    if (pts.size() < 2) return std::nullopt;
    Rational q0(static_cast<long long>(pts[0].q)), v0(static_cast<long long>(pts[0].value));
    Rational q1(static_cast<long long>(pts[1].q)), v1(static_cast<long long>(pts[1].value));
    AffineFit f{(v1 - v0) / (q1 - q0), Rational(0)};
    f.B = v0 - f.A * q0;
    for (const auto& s : pts)
        if (!f.matches(s.q, s.value)) return std::nullopt;
    return f;
}

}  // namespace detail

/// Exact-fit classification of a complexity series. Patterns are tried in
/// priority order constant, linear, then period-2 alternation between two
/// parallel affine functions of q; within a pattern the earliest onset
/// wins. Fits are exact over the rationals; nothing is classified by
/// approximation.
inline BehaviorClass classify(const std::vector<SeriesSample>& series) {
    BehaviorClass out;
    if (series.empty()) return out;
    if (series.size() == 1) {
        out.kind = BehaviorKind::Constant;
        out.onset = series[0].e;
        out.fit = AffineFit{Rational(0), Rational(static_cast<long long>(series[0].value))};
        return out;
    }

    auto suffix_from = [&](std::size_t start) {
        return std::vector<SeriesSample>(series.begin() + static_cast<std::ptrdiff_t>(start),
                                         series.end());
    };

    // constant
    for (std::size_t s = 0; s + 1 < series.size(); ++s) {
        auto suf = suffix_from(s);
        bool all_equal = true;
        for (const auto& p : suf) all_equal = all_equal && p.value == suf[0].value;
        if (!all_equal) continue;
        out.kind = s == 0 ? BehaviorKind::Constant : BehaviorKind::EventuallyConstant;
        out.onset = suf[0].e;
        out.fit = AffineFit{Rational(0), Rational(static_cast<long long>(suf[0].value))};
        return out;
    }

    // linear: a two-sample suffix pins a line only when it is the whole series
    for (std::size_t s = 0; s + 1 < series.size(); ++s) {
        auto suf = suffix_from(s);
        if (suf.size() < 3 && suf.size() != series.size()) break;
        if (auto f = detail::line_through(suf)) {
            out.kind = s == 0 ? BehaviorKind::Linear : BehaviorKind::EventuallyLinear;
            out.onset = suf[0].e;
            out.fit = *f;
            return out;
        }
    }

    // period-2 alternation: one slope, two intercepts
    for (std::size_t s = 0; s + 2 < series.size(); ++s) {
        auto suf = suffix_from(s);
        std::vector<SeriesSample> cls[2];
        for (const auto& p : suf) cls[p.e % 2].push_back(p);
        if (cls[0].empty() || cls[1].empty()) continue;

        std::optional<AffineFit> f0 = detail::line_through(cls[0]);
        std::optional<AffineFit> f1 = detail::line_through(cls[1]);
        if (!f0 && !f1) continue;
        if (f0 && f1 && f0->A != f1->A) continue;
        if (!f0) {
            // single even sample: reuse the odd slope
            Rational A = f1->A;
            Rational B = Rational(static_cast<long long>(cls[0][0].value)) -
                         A * Rational(static_cast<long long>(cls[0][0].q));
            f0 = AffineFit{A, B};
        }
        if (!f1) {
            Rational A = f0->A;
            Rational B = Rational(static_cast<long long>(cls[1][0].value)) -
                         A * Rational(static_cast<long long>(cls[1][0].q));
            f1 = AffineFit{A, B};
        }
        if (f0->A == f1->A && f0->B == f1->B) continue;  // plain linear, already rejected

        bool ok = true;
        for (const auto& p : suf) {
            const AffineFit& f = p.e % 2 == 0 ? *f0 : *f1;
            ok = ok && f.matches(p.q, p.value);
        }
        if (!ok) continue;
        out.kind = f0->A == 0 ? BehaviorKind::Periodic2Constant : BehaviorKind::Periodic2Linear;
        out.onset = suf[0].e;
        out.fit_even = *f0;
        out.fit_odd = *f1;
        return out;
    }

    out.kind = BehaviorKind::Unclassified;
    return out;
}

}  // namespace frobgb
