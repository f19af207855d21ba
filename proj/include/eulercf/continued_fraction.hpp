#pragma once

// Continued fractions A + b1/(a1 + b2/(a2 + ...)) with lazily generated terms,
// exact or floating-point convergents, Euler's equivalent alternating series,
// even contraction and equivalence transformations.

#include "eulercf/rational.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulercf {

/// Raised when a generator produces a zero partial denominator.
struct ZeroDenominator : std::domain_error {
    std::size_t index;
    explicit ZeroDenominator(std::size_t k)
        : std::domain_error("partial denominator " + std::to_string(k) + " is zero"), index(k) {}
};

/// Raised when an even contraction hits a vanishing pivot a_{2k-2}.
struct UndefinedContraction : std::domain_error {
    std::size_t depth;
    explicit UndefinedContraction(std::size_t k)
        : std::domain_error("even contraction undefined at depth " + std::to_string(k)), depth(k) {}
};

template <class T>
struct PartialTerm {
    T numerator;
    T denominator;

    friend bool operator==(const PartialTerm&, const PartialTerm&) = default;
};

/// A + b1/(a1 + b2/(a2 + ...)). The generator is called with k = 1, 2, ... and
/// returns std::nullopt past the end of a finite fraction. It must be a pure
/// function of k so that copies can be shared between threads.
template <class T>
class ContinuedFraction {
public:
    using value_type = T;
    using Generator = std::function<std::optional<PartialTerm<T>>(std::size_t)>;

    ContinuedFraction(T leading, Generator generator)
        : leading_(std::move(leading)), generator_(std::move(generator)) {}

    static ContinuedFraction finite(T leading, std::vector<PartialTerm<T>> terms) {
        auto shared = std::make_shared<const std::vector<PartialTerm<T>>>(std::move(terms));
        return ContinuedFraction(std::move(leading), [shared](std::size_t k) -> std::optional<PartialTerm<T>> {
            if (k == 0 || k > shared->size()) return std::nullopt;
            return (*shared)[k - 1];
        });
    }

    const T& leading() const { return leading_; }

    /// Term k (1-based), or nullopt when the fraction has ended.
    std::optional<PartialTerm<T>> term(std::size_t k) const {
        if (k == 0) throw std::out_of_range("continued fraction terms are 1-based");
        auto t = generator_(k);
        if (t && is_zero(t->denominator)) throw ZeroDenominator(k);
        return t;
    }

    /// Up to k leading terms (fewer if the fraction is finite).
    std::vector<PartialTerm<T>> prefix(std::size_t k) const {
        std::vector<PartialTerm<T>> out;
        out.reserve(k);
        for (std::size_t i = 1; i <= k; ++i) {
            auto t = term(i);
            if (!t) break;
            out.push_back(std::move(*t));
        }
        return out;
    }

    /// Same fraction with every entry passed through `convert`.
    template <class U, class F>
    ContinuedFraction<U> map(F convert) const {
        auto gen = generator_;
        return ContinuedFraction<U>(convert(leading_), [gen, convert](std::size_t k) -> std::optional<PartialTerm<U>> {
            auto t = gen(k);
            if (!t) return std::nullopt;
            return PartialTerm<U>{convert(t->numerator), convert(t->denominator)};
        });
    }

    ContinuedFraction<double> to_double() const {
        return map<double>([](const T& x) { return eulercf::to_double(x); });
    }

private:
    T leading_;
    Generator generator_;
};

template <class T>
struct Convergent {
    std::size_t index = 0;
    T p;
    T q;

    bool defined() const { return !is_zero(q); }
    T value() const {
        if (!defined()) throw std::domain_error("convergent " + std::to_string(index) + " is undefined");
        return p / q;
    }
};

/// Convergents 0..k by the three-term recurrence. Entries with q = 0 are kept
/// (defined() is false) so that indices line up with the recurrence.
template <class T>
std::vector<Convergent<T>> convergent_sequence(const ContinuedFraction<T>& cf, std::size_t k) {
    std::vector<Convergent<T>> out;
    out.reserve(k + 1);
    T p_prev = T(1), q_prev = T(0);
    T p = cf.leading(), q = T(1);
    out.push_back({0, p, q});
    for (std::size_t i = 1; i <= k; ++i) {
        auto t = cf.term(i);
        if (!t) break;
        T p_next = t->denominator * p + t->numerator * p_prev;
        T q_next = t->denominator * q + t->numerator * q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        out.push_back({i, p, q});
    }
    return out;
}

/// Values of the defined convergents among indices 0..k.
template <class T>
std::vector<T> convergent_values(const ContinuedFraction<T>& cf, std::size_t k) {
    std::vector<T> out;
    for (const auto& c : convergent_sequence(cf, k))
        if (c.defined()) out.push_back(c.value());
    return out;
}

template <class T>
struct SeriesExpansion {
    std::vector<T> terms;                     // terms[0] is the leading term
    std::optional<std::size_t> undefined_at;  // first j with q_{j-1} q_j = 0
};

/// Euler's alternating series: term_j = (-1)^{j+1} b1...bj / (q_{j-1} q_j).
/// Its partial sums are exactly the convergents.
template <class T>
SeriesExpansion<T> euler_series_expansion(const ContinuedFraction<T>& cf, std::size_t k) {
    SeriesExpansion<T> out;
    out.terms.push_back(cf.leading());
    T q_prev = T(0), q = T(1);
    T product = T(1);
    for (std::size_t j = 1; j <= k; ++j) {
        auto t = cf.term(j);
        if (!t) break;
        T q_next = t->denominator * q + t->numerator * q_prev;
        product *= t->numerator;
        T denom = q * q_next;
        if (is_zero(denom)) {
            out.undefined_at = j;
            break;
        }
        T term = product / denom;
        out.terms.push_back(j % 2 == 1 ? term : T(-term));
        q_prev = std::move(q);
        q = std::move(q_next);
    }
    return out;
}

/// Fraction whose k-th convergent is the 2k-th convergent of `cf`. A finite
/// fraction of odd length is treated as if padded with the term 0/1.
template <class T>
ContinuedFraction<T> even_contraction(const ContinuedFraction<T>& cf) {
    auto padded = [cf](std::size_t i, bool& ended) -> PartialTerm<T> {
        auto t = cf.term(i);
        if (!t) {
            ended = true;
            return {T(0), T(1)};
        }
        return *t;
    };
    return ContinuedFraction<T>(cf.leading(), [cf, padded](std::size_t k) -> std::optional<PartialTerm<T>> {
        bool ended_odd = false, ended_even = false;
        PartialTerm<T> odd = padded(2 * k - 1, ended_odd);
        if (ended_odd) return std::nullopt;
        PartialTerm<T> even = padded(2 * k, ended_even);
        if (k == 1) {
            return PartialTerm<T>{odd.numerator * even.denominator,
                                  odd.denominator * even.denominator + even.numerator};
        }
        bool unused = false;
        PartialTerm<T> before = padded(2 * k - 2, unused);
        if (is_zero(before.denominator)) throw UndefinedContraction(k);
        T ratio = even.denominator / before.denominator;
        return PartialTerm<T>{T(-(before.numerator * odd.numerator * ratio)),
                              even.numerator + odd.denominator * even.denominator + odd.numerator * ratio};
    });
}

enum class Positivity { guaranteed_convergent, not_guaranteed };

inline const char* to_string(Positivity p) {
    return p == Positivity::guaranteed_convergent ? "guaranteed-convergent" : "not-guaranteed";
}

/// guaranteed_convergent iff the first k partial numerators and denominators are all positive.
template <class T>
Positivity positivity_class(const ContinuedFraction<T>& cf, std::size_t k) {
    for (std::size_t i = 1; i <= k; ++i) {
        auto t = cf.term(i);
        if (!t) break;
        if (sign_of(t->numerator) <= 0 || sign_of(t->denominator) <= 0) return Positivity::not_guaranteed;
    }
    return Positivity::guaranteed_convergent;
}

/// b'_k = c_{k-1} c_k b_k, a'_k = c_k a_k with c_0 = 1; scales past the end of
/// `scales` are 1. Every convergent value is preserved.
template <class T>
ContinuedFraction<T> equivalence_transform(const ContinuedFraction<T>& cf, std::vector<T> scales) {
    for (std::size_t i = 0; i < scales.size(); ++i)
        if (is_zero(scales[i])) throw std::invalid_argument("equivalence scale " + std::to_string(i + 1) + " is zero");
    auto shared = std::make_shared<const std::vector<T>>(std::move(scales));
    auto scale = [shared](std::size_t k) -> T { return k == 0 || k > shared->size() ? T(1) : (*shared)[k - 1]; };
    return ContinuedFraction<T>(cf.leading(), [cf, scale](std::size_t k) -> std::optional<PartialTerm<T>> {
        auto t = cf.term(k);
        if (!t) return std::nullopt;
        T ck = scale(k);
        return PartialTerm<T>{scale(k - 1) * ck * t->numerator, ck * t->denominator};
    });
}

/// Generator-backed equivalence transform with scales c_k = scale(k).
template <class T, class F>
ContinuedFraction<T> equivalence_transform_by(const ContinuedFraction<T>& cf, F scale) {
    return ContinuedFraction<T>(cf.leading(), [cf, scale](std::size_t k) -> std::optional<PartialTerm<T>> {
        auto t = cf.term(k);
        if (!t) return std::nullopt;
        T ck = scale(k);
        if (is_zero(ck)) throw std::invalid_argument("equivalence scale " + std::to_string(k) + " is zero");
        T prev = k == 1 ? T(1) : scale(k - 1);
        return PartialTerm<T>{prev * ck * t->numerator, ck * t->denominator};
    });
}

}  // namespace eulercf
