#pragma once

// Alternating series n0/d0 - n1/d1 + n2/d2 - ... and their continued-fraction form.

#include "eulercf/continued_fraction.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eulercf {

template <class T>
struct SeriesSpec {
    std::vector<T> numerators;
    std::vector<T> denominators;

    std::size_t size() const { return numerators.size(); }

    void validate() const {
        if (numerators.size() != denominators.size())
            throw std::invalid_argument("series numerators and denominators differ in length");
        if (numerators.empty()) throw std::invalid_argument("series is empty");
        for (std::size_t i = 0; i < denominators.size(); ++i)
            if (is_zero(denominators[i]))
                throw std::invalid_argument("series denominator " + std::to_string(i) + " is zero");
    }

    /// Partial sums s_1 .. s_n (s_k sums the first k terms).
    std::vector<T> partial_sums() const {
        std::vector<T> out;
        T sum = T(0);
        for (std::size_t i = 0; i < size(); ++i) {
            T term = numerators[i] / denominators[i];
            if (i % 2 == 0)
                sum += term;
            else
                sum -= term;
            out.push_back(sum);
        }
        return out;
    }
};

template <class T>
struct SeriesConversion {
    ContinuedFraction<T> cf;
    std::optional<std::size_t> zero_pivot;  // index of the term whose denominator vanished
};

/// Continued fraction with leading 0 whose k-th convergent is the k-th partial
/// sum of the series. Uses at most `depth` series terms (0 means all of them).
/// Stops before the first vanishing pivot n_{j-1} d_j - n_j d_{j-1}.
template <class T>
SeriesConversion<T> series_to_cf(const SeriesSpec<T>& series, std::size_t depth = 0) {
    series.validate();
    const auto& n = series.numerators;
    const auto& d = series.denominators;
    std::size_t count = depth == 0 ? series.size() : std::min(depth, series.size());

    std::vector<PartialTerm<T>> terms;
    std::optional<std::size_t> zero_pivot;
    terms.push_back({n[0], d[0]});
    for (std::size_t k = 2; k <= count; ++k) {
        std::size_t j = k - 1;
        T pivot = n[j - 1] * d[j] - n[j] * d[j - 1];
        if (is_zero(pivot)) {
            zero_pivot = k;
            break;
        }
        T numerator = k == 2 ? T(n[1] * d[0] * d[0]) : T(n[j - 2] * n[j] * d[j - 1] * d[j - 1]);
        terms.push_back({std::move(numerator), std::move(pivot)});
    }
    return {ContinuedFraction<T>::finite(T(0), std::move(terms)), zero_pivot};
}

struct GaussLemmaParams {
    double p = 0.0;
    double q = 0.0;
    double s = 0.0;
};

struct GaussSum {
    double partial_sum = 0.0;
    double closed_form = 0.0;
};

/// n-term partial sum of 1 + p/(q+s) + p(p+s)/((q+s)(q+2s)) + ..., and q/(q-p).
inline GaussSum gauss_sum_check(const GaussLemmaParams& g, std::size_t n_terms) {
    if (!(g.p > 0.0 && g.s > 0.0)) throw std::invalid_argument("summation lemma needs p > 0 and s > 0");
    if (!(g.q > g.p)) throw std::invalid_argument("summation lemma needs q > p");
    double term = 1.0, sum = 0.0;
    for (std::size_t i = 0; i < n_terms; ++i) {
        sum += term;
        term *= (g.p + static_cast<double>(i) * g.s) / (g.q + static_cast<double>(i + 1) * g.s);
    }
    return {sum, g.q / (g.q - g.p)};
}

}  // namespace eulercf
