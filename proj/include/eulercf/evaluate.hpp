#pragma once

// Floating-point evaluation of a continued fraction by the forward recurrence,
// with a rigorous bracket whenever every term seen so far is positive.

#include "eulercf/continued_fraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>

namespace eulercf {

enum class EvalStatus { converged, budget_exhausted, divergent_flagged, terminated_finite };

inline const char* to_string(EvalStatus s) {
    switch (s) {
        case EvalStatus::converged: return "converged";
        case EvalStatus::budget_exhausted: return "budget-exhausted";
        case EvalStatus::divergent_flagged: return "divergent-flagged";
        case EvalStatus::terminated_finite: return "terminated-finite";
    }
    return "unknown";
}

struct EvalReport {
    double value = std::numeric_limits<double>::quiet_NaN();
    std::optional<double> lower;
    std::optional<double> upper;
    std::size_t terms_used = 0;
    EvalStatus status = EvalStatus::budget_exhausted;
    bool positive = true;  // every consumed term had b > 0 and a > 0

    bool has_bracket() const { return lower.has_value() && upper.has_value(); }
    double width() const { return has_bracket() ? *upper - *lower : std::numeric_limits<double>::infinity(); }
};

namespace detail {

// Minimum successive gap per dyadic window [2^j, 2^{j+1}) of term indices.
class GapWindows {
public:
    void add(std::size_t k, double gap) {
        if (k >= next_boundary_) {
            previous_ = current_;
            current_ = std::numeric_limits<double>::infinity();
            while (next_boundary_ <= k) next_boundary_ *= 2;
        }
        current_ = std::min(current_, gap);
    }
    bool contracting() const { return current_ < previous_; }

private:
    std::size_t next_boundary_ = 2;
    double previous_ = std::numeric_limits<double>::infinity();
    double current_ = std::numeric_limits<double>::infinity();
};

}  // namespace detail

/// Evaluates `cf` to absolute tolerance `tol` using at most `max_terms` terms.
inline EvalReport eval_float(const ContinuedFraction<double>& cf, double tol, std::size_t max_terms) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    constexpr double big = 0x1p512;
    constexpr double small = 0x1p-512;

    EvalReport report;
    double p_prev = 1.0, q_prev = 0.0;
    double p = cf.leading(), q = 1.0;
    double value = p;
    double previous_value = value;
    bool has_previous = true;
    int small_gaps = 0;
    detail::GapWindows windows;

    auto finish = [&](EvalStatus status, std::size_t used) {
        report.value = value;
        report.terms_used = used;
        report.status = status;
        if (!std::isfinite(value)) {
            report.status = EvalStatus::divergent_flagged;
            report.lower.reset();
            report.upper.reset();
        }
        return report;
    };

    for (std::size_t k = 1; k <= max_terms; ++k) {
        auto t = cf.term(k);
        if (!t) {
            if (report.positive) report.lower = report.upper = value;
            return finish(EvalStatus::terminated_finite, k - 1);
        }
        if (t->numerator == 0.0) {
            if (report.positive) report.lower = report.upper = value;
            return finish(EvalStatus::terminated_finite, k);
        }
        if (!(t->numerator > 0.0 && t->denominator > 0.0)) {
            report.positive = false;
            report.lower.reset();
            report.upper.reset();
        }

        double p_next = t->denominator * p + t->numerator * p_prev;
        double q_next = t->denominator * q + t->numerator * q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        double magnitude = std::max({std::abs(p), std::abs(q), std::abs(p_prev), std::abs(q_prev)});
        if (magnitude > big) {
            p *= small, q *= small, p_prev *= small, q_prev *= small;
        } else if (magnitude < small && magnitude > 0.0) {
            p *= big, q *= big, p_prev *= big, q_prev *= big;
        }
        if (q == 0.0) {
            has_previous = false;
            small_gaps = 0;
            continue;
        }
        value = p / q;
        if (!std::isfinite(value)) return finish(EvalStatus::divergent_flagged, k);

        if (report.positive) {
            double other = q_prev != 0.0 ? p_prev / q_prev : value;
            report.lower = std::min(value, other);
            report.upper = std::max(value, other);
            if (*report.upper - *report.lower <= tol) return finish(EvalStatus::converged, k);
        } else if (has_previous) {
            double gap = std::abs(value - previous_value);
            windows.add(k, gap);
            small_gaps = gap <= tol ? small_gaps + 1 : 0;
            if (small_gaps >= 2) return finish(EvalStatus::converged, k);
        }
        previous_value = value;
        has_previous = true;
    }
    if (!report.positive && !windows.contracting()) return finish(EvalStatus::divergent_flagged, max_terms);
    return finish(EvalStatus::budget_exhausted, max_terms);
}

}  // namespace eulercf
