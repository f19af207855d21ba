#pragma once

// Riccati equation a x^m dx + b x^{m+1} y dx + c y^2 dx + dy = 0 with the
// boundary behaviour c x y -> 1 at x = 0, its continued fraction for c y(1),
// and an ODE integrator for the regularized unknown w = c x y.

#include "eulercf/continued_fraction.hpp"
#include "eulercf/evaluate.hpp"
#include "eulercf/rational.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulercf {

struct OutOfScope : std::domain_error {
    using std::domain_error::domain_error;
};

template <class T = double>
struct RiccatiProblem {
    T a{}, b{}, c{}, m{};

    T shift() const { return m + T(2); }

    void validate() const {
        if (!(sign_of(shift()) > 0))
            throw OutOfScope("riccati requires m + 2 > 0 (boundary condition at x = 0)");
        if (is_zero(c)) throw std::invalid_argument("riccati requires c != 0");
    }

    /// k-th partial numerator of the signed fraction: ac + (i(m+2)+1) b for k = 2i+1, ac - i(m+2) b for k = 2i.
    T numerator(std::size_t k) const {
        T i(static_cast<long>(k / 2));
        T ac = a * c;
        if (k % 2 == 1) return ac + (i * shift() + T(1)) * b;
        return ac - i * shift() * b;
    }

    /// k(m+2) + 1, the magnitude of the k-th partial denominator.
    T denominator(std::size_t k) const { return T(static_cast<long>(k)) * shift() + T(1); }
};

namespace detail {

template <class T>
bool vanishes(const RiccatiProblem<T>& p, std::size_t k) {
    T n = p.numerator(k);
    if constexpr (is_exact_v<T>) {
        return is_zero(n);
    } else {
        double i = static_cast<double>(k / 2);
        double scale = std::abs(p.a * p.c) + std::abs((i * p.shift() + 1.0) * p.b);
        return std::abs(n) <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
    }
}

}  // namespace detail

template <class T>
struct RiccatiFraction {
    ContinuedFraction<T> cf;   // every denominator k(m+2)+1 > 0, numerators negated
    ContinuedFraction<T> raw;  // denominators -(m+3), 2m+5, -(3m+7), ...
    std::optional<std::size_t> terminates_at;  // length when a numerator vanishes
};

/// Index of the first vanishing numerator, solved from the two linear conditions on i.
template <class T>
std::optional<std::size_t> first_vanishing(const RiccatiProblem<T>& p) {
    if (is_zero(p.b)) {
        if (detail::vanishes(p, 1)) return 1;
        return std::nullopt;
    }
    T ac = p.a * p.c;
    std::optional<std::size_t> best;
    auto consider = [&](const T& i, std::size_t parity) {
        double x = to_double(i);
        if (!std::isfinite(x) || x < -0.5 || x > 1e15) return;
        auto whole = static_cast<std::size_t>(std::llround(x));
        std::size_t k = 2 * whole + parity;
        if (k == 0 || !detail::vanishes(p, k)) return;
        if (!best || k < *best) best = k;
    };
    consider((-ac / p.b - T(1)) / p.shift(), 1);
    consider(ac / (p.b * p.shift()), 0);
    return best;
}

/// Fraction for c y(1). `depth` = 0 leaves it unbounded; otherwise it is cut after `depth` terms.
template <class T>
RiccatiFraction<T> cf_from_riccati(const RiccatiProblem<T>& p, std::size_t depth = 0) {
    p.validate();
    std::optional<std::size_t> end;
    if (auto k = first_vanishing(p); k && (depth == 0 || *k <= depth + 1)) end = *k - 1;
    std::optional<std::size_t> length = end;
    if (!length && depth > 0) length = depth;

    auto raw = [p, length](std::size_t k) -> std::optional<PartialTerm<T>> {
        if (length && k > *length) return std::nullopt;
        T d = p.denominator(k);
        return PartialTerm<T>{p.numerator(k), k % 2 == 1 ? T(-d) : d};
    };
    auto normalized = [p, length](std::size_t k) -> std::optional<PartialTerm<T>> {
        if (length && k > *length) return std::nullopt;
        return PartialTerm<T>{T(-p.numerator(k)), p.denominator(k)};
    };
    return {ContinuedFraction<T>(T(1), normalized), ContinuedFraction<T>(T(1), raw), end};
}

/// Letters A, B, C, ... with y(1) = A + 1/(-B + 1/(C + 1/(-D + ...))).
template <class T>
std::vector<T> riccati_letters(const RiccatiProblem<T>& p, std::size_t count) {
    p.validate();
    std::vector<T> letters;
    if (count == 0) return letters;
    letters.push_back(T(1) / p.c);
    for (std::size_t k = 0; letters.size() < count; ++k) {
        T n = p.numerator(k + 1);
        if (is_zero(n)) break;
        letters.push_back(p.denominator(k) * p.denominator(k + 1) / (n * letters.back()));
    }
    return letters;
}

/// The letters as a fraction, alternating the sign of the denominators.
template <class T>
ContinuedFraction<T> letter_fraction(const std::vector<T>& letters) {
    std::vector<PartialTerm<T>> terms;
    for (std::size_t k = 1; k < letters.size(); ++k)
        terms.push_back({T(1), k % 2 == 1 ? T(-letters[k]) : letters[k]});
    return ContinuedFraction<T>::finite(letters.empty() ? T(0) : letters[0], std::move(terms));
}

enum class OdeStatus { ok, pole_encountered };

inline const char* to_string(OdeStatus s) { return s == OdeStatus::ok ? "ok" : "pole-encountered"; }

struct ODEResult {
    double w_at_1 = 0.0;
    std::size_t steps = 0;
    double est_error = 0.0;
    double x0 = 0.0;
    OdeStatus status = OdeStatus::ok;
};

/// Starting abscissa for a target tolerance.
inline double riccati_start(const RiccatiProblem<double>& p, double tol) {
    return std::min(1e-3, std::pow(tol / 100.0, 1.0 / (3.0 * p.m + 7.0)));
}

/// w(x0) = 1 + c1 z + c2 z^2 with z = x0^{m+2}.
inline double riccati_seed(const RiccatiProblem<double>& p, double x0) {
    double mu = p.shift();
    double c1 = -(p.a * p.c + p.b) / (mu + 1.0);
    double c2 = -c1 * (c1 + p.b) / (2.0 * mu + 1.0);
    double z = std::pow(x0, mu);
    return 1.0 + c1 * z + c2 * z * z;
}

namespace detail {

struct PoleHit {};

struct OdeRun {
    double w = 0.0;
    std::size_t steps = 0;
    bool pole = false;
};

// In t = ln x: dw/dt = w - w^2 - (b w + ac) e^{(m+2) t}.
inline OdeRun integrate_riccati(const RiccatiProblem<double>& p, double x0, double local_tol) {
    namespace odeint = boost::numeric::odeint;
    using State = std::array<double, 1>;
    const double mu = p.shift(), ac = p.a * p.c, b = p.b;
    auto rhs = [=](const State& w, State& dw, double t) {
        dw[0] = w[0] - w[0] * w[0] - (b * w[0] + ac) * std::exp(mu * t);
    };
    State w{riccati_seed(p, x0)};
    OdeRun run;
    auto observe = [](const State& s, double) {
        if (!std::isfinite(s[0]) || std::abs(s[0]) > 1e8) throw PoleHit{};
    };
    try {
        auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(local_tol, local_tol);
        run.steps = odeint::integrate_adaptive(stepper, rhs, w, std::log(x0), 0.0, 1e-3, observe);
        run.w = w[0];
    } catch (const PoleHit&) {
        run.pole = true;
    } catch (const odeint::odeint_error&) {
        run.pole = true;
    } catch (const std::overflow_error&) {
        run.pole = true;
    }
    if (!std::isfinite(run.w)) run.pole = true;
    return run;
}

}  // namespace detail

/// w(1) for w = c x y, integrated from the series seed with local tolerance tol/10.
inline ODEResult solve_riccati(const RiccatiProblem<double>& p, double tol, std::optional<double> x0 = std::nullopt) {
    p.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    ODEResult out;
    out.x0 = x0.value_or(riccati_start(p, tol));
    if (!(out.x0 > 0.0 && out.x0 < 1.0)) throw std::invalid_argument("starting point must lie in (0, 1)");
    auto coarse = detail::integrate_riccati(p, out.x0, tol / 10.0);
    auto fine = detail::integrate_riccati(p, out.x0, tol / 1000.0);
    if (coarse.pole || fine.pole) {
        out.status = OdeStatus::pole_encountered;
        out.w_at_1 = std::numeric_limits<double>::quiet_NaN();
        out.est_error = std::numeric_limits<double>::infinity();
        return out;
    }
    out.w_at_1 = fine.w;
    out.steps = coarse.steps + fine.steps;
    out.est_error = std::abs(coarse.w - fine.w);
    return out;
}

enum class RiccatiVerdict { pass, fail, pole_encountered };

inline const char* to_string(RiccatiVerdict v) {
    switch (v) {
        case RiccatiVerdict::pass: return "pass";
        case RiccatiVerdict::fail: return "fail";
        case RiccatiVerdict::pole_encountered: return "pole-encountered";
    }
    return "unknown";
}

struct RiccatiReport {
    double cf_value = 0.0;
    double ode_value = 0.0;
    double abs_error = 0.0;
    std::size_t cf_terms = 0;
    std::optional<std::size_t> terminates_at;
    ODEResult ode;
    RiccatiVerdict verdict = RiccatiVerdict::fail;
};

/// Fraction (at most `depth` terms) against the integrator; passes when they agree to `tol`.
inline RiccatiReport verify_riccati(const RiccatiProblem<double>& p, std::size_t depth, double tol) {
    auto fraction = cf_from_riccati(p);
    RiccatiReport out;
    out.terminates_at = fraction.terminates_at;
    auto eval = eval_float(fraction.cf, tol / 10.0, depth);
    out.cf_value = eval.value;
    out.cf_terms = eval.terms_used;
    out.ode = solve_riccati(p, tol);
    out.ode_value = out.ode.w_at_1;
    if (out.ode.status == OdeStatus::pole_encountered) {
        out.abs_error = std::numeric_limits<double>::infinity();
        out.verdict = RiccatiVerdict::pole_encountered;
        return out;
    }
    out.abs_error = std::abs(out.cf_value - out.ode_value);
    out.verdict = out.abs_error <= tol ? RiccatiVerdict::pass : RiccatiVerdict::fail;
    return out;
}

}  // namespace eulercf
