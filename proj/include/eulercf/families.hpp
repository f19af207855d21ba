#pragma once

// Catalog of parameterized continued-fraction identities. Every family builds
// its fraction for a parameter assignment (in double or exact arithmetic) and
// computes one or two reference values independently, by Beta closed forms or
// double-exponential quadrature.

#include "eulercf/continued_fraction.hpp"
#include "eulercf/quadrature.hpp"
#include "eulercf/special.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eulercf {

struct ParamValue {
    double value = 0.0;
    std::optional<Rational> exact;

    ParamValue() = default;
    ParamValue(double v) : value(v) {}  // NOLINT(google-explicit-constructor)
    ParamValue(const Rational& r) : value(to_double(r)), exact(r) {}  // NOLINT(google-explicit-constructor)
};

using ParamMap = std::map<std::string, ParamValue>;

struct ConstraintViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct References {
    double primary = 0.0;
    std::optional<double> secondary;
    double error_estimate = 0.0;
    bool converged = true;
};

struct FamilyInfo {
    std::string id;
    std::vector<std::string> params;
    std::string summary;
    bool divergent_without_positivity = false;  // losing positivity means the fraction diverges
};

struct Family {
    FamilyInfo info;
    std::function<std::optional<std::string>(const ParamMap&)> constraint;
    std::function<ContinuedFraction<double>(const ParamMap&)> cf_double;
    std::function<ContinuedFraction<Rational>(const ParamMap&)> cf_exact;  // empty when not exactly representable
    std::function<References(const ParamMap&, double target)> reference;
};

namespace families {

template <class T>
T get(const ParamMap& pm, const std::string& name) {
    auto it = pm.find(name);
    if (it == pm.end()) throw BadParameters("missing parameter '" + name + "'");
    if constexpr (is_exact_v<T>) {
        if (!it->second.exact) throw BadParameters("parameter '" + name + "' has no exact rational value");
        return *it->second.exact;
    } else {
        return it->second.value;
    }
}

inline double d(const ParamMap& pm, const std::string& name) { return get<double>(pm, name); }

template <class T>
T idx(std::size_t k) {
    return T(static_cast<long long>(k));
}

template <class T>
using Term = std::optional<PartialTerm<T>>;

template <class T, class F>
ContinuedFraction<T> make(T leading, F f) {
    return ContinuedFraction<T>(std::move(leading), [f](std::size_t k) -> Term<T> { return f(k); });
}

// Collects the first violated predicate.
class Checks {
public:
    Checks& require(bool ok, const char* what) {
        if (!ok && !failure_) failure_ = what;
        return *this;
    }
    std::optional<std::string> result() const { return failure_; }

private:
    std::optional<std::string> failure_;
};

inline References single(const QuadratureResult& q, double value) {
    return {value, std::nullopt, q.error_estimate, q.converged};
}

inline References constant(double v) { return {v, std::nullopt, 0.0, true}; }

inline References ratio(const QuadratureResult& num, const QuadratureResult& den, double scale = 1.0) {
    return {scale * num.value / den.value, std::nullopt, std::max(num.error_estimate, den.error_estimate),
            num.converged && den.converged};
}

inline double S(double x, double r) { return sqrt_kernel_integral(x, r); }

// ---- fixed constants -------------------------------------------------------

template <class T>
ContinuedFraction<T> log2_cf(const ParamMap&) {
    return make<T>(T(0), [](std::size_t k) -> Term<T> {
        T j = idx<T>(k - 1);
        return PartialTerm<T>{k == 1 ? T(1) : T(j * j), T(1)};
    });
}

template <class T>
ContinuedFraction<T> brouncker_cf(const ParamMap&) {
    return make<T>(T(0), [](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{T(1), T(1)};
        T odd = idx<T>(2 * k - 3);
        return PartialTerm<T>{T(odd * odd), T(2)};
    });
}

template <class T>
ContinuedFraction<T> e_cf(const ParamMap&) {
    return make<T>(T(2), [](std::size_t k) -> Term<T> { return PartialTerm<T>{idx<T>(k + 1), idx<T>(k + 1)}; });
}

// Fixed fractions whose terms are given by a small integer rule.
template <class T>
ContinuedFraction<T> integer_cf(long leading, std::function<std::pair<long long, long long>(long long)> rule) {
    return make<T>(T(leading), [rule](std::size_t k) -> Term<T> {
        auto [b, a] = rule(static_cast<long long>(k));
        return PartialTerm<T>{T(b), T(a)};
    });
}

// ---- F1: ∫ x^{n-1}/(1+x^m) -------------------------------------------------

template <class T>
ContinuedFraction<T> f1_cf(const ParamMap& pm) {
    T m = get<T>(pm, "m"), n = get<T>(pm, "n");
    return make<T>(T(0), [m, n](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{T(1), n};
        T base = idx<T>(k - 2) * m + n;
        return PartialTerm<T>{T(base * base), m};
    });
}

template <class T>
ContinuedFraction<T> f1_frac_cf(const ParamMap& pm) {
    T m = get<T>(pm, "m"), n = get<T>(pm, "n");
    return make<T>(T(0), [m, n](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{T(1), T(1)};
        if (k == 2) return PartialTerm<T>{n, m};
        T base = idx<T>(k - 2) * m + n;
        return PartialTerm<T>{T(base * base), m};
    });
}

// ---- F2: ∫ x^{n-1} (1+x^m)^{-mu/nu} ------------------------------------------

template <class T>
ContinuedFraction<T> f2_cf(const ParamMap& pm) {
    T m = get<T>(pm, "m"), n = get<T>(pm, "n"), mu = get<T>(pm, "mu"), nu = get<T>(pm, "nu");
    return make<T>(T(0), [m, n, mu, nu](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{T(1), n};
        if (k == 2) return PartialTerm<T>{T(mu * n * n), T(nu * m + (nu - mu) * n)};
        T j = idx<T>(k - 2);
        T base = j * m + n;
        return PartialTerm<T>{T(j * nu * (mu + j * nu) * base * base),
                              T(((2 * j + 1) * nu - j * mu) * m + (nu - mu) * n)};
    });
}

// ---- F3: s + 1/(2s + 9/(2s + 25/...)) ----------------------------------------

template <class T>
ContinuedFraction<T> f3_cf(const ParamMap& pm) {
    T s = get<T>(pm, "s");
    return make<T>(s, [s](std::size_t k) -> Term<T> {
        T odd = idx<T>(2 * k - 1);
        return PartialTerm<T>{T(odd * odd), T(2 * s)};
    });
}

inline double f3_reference(double s) { return (s + 1.0) * S(s + 3.0, 2.0) / S(s + 1.0, 2.0); }

// ---- F4: three forms of (p+2q-r) S(p+2q, r) / S(p, r) -----------------------

template <class T>
ContinuedFraction<T> f4_a_cf(const ParamMap& pm) {
    T p = get<T>(pm, "p"), q = get<T>(pm, "q"), r = get<T>(pm, "r");
    return make<T>(p, [p, q, r](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{T(2 * p * (q - r)), T(p + r)};
        T kk = idx<T>(k);
        return PartialTerm<T>{T((p + 2 * q + (kk - 3) * r) * (p + (kk - 1) * r)), r};
    });
}

template <class T>
ContinuedFraction<T> f4_a_alt_cf(const ParamMap& pm) {
    T p = get<T>(pm, "p"), q = get<T>(pm, "q"), r = get<T>(pm, "r");
    return make<T>(T(0), [p, q, r](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{p, T(1)};
        if (k == 2) return PartialTerm<T>{T(2 * (r - q)), T(p + 2 * q - r)};
        T kk = idx<T>(k);
        return PartialTerm<T>{T((p + 2 * q + (kk - 4) * r) * (p + (kk - 2) * r)), r};
    });
}

template <class T>
ContinuedFraction<T> f4_b_cf(const ParamMap& pm) {
    T p = get<T>(pm, "p"), q = get<T>(pm, "q"), r = get<T>(pm, "r");
    return make<T>(T(p + q - r), [p, q, r](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{T(q * (r - q)), T(p + q)};
        T kk = idx<T>(k);
        return PartialTerm<T>{T((p + (kk - 2) * r) * (p + 2 * q + (kk - 3) * r)), T(2 * r)};
    });
}

template <class T>
ContinuedFraction<T> f4_c_cf(const ParamMap& pm) {
    T p = get<T>(pm, "p"), q = get<T>(pm, "q"), r = get<T>(pm, "r");
    return make<T>(T(p + 2 * q - r), [p, q, r](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{T(-2 * q * (p + 2 * q - r)), T(p + 2 * q)};
        T kk = idx<T>(k);
        return PartialTerm<T>{T((p + (kk - 2) * r) * (p + 2 * q + (kk - 2) * r)), r};
    });
}

inline std::optional<std::string> f4_constraint(const ParamMap& pm) {
    double p = d(pm, "p"), q = d(pm, "q"), r = d(pm, "r");
    return Checks{}.require(p > 0, "p > 0").require(r > 0, "r > 0").require(p + 2 * q > 0, "p + 2q > 0").result();
}

inline References f4_reference(const ParamMap& pm, double) {
    double p = d(pm, "p"), q = d(pm, "q"), r = d(pm, "r");
    return constant((p + 2 * q - r) * S(p + 2 * q, r) / S(p, r));
}

// ---- F5 / F6: numerators (f+(k-1)r)(h+(k-1)r) -------------------------------

template <class T>
ContinuedFraction<T> f56_cf(const ParamMap& pm, bool doubled) {
    T f = get<T>(pm, "f"), h = get<T>(pm, "h"), r = get<T>(pm, "r");
    T a = doubled ? T(2 * r) : r;
    return make<T>(a, [f, h, r, a](std::size_t k) -> Term<T> {
        T j = idx<T>(k - 1);
        return PartialTerm<T>{T((f + j * r) * (h + j * r)), a};
    });
}

inline std::optional<std::string> fhr_constraint(const ParamMap& pm) {
    return Checks{}
        .require(d(pm, "f") > 0, "f > 0")
        .require(d(pm, "h") > 0, "h > 0")
        .require(d(pm, "r") > 0, "r > 0")
        .result();
}

/// Both representations of r + fh/(r + (f+r)(h+r)/(r + ...)).
inline References f5_reference(const ParamMap& pm, double target) {
    double f = d(pm, "f"), h = d(pm, "h"), r = d(pm, "r");
    if (f > h) std::swap(f, h);
    References out;
    if (f == h) {
        auto i = reciprocal_kernel_integral(h, r, target);
        out.primary = (1.0 - (h - r) * i.value) / i.value;
        out.error_estimate = i.error_estimate;
        out.converged = i.converged;
    } else {
        double sf = S(f + r, r), sh = S(h + r, r);
        out.primary = (h * (f - r) * sh - f * (h - r) * sf) / (f * sf - h * sh);
    }
    double be = (h - f) / (2.0 * r);
    auto j = [&](double x) {
        return integrate({.alpha = x, .r = r, .beta = be, .gamma_exp = be - 1.0, .p = 1.0, .q = 1.0}, target);
    };
    auto upper = j(f + r), lower = j(f);
    out.secondary = r + h * upper.value / lower.value;
    out.error_estimate = std::max({out.error_estimate, upper.error_estimate, lower.error_estimate});
    out.converged = out.converged && upper.converged && lower.converged;
    return out;
}

inline References f6_reference(const ParamMap& pm, double target) {
    double f = d(pm, "f"), h = d(pm, "h"), r = d(pm, "r");
    if (h == f + r) std::swap(f, h);
    if (f == h + r) {
        auto j = reciprocal_kernel_integral(h, r, target);
        return single(j, (h + 2.0 * h * (r - h) * j.value) / (-1.0 + 2.0 * h * j.value));
    }
    double sf = S(f, r), sh = S(h + r, r);
    return constant((2.0 * (r - f) * (r - h) * sf - h * (f + h - 3.0 * r) * sh) / (2.0 * h * sh - (f + h - r) * sf));
}

// ---- F7: s + q(r-q)/(2s + (r+q)(2r-q)/(2s + ...)) ----------------------------

template <class T>
ContinuedFraction<T> f7_cf(const ParamMap& pm) {
    T q = get<T>(pm, "q"), r = get<T>(pm, "r"), s = get<T>(pm, "s");
    return make<T>(s, [q, r, s](std::size_t k) -> Term<T> {
        T kk = idx<T>(k);
        return PartialTerm<T>{T(((kk - 1) * r + q) * (kk * r - q)), T(2 * s)};
    });
}

inline double f7_reference(double q, double r, double s) {
    return (q + s) * S(q + r + s, r) / S(r + s - q, r);
}

// ---- F8: the master (a, b, c, r, p, q) family --------------------------------

template <class T>
ContinuedFraction<T> f8_terms(T a, T b, T c, T r, T p, T q, T leading) {
    T g = a + b - c - r;
    return make<T>(std::move(leading), [a, b, c, r, p, q, g](std::size_t k) -> Term<T> {
        if (k == 1) return PartialTerm<T>{T(p * g), T(a * p - b * q)};
        T j = idx<T>(k - 1);
        return PartialTerm<T>{T(p * q * (c + j * r) * (g + j * r)), T((a + j * r) * p - (b + j * r) * q)};
    });
}

template <class T>
ContinuedFraction<T> f8_cf(const ParamMap& pm) {
    return f8_terms<T>(get<T>(pm, "a"), get<T>(pm, "b"), get<T>(pm, "c"), get<T>(pm, "r"), get<T>(pm, "p"),
                       get<T>(pm, "q"), T(0));
}

/// ∫₀¹ x^{e-1} (1-x^r)^{(c-b)/r} (p+qx^r)^{(c-a)/r} dx.
inline QuadratureResult master_integral(double e, double a, double b, double c, double r, double p, double q,
                                        double target) {
    return integrate({.alpha = e, .r = r, .beta = (c - b) / r, .gamma_exp = (c - a) / r, .p = p, .q = q}, target);
}

inline std::optional<std::string> master_constraint(double a, double b, double c, double r, double p, double q) {
    return Checks{}
        .require(r > 0, "r > 0")
        .require(a + b - c - r > 0, "a + b - c - r > 0")
        .require(c - b + r > 0, "c - b + r > 0")
        .require(p > 0, "p > 0")
        .require(p + q > 0, "p + q > 0")
        .result();
}

inline References f8_reference(const ParamMap& pm, double target) {
    double a = d(pm, "a"), b = d(pm, "b"), c = d(pm, "c"), r = d(pm, "r"), p = d(pm, "p"), q = d(pm, "q");
    double g = a + b - c - r;
    return ratio(master_integral(g + r, a, b, c, r, p, q, target), master_integral(g, a, b, c, r, p, q, target));
}

struct GoldenPreset {
    double a, b, c, r, p, q;
};

inline GoldenPreset golden_preset() {
    const double root5 = std::sqrt(5.0);
    return {(1.0 + 3.0 * root5) / (2.0 * root5), (3.0 * root5 - 1.0) / (2.0 * root5), 1.0, 1.0,
            (root5 + 1.0) / 2.0, (root5 - 1.0) / 2.0};
}

// ---- F9: equal denominators s ------------------------------------------------

template <class T>
ContinuedFraction<T> f9_cf(const ParamMap& pm) {
    T c = get<T>(pm, "c"), g = get<T>(pm, "g"), r = get<T>(pm, "r"), s = get<T>(pm, "s");
    return make<T>(T(0), [c, g, r, s](std::size_t k) -> Term<T> {
        T j = idx<T>(k - 1);
        return PartialTerm<T>{T((c + j * r) * (g + j * r)), s};
    });
}

inline References f9_reference(const ParamMap& pm, double target) {
    double c = d(pm, "c"), g = d(pm, "g"), r = d(pm, "r"), s = d(pm, "s");
    double a = (c + g + r + s) / 2.0, b = (c + g + r - s) / 2.0;
    return ratio(master_integral(g + r, a, b, c, r, 1.0, 1.0, target),
                 master_integral(g, a, b, c, r, 1.0, 1.0, target), c);
}

// ---- F10: 1/(s + 4/(s + 9/(s + ...))) -----------------------------------------

template <class T>
ContinuedFraction<T> f10_cf(const ParamMap& pm) {
    T s = get<T>(pm, "s");
    return make<T>(T(0), [s](std::size_t k) -> Term<T> {
        T kk = idx<T>(k);
        return PartialTerm<T>{T(kk * kk), s};
    });
}

// ---- F11 / F12: arithmetic numerators ------------------------------------------

template <class T>
ContinuedFraction<T> f11_cf(const ParamMap& pm) {
    T a = get<T>(pm, "a"), alpha = get<T>(pm, "alpha"), b = get<T>(pm, "b"), beta_ = get<T>(pm, "beta");
    return make<T>(T(0), [a, alpha, b, beta_](std::size_t k) -> Term<T> {
        T j = idx<T>(k - 1);
        return PartialTerm<T>{T(a + j * alpha), T(b + j * beta_)};
    });
}

inline References f11_reference(const ParamMap& pm, double target) {
    double a = d(pm, "a"), al = d(pm, "alpha"), b = d(pm, "b"), be = d(pm, "beta");
    double tail = (al * al + al * be * b - al * be * be - be * be * a) / (al * be * be);
    double rate = al / (be * be);
    auto e = [&](double ex) {
        return de_integral(
            [=](double x, double xc) { return std::exp(rate * x + ex * std::log(x) + tail * std::log(xc)); },
            Domain::unit_interval, target);
    };
    return ratio(e(a / al), e((a - al) / al), al / be);
}

template <class T>
ContinuedFraction<T> f12_cf(const ParamMap& pm) {
    T a = get<T>(pm, "a"), alpha = get<T>(pm, "alpha"), b = get<T>(pm, "b");
    return make<T>(T(0), [a, alpha, b](std::size_t k) -> Term<T> {
        return PartialTerm<T>{T(a + idx<T>(k - 1) * alpha), b};
    });
}

inline References f12_reference(const ParamMap& pm, double target) {
    double a = d(pm, "a"), al = d(pm, "alpha"), b = d(pm, "b");
    return ratio(gaussian_tail_integral(a / al, al, b, target), gaussian_tail_integral(a / al - 1.0, al, b, target));
}

// ---- registry -----------------------------------------------------------------

template <class Builder>
Family entry(FamilyInfo info, std::function<std::optional<std::string>(const ParamMap&)> constraint, Builder build,
             std::function<References(const ParamMap&, double)> reference, bool exact = true) {
    Family f;
    f.info = std::move(info);
    f.constraint = constraint ? std::move(constraint) : [](const ParamMap&) { return std::optional<std::string>{}; };
    f.cf_double = [build](const ParamMap& pm) { return build(double{}, pm); };
    if (exact) f.cf_exact = [build](const ParamMap& pm) { return build(Rational{}, pm); };
    f.reference = std::move(reference);
    return f;
}

#define EULERCF_BUILD(fn) [](auto tag, const ParamMap& pm) { return fn<decltype(tag)>(pm); }

inline std::vector<Family> build_catalog() {
    using std::numbers::pi;
    std::vector<Family> c;
    auto fixed = [](double v) { return [v](const ParamMap&, double) { return constant(v); }; };
    auto rule_cf = [](long leading, std::function<std::pair<long long, long long>(long long)> rule) {
        return [leading, rule](auto tag, const ParamMap&) { return integer_cf<decltype(tag)>(leading, rule); };
    };

    c.push_back(entry({"log2", {}, "1/(1 + 1/(1 + 4/(1 + 9/...))) = ln 2"}, nullptr, EULERCF_BUILD(log2_cf),
                      fixed(std::log(2.0))));
    c.push_back(entry({"brouncker", {}, "1/(1 + 1/(2 + 9/(2 + 25/...))) = pi/4"}, nullptr,
                      EULERCF_BUILD(brouncker_cf), fixed(pi / 4)));
    c.push_back(entry({"e-euler", {}, "2 + 2/(2 + 3/(3 + 4/(4 + ...))) = e"}, nullptr, EULERCF_BUILD(e_cf),
                      fixed(std::exp(1.0))));
    c.push_back(entry({"pi2-a", {}, "1 + 1/(1 + 1*2/(1 + 2*3/...)) = pi/2"}, nullptr,
                      rule_cf(1, [](long long k) { return std::pair{k == 1 ? 1 : (k - 1) * k, 1LL}; }),
                      fixed(pi / 2)));
    c.push_back(entry({"pi2-b", {}, "2 - 1/(2 + 1/(2 + 4/(2 + 9/...))) = pi/2"}, nullptr,
                      rule_cf(2, [](long long k) { return std::pair{k == 1 ? -1 : (k - 1) * (k - 1), 2LL}; }),
                      fixed(pi / 2)));
    c.push_back(entry({"3pi4-a", {}, "4 - 12/(5 + 2*5/(1 + 3*6/...)) = 3pi/4"}, nullptr,
                      rule_cf(4, [](long long k) { return k == 1 ? std::pair{-12LL, 5LL} : std::pair{k * (k + 3), 1LL}; }),
                      fixed(3 * pi / 4)));
    c.push_back(entry({"3pi4-b", {}, "4/(1 + 3/(2 + 2*5/(1 + 3*6/...))) = 3pi/4"}, nullptr,
                      rule_cf(0, [](long long k) {
                          if (k == 1) return std::pair{4LL, 1LL};
                          if (k == 2) return std::pair{3LL, 2LL};
                          return std::pair{(k - 1) * (k + 2), 1LL};
                      }),
                      fixed(3 * pi / 4)));
    c.push_back(entry({"3pi4-c", {}, "1 + 3/(1 + 1*4/(1 + 2*5/...)) = 3pi/4"}, nullptr,
                      rule_cf(1, [](long long k) { return k == 1 ? std::pair{3LL, 1LL} : std::pair{(k - 1) * (k + 2), 1LL}; }),
                      fixed(3 * pi / 4)));
    c.push_back(entry({"3pi4-d", {}, "2 + 1/(2 + 1*3/(2 + 2*4/...)) = 3pi/4"}, nullptr,
                      rule_cf(2, [](long long k) { return std::pair{k == 1 ? 1 : (k - 1) * (k + 1), 2LL}; }),
                      fixed(3 * pi / 4)));
    c.push_back(entry({"3pi4-e", {}, "2 + 2/(3 + 3*4/(1 + 4*5/...)) = 3pi/4"}, nullptr,
                      rule_cf(2, [](long long k) { return k == 1 ? std::pair{2LL, 3LL} : std::pair{(k + 1) * (k + 2), 1LL}; }),
                      fixed(3 * pi / 4)));
    c.push_back(entry({"F6-fixed", {}, "2 + 1*2/(2 + 2*3/(2 + 3*4/...)) = 1/(2 ln 2 - 1)"}, nullptr,
                      rule_cf(2, [](long long k) { return std::pair{k * (k + 1), 2LL}; }),
                      fixed(1.0 / (2.0 * std::log(2.0) - 1.0))));

    c.push_back(entry(
        {"F1", {"m", "n"}, "1/(n + n^2/(m + (m+n)^2/(m + ...))) = int x^(n-1)/(1+x^m)"},
        [](const ParamMap& pm) {
            return Checks{}.require(d(pm, "m") > 0, "m > 0").require(d(pm, "n") > 0, "n > 0").result();
        },
        EULERCF_BUILD(f1_cf),
        [](const ParamMap& pm, double t) {
            auto q = reciprocal_kernel_integral(d(pm, "n"), d(pm, "m"), t);
            return single(q, q.value);
        }));
    c.push_back(entry(
        {"F1-frac", {"m", "n"}, "1/(1 + n/(m + (m+n)^2/(m + ...))) = int 1/(1+x^(m/n))"},
        [](const ParamMap& pm) {
            return Checks{}.require(d(pm, "m") > 0, "m > 0").require(d(pm, "n") > 0, "n > 0").result();
        },
        EULERCF_BUILD(f1_frac_cf),
        [](const ParamMap& pm, double t) {
            auto q = reciprocal_kernel_integral(1.0, d(pm, "m") / d(pm, "n"), t);
            return single(q, q.value);
        }));
    c.push_back(entry(
        {"F2", {"m", "n", "mu", "nu"}, "binomial-weight family = int x^(n-1) (1+x^m)^(-mu/nu)", true},
        [](const ParamMap& pm) {
            return Checks{}
                .require(d(pm, "m") > 0, "m > 0")
                .require(d(pm, "n") > 0, "n > 0")
                .require(d(pm, "mu") > 0, "mu > 0")
                .require(d(pm, "nu") > 0, "nu > 0")
                .result();
        },
        EULERCF_BUILD(f2_cf),
        [](const ParamMap& pm, double t) {
            auto q = integrate({.alpha = d(pm, "n"), .r = d(pm, "m"), .beta = 0.0,
                                .gamma_exp = -d(pm, "mu") / d(pm, "nu"), .p = 1.0, .q = 1.0},
                               t);
            return single(q, q.value);
        }));
    c.push_back(entry(
        {"F3", {"s"}, "s + 1/(2s + 9/(2s + 25/...)) = (s+1) S(s+3,2)/S(s+1,2)"},
        [](const ParamMap& pm) { return Checks{}.require(d(pm, "s") > 0, "s > 0").result(); }, EULERCF_BUILD(f3_cf),
        [](const ParamMap& pm, double) { return constant(f3_reference(d(pm, "s"))); }));
    c.push_back(entry({"F4-a", {"p", "q", "r"}, "p + 2p(q-r)/(p+r + (p+2q-r)(p+r)/(r + ...))"}, f4_constraint,
                      EULERCF_BUILD(f4_a_cf), f4_reference));
    c.push_back(entry(
        {"F4-a-alt", {"p", "q", "r"}, "p/(1 + 2(r-q)/(p+2q-r + (p+2q)(p+r)/(r + ...))), r > q"},
        [](const ParamMap& pm) {
            auto base = f4_constraint(pm);
            if (base) return base;
            return Checks{}.require(d(pm, "r") > d(pm, "q"), "r > q").result();
        },
        EULERCF_BUILD(f4_a_alt_cf), f4_reference));
    c.push_back(entry({"F4-b", {"p", "q", "r"}, "p+q-r + q(r-q)/(p+q + p(p+2q)/(2r + ...))"}, f4_constraint,
                      EULERCF_BUILD(f4_b_cf), f4_reference));
    c.push_back(entry({"F4-c", {"p", "q", "r"}, "p+2q-r - 2q(p+2q-r)/(p+2q + (p+r)(p+2q+r)/(r + ...))"},
                      f4_constraint, EULERCF_BUILD(f4_c_cf), f4_reference));
    c.push_back(entry({"F5", {"f", "h", "r"}, "r + fh/(r + (f+r)(h+r)/(r + ...))"}, fhr_constraint,
                      [](auto tag, const ParamMap& pm) { return f56_cf<decltype(tag)>(pm, false); }, f5_reference));
    c.push_back(entry({"F6", {"f", "h", "r"}, "2r + fh/(2r + (f+r)(h+r)/(2r + ...))"}, fhr_constraint,
                      [](auto tag, const ParamMap& pm) { return f56_cf<decltype(tag)>(pm, true); }, f6_reference));
    c.push_back(entry(
        {"F7", {"q", "r", "s"}, "s + q(r-q)/(2s + (r+q)(2r-q)/(2s + ...))"},
        [](const ParamMap& pm) {
            double q = d(pm, "q"), r = d(pm, "r"), s = d(pm, "s");
            return Checks{}.require(q > 0, "q > 0").require(r > q, "r > q").require(s > 0, "s > 0").result();
        },
        EULERCF_BUILD(f7_cf),
        [](const ParamMap& pm, double) { return constant(f7_reference(d(pm, "q"), d(pm, "r"), d(pm, "s"))); }));
    c.push_back(entry(
        {"F8", {"a", "b", "c", "r", "p", "q"}, "pg/(ap-bq + pq(c+r)(g+r)/((a+r)p-(b+r)q + ...)), g = a+b-c-r"},
        [](const ParamMap& pm) {
            return master_constraint(d(pm, "a"), d(pm, "b"), d(pm, "c"), d(pm, "r"), d(pm, "p"), d(pm, "q"));
        },
        EULERCF_BUILD(f8_cf), f8_reference));
    c.push_back(entry(
        {"F8-golden", {}, "1 + 1/(2 + 4/(3 + 9/(4 + ...)))"}, nullptr,
        [](auto tag, const ParamMap&) {
            using T = decltype(tag);
            return integer_cf<T>(1, [](long long k) { return std::pair{k * k, k + 1}; });
        },
        [](const ParamMap&, double t) {
            auto g = golden_preset();
            auto upper = master_integral(2.0, g.a, g.b, g.c, g.r, g.p, g.q, t);
            auto lower = master_integral(1.0, g.a, g.b, g.c, g.r, g.p, g.q, t);
            auto out = ratio(upper, lower, 1.0 / g.p);
            out.primary += 1.0;
            return out;
        }));
    c.push_back(entry(
        {"F9", {"c", "g", "r", "s"}, "cg/(s + (c+r)(g+r)/(s + (c+2r)(g+2r)/(s + ...)))"},
        [](const ParamMap& pm) {
            double cc = d(pm, "c"), g = d(pm, "g"), r = d(pm, "r"), s = d(pm, "s");
            return Checks{}
                .require(cc > 0, "c > 0")
                .require(g > 0, "g > 0")
                .require(r > 0, "r > 0")
                .require(s > 0, "s > 0")
                .require(cc - g + r + s > 0, "c - g + r + s > 0")
                .result();
        },
        EULERCF_BUILD(f9_cf), f9_reference));
    c.push_back(entry(
        {"F10", {"s"}, "1/(s + 4/(s + 9/(s + ...))) = 1/(2 int y^s/(1+y^2)) - s"},
        [](const ParamMap& pm) { return Checks{}.require(d(pm, "s") > 0, "s > 0").result(); },
        EULERCF_BUILD(f10_cf),
        [](const ParamMap& pm, double t) {
            double s = d(pm, "s");
            auto q = integrate({.alpha = s + 1.0, .r = 2.0, .beta = 0.0, .gamma_exp = -1.0, .p = 1.0, .q = 1.0}, t);
            return single(q, 1.0 / (2.0 * q.value) - s);
        }));
    c.push_back(entry(
        {"F11", {"a", "alpha", "b", "beta"}, "a/(b + (a+alpha)/(b+beta + (a+2alpha)/(b+2beta + ...)))"},
        [](const ParamMap& pm) {
            double a = d(pm, "a"), al = d(pm, "alpha"), b = d(pm, "b"), be = d(pm, "beta");
            return Checks{}
                .require(a > 0, "a > 0")
                .require(al > 0, "alpha > 0")
                .require(be > 0, "beta > 0")
                .require(b > 0, "b > 0")
                .require(al * al + al * be * b > be * be * a, "alpha^2 + alpha beta b > beta^2 a")
                .result();
        },
        EULERCF_BUILD(f11_cf), f11_reference));
    c.push_back(entry(
        {"F12", {"a", "alpha", "b"}, "a/(b + (a+alpha)/(b + (a+2alpha)/(b + ...)))"},
        [](const ParamMap& pm) {
            return Checks{}
                .require(d(pm, "a") > 0, "a > 0")
                .require(d(pm, "alpha") > 0, "alpha > 0")
                .require(d(pm, "b") > 0, "b > 0")
                .result();
        },
        EULERCF_BUILD(f12_cf), f12_reference));
    return c;
}

#undef EULERCF_BUILD

}  // namespace families

inline const std::vector<Family>& catalog() {
    static const std::vector<Family> c = families::build_catalog();
    return c;
}

inline const Family* find_family(const std::string& id) {
    for (const auto& f : catalog())
        if (f.info.id == id) return &f;
    return nullptr;
}

inline const Family& family_or_throw(const std::string& id) {
    if (const Family* f = find_family(id)) return *f;
    throw UnknownFamily("unknown family '" + id + "'");
}

/// Rejects unknown or missing parameter names for `family`.
inline void check_parameter_names(const Family& family, const ParamMap& params) {
    for (const auto& [name, value] : params) {
        bool known = false;
        for (const auto& p : family.info.params) known = known || p == name;
        if (!known) throw BadParameters("family " + family.info.id + " has no parameter '" + name + "'");
    }
    for (const auto& p : family.info.params)
        if (!params.contains(p)) throw BadParameters("family " + family.info.id + " needs parameter '" + p + "'");
}

/// Builds the fraction of `id` at `params`; throws ConstraintViolation naming the failed predicate.
template <class T>
ContinuedFraction<T> make_cf(const std::string& id, const ParamMap& params) {
    const Family& family = family_or_throw(id);
    check_parameter_names(family, params);
    if (auto violated = family.constraint(params))
        throw ConstraintViolation(id + " requires " + *violated);
    if constexpr (is_exact_v<T>) {
        if (!family.cf_exact) throw BadParameters(id + " has no exact form");
        return family.cf_exact(params);
    } else {
        return family.cf_double(params);
    }
}

}  // namespace eulercf
