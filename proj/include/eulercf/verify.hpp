#pragma once

// Verification of catalog identities: evaluate the fraction, compute the
// reference(s), and decide pass / fail / divergent / constraint-violation.

#include "eulercf/evaluate.hpp"
#include "eulercf/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eulercf {

inline constexpr double reference_target = 1e-11;

struct IdentityCase {
    std::string family;
    ParamMap params;
    double tolerance = 1e-10;
    std::size_t max_terms = 2'000'000;
};

enum class VerifyStatus { pass, fail, divergent, constraint_violation, undefined };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::fail: return "fail";
        case VerifyStatus::divergent: return "divergent";
        case VerifyStatus::constraint_violation: return "constraint-violation";
        case VerifyStatus::undefined: return "undefined";
    }
    return "unknown";
}

struct VerificationReport {
    IdentityCase input;
    std::optional<double> value;
    std::optional<double> lower;
    std::optional<double> upper;
    std::optional<double> reference;
    std::optional<double> secondary_reference;
    std::optional<double> abs_error;
    std::size_t terms = 0;
    VerifyStatus status = VerifyStatus::fail;
    std::string detail;
};

/// Allowed distance of the reference outside a rigorous bracket: the
/// reference itself is only known to quadrature accuracy.
inline double reference_slack(double reference) {
    return 10.0 * reference_target * std::max(1.0, std::abs(reference));
}

inline VerificationReport verify(const IdentityCase& c) {
    VerificationReport out;
    out.input = c;
    const Family& family = family_or_throw(c.family);
    check_parameter_names(family, c.params);
    if (!(c.tolerance > 0.0) || c.max_terms == 0) throw BadParameters("tolerance and max_terms must be positive");

    if (auto violated = family.constraint(c.params)) {
        out.status = VerifyStatus::constraint_violation;
        out.detail = c.family + " requires " + *violated;
        return out;
    }

    EvalReport eval;
    try {
        eval = eval_float(family.cf_double(c.params), c.tolerance, c.max_terms);
    } catch (const std::domain_error& e) {
        bool lost = family.info.divergent_without_positivity && dynamic_cast<const ZeroDenominator*>(&e);
        out.status = lost ? VerifyStatus::divergent : VerifyStatus::undefined;
        out.detail = lost ? std::string("positivity certificate lost: ") + e.what() : e.what();
        return out;
    }
    out.value = eval.value;
    out.lower = eval.lower;
    out.upper = eval.upper;
    out.terms = eval.terms_used;

    if (eval.status == EvalStatus::divergent_flagged ||
        (family.info.divergent_without_positivity && !eval.positive)) {
        out.status = VerifyStatus::divergent;
        out.detail = eval.positive ? "fraction oscillates without contracting" : "positivity certificate lost";
        return out;
    }

    References refs;
    try {
        refs = family.reference(c.params, reference_target);
    } catch (const std::domain_error& e) {
        out.status = VerifyStatus::undefined;
        out.detail = std::string("reference: ") + e.what();
        return out;
    }
    out.reference = refs.primary;
    out.secondary_reference = refs.secondary;
    out.abs_error = std::abs(eval.value - refs.primary);
    double slack = reference_slack(refs.primary);

    if (!refs.converged || !std::isfinite(refs.primary)) {
        out.status = VerifyStatus::fail;
        out.detail = "reference quadrature did not converge";
        return out;
    }
    if (refs.secondary && std::abs(*refs.secondary - refs.primary) > slack) {
        out.status = VerifyStatus::fail;
        out.detail = "the two references disagree";
        return out;
    }
    if (eval.status == EvalStatus::budget_exhausted) {
        out.status = VerifyStatus::fail;
        out.detail = "term budget exhausted";
        return out;
    }
    bool ok = false;
    if (eval.has_bracket()) {
        ok = *eval.lower - slack <= refs.primary && refs.primary <= *eval.upper + slack;
        if (refs.secondary)
            ok = ok && *eval.lower - slack <= *refs.secondary && *refs.secondary <= *eval.upper + slack;
        if (!ok) out.detail = "reference outside the bracket";
    } else {
        ok = *out.abs_error <= 10.0 * c.tolerance + slack;
        if (!ok) out.detail = "error above the signed-form tolerance";
    }
    out.status = ok ? VerifyStatus::pass : VerifyStatus::fail;
    return out;
}

/// Cases exercising every catalog family; all of them should pass.
inline std::vector<IdentityCase> builtin_suite() {
    auto R = [](long p, long q = 1) { return ParamValue(Rational(p, q)); };
    std::vector<IdentityCase> s;
    auto add = [&s](std::string id, ParamMap pm, double tol, std::size_t terms = 2'000'000) {
        s.push_back({std::move(id), std::move(pm), tol, terms});
    };
    add("log2", {}, 1e-5);
    add("brouncker", {}, 1e-5);
    add("e-euler", {}, 1e-12, 25);
    for (const char* id : {"pi2-a", "pi2-b", "3pi4-a", "3pi4-b", "3pi4-c", "3pi4-d", "3pi4-e"}) add(id, {}, 1e-5);
    add("F6-fixed", {}, 1e-4);
    add("F1", {{"m", R(2)}, {"n", R(1)}}, 1e-4);
    add("F1", {{"m", R(3)}, {"n", R(2)}}, 1e-4);
    add("F1", {{"m", R(4)}, {"n", R(3)}}, 1e-4);
    add("F1-frac", {{"m", R(3)}, {"n", R(2)}}, 1e-4);
    add("F2", {{"m", R(2)}, {"n", R(1)}, {"mu", R(1)}, {"nu", R(2)}}, 1e-6);
    add("F2", {{"m", R(3)}, {"n", R(3, 2)}, {"mu", R(1)}, {"nu", R(1)}}, 1e-6);
    for (ParamValue sv : {R(1), R(2), R(3), R(11, 2)}) add("F3", {{"s", sv}}, 1e-4);
    add("F4-a", {{"p", R(2)}, {"q", R(1)}, {"r", R(1)}}, 1e-6);
    add("F4-a", {{"p", R(1)}, {"q", R(7, 10)}, {"r", R(6, 5)}}, 1e-6);
    add("F4-a-alt", {{"p", R(1)}, {"q", R(7, 10)}, {"r", R(6, 5)}}, 1e-6);
    add("F4-b", {{"p", R(2)}, {"q", R(1, 2)}, {"r", R(1)}}, 1e-6);
    add("F4-c", {{"p", R(2)}, {"q", R(1, 2)}, {"r", R(1)}}, 1e-6);
    add("F4-a", {{"p", R(1)}, {"q", R(1)}, {"r", R(2)}}, 1e-6);
    add("F5", {{"f", R(2)}, {"h", R(3)}, {"r", R(1)}}, 1e-5);
    add("F5", {{"f", R(1, 2)}, {"h", R(17, 10)}, {"r", R(11, 10)}}, 1e-5);
    add("F5", {{"f", R(1)}, {"h", R(1)}, {"r", R(1)}}, 1e-5);
    add("F6", {{"f", R(5, 2)}, {"h", R(13, 10)}, {"r", R(3, 2)}}, 1e-5);
    add("F6", {{"f", R(3)}, {"h", R(4)}, {"r", R(2)}}, 1e-5);
    add("F6", {{"f", R(5, 2)}, {"h", R(1)}, {"r", R(3, 2)}}, 1e-5);
    add("F7", {{"q", R(1)}, {"r", R(2)}, {"s", R(1)}}, 1e-5);
    add("F7", {{"q", R(3, 10)}, {"r", R(7, 5)}, {"s", R(4, 5)}}, 1e-5);
    add("F8", {{"a", R(3)}, {"b", R(5, 2)}, {"c", R(2)}, {"r", R(1)}, {"p", R(2)}, {"q", R(1)}}, 1e-8);
    add("F8", {{"a", R(4)}, {"b", R(3)}, {"c", R(11, 5)}, {"r", R(2)}, {"p", R(2)}, {"q", R(1)}}, 1e-8);
    add("F8-golden", {}, 1e-6);
    add("F9", {{"c", R(1)}, {"g", R(3, 2)}, {"r", R(1)}, {"s", R(2)}}, 1e-8);
    add("F10", {{"s", R(1)}}, 1e-5);
    add("F10", {{"s", R(5, 2)}}, 1e-8);
    add("F11", {{"a", R(1)}, {"alpha", R(1)}, {"b", R(1)}, {"beta", R(1)}}, 1e-12);
    add("F11", {{"a", R(2)}, {"alpha", R(3, 2)}, {"b", R(2)}, {"beta", R(7, 10)}}, 1e-12);
    add("F12", {{"a", R(1)}, {"alpha", R(1)}, {"b", R(1)}}, 1e-10);
    add("F12", {{"a", R(5, 2)}, {"alpha", R(4, 5)}, {"b", R(13, 10)}}, 1e-10);
    return s;
}

}  // namespace eulercf
