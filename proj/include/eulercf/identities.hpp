#pragma once

// Identities checked without a catalog fraction: the bilinear chain of letters,
// the product identity of two shifted fractions, and the c <-> g permutation
// theorem of the master integral family.

#include "eulercf/evaluate.hpp"
#include "eulercf/families.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace eulercf {

struct ChainParams {
    double m = 0.0;
    double n = 0.0;
    double s = 0.0;
    double kappa = 0.0;
};

/// K_j = j^2 s^2 - j m s + j n s + kappa; the first numerator carries `first_sign` on kappa.
inline double chain_numerator(const ChainParams& c, std::size_t j, int first_sign = 1) {
    double jj = static_cast<double>(j);
    double k = jj * jj * c.s * c.s - jj * c.m * c.s + jj * c.n * c.s;
    return k + (j == 1 ? first_sign : 1) * c.kappa;
}

/// The letter at `shift` (0, 1, 2, ...): d + K_1/(d + K_2/(d + ...)) with d = m + n + (2 shift - 1) s.
inline ContinuedFraction<double> chain_cf(const ChainParams& c, std::size_t shift, int first_sign = 1) {
    double d = c.m + c.n + (2.0 * static_cast<double>(shift) - 1.0) * c.s;
    return ContinuedFraction<double>(d, [c, d, first_sign](std::size_t j) -> std::optional<PartialTerm<double>> {
        return PartialTerm<double>{chain_numerator(c, j, first_sign), d};
    });
}

inline EvalReport chain_letter(const ChainParams& c, std::size_t shift, double tol = 1e-12,
                               std::size_t max_terms = 2'000'000, int first_sign = 1) {
    return eval_float(chain_cf(c, shift, first_sign), tol, max_terms);
}

struct ChainResiduals {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double first = 0.0;   // alpha beta - m alpha - n beta - kappa
    double second = 0.0;  // beta gamma - (m+s) beta - (n+s) gamma - kappa
    bool positive = true;
};

inline ChainResiduals chain_residuals(const ChainParams& c, double tol = 1e-12, std::size_t max_terms = 2'000'000,
                                      int first_sign = 1) {
    auto a = chain_letter(c, 0, tol, max_terms, first_sign);
    auto b = chain_letter(c, 1, tol, max_terms, first_sign);
    auto g = chain_letter(c, 2, tol, max_terms, first_sign);
    ChainResiduals r;
    r.alpha = a.value;
    r.beta = b.value;
    r.gamma = g.value;
    r.first = std::abs(r.alpha * r.beta - c.m * r.alpha - c.n * r.beta - c.kappa);
    r.second = std::abs(r.beta * r.gamma - (c.m + c.s) * r.beta - (c.n + c.s) * r.gamma - c.kappa);
    r.positive = a.positive && b.positive && g.positive;
    return r;
}

struct ChainSignResolution {
    int sign = 1;
    double residual_plus = 0.0;
    double residual_minus = 0.0;
};

/// Picks the sign of kappa in K_1 that satisfies the bilinear relations at a fixed reference point.
inline const ChainSignResolution& chain_sign_resolution() {
    static const ChainSignResolution resolved = [] {
        const ChainParams reference{3.0, 2.0, 0.5, 0.7};
        auto plus = chain_residuals(reference, 1e-13, 2'000'000, 1);
        auto minus = chain_residuals(reference, 1e-13, 2'000'000, -1);
        ChainSignResolution out;
        out.residual_plus = plus.first + plus.second;
        out.residual_minus = minus.first + minus.second;
        out.sign = out.residual_plus <= out.residual_minus ? 1 : -1;
        return out;
    }();
    return resolved;
}

/// |F7(s) F7(s+r) - (s+q)(s+r-q)| with both factors from the Beta closed form.
inline double product_identity_check(double q, double r, double s) {
    if (!(q > 0 && r > q && s > 0)) throw std::domain_error("product identity needs 0 < q < r and s > 0");
    return std::abs(families::f7_reference(q, r, s) * families::f7_reference(q, r, s + r) - (s + q) * (s + r - q));
}

struct PermutationCheck {
    double left = 0.0;   // c I(g+r)/I(g)
    double right = 0.0;  // g I'(c+r)/I'(c), with c and g exchanged
    double residual = 0.0;
};

inline PermutationCheck permutation_theorem_check(double a, double b, double c, double r, double p, double q,
                                                  double target = 1e-12) {
    const double g = a + b - c - r;
    if (auto bad = families::master_constraint(a, b, c, r, p, q))
        throw std::domain_error("permutation theorem requires " + *bad);
    if (auto bad = families::master_constraint(a, b, g, r, p, q))
        throw std::domain_error("permuted side requires " + *bad);
    if (!(c > 0)) throw std::domain_error("permutation theorem requires c > 0");
    using families::master_integral;
    PermutationCheck out;
    out.left = c * master_integral(g + r, a, b, c, r, p, q, target).value /
               master_integral(g, a, b, c, r, p, q, target).value;
    out.right = g * master_integral(c + r, a, b, g, r, p, q, target).value /
                master_integral(c, a, b, g, r, p, q, target).value;
    out.residual = std::abs(out.left - out.right);
    return out;
}

}  // namespace eulercf
