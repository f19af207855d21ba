#pragma once

// Log-gamma, Beta and the closed form of the square-root kernel integral.

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eulercf {

/// ln Γ(x) for x > 0 by the Lanczos approximation (g = 7, n = 9).
/// Coefficients from P. Godfrey's published table, as used in Numerical Recipes 3rd ed.
inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma needs a positive argument");
    static constexpr std::array<double, 9> coefficients{
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
    double z = x - 1.0;
    double series = coefficients[0];
    for (std::size_t i = 1; i < coefficients.size(); ++i) series += coefficients[i] / (z + static_cast<double>(i));
    double t = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

/// B(a, b) = Γ(a)Γ(b)/Γ(a+b).
inline double beta(double a, double b) {
    if (!(a > 0.0 && b > 0.0)) throw std::domain_error("beta needs positive arguments");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

/// ∫₀¹ y^{pp-1} (1 - y^{2r})^{-1/2} dy = B(pp/(2r), 1/2) / (2r).
inline double sqrt_kernel_integral(double pp, double r) {
    if (!(pp > 0.0 && r > 0.0)) throw std::domain_error("sqrt_kernel_integral needs pp > 0 and r > 0");
    return beta(pp / (2.0 * r), 0.5) / (2.0 * r);
}

}  // namespace eulercf
