#pragma once

// Double-exponential quadrature: tanh-sinh on (0,1), exp-sinh on (0,∞).
// Integrands are called as f(x, xc) with xc = 1 - x; on (0,1) the complement
// is computed directly from the node so it stays accurate next to x = 1.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulercf {

enum class Domain { unit_interval, half_line };

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = std::numeric_limits<double>::infinity();
    int levels_used = 0;
    bool converged = false;
};

using Integrand = std::function<double(double x, double xc)>;

namespace detail {

struct Node {
    double x;
    double xc;
    double weight;
};

inline constexpr int max_level = 12;

// Nodes new at each level: level 0 holds t = k, level l >= 1 the odd multiples of 2^-l.
template <class Make>
std::vector<std::vector<Node>> build_levels(double t_min, double t_max, Make make) {
    std::vector<std::vector<Node>> levels(max_level + 1);
    for (int l = 0; l <= max_level; ++l) {
        double h = std::ldexp(1.0, -l);
        long first = static_cast<long>(std::ceil(t_min / h));
        long last = static_cast<long>(std::floor(t_max / h));
        for (long k = first; k <= last; ++k) {
            if (l > 0 && k % 2 == 0) continue;
            Node n = make(static_cast<double>(k) * h);
            if (n.x > 0.0 && n.weight > 0.0 && std::isfinite(n.x) && std::isfinite(n.weight))
                levels[static_cast<std::size_t>(l)].push_back(n);
        }
    }
    return levels;
}

inline const std::vector<std::vector<Node>>& tanh_sinh_nodes() {
    static const auto levels = build_levels(-6.5, 6.5, [](double t) {
        double u = std::numbers::pi / 2.0 * std::sinh(t);
        double e = std::exp(-2.0 * std::abs(u));
        double small = e / (1.0 + e);  // distance of the node from the nearer endpoint
        double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
        double weight = std::numbers::pi / 4.0 * std::cosh(t) * sech2;
        return u < 0.0 ? Node{small, 1.0 / (1.0 + e), weight} : Node{1.0 / (1.0 + e), small, weight};
    });
    return levels;
}

inline const std::vector<std::vector<Node>>& exp_sinh_nodes() {
    static const auto levels = build_levels(-6.8, 4.0, [](double t) {
        double x = std::exp(std::numbers::pi / 2.0 * std::sinh(t));
        double weight = x * std::numbers::pi / 2.0 * std::cosh(t);
        return Node{x, 1.0 - x, weight};
    });
    return levels;
}

}  // namespace detail

/// Doubles the level until successive estimates agree to relative `target`
/// (after at least three refinements) or level 12 is reached.
inline QuadratureResult de_integral(const Integrand& f, Domain domain, double target) {
    if (!(target > 0.0)) throw std::invalid_argument("quadrature target must be positive");
    const auto& levels = domain == Domain::unit_interval ? detail::tanh_sinh_nodes() : detail::exp_sinh_nodes();
    QuadratureResult result;
    double sum = 0.0;
    double previous = 0.0;
    for (int l = 0; l <= detail::max_level; ++l) {
        for (const auto& n : levels[static_cast<std::size_t>(l)]) {
            double v = f(n.x, n.xc);
            if (v != 0.0 && std::isfinite(v)) sum += n.weight * v;
        }
        double estimate = std::ldexp(sum, -l);
        result.value = estimate;
        result.levels_used = l + 1;
        if (l > 0) {
            result.error_estimate = std::abs(estimate - previous);
            double scale = estimate != 0.0 ? std::abs(estimate) : 1.0;
            if (l >= 3 && result.error_estimate <= target * scale) {
                result.converged = true;
                break;
            }
        }
        if (!std::isfinite(estimate)) break;
        previous = estimate;
    }
    return result;
}

/// x^{alpha-1} (1 - x^r)^beta (p + q x^r)^gamma_exp on (0,1).
struct PowerBinomialIntegrand {
    double alpha = 1.0;
    double r = 1.0;
    double beta = 0.0;
    double gamma_exp = 0.0;
    double p = 1.0;
    double q = 0.0;

    void validate() const {
        if (!(alpha > 0.0)) throw std::domain_error("integrand needs alpha > 0 (got " + std::to_string(alpha) + ")");
        if (!(r > 0.0)) throw std::domain_error("integrand needs r > 0");
        if (!(beta > -1.0)) throw std::domain_error("integrand needs beta > -1 (got " + std::to_string(beta) + ")");
        if (!(p > 0.0 && p + q > 0.0)) throw std::domain_error("integrand needs p > 0 and p + q > 0");
    }

    double operator()(double x, double xc) const {
        double log_x = x > 0.5 ? std::log1p(-xc) : std::log(x);
        double xr = std::exp(r * log_x);
        double one_minus_xr = -std::expm1(r * log_x);
        double v = std::exp((alpha - 1.0) * log_x);
        if (beta != 0.0) v *= std::pow(one_minus_xr, beta);
        if (gamma_exp != 0.0) v *= std::pow(p + q * xr, gamma_exp);
        return v;
    }
};

inline QuadratureResult integrate(const PowerBinomialIntegrand& f, double target) {
    f.validate();
    return de_integral([&f](double x, double xc) { return f(x, xc); }, Domain::unit_interval, target);
}

/// ∫₀¹ x^{h-1} / (1 + x^r) dx.
inline QuadratureResult reciprocal_kernel_integral(double h, double r, double target) {
    if (!(h > 0.0 && r > 0.0)) throw std::domain_error("reciprocal kernel needs h > 0 and r > 0");
    return integrate({.alpha = h, .r = r, .beta = 0.0, .gamma_exp = -1.0, .p = 1.0, .q = 1.0}, target);
}

/// ∫₀^∞ R^e exp(-(2bR + R²)/(2 alpha)) dR.
inline QuadratureResult gaussian_tail_integral(double e, double alpha, double b, double target) {
    if (!(e > -1.0)) throw std::domain_error("gaussian tail needs e > -1");
    if (!(alpha > 0.0)) throw std::domain_error("gaussian tail needs alpha > 0");
    if (!(b >= 0.0)) throw std::domain_error("gaussian tail needs b >= 0");
    return de_integral(
        [=](double x, double) { return std::exp(e * std::log(x) - (2.0 * b * x + x * x) / (2.0 * alpha)); },
        Domain::half_line, target);
}

/// Residuals |(a+να)I_ν - (b+νβ)I_{ν+1} - (c+νγ)I_{ν+2}| for ν = 0..nu_max, where
/// I_ν = ∫₀¹ x^{m-1+νr} (1-x^r)^n (p+qx^r)^kappa dx.
inline std::vector<double> contiguous_relation_check(double m, double n, double kappa, double p, double q, double r,
                                                     int nu_max, double target = 1e-12) {
    if (!(m > 0.0 && n > -1.0)) throw std::domain_error("contiguous relation needs m > 0 and n > -1");
    if (nu_max < 0) throw std::invalid_argument("nu_max must be nonnegative");
    std::vector<double> integrals;
    for (int nu = 0; nu <= nu_max + 2; ++nu) {
        PowerBinomialIntegrand f{.alpha = m + nu * r, .r = r, .beta = n, .gamma_exp = kappa, .p = p, .q = q};
        integrals.push_back(integrate(f, target).value);
    }
    const double a = m * p / r, alpha = p;
    const double b = m * (p - q) / r + (n + 1.0) * p - (kappa + 1.0) * q, beta = p - q;
    const double c = m * q / r + n * q + (kappa + 2.0) * q, gamma = q;
    std::vector<double> residuals;
    for (int nu = 0; nu <= nu_max; ++nu) {
        auto i = static_cast<std::size_t>(nu);
        residuals.push_back(std::abs((a + nu * alpha) * integrals[i] - (b + nu * beta) * integrals[i + 1] -
                                     (c + nu * gamma) * integrals[i + 2]));
    }
    return residuals;
}

}  // namespace eulercf
