#pragma once

// Exact rational arithmetic and the scalar helpers shared by the
// continued-fraction engine. Every algorithm in this library is written
// against a scalar type T that is either `double` or `Rational`.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace eulercf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline int sign_of(double x) { return (x > 0.0) - (x < 0.0); }
inline int sign_of(const Rational& x) { return x.sign(); }

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
inline std::string to_string(const Rational& x) {
    const BigInt& num = boost::multiprecision::numerator(x);
    const BigInt& den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    BigInt v{std::string(s)};
    return negative ? BigInt(-v) : v;
}

inline BigInt pow10(std::int64_t e) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal ("0.25", "-1.5e-3") into an
/// exact rational. Decimal literals are read exactly, not through binary floating point.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = detail::parse_integer(s.substr(0, slash));
        BigInt den = detail::parse_integer(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    std::int64_t exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        BigInt ev = detail::parse_integer(exp_part);
        if (ev > 4000 || ev < -4000) throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
        exponent = ev.convert_to<std::int64_t>();
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    std::int64_t frac_len = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !detail::all_digits(ip)) ||
            (!fp.empty() && !detail::all_digits(fp)))
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<std::int64_t>(fp.size());
    } else {
        if (!detail::all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        digits = std::string(s);
    }
    BigInt mantissa(digits);
    if (negative) mantissa = -mantissa;
    std::int64_t scale = exponent - frac_len;
    if (scale >= 0) return Rational(mantissa * detail::pow10(scale));
    return Rational(mantissa, detail::pow10(-scale));
}

/// Exact decimal expansion of a rational truncated (toward zero) to `places`
/// digits after the point, e.g. "2.718281828459".
inline std::string decimal_digits(const Rational& x, int places) {
    BigInt num = boost::multiprecision::numerator(x);
    const BigInt& den = boost::multiprecision::denominator(x);
    std::string out;
    if (num < 0) {
        out.push_back('-');
        num = -num;
    }
    BigInt scaled = num * detail::pow10(places) / den;
    std::string d = scaled.str();
    if (static_cast<int>(d.size()) <= places) d.insert(0, static_cast<std::size_t>(places) + 1 - d.size(), '0');
    out += d.substr(0, d.size() - static_cast<std::size_t>(places));
    if (places > 0) out += "." + d.substr(d.size() - static_cast<std::size_t>(places));
    return out;
}

}  // namespace eulercf
