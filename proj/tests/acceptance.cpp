// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "eulercf/continued_fraction.hpp"
#include "eulercf/evaluate.hpp"
#include "eulercf/families.hpp"
#include "eulercf/identities.hpp"
#include "eulercf/quadrature.hpp"
#include "eulercf/rational.hpp"
#include "eulercf/riccati.hpp"
#include "eulercf/series.hpp"
#include "eulercf/special.hpp"
#include "eulercf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace eulercf;

namespace {

constexpr std::size_t budget = 2'000'000;

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) note << "first failure: " << what << "; ";
            ok = false;
        }
    }
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool contains(const EvalReport& r, double x, double slack = 0.0) {
    return r.has_bracket() && *r.lower - slack <= x && x <= *r.upper + slack;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

/// Bracket of a catalog fraction against a known value at width `width`.
void bracket_case(Outcome& out, const std::string& id, const ParamMap& params, double value, double width,
                  double slack = 0.0) {
    auto r = eval_float(make_cf<double>(id, params), width, budget);
    out.require(contains(r, value, slack), id + " bracket misses " + fmt(value));
    out.require(r.width() <= width, id + " width " + fmt(r.width()));
    out.note << id << ":" << r.terms_used << " terms ";
}

// ---- float evaluation of fixed fractions -------------------------------------

Outcome fixed_case(const std::string& id, double value, double width) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    auto r = eval_float(make_cf<double>(id, {}), width, budget);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(contains(r, value), "bracket misses the constant");
    out.require(r.width() <= width, "width " + fmt(r.width()));
    out.require(r.terms_used <= budget, "term budget");
    out.require(secs < 1.0, "runtime " + fmt(secs) + " s");
    out.note << "[" << fmt(r.lower.value_or(NAN)) << ", " << fmt(r.upper.value_or(NAN)) << "] width "
             << fmt(r.width()) << ", " << r.terms_used << " terms, " << fmt(secs) << " s";
    return out;
}

Outcome brouncker() { return fixed_case("brouncker", std::numbers::pi / 4, 1e-5); }

Outcome harmonic_log() { return fixed_case("log2", std::numbers::ln2, 1e-5); }

Outcome e_from_25_terms() {
    Outcome out;
    auto value = convergent_values(make_cf<double>("e-euler", {}), 25).back();
    out.require(std::abs(value - std::numbers::e) <= 1e-12, "float error " + fmt(std::abs(value - std::numbers::e)));
    auto exact = convergent_sequence(make_cf<Rational>("e-euler", {}), 25).back().value();
    std::string digits = decimal_digits(exact, 15);
    out.require(digits == "2.718281828459045", "exact digits " + digits);
    out.require(std::abs(to_double(exact) - value) <= 1e-15, "exact and float convergents differ");
    out.note << "float error " << fmt(std::abs(value - std::numbers::e)) << ", exact " << digits;
    return out;
}

Outcome reciprocal_log_form() {
    Outcome out;
    double value = 1.0 / (2.0 * std::log(2.0) - 1.0);
    bracket_case(out, "F6-fixed", {}, value, 1e-4);
    return out;
}

Outcome shifted_family() {
    Outcome out;
    double at_one = family_or_throw("F3").reference({{"s", 1.0}}, reference_target).primary;
    out.require(std::abs(at_one - 4.0 / std::numbers::pi) <= 1e-10, "reference at s=1 is not 4/pi");
    double lemniscate = sqrt_kernel_integral(1, 2) / sqrt_kernel_integral(3, 2);
    out.require(std::abs(families::f3_reference(2.0) - lemniscate) <= 1e-10, "s=2 lemniscate ratio");
    for (double s : {1.0, 2.0, 3.0, 5.5}) {
        double ref = family_or_throw("F3").reference({{"s", s}}, reference_target).primary;
        bracket_case(out, "F3", {{"s", s}}, ref, 1e-4, reference_slack(ref));
    }
    return out;
}

Outcome power_families() {
    Outcome out;
    auto run = [&](const std::string& id, double m, double n) {
        ParamMap pm{{"m", m}, {"n", n}};
        double ref = family_or_throw(id).reference(pm, reference_target).primary;
        bracket_case(out, id, pm, ref, 1e-4, reference_slack(ref));
    };
    for (auto [m, n] : {std::pair{2.0, 1.0}, std::pair{3.0, 2.0}, std::pair{4.0, 3.0}}) run("F1", m, n);
    run("F1-frac", 3.0, 2.0);
    return out;
}

Outcome dual_references() {
    Outcome out;
    std::mt19937_64 rng(701);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        double r = uniform(rng, 0.5, 2), f = r + uniform(rng, 0.1, 2), h = f + uniform(rng, 0.5, 2);
        ParamMap pm{{"f", f}, {"h", h}, {"r", r}};
        auto refs = family_or_throw("F5").reference(pm, reference_target);
        if (!refs.secondary) {
            out.require(false, "no second reference");
            continue;
        }
        double gap = std::abs(refs.primary - *refs.secondary) / std::max(1.0, std::abs(refs.primary));
        worst = std::max(worst, gap);
        out.require(gap <= 1e-9, "references differ by " + fmt(gap));
        auto r_eval = eval_float(make_cf<double>("F5", pm), 1e-6, budget);
        double slack = reference_slack(refs.primary);
        out.require(contains(r_eval, refs.primary, slack) && contains(r_eval, *refs.secondary, slack),
                    "bracket misses a reference");
    }
    auto limit = family_or_throw("F5").reference({{"f", 1.0}, {"h", 1.0}, {"r", 1.0}}, reference_target);
    out.require(std::abs(limit.primary - 1.0 / std::numbers::ln2) <= 1e-10, "limit case is not 1/ln 2");
    out.note << "max relative gap " << fmt(worst) << ", limit " << limit.primary;
    return out;
}

// ---- identities checked by quadrature ----------------------------------------

Outcome permutation() {
    Outcome out;
    std::mt19937_64 rng(702);
    double worst = 0.0;
    int done = 0;
    while (done < 20) {
        double c = uniform(rng, 0.5, 3), g = uniform(rng, 0.5, 3), r = uniform(rng, 0.5, 2);
        double b = uniform(rng, 0.3, std::min(c, g) + r), a = g + c + r - b;
        double p = uniform(rng, 0.5, 2), q = uniform(rng, -0.4, 2);
        if (families::master_constraint(a, b, c, r, p, q) || families::master_constraint(a, b, g, r, p, q)) continue;
        if ((c - b) / r < -0.9 || (g - b) / r < -0.9) continue;
        ++done;
        double res = permutation_theorem_check(a, b, c, r, p, q).residual;
        worst = std::max(worst, res);
        out.require(res <= 1e-8, "residual " + fmt(res));
    }
    out.note << "20 draws, max residual " << fmt(worst);
    return out;
}

Outcome contiguous() {
    Outcome out;
    std::mt19937_64 rng(703);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        double m = uniform(rng, 0.3, 4), n = uniform(rng, -0.6, 3), k = uniform(rng, -2, 2);
        double p = uniform(rng, 0.5, 3), q = uniform(rng, -0.4, 3), r = uniform(rng, 0.5, 3);
        for (double res : contiguous_relation_check(m, n, k, p, q, r, 5)) {
            worst = std::max(worst, res);
            out.require(res <= 1e-8, "residual " + fmt(res));
        }
    }
    out.note << "10 draws x 6 shifts, max residual " << fmt(worst);
    return out;
}

Outcome summation_lemma() {
    Outcome out;
    std::mt19937_64 rng(704);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        double p = uniform(rng, 0.2, 3), s = uniform(rng, 0.2, 2), q = p + s * uniform(rng, 2.5, 6);
        auto g = gauss_sum_check({p, q, s}, 2000);
        double gap = std::abs(g.partial_sum - g.closed_form);
        worst = std::max(worst, gap);
        out.require(gap <= 1e-6, "gap " + fmt(gap));
    }
    out.note << "10 draws with (q-p)/s in [2.5, 6], max gap " << fmt(worst);
    return out;
}

Outcome chain() {
    Outcome out;
    const auto& sign = chain_sign_resolution();
    std::mt19937_64 rng(705);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        ChainParams c{uniform(rng, 2, 5), uniform(rng, 2, 5), uniform(rng, 0.2, 1), 0.0};
        double floor = 0.0;
        for (int j = 1; j <= 64; ++j) floor = std::max(floor, -(j * j * c.s * c.s + j * c.s * (c.n - c.m)));
        c.kappa = floor + uniform(rng, 0.1, 2);
        auto r = chain_residuals(c, 1e-11, budget, sign.sign);
        worst = std::max({worst, r.first, r.second});
        out.require(r.first <= 1e-8 && r.second <= 1e-8, "residuals " + fmt(r.first) + " " + fmt(r.second));
    }
    out.note << "sign " << (sign.sign > 0 ? "+" : "-") << ", 10 draws, max residual " << fmt(worst);
    return out;
}

Outcome product_identity() {
    Outcome out;
    std::mt19937_64 rng(706);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        double q = uniform(rng, 0.2, 1.5), r = q + uniform(rng, 0.2, 2), s = uniform(rng, 0.2, 3);
        double res = product_identity_check(q, r, s);
        worst = std::max(worst, res);
        out.require(res <= 1e-9, "residual " + fmt(res));
    }
    out.note << "10 draws, max residual " << fmt(worst);
    return out;
}

// ---- Riccati -----------------------------------------------------------------

Outcome riccati() {
    Outcome out;
    auto agree = [&](const char* name, RiccatiProblem<double> p, double tol, double exact) {
        auto v = verify_riccati(p, 200, tol / 10);
        out.require(v.verdict == RiccatiVerdict::pass && v.abs_error <= tol, std::string(name) + " CF vs ODE");
        out.require(std::abs(v.cf_value - exact) <= tol, std::string(name) + " CF vs closed form");
        out.note << name << " " << fmt(v.abs_error) << "; ";
    };
    agree("cot", {1.0, 0.0, 1.0, 0.0}, 1e-8, 1.0 / std::tan(1.0));
    agree("coth", {-1.0, 0.0, 1.0, 0.0}, 1e-8, 1.0 / std::tanh(1.0));
    agree("bessel", {-1.0, 0.0, 1.0, -1.0}, 1e-6, std::cyl_bessel_i(0.0, 2.0) / std::cyl_bessel_i(1.0, 2.0));

    int presets = 0;
    for (long mn : {0L, 1L, 3L}) {
        Rational m(mn), a(2), c(1);
        for (long i = 1; i <= 3; ++i) {
            Rational odd_b = -a * c / (i * (m + 2) + 1);
            auto odd = cf_from_riccati(RiccatiProblem<Rational>{a, odd_b, c, m});
            out.require(odd.terminates_at == static_cast<std::size_t>(2 * i), "odd preset depth");
            Rational even_b = a * c / (i * (m + 2));
            auto even = cf_from_riccati(RiccatiProblem<Rational>{a, even_b, c, m});
            out.require(even.terminates_at == static_cast<std::size_t>(2 * i - 1), "even preset depth");
            presets += 2;
        }
    }
    RiccatiProblem<double> first{2.0, -2.0 / 3.0, 1.0, 0.0};
    auto v = verify_riccati(first, 40, 1e-9);
    out.require(v.terminates_at == std::size_t{2} && v.verdict == RiccatiVerdict::pass, "terminating preset vs ODE");
    out.note << presets << " presets terminate as predicted";
    return out;
}

// ---- exactness ---------------------------------------------------------------

Rational random_rational(std::mt19937_64& rng, long lo, long hi, bool nonzero = true) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, 9);
    long p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    return Rational(p, den(rng));
}

ContinuedFraction<Rational> random_cf(std::mt19937_64& rng, std::size_t depth) {
    std::vector<PartialTerm<Rational>> terms;
    for (std::size_t i = 0; i < depth; ++i) terms.push_back({random_rational(rng, -9, 9), random_rational(rng, -9, 9)});
    return ContinuedFraction<Rational>::finite(random_rational(rng, -5, 5, false), std::move(terms));
}

bool same_convergents(const std::vector<Convergent<Rational>>& a, const std::vector<Convergent<Rational>>& b,
                      std::size_t stride = 1) {
    for (std::size_t k = 0; k < b.size(); ++k) {
        const auto& x = a[k * stride];
        if (x.defined() != b[k].defined()) return false;
        if (x.defined() && x.value() != b[k].value()) return false;
    }
    return true;
}

Outcome exactness() {
    Outcome out;
    std::mt19937_64 rng(707);
    int round_trips = 0;
    while (round_trips < 50) {
        SeriesSpec<Rational> s;
        for (int i = 0; i < 12; ++i) {
            s.numerators.push_back(random_rational(rng, -20, 20));
            s.denominators.push_back(random_rational(rng, -20, 20));
        }
        auto conv = series_to_cf(s);
        if (conv.zero_pivot) continue;
        ++round_trips;
        auto series = euler_series_expansion(conv.cf, 12);
        auto expected = s.partial_sums();
        bool ok = !series.undefined_at && series.terms.size() == 13;
        Rational sum = ok ? series.terms[0] : Rational(0);
        for (std::size_t k = 1; ok && k <= 12; ++k) {
            sum += series.terms[k];
            ok = sum == expected[k - 1];
        }
        out.require(ok, "round trip " + std::to_string(round_trips));
    }

    int contractions = 0, degenerate = 0;
    while (contractions < 20) {
        auto cf = random_cf(rng, 20);
        auto original = convergent_sequence(cf, 20);
        std::vector<Convergent<Rational>> contracted;
        try {
            contracted = convergent_sequence(even_contraction(cf), 10);
        } catch (const std::domain_error&) {
            bool undefined = false;
            for (std::size_t k = 0; k < 10; ++k) undefined = undefined || !original[2 * k].defined();
            out.require(undefined, "contraction rejected a fraction with defined even convergents");
            ++degenerate;
            continue;
        }
        ++contractions;
        out.require(contracted.size() == 11 && same_convergents(original, contracted, 2),
                    "even contraction " + std::to_string(contractions));
    }

    for (int t = 0; t < 20; ++t) {
        auto cf = random_cf(rng, 30);
        auto seq = convergent_sequence(cf, 30);
        auto terms = cf.prefix(30);
        Rational product = 1;
        bool ok = true;
        for (std::size_t k = 1; k < seq.size(); ++k) {
            product *= terms[k - 1].numerator;
            Rational det = seq[k].p * seq[k - 1].q - seq[k - 1].p * seq[k].q;
            ok = ok && det == (k % 2 == 1 ? product : Rational(-product));
        }
        out.require(ok, "determinant " + std::to_string(t));
    }

    for (int t = 0; t < 20; ++t) {
        auto cf = random_cf(rng, 10);
        std::vector<Rational> scales;
        for (int i = 0; i < 10; ++i) scales.push_back(random_rational(rng, -9, 9));
        auto a = convergent_sequence(cf, 10);
        auto b = convergent_sequence(equivalence_transform(cf, scales), 10);
        out.require(b.size() == a.size() && same_convergents(a, b), "equivalence " + std::to_string(t));
    }
    out.note << "50 round trips, 20 contractions (" << degenerate << " degenerate redrawn), 20 determinants, 20 equivalences";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Brouncker fraction brackets pi/4", brouncker},
        {"alternating harmonic fraction brackets ln 2", harmonic_log},
        {"e from 25 terms, float and exact", e_from_25_terms},
        {"fixed fraction brackets 1/(2 ln 2 - 1)", reciprocal_log_form},
        {"shifted family at s = 1, 2, 3, 5.5", shifted_family},
        {"power families against quadrature", power_families},
        {"dual references and brackets", dual_references},
        {"permutation theorem", permutation},
        {"contiguous relation", contiguous},
        {"summation lemma", summation_lemma},
        {"bilinear chain", chain},
        {"product identity", product_identity},
        {"Riccati fractions against the integrator", riccati},
        {"exact transforms", exactness},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << "exception: " << e.what();
        }
        if (!o.ok) ++failed;
        std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.str().c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
