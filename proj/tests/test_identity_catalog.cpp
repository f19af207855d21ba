#include "eulercf/families.hpp"
#include "eulercf/identities.hpp"
#include "eulercf/special.hpp"
#include "eulercf/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>

using namespace eulercf;

namespace {

constexpr double pi = std::numbers::pi;

Rational R(long p, long q = 1) { return Rational(p, q); }

double value_of(const std::string& id, const ParamMap& pm, double tol = 1e-10) {
    return eval_float(make_cf<double>(id, pm), tol, 2'000'000).value;
}

struct Draws {
    std::string family;
    double tolerance;
    std::function<std::optional<ParamMap>(std::mt19937_64&)> draw;
};

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::vector<Draws> random_draws() {
    std::vector<Draws> out;
    out.push_back({"F1", 1e-4, [](auto& g) {
                       return ParamMap{{"m", uniform(g, 0.5, 4)}, {"n", uniform(g, 0.3, 3)}};
                   }});
    out.push_back({"F1-frac", 1e-4, [](auto& g) {
                       return ParamMap{{"m", uniform(g, 0.5, 4)}, {"n", uniform(g, 0.3, 3)}};
                   }});
    out.push_back({"F2", 1e-6, [](auto& g) {
                       return ParamMap{{"m", uniform(g, 1, 3)}, {"n", uniform(g, 0.5, 2)},
                                       {"mu", uniform(g, 0.5, 1)}, {"nu", uniform(g, 1, 2)}};
                   }});
    out.push_back({"F3", 1e-4, [](auto& g) { return ParamMap{{"s", uniform(g, 0.5, 6)}}; }});
    for (const char* id : {"F4-a", "F4-b", "F4-c"})
        out.push_back({id, 1e-6, [](auto& g) {
                           return ParamMap{{"p", uniform(g, 0.5, 3)}, {"q", uniform(g, 0.2, 1.5)},
                                           {"r", uniform(g, 0.5, 2)}};
                       }});
    out.push_back({"F4-a-alt", 1e-6, [](auto& g) {
                       double q = uniform(g, 0.2, 1.5);
                       return ParamMap{{"p", uniform(g, 0.5, 3)}, {"q", q}, {"r", q + uniform(g, 0.2, 1.5)}};
                   }});
    for (const char* id : {"F5", "F6"})
        out.push_back({id, 1e-5, [](auto& g) {
                           return ParamMap{{"f", uniform(g, 0.3, 3)}, {"h", uniform(g, 0.3, 3)},
                                           {"r", uniform(g, 0.5, 2)}};
                       }});
    out.push_back({"F7", 1e-5, [](auto& g) {
                       double q = uniform(g, 0.2, 1.0);
                       return ParamMap{{"q", q}, {"r", q + uniform(g, 0.3, 1.5)}, {"s", uniform(g, 0.3, 2)}};
                   }});
    out.push_back({"F8", 1e-8, [](auto& g) -> std::optional<ParamMap> {
                       double c = uniform(g, 0.5, 3), r = uniform(g, 0.5, 2), gg = uniform(g, 0.3, 3);
                       double b = uniform(g, 0.5, c + r), a = gg + c + r - b;
                       double p = uniform(g, 1, 3), q = uniform(g, 0.2, 1);
                       if (a * p - b * q <= 0 || (c - b) / r < -0.9) return std::nullopt;
                       return ParamMap{{"a", a}, {"b", b}, {"c", c}, {"r", r}, {"p", p}, {"q", q}};
                   }});
    out.push_back({"F9", 1e-8, [](auto& g) -> std::optional<ParamMap> {
                       double c = uniform(g, 0.5, 3), gg = uniform(g, 0.5, 3), r = uniform(g, 0.5, 2),
                              s = uniform(g, 0.5, 3);
                       if ((c - gg - r + s) / (2 * r) < -0.9) return std::nullopt;
                       return ParamMap{{"c", c}, {"g", gg}, {"r", r}, {"s", s}};
                   }});
    out.push_back({"F10", 1e-6, [](auto& g) { return ParamMap{{"s", uniform(g, 1.5, 4)}}; }});
    out.push_back({"F11", 1e-12, [](auto& g) -> std::optional<ParamMap> {
                       double a = uniform(g, 0.5, 3), al = uniform(g, 0.5, 2), b = uniform(g, 0.5, 3),
                              be = uniform(g, 0.5, 2);
                       double tail = (al * al + al * be * b - al * be * be - be * be * a) / (al * be * be);
                       if (tail < -0.9) return std::nullopt;
                       return ParamMap{{"a", a}, {"alpha", al}, {"b", b}, {"beta", be}};
                   }});
    out.push_back({"F12", 1e-10, [](auto& g) {
                       return ParamMap{{"a", uniform(g, 0.5, 3)}, {"alpha", uniform(g, 0.3, 2)},
                                       {"b", uniform(g, 0.3, 3)}};
                   }});
    return out;
}

std::string describe(const ParamMap& pm) {
    std::string s;
    for (const auto& [k, v] : pm) s += k + "=" + std::to_string(v.value) + " ";
    return s;
}

}  // namespace

TEST(Catalog, IdsAreUniqueAndDocumented) {
    std::set<std::string> ids;
    for (const auto& f : catalog()) {
        EXPECT_TRUE(ids.insert(f.info.id).second) << f.info.id;
        EXPECT_FALSE(f.info.summary.empty()) << f.info.id;
        EXPECT_TRUE(f.reference) << f.info.id;
    }
    for (const char* id : {"log2", "brouncker", "e-euler", "F1", "F2", "F3", "F4-a", "F5", "F6", "F6-fixed", "F7",
                           "F8", "F9", "F10", "F11", "F12"})
        EXPECT_TRUE(find_family(id)) << id;
}

TEST(MakeCf, LeibnizFromFirstFamily) {
    auto cf = make_cf<Rational>("F1", {{"m", R(2)}, {"n", R(1)}});
    auto brouncker = make_cf<Rational>("brouncker", {});
    EXPECT_EQ(cf.prefix(8), brouncker.prefix(8));
    EXPECT_EQ(cf.prefix(3)[2], (PartialTerm<Rational>{R(9), R(2)}));
    auto leibniz = convergent_values(cf, 6);
    Rational partial = 0;
    for (int k = 0; k < 6; ++k) {
        partial += Rational(k % 2 == 0 ? 1 : -1, 2 * k + 1);
        EXPECT_EQ(leibniz[static_cast<std::size_t>(k) + 1], partial) << k;
    }
}

TEST(MakeCf, ArithmeticNumerators) {
    auto cf = make_cf<Rational>("F11", {{"a", R(1)}, {"alpha", R(1)}, {"b", R(1)}, {"beta", R(1)}});
    auto t = cf.prefix(4);
    for (long k = 1; k <= 4; ++k) EXPECT_EQ(t[static_cast<std::size_t>(k) - 1], (PartialTerm<Rational>{R(k), R(k)}));
}

TEST(MakeCf, ShiftedProductFamily) {
    auto t = make_cf<Rational>("F7", {{"q", R(1)}, {"r", R(2)}, {"s", R(1)}});
    EXPECT_EQ(t.leading(), R(1));
    auto terms = t.prefix(3);
    EXPECT_EQ(terms[0], (PartialTerm<Rational>{R(1), R(2)}));
    EXPECT_EQ(terms[1], (PartialTerm<Rational>{R(9), R(2)}));
    EXPECT_EQ(terms[2], (PartialTerm<Rational>{R(25), R(2)}));
}

TEST(MakeCf, ErrorsNameTheProblem) {
    EXPECT_THROW(make_cf<double>("F99", {}), UnknownFamily);
    EXPECT_THROW(make_cf<double>("F1", {{"m", 2.0}}), BadParameters);
    EXPECT_THROW(make_cf<double>("F1", {{"m", 2.0}, {"n", 1.0}, {"z", 1.0}}), BadParameters);
    try {
        make_cf<double>("F7", {{"q", 2.0}, {"r", 1.0}, {"s", 1.0}});
        FAIL() << "constraint not enforced";
    } catch (const ConstraintViolation& e) {
        EXPECT_EQ(std::string(e.what()), "F7 requires r > q");
    }
}

TEST(References, ClosedForms) {
    EXPECT_NEAR(family_or_throw("F3").reference({{"s", 1.0}}, 1e-12).primary, 4 / pi, 1e-13);
    EXPECT_NEAR(family_or_throw("F6-fixed").reference({}, 1e-12).primary, 1 / (2 * std::log(2.0) - 1), 1e-14);
    EXPECT_NEAR(family_or_throw("F1").reference({{"m", 1.0}, {"n", 1.0}}, 1e-12).primary, std::log(2.0), 1e-12);
    EXPECT_NEAR(family_or_throw("F1").reference({{"m", 2.0}, {"n", 1.0}}, 1e-12).primary, pi / 4, 1e-12);
}

TEST(References, LemniscateProductGivesSecondShift) {
    double via_product = sqrt_kernel_integral(1, 2) / sqrt_kernel_integral(3, 2);
    EXPECT_NEAR(families::f3_reference(2.0), via_product, 1e-13);
    EXPECT_NEAR(value_of("F3", {{"s", 2.0}}, 1e-9), via_product, 1e-8);
}

TEST(References, FractionalFormIsScaledFirstForm) {
    for (auto [m, n] : {std::pair{3.0, 2.0}, std::pair{2.5, 1.5}, std::pair{1.0, 4.0}}) {
        double frac = value_of("F1-frac", {{"m", m}, {"n", n}}, 1e-7);
        double plain = value_of("F1", {{"m", m}, {"n", n}}, 1e-7);
        EXPECT_NEAR(frac, n * plain, 1e-6) << m << " " << n;
    }
}

TEST(References, DualRepresentationsAgree) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        double r = uniform(rng, 0.5, 2), f = r + uniform(rng, 0.1, 2), h = f + uniform(rng, 0.5, 2);
        auto refs = family_or_throw("F5").reference({{"f", f}, {"h", h}, {"r", r}}, 1e-12);
        ASSERT_TRUE(refs.secondary);
        EXPECT_NEAR(refs.primary, *refs.secondary, 1e-9 * std::max(1.0, refs.primary)) << f << " " << h << " " << r;
    }
}

TEST(References, EqualParameterLimit) {
    auto refs = family_or_throw("F5").reference({{"f", 1.0}, {"h", 1.0}, {"r", 1.0}}, 1e-12);
    EXPECT_NEAR(refs.primary, 1 / std::log(2.0), 1e-11);
}

TEST(Verify, SpecimenOutcomes) {
    EXPECT_EQ(verify({"F3", {{"s", 2.0}}, 1e-4}).status, VerifyStatus::pass);
    auto div = verify({"F2", {{"m", 2.0}, {"n", 1.0}, {"mu", 3.0}, {"nu", 1.0}}, 1e-6});
    EXPECT_EQ(div.status, VerifyStatus::divergent);
    auto bad = verify({"F8", {{"a", 1.0}, {"b", 1.0}, {"c", 1.0}, {"r", 1.0}, {"p", 1.0}, {"q", 1.0}}, 1e-8});
    EXPECT_EQ(bad.status, VerifyStatus::constraint_violation);
    EXPECT_NE(bad.detail.find("a + b - c - r > 0"), std::string::npos);
    EXPECT_FALSE(bad.value);
}

TEST(Verify, BuiltinSuitePasses) {
    for (const auto& c : builtin_suite()) {
        auto r = verify(c);
        EXPECT_EQ(r.status, VerifyStatus::pass) << c.family << " " << describe(c.params) << r.detail;
    }
}

TEST(Verify, ReferenceLiesInBracketForRandomDraws) {
    std::mt19937_64 rng(62);
    for (const auto& d : random_draws()) {
        const Family& family = family_or_throw(d.family);
        int done = 0, attempts = 0;
        while (done < 10 && attempts < 200) {
            ++attempts;
            auto pm = d.draw(rng);
            if (!pm || family.constraint(*pm)) continue;
            ++done;
            auto eval = eval_float(family.cf_double(*pm), d.tolerance, 200'000);
            auto refs = family.reference(*pm, reference_target);
            ASSERT_TRUE(refs.converged) << d.family << " " << describe(*pm);
            double slack = reference_slack(refs.primary);
            if (eval.has_bracket()) {
                EXPECT_LE(*eval.lower - slack, refs.primary) << d.family << " " << describe(*pm);
                EXPECT_GE(*eval.upper + slack, refs.primary) << d.family << " " << describe(*pm);
            } else if (eval.status == EvalStatus::converged) {
                EXPECT_LE(std::abs(eval.value - refs.primary), 10 * d.tolerance + slack)
                    << d.family << " " << describe(*pm);
            }
        }
        EXPECT_EQ(done, 10) << d.family;
    }
}

TEST(Verify, ExactAndFloatFormsAgree) {
    ParamMap pm{{"a", R(2)}, {"alpha", R(3, 2)}, {"b", R(2)}, {"beta", R(7, 10)}};
    auto exact = convergent_values(make_cf<Rational>("F11", pm), 12);
    auto approx = convergent_values(make_cf<double>("F11", pm), 12);
    ASSERT_EQ(exact.size(), approx.size());
    for (std::size_t k = 0; k < exact.size(); ++k) EXPECT_NEAR(to_double(exact[k]), approx[k], 1e-14);
}

TEST(Chain, PlusSignResolves) {
    const auto& s = chain_sign_resolution();
    EXPECT_EQ(s.sign, 1);
    EXPECT_LT(s.residual_plus, 1e-8);
    EXPECT_GT(s.residual_minus, 1e-3);
}

TEST(Chain, ConstantStepHasClosedRoot) {
    ChainParams c{3.0, 2.0, 0.0, 1.5};
    double root = (5.0 + std::sqrt(25.0 + 6.0)) / 2.0;
    EXPECT_NEAR(chain_letter(c, 0).value, root, 1e-12);
    auto r = chain_residuals(c);
    EXPECT_LT(r.first, 1e-11);
    EXPECT_LT(r.second, 1e-11);
}

TEST(Chain, RandomDrawsSatisfyBothRelations) {
    std::mt19937_64 rng(63);
    for (int i = 0; i < 10; ++i) {
        ChainParams c{uniform(rng, 2, 5), uniform(rng, 2, 5), uniform(rng, 0.2, 1), 0.0};
        double floor = 0.0;
        for (int j = 1; j <= 64; ++j) floor = std::max(floor, -(j * j * c.s * c.s + j * c.s * (c.n - c.m)));
        c.kappa = floor + uniform(rng, 0.1, 2);
        auto r = chain_residuals(c, 1e-11);
        EXPECT_TRUE(r.positive);
        EXPECT_LT(r.first, 1e-8) << c.m << " " << c.n << " " << c.s << " " << c.kappa;
        EXPECT_LT(r.second, 1e-8) << c.m << " " << c.n << " " << c.s << " " << c.kappa;
    }
}

TEST(ProductIdentity, ClosedFormFactorsAndFractions) {
    std::mt19937_64 rng(64);
    for (int i = 0; i < 10; ++i) {
        double q = uniform(rng, 0.2, 1.5), r = q + uniform(rng, 0.2, 2), s = uniform(rng, 0.2, 3);
        EXPECT_LT(product_identity_check(q, r, s), 1e-9) << q << " " << r << " " << s;
    }
    double q = 0.5, r = 1.5, s = 1.0;
    double first = value_of("F7", {{"q", q}, {"r", r}, {"s", s}}, 1e-9);
    double second = value_of("F7", {{"q", q}, {"r", r}, {"s", s + r}}, 1e-9);
    EXPECT_NEAR(first * second, (s + q) * (s + r - q), 1e-7);
    EXPECT_THROW(product_identity_check(2, 1, 1), std::domain_error);
}

TEST(Permutation, ExamplesAndSelfPermutation) {
    EXPECT_LT(permutation_theorem_check(3, 2.5, 2, 1, 1, 1).residual, 1e-8);
    EXPECT_LT(permutation_theorem_check(4, 3, 2.2, 2, 2, 1).residual, 1e-8);
    // c = g: both sides are the same expression.
    auto same = permutation_theorem_check(3, 2, 2, 1, 1.5, 0.5);
    EXPECT_EQ(same.residual, 0.0);
    EXPECT_THROW(permutation_theorem_check(1, 1, 1, 1, 1, 1), std::domain_error);
}

TEST(Permutation, RandomDraws) {
    std::mt19937_64 rng(65);
    int done = 0;
    while (done < 20) {
        double c = uniform(rng, 0.5, 3), g = uniform(rng, 0.5, 3), r = uniform(rng, 0.5, 2);
        double b = uniform(rng, 0.3, std::min(c, g) + r), a = g + c + r - b;
        double p = uniform(rng, 0.5, 2), q = uniform(rng, -0.4, 2);
        if (families::master_constraint(a, b, c, r, p, q) || families::master_constraint(a, b, g, r, p, q)) continue;
        if ((c - b) / r < -0.9 || (g - b) / r < -0.9) continue;
        ++done;
        auto check = permutation_theorem_check(a, b, c, r, p, q);
        EXPECT_LT(check.residual, 1e-8) << a << " " << b << " " << c << " " << r << " " << p << " " << q;
    }
}
