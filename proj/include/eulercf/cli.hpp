#pragma once

// Command-line front end: eval, convert, contract, verify, riccati, list.
// run() takes argv and two streams so the commands can be driven in-process.

#include "eulercf/continued_fraction.hpp"
#include "eulercf/evaluate.hpp"
#include "eulercf/families.hpp"
#include "eulercf/rational.hpp"
#include "eulercf/riccati.hpp"
#include "eulercf/series.hpp"
#include "eulercf/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace eulercf::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int partial = 2;
inline constexpr int divergent = 3;
inline constexpr int usage = 64;
inline constexpr int no_input = 66;
}  // namespace exit_code

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// printf("%.15g").
inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

/// x rounded to 15 significant digits, so JSON carries the same digits as text output.
inline double round15(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format_number(x).c_str(), nullptr);
}

inline Json number_or_null(const std::optional<double>& x) {
    if (!x || !std::isfinite(*x)) return nullptr;
    return round15(*x);
}

inline Json param_json(const ParamValue& v) {
    if (v.exact) {
        if (boost::multiprecision::denominator(*v.exact) == 1) return round15(v.value);
        return to_string(*v.exact);
    }
    return round15(v.value);
}

inline Json params_json(const ParamMap& pm) {
    Json out = Json::object();
    for (const auto& [k, v] : pm) out[k] = param_json(v);
    return out;
}

/// "k=v" with v an integer, decimal or "p/q".
inline std::pair<std::string, ParamValue> parse_param(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + text + "'");
    try {
        return {text.substr(0, eq), ParamValue(parse_rational(text.substr(eq + 1)))};
    } catch (const std::invalid_argument& e) {
        throw UsageError("--param " + text + ": " + e.what());
    }
}

inline ParamMap parse_params(const std::vector<std::string>& items) {
    ParamMap pm;
    for (const auto& item : items) {
        auto [k, v] = parse_param(item);
        if (pm.contains(k)) throw UsageError("parameter '" + k + "' given twice");
        pm.emplace(std::move(k), std::move(v));
    }
    return pm;
}

inline std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(what + ": " + e.what());
        }
    }
    return out;
}

// ---- manifest --------------------------------------------------------------------

inline ParamValue manifest_param(const Json& v, const std::string& where) {
    if (v.is_number()) return ParamValue(v.get<double>());
    if (v.is_string()) {
        try {
            return ParamValue(parse_rational(v.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw UsageError(where + ": " + e.what());
        }
    }
    throw UsageError(where + ": parameter must be a number or a \"p/q\" string");
}

/// Cases of a manifest document; every family and parameter name is checked here.
inline std::vector<IdentityCase> parse_manifest(const Json& doc) {
    if (!doc.is_array()) throw UsageError("manifest: top level must be an array of cases");
    std::vector<IdentityCase> cases;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const Json& entry = doc[i];
        std::string where = "manifest case " + std::to_string(i);
        if (!entry.is_object()) throw UsageError(where + ": not an object");
        if (!entry.contains("family") || !entry["family"].is_string())
            throw UsageError(where + ": missing string field \"family\"");
        for (const auto& [key, value] : entry.items())
            if (key != "family" && key != "params" && key != "tolerance" && key != "max_terms")
                throw UsageError(where + ": unknown field \"" + key + "\"");
        IdentityCase c;
        c.family = entry["family"].get<std::string>();
        const Family* family = find_family(c.family);
        if (!family) throw UsageError(where + ": unknown family '" + c.family + "'");
        if (entry.contains("params")) {
            if (!entry["params"].is_object()) throw UsageError(where + ": \"params\" must be an object");
            for (const auto& [k, v] : entry["params"].items())
                c.params.emplace(k, manifest_param(v, where + " parameter '" + k + "'"));
        }
        try {
            check_parameter_names(*family, c.params);
        } catch (const BadParameters& e) {
            throw UsageError(where + ": " + e.what());
        }
        if (entry.contains("tolerance")) {
            if (!entry["tolerance"].is_number() || !(entry["tolerance"].get<double>() > 0))
                throw UsageError(where + ": \"tolerance\" must be a positive number");
            c.tolerance = entry["tolerance"].get<double>();
        }
        if (entry.contains("max_terms")) {
            if (!entry["max_terms"].is_number_unsigned() || entry["max_terms"].get<std::size_t>() == 0)
                throw UsageError(where + ": \"max_terms\" must be a positive integer");
            c.max_terms = entry["max_terms"].get<std::size_t>();
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

inline std::vector<IdentityCase> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read manifest '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("manifest '" + path + "': " + e.what());
    }
    return parse_manifest(doc);
}

inline Json manifest_json(const std::vector<IdentityCase>& cases) {
    Json doc = Json::array();
    for (const auto& c : cases)
        doc.push_back({{"family", c.family}, {"params", params_json(c.params)}, {"tolerance", c.tolerance},
                       {"max_terms", c.max_terms}});
    return doc;
}

// ---- verification --------------------------------------------------------------

inline Json report_json(const VerificationReport& r) {
    Json line;
    line["family"] = r.input.family;
    line["params"] = params_json(r.input.params);
    line["value"] = number_or_null(r.value);
    line["lower"] = number_or_null(r.lower);
    line["upper"] = number_or_null(r.upper);
    line["reference"] = number_or_null(r.reference);
    line["abs_error"] = number_or_null(r.abs_error);
    line["terms"] = r.terms;
    line["status"] = to_string(r.status);
    return line;
}

/// Runs every case on `jobs` threads; results come back in input order.
inline std::vector<VerificationReport> verify_all(const std::vector<IdentityCase>& cases, unsigned jobs) {
    std::vector<VerificationReport> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                results[i] = verify(cases[i]);
            } catch (const std::exception& e) {
                results[i].input = cases[i];
                results[i].status = VerifyStatus::fail;
                results[i].detail = e.what();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1))));
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
    }
    return results;
}

// ---- commands ------------------------------------------------------------------

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

struct EvalOptions {
    std::string family;
    std::vector<std::string> params;
    std::optional<std::size_t> terms;
    double tol = 1e-10;
    bool exact = false;
    bool json = false;
};

inline int cmd_eval_exact(const EvalOptions& o, const ParamMap& pm, Streams io) {
    auto cf = make_cf<Rational>(o.family, pm);
    std::size_t n = o.terms.value_or(12);
    Json list = Json::array();
    for (const auto& c : convergent_sequence(cf, n)) {
        std::optional<std::string> value;
        if (c.defined()) value = to_string(c.value());
        if (o.json) {
            list.push_back({{"index", c.index}, {"value", value ? Json(*value) : Json(nullptr)}});
        } else {
            io.out << c.index << ' ' << value.value_or("undefined");
            if (c.defined()) io.out << "  ~ " << format_number(to_double(c.value()));
            io.out << '\n';
        }
    }
    if (o.json) io.out << Json{{"family", o.family}, {"params", params_json(pm)}, {"convergents", list}}.dump() << '\n';
    return exit_code::ok;
}

inline int cmd_eval(const EvalOptions& o, Streams io) {
    ParamMap pm = parse_params(o.params);
    if (!(o.tol > 0)) throw UsageError("--tol must be positive");
    if (o.terms && *o.terms == 0) throw UsageError("--terms must be positive");
    if (o.exact) return cmd_eval_exact(o, pm, io);

    auto cf = make_cf<double>(o.family, pm);
    const Family& family = family_or_throw(o.family);
    std::string status;
    int code = exit_code::ok;
    EvalReport r;
    try {
        r = eval_float(cf, o.tol, o.terms.value_or(2'000'000));
        status = to_string(r.status);
        if (r.status == EvalStatus::budget_exhausted) code = exit_code::partial;
        if (r.status == EvalStatus::divergent_flagged ||
            (family.info.divergent_without_positivity && !r.positive)) {
            status = "divergent";
            code = exit_code::divergent;
        }
    } catch (const ZeroDenominator& e) {
        status = family.info.divergent_without_positivity ? "divergent" : "undefined";
        code = exit_code::divergent;
        io.err << "eulercf: " << e.what() << '\n';
    }

    if (o.json) {
        Json line;
        line["family"] = o.family;
        line["params"] = params_json(pm);
        line["value"] = code == exit_code::divergent ? Json(nullptr) : number_or_null(r.value);
        line["lower"] = number_or_null(r.lower);
        line["upper"] = number_or_null(r.upper);
        line["terms"] = r.terms_used;
        line["status"] = status;
        io.out << line.dump() << '\n';
        return code;
    }
    io.out << "family  " << o.family << '\n';
    if (code != exit_code::divergent) io.out << "value   " << format_number(r.value) << '\n';
    if (r.has_bracket()) io.out << "bracket [" << format_number(*r.lower) << ", " << format_number(*r.upper) << "]\n";
    io.out << "terms   " << r.terms_used << '\n';
    io.out << "status  " << status << '\n';
    return code;
}

struct SeriesOptions {
    std::string numerators;
    std::string denominators;
    std::size_t depth = 0;
    bool json = false;
};

inline void print_terms(const ContinuedFraction<Rational>& cf, const std::vector<PartialTerm<Rational>>& terms,
                        bool json, Json extra, Streams io) {
    if (json) {
        Json list = Json::array();
        for (const auto& t : terms) list.push_back(Json::array({to_string(t.numerator), to_string(t.denominator)}));
        Json doc{{"leading", to_string(cf.leading())}, {"terms", list}};
        doc.update(extra);
        io.out << doc.dump() << '\n';
        return;
    }
    io.out << "leading " << to_string(cf.leading()) << '\n';
    for (const auto& t : terms) io.out << to_string(t.numerator) << ' ' << to_string(t.denominator) << '\n';
}

inline int cmd_series_to_cf(const SeriesOptions& o, Streams io) {
    SeriesSpec<Rational> s{parse_rational_list(o.numerators, "--numerators"),
                           parse_rational_list(o.denominators, "--denominators")};
    SeriesConversion<Rational> conv = [&] {
        try {
            return series_to_cf(s, o.depth);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    auto terms = conv.cf.prefix(s.size());
    Json extra{{"zero_pivot", conv.zero_pivot ? Json(*conv.zero_pivot) : Json(nullptr)}};
    print_terms(conv.cf, terms, o.json, extra, io);
    if (conv.zero_pivot) {
        io.err << "warning: zero pivot at term " << *conv.zero_pivot << "; conversion stopped\n";
        return exit_code::partial;
    }
    return exit_code::ok;
}

struct FamilyDepthOptions {
    std::string family;
    std::vector<std::string> params;
    std::size_t depth = 0;
    bool json = false;
};

inline int cmd_cf_to_series(const FamilyDepthOptions& o, Streams io) {
    auto cf = make_cf<Rational>(o.family, parse_params(o.params));
    auto series = euler_series_expansion(cf, o.depth);
    if (o.json) {
        Json list = Json::array();
        for (std::size_t j = 1; j < series.terms.size(); ++j) list.push_back(to_string(series.terms[j]));
        io.out << Json{{"leading", to_string(series.terms[0])},
                       {"terms", list},
                       {"undefined_at", series.undefined_at ? Json(*series.undefined_at) : Json(nullptr)}}
                      .dump()
               << '\n';
    } else {
        io.out << "leading " << to_string(series.terms[0]) << '\n';
        for (std::size_t j = 1; j < series.terms.size(); ++j) io.out << to_string(series.terms[j]) << '\n';
    }
    if (series.undefined_at) {
        io.err << "warning: series term " << *series.undefined_at << " is undefined (zero continuant)\n";
        return exit_code::partial;
    }
    return exit_code::ok;
}

inline int cmd_contract(const FamilyDepthOptions& o, Streams io) {
    auto cf = make_cf<Rational>(o.family, parse_params(o.params));
    auto contracted = even_contraction(cf);
    std::vector<PartialTerm<Rational>> terms;
    std::optional<std::size_t> failed;
    for (std::size_t k = 1; k <= o.depth; ++k) {
        try {
            auto t = contracted.term(k);
            if (!t) break;
            terms.push_back(*t);
        } catch (const std::domain_error&) {
            failed = k;
            break;
        }
    }
    print_terms(contracted, terms, o.json, Json{{"undefined_at", failed ? Json(*failed) : Json(nullptr)}}, io);
    if (failed) {
        io.err << "warning: contraction undefined at term " << *failed << '\n';
        return exit_code::partial;
    }
    return exit_code::ok;
}

struct VerifyOptions {
    std::string manifest;
    std::string family;
    unsigned jobs = 0;
};

inline int cmd_verify(const VerifyOptions& o, Streams io) {
    auto cases = o.manifest.empty() ? builtin_suite() : load_manifest(o.manifest);
    if (!o.family.empty()) {
        if (!find_family(o.family)) throw UsageError("unknown family '" + o.family + "'");
        std::erase_if(cases, [&](const IdentityCase& c) { return c.family != o.family; });
    }
    unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    auto reports = verify_all(cases, jobs);
    bool all_pass = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        io.out << report_json(reports[i]).dump() << '\n';
        if (reports[i].status != VerifyStatus::pass) {
            all_pass = false;
            io.err << "case " << i << " (" << reports[i].input.family << "): " << to_string(reports[i].status);
            if (!reports[i].detail.empty()) io.err << ": " << reports[i].detail;
            io.err << '\n';
        }
    }
    return all_pass ? exit_code::ok : exit_code::failed;
}

struct RiccatiOptions {
    double a = 0, b = 0, c = 0, m = 0;
    std::size_t depth = 40;
    double tol = 1e-10;
    bool json = false;
};

inline int cmd_riccati(const RiccatiOptions& o, Streams io) {
    RiccatiProblem<double> p{o.a, o.b, o.c, o.m};
    if (!(o.tol > 0)) throw UsageError("--tol must be positive");
    RiccatiReport r;
    try {
        r = verify_riccati(p, o.depth, o.tol);
    } catch (const OutOfScope& e) {
        throw UsageError(std::string("out of scope: ") + e.what());
    }
    if (o.json) {
        io.out << Json{{"cf_value", number_or_null(r.cf_value)},
                       {"ode_value", number_or_null(r.ode_value)},
                       {"abs_error", number_or_null(r.abs_error)},
                       {"cf_terms", r.cf_terms},
                       {"terminates_at", r.terminates_at ? Json(*r.terminates_at) : Json(nullptr)},
                       {"verdict", to_string(r.verdict)}}
                      .dump()
               << '\n';
    } else {
        io.out << "cf_value   " << format_number(r.cf_value) << '\n';
        io.out << "ode_value  " << format_number(r.ode_value) << '\n';
        io.out << "abs_error  " << format_number(r.abs_error) << '\n';
        if (r.terminates_at) io.out << "terminates after " << *r.terminates_at << " terms\n";
        io.out << "verdict    " << to_string(r.verdict) << '\n';
    }
    switch (r.verdict) {
        case RiccatiVerdict::pass: return exit_code::ok;
        case RiccatiVerdict::fail: return exit_code::failed;
        case RiccatiVerdict::pole_encountered: return exit_code::divergent;
    }
    return exit_code::failed;
}

inline int cmd_list(Streams io) {
    for (const auto& f : catalog()) {
        std::string params;
        for (const auto& p : f.info.params) params += (params.empty() ? "" : ",") + p;
        io.out << f.info.id << '\t' << (params.empty() ? "-" : params) << '\t' << f.info.summary << '\n';
    }
    return exit_code::ok;
}

// ---- entry point -----------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Streams io{out, err};
    CLI::App app{"Continued fractions: evaluation, series conversion and identity verification", "eulercf"};
    app.require_subcommand(1);

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a catalog fraction");
    eval_cmd->add_option("--family", eval.family, "family id (see `list`)")->required();
    eval_cmd->add_option("--param", eval.params, "name=value, repeatable");
    eval_cmd->add_option("--terms", eval.terms, "term budget (convergent count with --exact)");
    eval_cmd->add_option("--tol", eval.tol, "absolute tolerance");
    eval_cmd->add_flag("--exact", eval.exact, "list exact convergents");
    eval_cmd->add_flag("--json", eval.json);

    auto* convert_cmd = app.add_subcommand("convert", "series <-> continued fraction");
    convert_cmd->require_subcommand(1);
    SeriesOptions series;
    auto* s2c = convert_cmd->add_subcommand("series-to-cf", "alternating series to continued fraction");
    s2c->add_option("--numerators", series.numerators, "comma-separated n_0,n_1,...")->required();
    s2c->add_option("--denominators", series.denominators, "comma-separated d_0,d_1,...")->required();
    s2c->add_option("--depth", series.depth, "maximum number of terms (0 = all)");
    s2c->add_flag("--json", series.json);
    FamilyDepthOptions to_series;
    auto* c2s = convert_cmd->add_subcommand("cf-to-series", "continued fraction to alternating series");
    c2s->add_option("--family", to_series.family)->required();
    c2s->add_option("--param", to_series.params, "name=value, repeatable");
    c2s->add_option("--depth", to_series.depth, "number of series terms")->required();
    c2s->add_flag("--json", to_series.json);

    FamilyDepthOptions contract;
    auto* contract_cmd = app.add_subcommand("contract", "even contraction of a catalog fraction");
    contract_cmd->add_option("--family", contract.family)->required();
    contract_cmd->add_option("--param", contract.params, "name=value, repeatable");
    contract_cmd->add_option("--depth", contract.depth, "number of contracted terms")->required();
    contract_cmd->add_flag("--json", contract.json);

    VerifyOptions verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "verify identities, one JSON line per case");
    verify_cmd->add_option("--manifest", verify_opts.manifest, "JSON manifest (default: built-in suite)");
    verify_cmd->add_option("--family", verify_opts.family, "only cases of this family");
    verify_cmd->add_option("--jobs", verify_opts.jobs, "worker threads (default: hardware)");

    RiccatiOptions ric;
    auto* ric_cmd = app.add_subcommand("riccati", "continued fraction against the ODE at x = 1");
    ric_cmd->add_option("--a", ric.a)->required();
    ric_cmd->add_option("--b", ric.b)->required();
    ric_cmd->add_option("--c", ric.c)->required();
    ric_cmd->add_option("--m", ric.m)->required();
    ric_cmd->add_option("--depth", ric.depth, "term budget for the fraction");
    ric_cmd->add_option("--tol", ric.tol);
    ric_cmd->add_flag("--json", ric.json);

    auto* list_cmd = app.add_subcommand("list", "catalog families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        if (*eval_cmd) return cmd_eval(eval, io);
        if (*s2c) return cmd_series_to_cf(series, io);
        if (*c2s) return cmd_cf_to_series(to_series, io);
        if (*contract_cmd) return cmd_contract(contract, io);
        if (*verify_cmd) return cmd_verify(verify_opts, io);
        if (*ric_cmd) return cmd_riccati(ric, io);
        if (*list_cmd) return cmd_list(io);
    } catch (const InputError& e) {
        err << "eulercf: " << e.what() << '\n';
        return exit_code::no_input;
    } catch (const std::invalid_argument& e) {
        err << "eulercf: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::domain_error& e) {
        err << "eulercf: undefined: " << e.what() << '\n';
        return exit_code::divergent;
    }
    return exit_code::usage;
}

}  // namespace eulercf::cli
