#ifndef CUSP_CLI_HPP
#define CUSP_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cusp/hauptmodul.hpp>
#include <cusp/json.hpp>
#include <cusp/metric.hpp>
#include <cusp/modforms.hpp>
#include <cusp/transport.hpp>
#include <cusp/verify.hpp>

namespace cusp::cli
{

inline constexpr const char *tool_version = "0.1.0";
inline constexpr const char *format_env = "CUSP_FORMAT";

enum class Format { json, csv };

struct Document {
    json inputs = json::object();
    json results;
    std::string csv;
    bool failed_checks = false;
};

inline json point_json(const Complex &z)
{
    return json{{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}};
}

inline json residual_json(const Residual &r)
{
    json j;
    j["name"] = r.name;
    j["tau"] = r.tau ? point_json(*r.tau) : json(nullptr);
    j["f"] = r.f ? point_json(*r.f) : json(nullptr);
    j["order"] = r.order;
    j["value"] = static_cast<double>(r.value);
    j["tolerance"] = static_cast<double>(r.tolerance);
    j["pass"] = r.pass;
    return j;
}

template <ExactRing R>
std::string series_csv(const Series<R> &s)
{
    std::string out = "m,coefficient\n";
    for (int m = 0; m <= s.order(); ++m) {
        out += std::to_string(m) + "," + render(s[m]) + "\n";
    }
    return out;
}

template <ExactRing R>
json metric_terms_json(const MetricExpansion<R> &e)
{
    json terms = json::array();
    for (const auto &[k, c] : e.terms()) {
        terms.push_back(json{{"m", k.degree()}, {"s", k.s}, {"t", k.t}, {"j", k.j}, {"coefficient", render(c)}});
    }
    return terms;
}

inline std::string real_string(const Real &x)
{
    return x.str(20, std::ios_base::scientific);
}

inline Complex parse_float_complex(const std::string &text)
{
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            return {Real(text), Real(0)};
        }
        return {Real(text.substr(0, comma)), Real(text.substr(comma + 1))};
    } catch (const std::exception &) {
        throw std::invalid_argument("cannot parse complex number '" + text + "' (expected re,im)");
    }
}

inline std::optional<GaussRational> parse_optional(const std::string &text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    return GaussRational::parse(text);
}

struct ExpandOptions {
    int level = 0;
    int order = 0;
    std::string A, B;
    std::vector<std::string> punctures, ratios;
};

inline Document run_expand(const ExpandOptions &o)
{
    Document d;
    d.inputs = json{{"command", "expand"}, {"order", o.order}};
    const auto A = parse_optional(o.A);
    const auto B = parse_optional(o.B);
    if (!o.A.empty()) {
        d.inputs["A"] = o.A;
    }
    if (!o.B.empty()) {
        d.inputs["B"] = o.B;
    }
    if (!o.punctures.empty()) {
        d.inputs["punctures"] = o.punctures;
        d.inputs["ratios"] = o.ratios;
        if (!A || !B) {
            throw std::invalid_argument("expand with --punctures needs both --A and --B");
        }
        AccessoryData data;
        for (const auto &p : o.punctures) {
            data.punctures.push_back(ProjPoint::parse(p));
        }
        for (const auto &r : o.ratios) {
            data.ratios.push_back(GaussRational::parse(r));
        }
        const GaussRational bfrak = *B / *A;
        const Series<GaussRational> s = solve_accessory(data, *A, bfrak, o.order);
        d.results = json{{"A", render(*A)},
                         {"B", render(*B)},
                         {"Bfrak", render(bfrak)},
                         {"c3_closed_form", render(c3_closed_form(*A, bfrak, data))},
                         {"series", to_json(s)}};
        d.csv = series_csv(s);
        return d;
    }
    d.inputs["level"] = o.level;
    if (A.has_value() != B.has_value()) {
        throw std::invalid_argument("expand: give both --A and --B or neither");
    }
    const HauptmodulExpansion<PolyBB> h = solve_congruence(o.level, o.order);
    if (A) {
        const Series<GaussRational> s = specialize(h, *A, *B);
        d.results = json{{"level", o.level},
                         {"A", render(*A)},
                         {"B", render(*B)},
                         {"Bfrak", render(*B / *A)},
                         {"series", to_json(s)}};
        d.csv = series_csv(s);
    } else {
        d.results = json{{"level", o.level}, {"normalized", true}, {"series", to_json(h.normalized)}};
        d.csv = series_csv(h.normalized);
    }
    return d;
}

struct MetricOptions {
    int level = 0;
    int degree = 0;
    std::string A, B, eval;
    bool in_f = false;
};

inline Document run_metric(const MetricOptions &o)
{
    Document d;
    d.inputs = json{{"command", "metric"}, {"level", o.level}, {"degree", o.degree}};
    auto A = parse_optional(o.A);
    auto B = parse_optional(o.B);
    if (!o.A.empty()) {
        d.inputs["A"] = o.A;
    }
    if (!o.B.empty()) {
        d.inputs["B"] = o.B;
    }
    d.inputs["in_f"] = o.in_f;
    if (!o.eval.empty()) {
        d.inputs["eval"] = o.eval;
    }
    if (A.has_value() != B.has_value()) {
        throw std::invalid_argument("metric: give both --A and --B or neither");
    }
    const MetricExpansion<PolyBB> symbolic = inside_modulus(solve_congruence(o.level, std::max(o.degree + 1, 3)).normalized, o.degree);
    const bool numeric = A.has_value() || o.in_f || !o.eval.empty();
    if (!numeric) {
        d.results = json{{"level", o.level}, {"degree", o.degree}, {"variables", "F"}, {"terms", metric_terms_json(symbolic)}};
        d.csv = "m,s,t,j,coefficient\n";
        for (const auto &[k, c] : symbolic.terms()) {
            d.csv += std::to_string(k.degree()) + "," + std::to_string(k.s) + "," + std::to_string(k.t) + "," +
                     std::to_string(k.j) + "," + render(c) + "\n";
        }
        return d;
    }
    if (!A) {
        std::tie(A, B) = default_params(o.level);
    }
    const MetricExpansion<GaussRational> inF = specialize(symbolic, *B / *A);
    const MetricExpansion<GaussRational> shown = o.in_f ? rescale_to_f(inF, *A) : inF;
    std::optional<Complex> at;
    if (!o.eval.empty()) {
        at = parse_float_complex(o.eval);
    }
    d.results = json{{"level", o.level},
                     {"degree", o.degree},
                     {"A", render(*A)},
                     {"Bfrak", render(*B / *A)},
                     {"variables", o.in_f ? "f" : "F"},
                     {"terms", metric_terms_json(shown)}};
    d.csv = at ? "m,s,t,j,coefficient,density\n" : "m,s,t,j,coefficient\n";
    json densities = json::array();
    std::vector<std::string> density_by_degree;
    if (at) {
        for (int m = 0; m <= o.degree; ++m) {
            const std::string v = real_string(density_eval(inF, *A, *at, m));
            density_by_degree.push_back(v);
            densities.push_back(json{{"degree", m}, {"density", v}});
        }
        d.results["eval"] = point_json(*at);
        d.results["density"] = densities;
    }
    for (const auto &[k, c] : shown.terms()) {
        d.csv += std::to_string(k.degree()) + "," + std::to_string(k.s) + "," + std::to_string(k.t) + "," +
                 std::to_string(k.j) + "," + render(c);
        if (at) {
            d.csv += "," + density_by_degree[static_cast<std::size_t>(k.degree())];
        }
        d.csv += "\n";
    }
    return d;
}

struct TransportOptions {
    std::vector<std::string> punctures;
    int order = 0;
    int metric = -1;
};

inline Document run_transport(const TransportOptions &o)
{
    Document d;
    d.inputs = json{{"command", "transport"}, {"punctures", o.punctures}, {"order", o.order}};
    if (o.metric >= 0) {
        d.inputs["metric"] = o.metric;
    }
    const ProjPoint a1 = ProjPoint::parse(o.punctures.at(0));
    const ProjPoint a2 = ProjPoint::parse(o.punctures.at(1));
    const ProjPoint a3 = ProjPoint::parse(o.punctures.at(2));
    const Moebius m = moebius_from_triple(a1, a2, a3);
    const TripleParams p = params_from_triple(a1, a2, a3);
    const Series<GaussRational> s = covering_series(a1, a2, a3, o.order);
    d.results = json{{"moebius", {{"a", render(m.a())}, {"b", render(m.b())}, {"c", render(m.c())}, {"d", render(m.d())}}},
                     {"A", render(p.A)},
                     {"Bfrak", render(p.bfrak)},
                     {"series", to_json(s)}};
    if (o.metric >= 0) {
        const CuspMetric cm = metric_at_cusp(a1, a2, a3, o.metric);
        d.results["metric"] = json{{"degree", o.metric}, {"variables", "F"}, {"terms", metric_terms_json(cm.expansion)}};
    }
    d.csv = series_csv(s);
    return d;
}

inline Document run_groups(int level)
{
    Document d;
    d.inputs = json{{"command", "groups"}, {"level", level}};
    const GroupInvariants g = group_invariants(level);
    d.results = json{{"level", g.level}, {"index", g.index}, {"cusps", g.cusps}, {"genus", g.genus}};
    d.csv = "level,index,cusps,genus\n" + std::to_string(g.level) + "," + std::to_string(g.index) + "," +
            std::to_string(g.cusps) + "," + std::to_string(g.genus) + "\n";
    return d;
}

inline Document run_e4(int order)
{
    Document d;
    d.inputs = json{{"command", "e4"}, {"order", order}};
    const Series<Rational> s = e4_series(order);
    d.results = json{{"series", to_json(s)}};
    d.csv = series_csv(s);
    return d;
}

struct VerifyOptions {
    std::string suite = "all";
    int level = 0;
    int order = 40;
};

inline std::vector<Residual> verify_suite(const VerifyOptions &o)
{
    std::vector<Residual> out;
    const bool all = o.suite == "all";
    std::vector<int> levels = {2, 3, 4, 5};
    if (o.level != 0) {
        levels = {o.level};
    }
    if (all || o.suite == "oracle") {
        for (const Complex &tau : {Complex(0, Real("1.2")), Complex(0, 2), Complex(Real("0.4"), Real("1.5")), Complex(0, 3)}) {
            out.push_back(check_oracle(tau, o.order));
        }
    }
    if (all || o.suite == "e4") {
        for (int n : levels) {
            out.push_back(check_e4_identity(n, Complex(Real("0.3"), Real("1.1")), o.order));
        }
    }
    const int metric_level = o.level != 0 ? o.level : 2;
    const auto [A, B] = default_params(metric_level);
    if (all || o.suite == "pullback") {
        out.push_back(check_pullback(metric_level, A, B, Complex(0, Real("1.5")), o.order, 4, Real("1e-6")));
        out.push_back(check_pullback(metric_level, A, B, Complex(0, 3), o.order, 1, Real("1e-3")));
    }
    if (all || o.suite == "curvature") {
        const Complex f0(Real("0.01"));
        out.push_back(check_curvature(metric_level, A, B, f0, Real("1e-4") * abs(f0), 4, Real("1e-3")));
        out.push_back(check_curvature(metric_level, 1, 0, f0, Real("1e-4") * abs(f0), 0, Real("1e-6")));
    }
    return out;
}

inline Document run_verify(const VerifyOptions &o)
{
    Document d;
    d.inputs = json{{"command", "verify"}, {"suite", o.suite}, {"order", o.order}};
    if (o.level != 0) {
        d.inputs["level"] = o.level;
    }
    d.results = json::array();
    d.csv = "name,order,value,tolerance,pass\n";
    for (const Residual &r : verify_suite(o)) {
        d.results.push_back(residual_json(r));
        d.csv += r.name + "," + std::to_string(r.order) + "," + real_string(r.value) + "," + real_string(r.tolerance) +
                 "," + (r.pass ? "true" : "false") + "\n";
        d.failed_checks = d.failed_checks || !r.pass;
    }
    return d;
}

inline Format default_format()
{
    const char *env = std::getenv(format_env);
    if (env == nullptr || std::string(env).empty()) {
        return Format::json;
    }
    const std::string v(env);
    if (v == "json") {
        return Format::json;
    }
    if (v == "csv") {
        return Format::csv;
    }
    throw std::invalid_argument(std::string(format_env) + " must be 'json' or 'csv', got '" + v + "'");
}

// Runs one command. Exit status: 0 on success, 1 on computation errors or
// failed verification checks, 2 on usage errors.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-expansions of covering maps of punctured spheres and their cusp metrics", "cusp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    std::string format_name;
    std::string output;
    app.add_option("--format", format_name, "Output format (json or csv); default from " + std::string(format_env))
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("-o,--output", output, "Write to this file instead of stdout");

    std::function<Document()> action;

    ExpandOptions ex;
    auto *expand = app.add_subcommand("expand", "Covering-map coefficients for Gamma(N) or given accessory data");
    auto *ex_level = expand->add_option("--level", ex.level, "Level N in 2..5")->check(CLI::Range(2, 5));
    expand->add_option("--order", ex.order, "Truncation order")->required()->check(CLI::Range(3, 400));
    expand->add_option("--A", ex.A, "First coefficient A (exact complex rational)");
    expand->add_option("--B", ex.B, "Second coefficient B (exact complex rational)");
    auto *ex_punct = expand->add_option("--punctures", ex.punctures, "Punctures other than 0 (accessory mode)");
    expand->add_option("--ratios", ex.ratios, "Ratio 2beta/alpha per finite puncture")->needs(ex_punct);
    ex_level->excludes(ex_punct);
    expand->callback([&] {
        if (ex_level->count() == 0 && ex_punct->count() == 0) {
            throw CLI::ValidationError("expand", "need --level or --punctures");
        }
        action = [&] { return run_expand(ex); };
    });

    MetricOptions mo;
    auto *metric = app.add_subcommand("metric", "Asymptotic metric expansion at the cusp");
    metric->add_option("--level", mo.level, "Level N in 2..5")->required()->check(CLI::Range(2, 5));
    metric->add_option("--degree", mo.degree, "Maximal total degree")->required()->check(CLI::Range(1, 60));
    metric->add_option("--A", mo.A, "First coefficient A");
    metric->add_option("--B", mo.B, "Second coefficient B");
    metric->add_flag("--in-f", mo.in_f, "Express coefficients in f instead of F = f/A");
    metric->add_option("--eval", mo.eval, "Add the density at f = re,im (cumulative through each row's degree)");
    metric->callback([&] { action = [&] { return run_metric(mo); }; });

    TransportOptions to;
    auto *transport = app.add_subcommand("transport", "Covering map for three punctures a1 a2 a3 (cusp at a1)");
    transport->add_option("--punctures", to.punctures, "a1 a2 a3; exact complex rationals or inf")
        ->required()
        ->expected(3);
    transport->add_option("--order", to.order, "Truncation order")->required()->check(CLI::Range(3, 400));
    transport->add_option("--metric", to.metric, "Also emit the metric expansion to this degree")->check(CLI::Range(1, 60));
    transport->callback([&] { action = [&] { return run_transport(to); }; });

    int group_level = 0;
    auto *groups = app.add_subcommand("groups", "Index, cusp count and genus of Gamma(N)");
    groups->add_option("--level", group_level, "Level N >= 2")->required()->check(CLI::Range(2, 100000));
    groups->callback([&] { action = [&] { return run_groups(group_level); }; });

    int e4_order = 0;
    auto *e4 = app.add_subcommand("e4", "Eisenstein series E4");
    e4->add_option("--order", e4_order, "Truncation order")->required()->check(CLI::Range(0, 100000));
    e4->callback([&] { action = [&] { return run_e4(e4_order); }; });

    VerifyOptions vo;
    auto *verify = app.add_subcommand("verify", "Numeric residual checks");
    verify->add_option("--suite", vo.suite, "all, e4, pullback, curvature or oracle")
        ->check(CLI::IsMember({"all", "e4", "pullback", "curvature", "oracle"}));
    verify->add_option("--level", vo.level, "Restrict to level N")->check(CLI::Range(2, 5));
    verify->add_option("--order", vo.order, "Series truncation order")->check(CLI::Range(5, 200));
    verify->callback([&] { action = [&] { return run_verify(vo); }; });

    Format format = Format::json;
    try {
        app.parse(argc, argv);
        format = format_name.empty() ? default_format() : (format_name == "csv" ? Format::csv : Format::json);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << tool_version << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "error: cannot open " << output << " for writing\n";
            return 1;
        }
    }
    std::ostream &sink = output.empty() ? out : file;

    Document doc;
    try {
        doc = action();
    } catch (const std::exception &e) {
        json j;
        j["tool_version"] = tool_version;
        j["inputs"] = json{{"command", app.get_subcommands().front()->get_name()}};
        j["error"] = json{{"message", e.what()}};
        sink << j.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (format == Format::csv) {
        sink << doc.csv;
    } else {
        json j;
        j["tool_version"] = tool_version;
        j["inputs"] = doc.inputs;
        j["results"] = doc.results;
        sink << j.dump(2) << "\n";
    }
    return doc.failed_checks ? 1 : 0;
}

} // namespace cusp::cli

#endif
