// hecke: series, identity suites and L-factor utilities.
//
// exit codes: 0 ok / all checks pass, 1 a check failed, 2 usage or input error

#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hecke/hecke.hpp"

using namespace hecke;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string latex(std::string s)
{
    s = std::regex_replace(s, std::regex(R"(([xyzu])(\d+))"), "$1_{$2}");
    s = std::regex_replace(s, std::regex(R"(\^(-?\d+))"), "^{$1}");
    s = std::regex_replace(s, std::regex(R"(\*)"), " ");
    return s;
}

json read_stdin_json()
{
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError("expected JSON on standard input");
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::parse_error, e.what());
    }
}

// --- series ---------------------------------------------------------------

struct SeriesOpts {
    int genus = 2;
    int power = 1;
    std::optional<int> terms;
    std::string format = "text";
};

int cmd_series(const SeriesOpts& o)
{
    if (o.genus != 1 && o.genus != 2)
        throw Error(Errc::unsupported_genus, "genus " + std::to_string(o.genus) + " has no spherical formulas here");
    if (o.power < 1) throw UsageError("--power must be positive");
    auto ctx = make_context(o.genus, 'x');
    RationalFn f;
    if (o.genus == 2) {
        f = o.power == 1 ? andrianov_series_genus2(ctx) : power_series_closed_form(ctx, o.power);
    } else {
        MultiPoly one = ctx.one();
        f = resum(delta_power_substitute(genus1_delta_form(ctx), o.power), ctx.series_var)
                .reduce_known_factors({one - ctx.z(1), ctx.p()});
    }
    std::vector<MultiPoly> coeffs;
    if (o.terms && *o.terms > 0) coeffs = series_expand(f, ctx.series_var, *o.terms - 1);

    if (o.format == "json") {
        json j = {{"genus", o.genus}, {"power", o.power}, {"closed_form", to_json(f)}};
        if (o.terms) {
            json cs = json::array();
            for (const auto& c : coeffs) cs.push_back(to_json(c));
            j["coefficients"] = cs;
        }
        std::cout << j.dump(2) << "\n";
    } else if (o.format == "latex") {
        std::cout << latex(f.to_string()) << "\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << "c_{" << i << "} = " << latex(coeffs[i].to_string()) << "\n";
    } else {
        std::cout << "closed form: " << f.to_string() << "\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << "X^" << i << ": " << coeffs[i].to_string() << "\n";
    }
    return 0;
}

// --- verify ---------------------------------------------------------------

struct VerifyOpts {
    std::string suite;
    int prefix_order = 12;
    std::optional<unsigned long> prime;
    std::string format = "text";
    bool timing = false;
};

int cmd_verify(const VerifyOpts& o)
{
    SuiteConfig cfg;
    cfg.prefix_order = o.prefix_order;
    cfg.prime = o.prime;
    VerificationReport r = run_suite(o.suite, cfg);
    if (o.format == "json") std::cout << to_json(r, o.timing).dump(2) << "\n";
    else std::cout << to_text(r);
    return r.passed() ? 0 : 1;
}

// --- lfactor --------------------------------------------------------------

struct LfactorOpts {
    int genus = 2;
    std::string weight = "k";
    std::vector<std::string> alphas;
    std::string tensor_weight;
    int m = 1;
    std::string alpha = "alpha";
    bool allow_mismatch = false;
    std::string format = "text";
};

SatakeParams params_from(const LfactorOpts& o)
{
    if (o.alphas.empty()) return satake_from_json(read_stdin_json());
    SatakeParams s;
    s.genus = o.genus;
    s.weight = LinExpr::parse(o.weight);
    for (const auto& a : o.alphas) s.alphas.push_back(PMono::parse(a));
    if (s.alphas.size() != static_cast<std::size_t>(s.genus + 1))
        throw Error(Errc::invalid_argument, "need genus + 1 parameters");
    return s;
}

void print_factor(const std::vector<PMono>& roots, const std::string& format)
{
    if (format == "json") {
        json r = json::array();
        for (const auto& c : roots) r.push_back(c.to_string());
        std::cout << json{{"roots", r}, {"factored", factors_to_string(roots)}}.dump(2) << "\n";
    } else {
        std::cout << factors_to_string(roots) << "\n";
    }
}

int cmd_lfactor(const std::string& sub, const LfactorOpts& o)
{
    if (sub == "spin") {
        print_factor(spin_polynomial(params_from(o)), o.format);
    } else if (sub == "standard") {
        print_factor(standard_polynomial(params_from(o)), o.format);
    } else if (sub == "hodge") {
        HodgeType h = hodge_spinor(o.genus, LinExpr::parse(o.weight));
        if (!o.tensor_weight.empty()) h = hodge_tensor(h, hodge_spinor(o.genus, LinExpr::parse(o.tensor_weight)));
        std::cout << to_json(h).dump(2) << "\n";
    } else if (sub == "merge") {
        json j = read_stdin_json();
        json f, g;
        if (j.is_array() && j.size() == 2) {
            f = j[0];
            g = j[1];
        } else if (j.is_object() && j.contains("f") && j.contains("g")) {
            f = j["f"];
            g = j["g"];
        } else {
            throw Error(Errc::parse_error, "merge expects {\"f\":..., \"g\":...} or a two-element array");
        }
        MergeResult r = lift_merge_params(satake_from_json(f), satake_from_json(g), o.allow_mismatch);
        json out = to_json(r.params);
        if (r.weight_override) out["weight_override"] = true;
        std::cout << out.dump(2) << "\n";
    } else if (sub == "eisenstein") {
        std::cout << to_json(eisenstein_params(LinExpr::parse(o.weight), o.genus)).dump(2) << "\n";
    } else if (sub == "ikeda") {
        std::cout << to_json(ikeda_params(LinExpr::parse(o.weight), o.m, o.alpha)).dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hecke series, Rankin identities and local L-factors"};
    app.require_subcommand(1);

    SeriesOpts so;
    auto* series = app.add_subcommand("series", "closed form and leading coefficients of the spherical series");
    series->add_option("--genus", so.genus, "1 or 2");
    series->add_option("--power", so.power, "m in T(p^{m delta})");
    series->add_option("--terms", so.terms, "number of coefficients");
    series->add_option("--format", so.format)->check(CLI::IsMember({"text", "json", "latex"}));

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", vo.suite, "suite name")->required();
    verify->add_option("--prefix-order", vo.prefix_order, "series prefix order")->check(CLI::NonNegativeNumber);
    verify->add_option("--prime", vo.prime, "substitute this prime for p");
    verify->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timing", vo.timing, "include elapsed_ms in JSON");

    LfactorOpts lo;
    auto* lfactor = app.add_subcommand("lfactor", "local L-factors, lifts and Hodge types");
    lfactor->require_subcommand(1);
    std::string lsub;
    for (const char* name : {"spin", "standard", "hodge", "merge", "eisenstein", "ikeda"}) {
        auto* s = lfactor->add_subcommand(name);
        s->callback([&lsub, name] { lsub = name; });
        s->add_option("--format", lo.format)->check(CLI::IsMember({"text", "json"}));
        std::string n = name;
        if (n == "spin" || n == "standard") {
            s->add_option("--genus", lo.genus);
            s->add_option("--weight", lo.weight);
            s->add_option("--alphas", lo.alphas, "alpha_0 .. alpha_n; otherwise JSON on stdin")->delimiter(',');
        } else if (n == "hodge") {
            s->add_option("--genus", lo.genus);
            s->add_option("--weight", lo.weight);
            s->add_option("--tensor", lo.tensor_weight, "second weight; prints the tensor product");
        } else if (n == "merge") {
            s->add_flag("--allow-weight-mismatch", lo.allow_mismatch);
        } else if (n == "eisenstein") {
            s->add_option("--genus", lo.genus);
            s->add_option("--weight", lo.weight);
        } else {
            s->add_option("--weight", lo.weight);
            s->add_option("--m", lo.m);
            s->add_option("--alpha", lo.alpha, "symbol for the elliptic parameter");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*series) return cmd_series(so);
        if (*verify) {
            const auto names = suite_names();
            if (std::find(names.begin(), names.end(), vo.suite) == names.end()) {
                std::cerr << "unknown suite '" << vo.suite << "'\n";
                return 2;
            }
            return cmd_verify(vo);
        }
        if (*lfactor) return cmd_lfactor(lsub, lo);
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
