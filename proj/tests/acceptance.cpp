// One line per acceptance criterion, all in symbolic mode.
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>

#include "hecke/suites.hpp"

using namespace hecke;

namespace {

struct Part {
    std::string suite;
    std::string prefix;  // empty: every check of the suite
};

struct Criterion {
    int n;
    std::string title;
    std::vector<Part> parts;
    bool needs_diff = false;  // the transcribed-vs-derived report must exist
};

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> c{
        {1, "genus-2 Hecke-Shimura image equals the closed series", {{"eq3", ""}}},
        {2, "delta form agrees with the series to order 20 and both printed forms", {{"formula1", ""}}},
        {3, "16-term Rankin closed form: prefix to 12 and the corrected printed sum",
         {{"rankin2", "rankin2.prefix"}, {"rankin2", "rankin2.transcribed"}}},
        {4, "reduced Rankin denominator is the 16-factor product", {{"rankin2", "rankin2.denominator"}}},
        {5, "quadratic factor divides; degree-12 quotient shape",
         {{"rankin2", "rankin2.quadratic"},
          {"rankin2", "rankin2.degree12"},
          {"rankin2", "rankin2.constant"},
          {"rankin2", "rankin2.x1-x11"},
          {"rankin2", "rankin2.leading"}}},
        {6, "symmetric square and cubic closed forms equal the displays", {{"symsquare", ""}, {"cubic", ""}}},
        {7, "Hecke-valued R/S derived, functional equation, fixed coefficients",
         {{"theorem31", ""}, {"funceq", ""}},
         true},
        {8, "Newton polygons end at (12,34) and (16,48) with integral slopes", {{"newton", ""}}},
        {9, "genus-1 Rankin identity, spherical and Hecke-valued", {{"rankin1", ""}}},
        {10, "genus-4 denominator under the u-substitution", {{"conjecture-denominator", ""}}},
        {11, "merged Eisenstein parameters for m = 1, 2, 3", {{"eisenstein", ""}}},
        {12, "Hodge tensor reproduces the 16 pairs with tags", {{"hodge-tensor", ""}}},
        {13, "standard factor of the lift for m = 1, 2", {{"ikeda-standard", ""}}},
    };
    return c;
}

const VerificationReport& suite(const std::string& name)
{
    static std::map<std::string, VerificationReport> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, run_suite(name)).first;
    return it->second;
}

bool run(const Criterion& c, bool verbose)
{
    bool ok = true;
    std::vector<std::string> bad, notes;
    for (const auto& part : c.parts) {
        const auto& r = suite(part.suite);
        int seen = 0;
        for (const auto& ch : r.checks) {
            bool mine = part.prefix.empty() || ch.id == part.prefix || ch.id.rfind(part.prefix + ".", 0) == 0;
            if (ch.id == part.suite + ".error") mine = true;
            if (!mine) continue;
            ++seen;
            if (ch.status == CheckStatus::fail) {
                ok = false;
                bad.push_back(ch.id + (ch.detail.empty() ? "" : " (" + ch.detail + ")"));
            }
        }
        if (seen == 0) {
            ok = false;
            bad.push_back(part.suite + ": no checks for " + part.prefix);
        }
    }
    if (c.needs_diff) {
        const auto& r = suite("appendix-diff");
        bool errored = false;
        for (const auto& ch : r.checks)
            if (ch.id == "appendix-diff.error") errored = true;
        if (errored || !r.data.contains("diff") || r.data["diff"].empty()) {
            ok = false;
            bad.push_back("diff report missing");
        } else if (verbose) {
            for (const auto& ch : r.checks)
                if (ch.status != CheckStatus::pass)
                    notes.push_back(ch.id + " " + status_name(ch.status) + ": " + ch.detail);
        }
    }
    std::cout << "criterion " << c.n << ": " << (ok ? "PASS" : "FAIL") << " " << c.title << "\n";
    for (const auto& b : bad) std::cout << "    failed: " << b << "\n";
    for (const auto& n : notes) std::cout << "    note: " << n << "\n";
    std::cout.flush();
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance checks"};
    std::vector<int> only;
    bool verbose = false;
    app.add_option("--criterion", only, "run only these criteria")->check(CLI::Range(1, 13));
    app.add_flag("-v,--verbose", verbose, "print notes from the diff report");
    CLI11_PARSE(app, argc, argv);

    std::set<int> pick(only.begin(), only.end());
    int failed = 0;
    for (const auto& c : criteria()) {
        if (!pick.empty() && !pick.count(c.n)) continue;
        if (!run(c, verbose)) ++failed;
    }
    return failed ? 1 : 0;
}
