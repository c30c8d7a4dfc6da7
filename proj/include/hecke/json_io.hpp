#ifndef HECKE_JSON_IO_HPP
#define HECKE_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/delta_series.hpp"
#include "hecke/error.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/lfactor.hpp"
#include "hecke/multi_poly.hpp"
#include "hecke/newton.hpp"
#include "hecke/rational_fn.hpp"

namespace hecke {

using json = nlohmann::ordered_json;

inline json monomial_json(const Monomial& m, const VarTable& vars)
{
    json o = json::object();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (m[i]) o[vars.name(i)] = m[i];
    return o;
}

inline json to_json(const MultiPoly& f)
{
    const VarTable& vars = f.vars();
    std::vector<bool> used(vars.size(), false);
    json terms = json::array();
    for (const auto& t : f.terms()) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (t.m[i]) used[i] = true;
        terms.push_back({{"m", monomial_json(t.m, vars)}, {"n", t.c.num_str()}, {"d", t.c.den_str()}});
    }
    json vs = json::array();
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (used[i]) vs.push_back(vars.name(i));
    return {{"vars", vs}, {"terms", terms}};
}

inline json to_json(const RationalFn& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline json to_json(const DeltaSeries& d)
{
    json terms = json::array();
    for (const auto& t : d.terms()) terms.push_back({{"coef", to_json(t.coef)}, {"base", monomial_json(t.base, d.vars())}});
    return {{"terms", terms}};
}

inline json to_json(const HeckeElement& e)
{
    const auto& names = generator_names(e.alphabet());
    json terms = json::array();
    for (const auto& [g, c] : e.terms()) {
        json gens = json::object();
        for (std::size_t i = 0; i < names.size(); ++i)
            if (g[i]) gens[names[i]] = g[i];
        terms.push_back({{"gens", gens}, {"coef", to_json(c)}});
    }
    return {{"alphabet", alphabet_name(e.alphabet())}, {"terms", terms}};
}

inline json to_json(const HeckeSeriesPoly& s)
{
    json cs = json::array();
    for (const auto& c : s.coeffs) cs.push_back(to_json(c));
    return {{"alphabet", alphabet_name(s.alphabet)}, {"coeffs", cs}};
}

inline json to_json(const NewtonPolygon& np)
{
    json v = json::array(), sl = json::array();
    for (const auto& [i, h] : np.vertices) v.push_back({i, h});
    for (const auto& s : np.slopes) sl.push_back(s.is_integer() ? json(std::stol(s.num_str())) : json(s.to_string()));
    return {{"vertices", v}, {"slopes", sl}};
}

inline json to_json(const SatakeParams& s)
{
    json a = json::array();
    for (const auto& x : s.alphas) a.push_back(x.to_string());
    return {{"genus", s.genus}, {"weight", s.weight.to_string()}, {"alphas", a}};
}

inline json to_json(const HodgeType& h)
{
    json pairs = json::array();
    for (const auto& hp : h.pairs) {
        json e = {hp.p.to_string(), hp.q.to_string()};
        if (hp.tag) e.push_back(std::string(1, hp.tag));
        pairs.push_back(e);
    }
    return {{"pairs", pairs}};
}

inline SatakeParams satake_from_json(const json& j)
{
    try {
        SatakeParams s;
        s.genus = j.at("genus").get<int>();
        const json& w = j.at("weight");
        s.weight = w.is_number_integer() ? LinExpr(w.get<long>()) : LinExpr::parse(w.get<std::string>());
        for (const auto& a : j.at("alphas")) s.alphas.push_back(PMono::parse(a.is_string() ? a.get<std::string>() : a.dump()));
        if (s.genus < 1 || s.alphas.size() != static_cast<std::size_t>(s.genus + 1))
            throw Error(Errc::invalid_argument, "alphas must have genus + 1 entries");
        return s;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, std::string("Satake parameters: ") + e.what());
    }
}

} // namespace hecke

#endif
