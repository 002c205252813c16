#include "hessencomb/json_io.hpp"

#include <nlohmann/json.hpp>

#include "hessencomb/errors.hpp"

namespace hessencomb {

using nlohmann::json;

nlohmann::json tpoly_to_json(const TPoly& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

TPoly tpoly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("tpoly must be an array of coefficient strings");
    std::vector<Int> coeffs;
    for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
    return TPoly(std::move(coeffs));
}

nlohmann::json symfunc_to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [lambda, coeff] : f.terms) {
        json term;
        term["partition"] = lambda.parts();
        term["tpoly"] = tpoly_to_json(coeff);
        terms.push_back(std::move(term));
    }
    json out;
    out["format"] = kFormatVersion;
    out["basis"] = basis_name(f.basis);
    out["n"] = f.n;
    out["terms"] = std::move(terms);
    return out;
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("n") || !j.contains("terms"))
        throw ParseError("malformed SymFunc document");
    if (j.contains("format") && j["format"].get<int>() != kFormatVersion)
        throw ParseError("unsupported format version");
    SymFunc f(parse_basis(j["basis"].get<std::string>()), j["n"].get<int>());
    for (const auto& term : j["terms"]) {
        Partition lambda(term["partition"].get<std::vector<int>>());
        f.add_term(lambda, tpoly_from_json(term["tpoly"]));
    }
    return f;
}

std::string symfunc_to_json_text(const SymFunc& f) { return dump_canonical(symfunc_to_json(f)); }

SymFunc symfunc_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return symfunc_from_json(j);
}

nlohmann::json orientation_to_json(const AcyclicOrientation& o) {
    json edges = json::array();
    const auto& g = o.graph();
    for (size_t e = 0; e < g.edges.size(); ++e) {
        json entry = json::array();
        entry.push_back(g.edges[e].first);
        entry.push_back(g.edges[e].second);
        entry.push_back(o.forward()[e] ? "fwd" : "rev");
        edges.push_back(std::move(entry));
    }
    json out;
    out["edges"] = std::move(edges);
    return out;
}

AcyclicOrientation orientation_from_json(const nlohmann::json& j, const HessenbergFunction& h) {
    if (!j.is_object() || !j.contains("edges")) throw ParseError("malformed orientation document");
    const auto& g = h.graph();
    std::vector<bool> fwd(g.edges.size(), true);
    std::vector<bool> seen(g.edges.size(), false);
    for (const auto& entry : j["edges"]) {
        const int a = entry.at(0).get<int>();
        const int b = entry.at(1).get<int>();
        const std::string dir = entry.at(2).get<std::string>();
        const int e = g.edge_index(a, b);
        if (e < 0)
            throw ParseError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                             "} is not in G_h");
        if (dir != "fwd" && dir != "rev") throw ParseError("edge direction must be fwd or rev");
        fwd[e] = (dir == "fwd");
        seen[e] = true;
    }
    for (bool s : seen)
        if (!s) throw ParseError("orientation document misses an edge of G_h");
    return AcyclicOrientation(std::make_shared<IncomparabilityGraph>(g), std::move(fwd));
}

nlohmann::json class_to_json(const EquivariantClass& c) {
    json values = json::array();
    for (const auto& [v, p] : c.values) {
        json poly = json::array();
        for (const auto& [exps, coeff] : p.terms()) {
            json term;
            term["exps"] = exps;
            term["coeff"] = coeff.str();
            poly.push_back(std::move(term));
        }
        json entry;
        entry["perm"] = v.str();
        entry["poly"] = std::move(poly);
        values.push_back(std::move(entry));
    }
    json out;
    out["n"] = c.n;
    out["values"] = std::move(values);
    return out;
}

EquivariantClass class_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("values"))
        throw ParseError("malformed equivariant class document");
    EquivariantClass c{j["n"].get<int>(), {}};
    for (const auto& entry : j["values"]) {
        Permutation v = Permutation::parse(entry["perm"].get<std::string>());
        if (v.size() != c.n) throw ParseError("vertex permutation has wrong size");
        MultiPoly p(c.n);
        for (const auto& term : entry["poly"])
            p.add_term(term["exps"].get<std::vector<int>>(), Int(term["coeff"].get<std::string>()));
        c.values.emplace(std::move(v), std::move(p));
    }
    return c;
}

namespace {
json perm_list_to_json(const std::vector<Permutation>& ws) {
    json arr = json::array();
    for (const Permutation& w : ws) arr.push_back(w.str());
    return arr;
}
} // namespace

nlohmann::json report_to_json(const GeneratorReport& r) {
    json out;
    out["format"] = kFormatVersion;
    out["h"] = r.h.values();
    out["n"] = r.h.n();
    out["N_h"] = r.h.complex_dimension();
    out["T"] = r.h.T();
    out["max_k"] = r.max_k;
    json gbyk = json::array();
    for (const auto& level : r.G_by_k) gbyk.push_back(perm_list_to_json(level));
    out["G_by_k"] = std::move(gbyk);
    out["w_list"] = perm_list_to_json(r.w_list);
    json a = json::array(), p = json::array();
    for (const auto& s : r.A_sets) a.push_back(perm_list_to_json(s));
    for (const auto& s : r.P_sets) p.push_back(perm_list_to_json(s));
    out["A"] = std::move(a);
    out["P"] = std::move(p);
    json d = json::array();
    for (const Int& v : r.d) d.push_back(v.str());
    out["d"] = std::move(d);
    out["dim_H2"] = dim_H2(r.h).str();
    json alpha = json::array();
    for (const Composition& comp : r.alpha) alpha.push_back(comp.parts());
    out["alpha"] = std::move(alpha);
    json stabs = json::array();
    for (const StabilizerShape& s : r.stabilizers) {
        json entry;
        entry["exact"] = s.exact;
        entry["composition"] = s.composition.parts();
        stabs.push_back(std::move(entry));
    }
    out["stabilizers"] = std::move(stabs);
    return out;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

} // namespace hessencomb
