#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "hessencomb/generators.hpp"
#include "hessencomb/gkm.hpp"
#include "hessencomb/orientation.hpp"
#include "hessencomb/symfunc.hpp"

namespace hessencomb {

// Wire formats. Every top-level document carries {"format": 1}; object
// keys are sorted and list orders canonical, so identical invocations
// serialize byte-identically. Integer coefficients travel as decimal
// strings to stay exact at arbitrary precision.
inline constexpr int kFormatVersion = 1;

nlohmann::json tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(const nlohmann::json& j);

nlohmann::json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);
std::string symfunc_to_json_text(const SymFunc& f);
SymFunc symfunc_from_json_text(const std::string& text);

// {"edges": [[j, i, "fwd"|"rev"], ...]}
nlohmann::json orientation_to_json(const AcyclicOrientation& o);
AcyclicOrientation orientation_from_json(const nlohmann::json& j, const HessenbergFunction& h);

// {"n": n, "values": [{"perm": "...", "poly": [{"exps": [...], "coeff": "..."}]}]}
nlohmann::json class_to_json(const EquivariantClass& c);
EquivariantClass class_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const GeneratorReport& r);

std::string dump_canonical(const nlohmann::json& j); // 2-space indent + newline

} // namespace hessencomb
