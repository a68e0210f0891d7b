#pragma once

#include "json.hpp"
#include "lmupp/lmu_term.hpp"
#include "lmupp/mupp_term.hpp"

namespace lmu {

// Tagged trees: {"k":"var","x":..}, {"k":"mvar","a":..}, {"k":"lam","x":..,"body":..},
// {"k":"lam1",..}, {"k":"lam2"}, {"k":"lamvac",..}, {"k":"mu","a":..,"body":..},
// {"k":"muvac",..}, {"k":"app","fun":..,"arg":..}, {"k":"xi","a":..}.
// Lambda-mu terms use the same tags; "mu" carries an extra "name" (the naming).
nlohmann::json to_json(const MuppTerm& t);
nlohmann::json to_json(const LmuTerm& t);
MuppTerm mupp_from_json(const nlohmann::json& j);
LmuTerm lmu_from_json(const nlohmann::json& j);

}  // namespace lmu
