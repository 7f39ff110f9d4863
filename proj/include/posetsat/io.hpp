#pragma once

#include <string>

#include "json.hpp"
#include "posetsat/embedding.hpp"
#include "posetsat/family.hpp"
#include "posetsat/poset.hpp"
#include "posetsat/saturation.hpp"
#include "posetsat/vc.hpp"

namespace posetsat {

inline constexpr int kSchemaVersion = 1;

// PosetSpec JSON: {"size": k, "relations": [[i, j], ...]}
PosetSpec poset_spec_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);

// Text DSL: "k; i<j i<j ..."
PosetSpec poset_spec_from_dsl(const std::string& text);

// Accepts JSON (leading '{') or the DSL.
Poset parse_poset_text(const std::string& text);
Poset load_poset_file(const std::string& path);

// SetFamily JSON, either {"ground": n, "members": ["{1,3}", ...]} or the
// compact {"ground": n, "masks": ["0x5", ...]}. Writers emit both forms.
SetFamily family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const SetFamily& fam);

// Embedding JSON: {"ground": w, "images": ["{1}", ...]}
Embedding embedding_from_json(const nlohmann::json& j);
nlohmann::json embedding_to_json(const Embedding& e);

nlohmann::json ledger_to_json(const BoundsReport& report);
nlohmann::json saturation_report_to_json(const SaturationReport& report);
nlohmann::json vc_report_to_json(const VcReport& report);
nlohmann::json claim31_to_json(const Claim31Report& report);

// Exact integers that may exceed 64 bits become decimal strings.
nlohmann::json u128_to_json(u128 v);

}  // namespace posetsat
