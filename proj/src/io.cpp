#include "posetsat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace posetsat {

using nlohmann::json;

PosetSpec poset_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size")) throw ParseError("poset JSON needs a 'size' field");
  PosetSpec spec;
  spec.size = j.at("size").get<int>();
  if (j.contains("relations")) {
    for (const auto& pair : j.at("relations")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("poset relation must be a pair [i, j]");
      }
      spec.relations.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  return spec;
}

json poset_to_json(const Poset& p) {
  json relations = json::array();
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (p.less(i, j)) relations.push_back({i, j});
    }
  }
  return {{"size", p.size()}, {"relations", relations}};
}

PosetSpec poset_spec_from_dsl(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ';', ' ');
  std::istringstream in(cleaned);
  PosetSpec spec;
  if (!(in >> spec.size)) throw ParseError("poset DSL must start with the element count");
  std::string token;
  while (in >> token) {
    auto lt = token.find('<');
    if (lt == std::string::npos || lt == 0 || lt + 1 == token.size()) {
      throw ParseError("bad relation token '" + token + "' (expected i<j)");
    }
    try {
      spec.relations.emplace_back(std::stoi(token.substr(0, lt)),
                                  std::stoi(token.substr(lt + 1)));
    } catch (const std::exception&) {
      throw ParseError("bad relation token '" + token + "'");
    }
  }
  return spec;
}

Poset parse_poset_text(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty poset input");
  if (text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("poset JSON parse error: ") + e.what());
    }
    return poset_from_spec(poset_spec_from_json(j));
  }
  return poset_from_spec(poset_spec_from_dsl(text));
}

Poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open poset file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_poset_text(buffer.str());
}

SetFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground")) throw ParseError("family JSON needs 'ground'");
  int ground = j.at("ground").get<int>();
  std::vector<Mask> members;
  if (j.contains("masks")) {
    for (const auto& m : j.at("masks")) members.push_back(parse_hex_mask(m.get<std::string>(), ground));
  } else if (j.contains("members")) {
    for (const auto& m : j.at("members")) members.push_back(parse_set(m.get<std::string>(), ground));
  } else {
    throw ParseError("family JSON needs 'members' or 'masks'");
  }
  return SetFamily(ground, std::move(members));
}

json family_to_json(const SetFamily& fam) {
  json masks = json::array(), members = json::array();
  for (Mask m : fam.members()) {
    masks.push_back(format_hex_mask(m));
    members.push_back(format_set(m));
  }
  return {{"ground", fam.ground()}, {"masks", masks}, {"members", members}};
}

Embedding embedding_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("images")) {
    throw ParseError("embedding JSON needs 'ground' and 'images'");
  }
  Embedding e;
  e.ground = j.at("ground").get<int>();
  for (const auto& m : j.at("images")) e.images.push_back(parse_set(m.get<std::string>(), e.ground));
  return e;
}

json embedding_to_json(const Embedding& e) {
  json images = json::array();
  for (Mask m : e.images) images.push_back(format_set(m));
  return {{"ground", e.ground}, {"images", images}};
}

json ledger_to_json(const BoundsReport& report) {
  json entries = json::array();
  auto entry = [](const LedgerEntry& e) {
    return json{{"name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"holds", e.holds}};
  };
  for (const auto& e : report.entries) entries.push_back(entry(e));
  return {{"schema_version", kSchemaVersion},
          {"size", report.poset_size},
          {"height", report.poset_height},
          {"width", report.poset_width},
          {"cube_height", report.h_star},
          {"cube_width", report.w_star},
          {"witness", embedding_to_json(report.witness)},
          {"entries", entries},
          {"conjecture_41", entry(report.conjecture_41)}};
}

json saturation_report_to_json(const SaturationReport& report) {
  json out{{"schema_version", kSchemaVersion},
           {"poset", report.poset_id},
           {"ground", report.ground},
           {"p_free", report.p_free},
           {"saturated", report.saturated},
           {"checked_external_sets", report.checked_external_sets},
           {"sample_mode", report.sample_mode},
           {"degenerate_single", report.degenerate_single},
           {"below_recommended_n", report.below_recommended_n}};
  if (report.sample_mode) out["sample_seed"] = report.sample_seed;
  if (!report.trace.empty()) {
    json trace = json::array();
    for (const auto& t : report.trace) {
      trace.push_back({{"layer", t.layer}, {"accepted", t.accepted}, {"rejected", t.rejected}});
    }
    out["greedy_trace"] = trace;
  }
  return out;
}

json vc_report_to_json(const VcReport& report) {
  json out{{"dimension", report.dimension},
           {"sauer_shelah_sum", u128_to_json(report.sauer_shelah_sum)},
           {"family_size", report.family_size}};
  if (report.shattered_witness) {
    out["witness"] = format_set(*report.shattered_witness);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json claim31_to_json(const Claim31Report& report) {
  return {{"vc", report.vc},
          {"w_star", report.w_star},
          {"holds", report.holds},
          {"family_size", report.family_size},
          {"sauer_sum_below_wstar", u128_to_json(report.sauer_sum_below_wstar)},
          {"poly_bound_2n_pow_wstar_minus_1", u128_to_json(report.poly_bound)},
          {"n_at_least_2wstar", report.n_at_least_2wstar},
          {"size_chain_holds", report.size_chain_holds}};
}

json u128_to_json(u128 v) {
  if (v <= static_cast<u128>(std::uint64_t{1} << 53)) {
    return static_cast<std::uint64_t>(v);
  }
  return u128_to_string(v);
}

}  // namespace posetsat
