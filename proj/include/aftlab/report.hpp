#pragma once

// JSON report envelope. Every tool invocation emits one report with a
// versioned schema, digests of the inputs it read, and witnesses embedded in
// the same text formats the tool accepts, so any reported structure can be
// saved to a file and replayed. Key order is alphabetical and timing is
// null unless requested, so identical inputs produce byte-identical reports.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "aftlab/adjunction.hpp"
#include "aftlab/io.hpp"
#include "aftlab/poset.hpp"
#include "aftlab/theorems.hpp"
#include "aftlab/util.hpp"
#include "aftlab/weights.hpp"

namespace aftlab {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "aftlab.report/1";

// Plain FNV-1a over the raw bytes (no separators), for input digests.
inline std::uint64_t fnv1a_bytes(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct ReportBuilder {
  Json root;

  explicit ReportBuilder(const std::string& command) {
    root["schema"] = kReportSchema;
    root["tool"] = {{"name", "aftlab"}, {"version", kVersion}};
    root["command"] = command;
    root["inputs"] = Json::array();
    root["notes"] = Json::array();
    root["timing_ms"] = nullptr;
  }

  void add_input(const std::string& path, const std::string& content) {
    root["inputs"].push_back({{"path", path}, {"digest", cat("fnv1a:", hex64(fnv1a_bytes(content)))}});
  }

  void add_note(const std::string& note) {
    if (!note.empty()) root["notes"].push_back(note);
  }

  void set_timing(double ms) { root["timing_ms"] = ms; }

  std::string dump() const { return root.dump(2) + "\n"; }
};

// ---------------------------------------------------------------------------
// structure -> json (witnesses ride along as replayable text)

inline Json json_category(const Category& c) {
  return Json{{"objects", c.n_objects()}, {"morphisms", c.n_morphisms()}, {"fincat", write_fincat(c)}};
}

inline Json json_functor(const Functor& f, const std::string& source_name,
                         const std::string& target_name) {
  return Json{{"fun", write_functor(f, source_name, target_name)},
              {"source", source_name},
              {"target", target_name}};
}

inline Json json_nat(const NatTrans& t) {
  Json comps = Json::array();
  const Category& dst = *t.f.dst;
  for (int a = 0; a < t.f.src->n_objects(); ++a)
    comps.push_back({{"at", t.f.src->objects[a]}, {"morphism", dst.morphisms[t.comp[a]].id}});
  return Json{{"components", comps}};
}

inline Json json_adjunction(const Adjunction& adj, const std::string& left_source,
                            const std::string& left_target) {
  return Json{{"left", json_functor(adj.left, left_source, left_target)},
              {"right", json_functor(adj.right, left_target, left_source)},
              {"unit", json_nat(adj.unit)},
              {"counit", json_nat(adj.counit)}};
}

inline Json json_classify(const ClassifyResult& r) {
  Json j{{"class", to_string(r.cls)}, {"verdict", r.verdict}};
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  if (r.terminal_element)
    j["terminal_element"] = {{"object", r.terminal_element->first}, {"element", r.terminal_element->second}};
  if (!r.component_terminals.empty()) {
    Json arr = Json::array();
    for (auto [o, e] : r.component_terminals) arr.push_back({{"object", o}, {"element", e}});
    j["component_terminals"] = arr;
  }
  if (r.filtered_cert) j["filtered"] = r.filtered_cert->filtered;
  if (r.splitting)
    j["splitting"] = {{"object", std::get<0>(*r.splitting)}, {"idempotent", std::get<1>(*r.splitting)}};
  return j;
}

inline Json json_admissibility(const AdmissibilityReport& r, const Category& target) {
  Json j{{"class", to_string(r.cls)}, {"admissible", r.overall}};
  Json per = Json::array();
  for (std::size_t b = 0; b < r.per_object.size(); ++b) {
    Json e = json_classify(r.per_object[b]);
    e["object"] = target.objects[b];
    per.push_back(e);
  }
  j["per_object"] = per;
  if (r.failing_object) j["failing_object"] = target.objects[*r.failing_object];
  return j;
}

inline Json json_diagram(const Diagram& d) {
  return Json{{"shape", json_category(*d.src)}, {"fun", write_functor(d, "shape", "base")}};
}

inline Json json_cocone(const Cocone& k, const Category& base) {
  Json legs = Json::array();
  for (int leg : k.legs) legs.push_back(base.morphisms[leg].id);
  return Json{{"apex", base.objects[k.apex]}, {"legs", legs}};
}

inline Json json_cocompleteness(const CocompletenessReport& r) {
  Json j{{"class", to_string(r.cls)},
         {"size_bound", r.size_bound},
         {"cocomplete", r.ok},
         {"shapes_checked", r.shapes_checked}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.failing) j["failing_diagram"] = json_diagram(*r.failing);
  return j;
}

inline Json json_cocontinuity(const CocontinuityReport& r) {
  Json j{{"class", to_string(r.cls)},
         {"size_bound", r.size_bound},
         {"cocontinuous", r.ok},
         {"diagrams_checked", r.diagrams_checked}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.failing) {
    j["failing_diagram"] = json_diagram(*r.failing);
    if (r.failing_colimit) j["failing_colimit"] = json_cocone(*r.failing_colimit, *r.failing->dst);
  }
  return j;
}

inline Json json_daft_record(const std::string& id, const TheoremInstance& inst, const DaftRecord& r) {
  Json j{{"instance", id},
         {"psi", to_string(inst.psi)},
         {"phi", to_string(inst.phi)},
         {"size_bound", inst.size_bound},
         {"source", json_category(*inst.f.src)},
         {"target", json_category(*inst.f.dst)},
         {"functor", json_functor(inst.f, "source", "target")},
         {"admissible", r.lhs},
         {"cocontinuous_and_composite_admissible", r.rhs},
         {"agreement", r.agreement},
         {"lhs", json_admissibility(r.lhs_admissible, *inst.f.dst)},
         {"composite_admissible", json_admissibility(r.composite_admissible, *inst.f.dst)},
         {"cocontinuity", json_cocontinuity(r.cocontinuity)},
         {"precondition", Json{{"source", json_cocompleteness(r.pre_source)},
                               {"target", json_cocompleteness(r.pre_target)}}}};
  if (!r.degeneracy.empty()) j["degeneracy"] = r.degeneracy;
  return j;
}

inline Json json_poset(const Poset& p) {
  return Json{{"elements", p.n()}, {"poset", write_poset(p)}};
}

inline Json json_monotone(const PosetMap& f, const std::string& source_name,
                          const std::string& target_name) {
  return Json{{"fun", write_monotone(f, source_name, target_name)},
              {"source", source_name},
              {"target", target_name}};
}

inline Json json_join_preservation(const JoinPreservationReport& r, const Poset& src) {
  Json j{{"join_preserving", r.ok}};
  if (r.empty_join_fails) j["empty_join_fails"] = true;
  if (r.failing_pair)
    j["failing_pair"] = {{"left", src.elems[r.failing_pair->first]},
                         {"right", src.elems[r.failing_pair->second]}};
  return j;
}

}  // namespace aftlab
