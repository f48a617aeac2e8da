#pragma once
// The seven weight classes shared by presheaf classification (which colimits
// of representables can build this presheaf?) and by shape enumeration (which
// diagram shapes must a category or functor have colimits for?).

#include <optional>
#include <string>
#include <vector>

#include "aftlab/util.hpp"

namespace aftlab {

enum class WeightClass { Empty, Absolute, Discrete, Connected, Finite, Filtered, Small };

inline const char* to_string(WeightClass c) {
  switch (c) {
    case WeightClass::Empty: return "empty";
    case WeightClass::Absolute: return "absolute";
    case WeightClass::Discrete: return "discrete";
    case WeightClass::Connected: return "connected";
    case WeightClass::Finite: return "finite";
    case WeightClass::Filtered: return "filtered";
    case WeightClass::Small: return "small";
  }
  return "?";
}

inline std::optional<WeightClass> parse_weight_class(const std::string& s) {
  for (WeightClass c : {WeightClass::Empty, WeightClass::Absolute, WeightClass::Discrete, WeightClass::Connected,
                        WeightClass::Finite, WeightClass::Filtered, WeightClass::Small})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

// The supported (psi, phi) rows: cocontinuity is measured against psi-shaped
// colimits, admissibility against phi-classified slices.
struct TablePair {
  WeightClass psi;
  WeightClass phi;
  const char* row_name;  // the kind of adjointness the row characterizes
  int default_bound;     // smallest shape bound at which the row's verdicts stabilize
};

inline const std::vector<TablePair>& table_pairs() {
  static const std::vector<TablePair> rows = {
      {WeightClass::Small, WeightClass::Empty, "adjoints", 4},
      {WeightClass::Small, WeightClass::Absolute, "semiadjoints", 4},
      {WeightClass::Finite, WeightClass::Filtered, "pluriadjoints", 4},
      {WeightClass::Connected, WeightClass::Discrete, "multiadjoints", 5},
      {WeightClass::Empty, WeightClass::Small, "virtual adjoints", 1},
  };
  return rows;
}

inline const TablePair* find_table_pair(WeightClass psi, WeightClass phi) {
  for (const auto& p : table_pairs())
    if (p.psi == psi && p.phi == phi) return &p;
  return nullptr;
}

}  // namespace aftlab
