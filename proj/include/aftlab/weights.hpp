#pragma once
// Bounded colimit semantics for the weight classes: which diagram shapes a
// class demands, whether a category has colimits for all of them, and whether
// a functor preserves the colimits that exist.
//
// All verdicts are bounded: "cocomplete for class X at bound k" quantifies
// over shapes with at most k morphisms. Reports carry the bound so a verdict
// never silently claims more than was checked.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "aftlab/colimit.hpp"
#include "aftlab/enumerate.hpp"
#include "aftlab/weight_class.hpp"

namespace aftlab {

struct ShapeFamily {
  WeightClass cls = WeightClass::Empty;
  int size_bound = 0;
  std::vector<CatPtr> shapes;
};

// Does this category qualify as a diagram shape of the class? Absolute has no
// shape semantics (it is a property of weights, not of shapes).
inline bool shape_predicate(WeightClass cls, const Category& c) {
  switch (cls) {
    case WeightClass::Empty: return false;
    case WeightClass::Discrete: return is_discrete(c);
    case WeightClass::Connected: return is_connected(c);
    case WeightClass::Filtered: return is_filtered(c).filtered;
    case WeightClass::Finite:
    case WeightClass::Small: return true;
    case WeightClass::Absolute: break;
  }
  throw UnsupportedClass("the absolute class does not classify diagram shapes");
}

// One canonical shape per isomorphism class, at most size_bound morphisms.
// The discrete class includes the empty shape (empty coproducts are initial
// objects); the connected class excludes it.
inline ShapeFamily enumerate_shapes(WeightClass cls, int size_bound) {
  if (cls == WeightClass::Absolute) throw UnsupportedClass("the absolute class does not enumerate as shapes");
  if (cls != WeightClass::Empty && size_bound < 1) throw Error("size_bound must be at least 1");
  ShapeFamily fam{cls, size_bound, {}};
  if (cls == WeightClass::Empty) return fam;
  for (const CatPtr& c : all_categories(size_bound))
    if (shape_predicate(cls, *c)) fam.shapes.push_back(c);
  return fam;
}

// default shape bound for a finite category: a little above its own size
inline int default_size_bound(const Category& c) { return c.n_morphisms() + 2; }

struct CocompletenessReport {
  WeightClass cls = WeightClass::Empty;
  int size_bound = 0;
  bool ok = true;
  std::optional<Diagram> failing;  // enumeration-least diagram with no colimit
  int shapes_checked = 0;
  std::string note;
};

struct CocontinuityReport {
  WeightClass cls = WeightClass::Empty;
  int size_bound = 0;
  bool ok = true;
  std::optional<Diagram> failing;        // enumeration-least unpreserved diagram
  std::optional<Cocone> failing_colimit; // its colimit cocone in the source
  int diagrams_checked = 0;
  std::string note;
};

namespace detail {

inline std::mutex& verdict_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace detail

// true iff every diagram of every class shape (at most size_bound morphisms)
// has a colimit; memoized on (category, class, bound)
inline CocompletenessReport is_cocomplete(const CatPtr& c, WeightClass cls, int size_bound) {
  using Key = std::tuple<std::uint64_t, int, int>;
  static std::map<Key, CocompletenessReport> cache;
  Key key{c->table_hash(), static_cast<int>(cls), size_bound};
  {
    std::lock_guard<std::mutex> lock(detail::verdict_mutex());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ShapeFamily fam = enumerate_shapes(cls, size_bound);
  CocompletenessReport rep;
  rep.cls = cls;
  rep.size_bound = size_bound;
  rep.shapes_checked = static_cast<int>(fam.shapes.size());
  rep.note = cat("bounded verdict: all ", to_string(cls), " shapes with at most ", size_bound, " morphisms");
  for (const CatPtr& shape : fam.shapes) {
    for (const Functor& d : enumerate_functors(shape, c)) {
      if (!colimit_cocone(d)) {
        rep.ok = false;
        rep.failing = d;
        break;
      }
    }
    if (!rep.ok) break;
  }
  std::lock_guard<std::mutex> lock(detail::verdict_mutex());
  cache.emplace(key, rep);
  return rep;
}

// true iff f sends every existing class-shaped colimit in its source to a
// colimit in its target; memoized on (functor, class, bound)
inline CocontinuityReport is_cocontinuous(const Functor& f, WeightClass cls, int size_bound) {
  using Key = std::tuple<std::uint64_t, int, int>;
  static std::map<Key, CocontinuityReport> cache;
  Key key{f.table_hash(), static_cast<int>(cls), size_bound};
  {
    std::lock_guard<std::mutex> lock(detail::verdict_mutex());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ShapeFamily fam = enumerate_shapes(cls, size_bound);
  CocontinuityReport rep;
  rep.cls = cls;
  rep.size_bound = size_bound;
  rep.note = cat("bounded verdict: colimits of ", to_string(cls), " shapes with at most ", size_bound, " morphisms");
  for (const CatPtr& shape : fam.shapes) {
    for (const Functor& d : enumerate_functors(shape, f.src)) {
      auto colim = colimit_cocone(d);
      if (!colim) continue;
      ++rep.diagrams_checked;
      Functor fd = compose_functors(f, d);
      Cocone pushed{f.omap[colim->apex], {}};
      for (int leg : colim->legs) pushed.legs.push_back(f.mmap[leg]);
      if (!is_universal(fd, pushed, cocones_over(fd))) {
        rep.ok = false;
        rep.failing = d;
        rep.failing_colimit = colim;
        break;
      }
    }
    if (!rep.ok) break;
  }
  std::lock_guard<std::mutex> lock(detail::verdict_mutex());
  cache.emplace(key, rep);
  return rep;
}

// Does "all small colimits at the bound" factor as "psi colimits + phi
// colimits" for this category? Property probe; meaningful for the table rows
// whose two classes both enumerate as shapes.
inline bool cocompleteness_decomposition_check(const CatPtr& c, WeightClass psi, WeightClass phi, int size_bound) {
  const TablePair* pair = find_table_pair(psi, phi);
  if (!pair) throw UnsupportedPair(cat("(", to_string(psi), ", ", to_string(phi), ") is not a supported row"));
  if (psi == WeightClass::Absolute || phi == WeightClass::Absolute)
    throw UnsupportedPair("the absolute class does not enumerate as shapes");
  bool whole = is_cocomplete(c, WeightClass::Small, size_bound).ok;
  bool parts = is_cocomplete(c, psi, size_bound).ok && is_cocomplete(c, phi, size_bound).ok;
  return whole == parts;
}

}  // namespace aftlab
