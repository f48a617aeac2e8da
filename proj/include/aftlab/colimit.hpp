#pragma once
// Diagrams, cocones, and colimits by brute force, plus the comma-category and
// idempotent-splitting constructions.
//
// A diagram is just a functor out of a shape category. A cocone is an apex
// with one leg per shape object; it is universal when every cocone (itself
// included) receives exactly one mediating morphism. Colimit search returns
// the lexicographically least universal cocone (apex index, then legs).

#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "aftlab/functor.hpp"

namespace aftlab {

using Diagram = Functor;  // shape = Diagram::src, values in Diagram::dst

struct Cocone {
  int apex = -1;
  std::vector<int> legs;  // per shape object: morphism D(s) -> apex

  bool operator==(const Cocone& o) const { return apex == o.apex && legs == o.legs; }
  bool operator<(const Cocone& o) const { return std::tie(apex, legs) < std::tie(o.apex, o.legs); }
};

inline bool is_cocone(const Diagram& d, const Cocone& c) {
  const Category &s = *d.src, &t = *d.dst;
  for (int m = 0; m < s.n_morphisms(); ++m) {
    const Morphism& mo = s.morphisms[m];
    if (t.compose(c.legs[mo.tgt], d.mmap[m]) != c.legs[mo.src]) return false;
  }
  for (int so = 0; so < s.n_objects(); ++so) {
    const Morphism& leg = t.morphisms[c.legs[so]];
    if (leg.src != d.omap[so] || leg.tgt != c.apex) return false;
  }
  return true;
}

// All cocones over d, in lexicographic order (apex, then legs).
inline std::vector<Cocone> cocones_over(const Diagram& d) {
  const Category &s = *d.src, &t = *d.dst;
  const int ko = s.n_objects();
  std::vector<std::vector<int>> mors_by_max(ko);
  for (int m = 0; m < s.n_morphisms(); ++m)
    mors_by_max[std::max(s.morphisms[m].src, s.morphisms[m].tgt)].push_back(m);
  std::vector<Cocone> out;
  std::vector<int> legs(ko, -1);
  for (int apex = 0; apex < t.n_objects(); ++apex) {
    std::function<void(int)> go = [&](int so) {
      if (so == ko) {
        out.push_back(Cocone{apex, legs});
        return;
      }
      for (int cand : t.homset(d.omap[so], apex)) {
        legs[so] = cand;
        bool ok = true;
        for (int m : mors_by_max[so]) {
          const Morphism& mo = s.morphisms[m];
          if (legs[mo.src] == -1 || legs[mo.tgt] == -1) continue;
          if (t.compose(legs[mo.tgt], d.mmap[m]) != legs[mo.src]) {
            ok = false;
            break;
          }
        }
        if (ok) go(so + 1);
        legs[so] = -1;
      }
    };
    go(0);
  }
  return out;
}

// Mediating morphisms from cocone `from` to cocone `to`: u with u∘from_s = to_s.
inline std::vector<int> mediators(const Diagram& d, const Cocone& from, const Cocone& to) {
  const Category& t = *d.dst;
  std::vector<int> out;
  for (int u : t.homset(from.apex, to.apex)) {
    bool ok = true;
    for (std::size_t so = 0; so < from.legs.size(); ++so)
      if (t.compose(u, from.legs[so]) != to.legs[so]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(u);
  }
  return out;
}

inline bool is_universal(const Diagram& d, const Cocone& c, const std::vector<Cocone>& all) {
  for (const Cocone& other : all)
    if (mediators(d, c, other).size() != 1) return false;
  return true;
}

// Least universal cocone, if one exists.
inline std::optional<Cocone> colimit_cocone(const Diagram& d) {
  auto all = cocones_over(d);
  for (const Cocone& c : all)
    if (is_universal(d, c, all)) return c;
  return std::nullopt;
}

// Full colimit result: the universal cocone plus, per cocone over the diagram,
// its unique mediating morphism (the uniqueness witnesses).
struct Colimit {
  Cocone cocone;
  std::vector<Cocone> all_cocones;
  std::vector<int> mediator;  // mediator[i] : cocone.apex -> all_cocones[i].apex
};

inline std::optional<Colimit> colimit(const Diagram& d) {
  auto all = cocones_over(d);
  for (const Cocone& c : all) {
    std::vector<int> med;
    bool ok = true;
    for (const Cocone& other : all) {
      auto ms = mediators(d, c, other);
      if (ms.size() != 1) {
        ok = false;
        break;
      }
      med.push_back(ms.front());
    }
    if (ok) return Colimit{c, std::move(all), std::move(med)};
  }
  return std::nullopt;
}

//----------------------------------------------------------------------------
// comma categories

struct CommaObject {
  int a = -1, b = -1, h = -1;  // h : F(a) -> G(b)
};

struct Comma {
  CatPtr cat;
  std::vector<CommaObject> objs;               // per comma object
  std::vector<std::pair<int, int>> mors;       // per comma morphism: (u, v)
  Functor proj_left, proj_right;               // to F.src and G.src
};

// comma(F: A -> C, G: B -> C): objects (a, b, h: Fa -> Gb); morphisms pairs
// (u: a -> a', v: b -> b') with h' ∘ F(u) = G(v) ∘ h. Enumeration order is
// lexicographic throughout.
inline Comma comma(const Functor& F, const Functor& G) {
  if (!same_category(F.dst, G.dst)) throw ShapeMismatch("comma: functors have different target categories");
  const Category &A = *F.src, &B = *G.src, &C = *F.dst;
  Comma out;
  Category k;
  for (int a = 0; a < A.n_objects(); ++a)
    for (int b = 0; b < B.n_objects(); ++b)
      for (int h : C.homset(F.omap[a], G.omap[b])) {
        out.objs.push_back({a, b, h});
        k.objects.push_back(cat("<", A.objects[a], "|", B.objects[b], "|", C.morphisms[h].id, ">"));
      }
  const int ko = static_cast<int>(out.objs.size());
  std::map<std::tuple<int, int, int, int>, int> index;  // (src, tgt, u, v) -> morphism
  k.identity.assign(ko, -1);
  for (int i = 0; i < ko; ++i)
    for (int j = 0; j < ko; ++j) {
      const CommaObject &oi = out.objs[i], &oj = out.objs[j];
      for (int u : A.homset(oi.a, oj.a))
        for (int v : B.homset(oi.b, oj.b)) {
          if (C.compose(oj.h, F.mmap[u]) != C.compose(G.mmap[v], oi.h)) continue;
          int m = static_cast<int>(k.morphisms.size());
          k.morphisms.push_back({cat("[", A.morphisms[u].id, "|", B.morphisms[v].id, "]:", i, ">", j), i, j});
          out.mors.push_back({u, v});
          index[{i, j, u, v}] = m;
          if (i == j && u == A.identity[oi.a] && v == B.identity[oi.b]) k.identity[i] = m;
        }
    }
  const int km = static_cast<int>(k.morphisms.size());
  k.table.assign(static_cast<std::size_t>(km) * km, -1);
  for (int g = 0; g < km; ++g)
    for (int f = 0; f < km; ++f) {
      if (k.morphisms[f].tgt != k.morphisms[g].src) continue;
      int u = A.compose(out.mors[g].first, out.mors[f].first);
      int v = B.compose(out.mors[g].second, out.mors[f].second);
      k.table[static_cast<std::size_t>(g) * km + f] = index.at({k.morphisms[f].src, k.morphisms[g].tgt, u, v});
    }
  out.cat = seal_category(std::move(k));
  {
    std::vector<int> po, pm;
    for (const auto& o : out.objs) po.push_back(o.a);
    for (const auto& m : out.mors) pm.push_back(m.first);
    out.proj_left = make_functor(out.cat, F.src, std::move(po), std::move(pm));
  }
  {
    std::vector<int> po, pm;
    for (const auto& o : out.objs) po.push_back(o.b);
    for (const auto& m : out.mors) pm.push_back(m.second);
    out.proj_right = make_functor(out.cat, G.src, std::move(po), std::move(pm));
  }
  return out;
}

// Slice comma f ↓ b = comma(f, constant at b).
inline Comma comma_to_object(const Functor& f, int b) {
  return comma(f, constant_functor(terminal_category(), f.dst, b));
}

//----------------------------------------------------------------------------
// idempotent splitting (Karoubi completion)

struct KaroubiObject {
  int a = -1, e = -1;  // e : a -> a idempotent
};

struct Karoubi {
  CatPtr cat;
  std::vector<KaroubiObject> objs;
  std::vector<int> mor_underlying;  // per morphism: underlying morphism of the base
  Functor embed;                    // base -> completion, a |-> (a, id_a)
};

// Objects: pairs (a, e) with e idempotent, in lexicographic order; morphisms
// (a,e) -> (a',e'): underlying h: a -> a' with e' ∘ h ∘ e = h; the identity of
// (a, e) is e itself.
inline Karoubi karoubi_completion(const CatPtr& base) {
  const Category& A = *base;
  Karoubi out;
  Category k;
  for (int a = 0; a < A.n_objects(); ++a)
    for (int e : A.homset(a, a))
      if (A.compose(e, e) == e) {
        out.objs.push_back({a, e});
        k.objects.push_back(cat("(", A.objects[a], "|", A.morphisms[e].id, ")"));
      }
  const int ko = static_cast<int>(out.objs.size());
  k.identity.assign(ko, -1);
  std::map<std::tuple<int, int, int>, int> index;  // (src, tgt, underlying) -> morphism
  for (int i = 0; i < ko; ++i)
    for (int j = 0; j < ko; ++j) {
      const KaroubiObject &oi = out.objs[i], &oj = out.objs[j];
      for (int h : A.homset(oi.a, oj.a)) {
        if (A.compose(oj.e, A.compose(h, oi.e)) != h) continue;
        int m = static_cast<int>(k.morphisms.size());
        k.morphisms.push_back({cat(A.morphisms[h].id, "@", i, ">", j), i, j});
        out.mor_underlying.push_back(h);
        index[{i, j, h}] = m;
        if (i == j && h == oi.e) k.identity[i] = m;
      }
    }
  const int km = static_cast<int>(k.morphisms.size());
  k.table.assign(static_cast<std::size_t>(km) * km, -1);
  for (int g = 0; g < km; ++g)
    for (int f = 0; f < km; ++f) {
      if (k.morphisms[f].tgt != k.morphisms[g].src) continue;
      int h = A.compose(out.mor_underlying[g], out.mor_underlying[f]);
      k.table[static_cast<std::size_t>(g) * km + f] = index.at({k.morphisms[f].src, k.morphisms[g].tgt, h});
    }
  out.cat = seal_category(std::move(k));
  {
    std::vector<int> po(A.objects.size(), -1), pm(A.morphisms.size(), -1);
    for (int a = 0; a < A.n_objects(); ++a) {
      for (int i = 0; i < ko; ++i)
        if (out.objs[i].a == a && out.objs[i].e == A.identity[a]) po[a] = i;
    }
    for (int m = 0; m < A.n_morphisms(); ++m)
      pm[m] = index.at({po[A.morphisms[m].src], po[A.morphisms[m].tgt], m});
    out.embed = make_functor(base, out.cat, std::move(po), std::move(pm));
  }
  return out;
}

}  // namespace aftlab
