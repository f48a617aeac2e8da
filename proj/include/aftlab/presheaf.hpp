#pragma once
// Finite-set-valued presheaves (contravariant functors to finite sets), their
// categories of elements, and classification against the weight classes.
//
// A presheaf W on A assigns card[a] elements to each object and, to each
// morphism m: a -> a', a function act[m] : W(a') -> W(a). The category of
// elements el(W) has objects (a, x) and a morphism (a,x) -> (a',x') for each
// h: a -> a' with act[h](x') = x; its shape decides every classification:
//
//   empty      el(W) has a terminal object        (W representable)
//   discrete   every component has a terminal     (coproduct of representables)
//   connected  el(W) nonempty and connected
//   filtered   el(W) filtered
//   absolute   W is a retract of a representable  (splitting of an idempotent)
//   finite     constantly true at this scale      (degeneracy recorded)
//   small      constantly true at this scale      (degeneracy recorded)

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "aftlab/colimit.hpp"
#include "aftlab/weight_class.hpp"

namespace aftlab {

struct Presheaf {
  CatPtr base;
  std::vector<int> card;                        // |W(a)| per object
  std::vector<std::vector<std::string>> names;  // element names (defaults x0, x1, ...)
  std::vector<std::vector<int>> act;            // act[m][x'] for x' in W(tgt m), values in W(src m)

  int total_elements() const {
    int t = 0;
    for (int c : card) t += c;
    return t;
  }

  std::uint64_t table_hash() const {
    Fnv1a h;
    h.feed(base->table_hash());
    for (int c : card) h.feed(c);
    for (const auto& row : act) {
      h.feed(static_cast<int>(row.size()));
      for (int v : row) h.feed(v);
    }
    return h.value();
  }
};

inline std::vector<std::string> check_presheaf(const Presheaf& w) {
  std::vector<std::string> issues;
  const Category& a = *w.base;
  if (static_cast<int>(w.card.size()) != a.n_objects() || static_cast<int>(w.act.size()) != a.n_morphisms()) {
    issues.push_back("value/action counts differ from base category");
    return issues;
  }
  for (int m = 0; m < a.n_morphisms(); ++m) {
    const Morphism& mo = a.morphisms[m];
    if (static_cast<int>(w.act[m].size()) != w.card[mo.tgt]) {
      issues.push_back(cat("action of '", mo.id, "' has wrong domain size"));
      return issues;
    }
    for (int v : w.act[m])
      if (v < 0 || v >= w.card[mo.src]) {
        issues.push_back(cat("action of '", mo.id, "' is out of range"));
        return issues;
      }
  }
  for (int x = 0; x < a.n_objects(); ++x)
    for (int e = 0; e < w.card[x]; ++e)
      if (w.act[a.identity[x]][e] != e) issues.push_back(cat("identity action at '", a.objects[x], "' is not the identity"));
  for (int g = 0; g < a.n_morphisms(); ++g)
    for (int f = 0; f < a.n_morphisms(); ++f) {
      if (!a.composable(g, f)) continue;
      int gf = a.compose(g, f);
      for (int e = 0; e < w.card[a.morphisms[g].tgt]; ++e)
        if (w.act[gf][e] != w.act[f][w.act[g][e]]) {
          issues.push_back(cat("contravariant functoriality fails on ", a.morphisms[g].id, " . ", a.morphisms[f].id));
          break;
        }
    }
  return issues;
}

inline Presheaf make_presheaf(CatPtr base, std::vector<int> card, std::vector<std::vector<int>> act,
                              std::vector<std::vector<std::string>> names = {}) {
  Presheaf w{std::move(base), std::move(card), std::move(names), std::move(act)};
  if (w.names.empty()) {
    w.names.resize(w.card.size());
    for (std::size_t a = 0; a < w.card.size(); ++a)
      for (int e = 0; e < w.card[a]; ++e) w.names[a].push_back(cat("x", e));
  }
  auto issues = check_presheaf(w);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return w;
}

// A(-, a0): values are hom(a, a0), action of h: a -> a' is precomposition.
inline Presheaf representable(const CatPtr& base, int a0) {
  const Category& a = *base;
  std::vector<int> card(a.objects.size());
  std::vector<std::vector<std::string>> names(a.objects.size());
  // element e of W(x) = e-th morphism in homset(x, a0)
  for (int x = 0; x < a.n_objects(); ++x) {
    card[x] = static_cast<int>(a.homset(x, a0).size());
    for (int h : a.homset(x, a0)) names[x].push_back(a.morphisms[h].id);
  }
  auto pos = [&](int x, int mor) {
    const auto& hs = a.homset(x, a0);
    return static_cast<int>(std::find(hs.begin(), hs.end(), mor) - hs.begin());
  };
  std::vector<std::vector<int>> act(a.morphisms.size());
  for (int m = 0; m < a.n_morphisms(); ++m) {
    const Morphism& mo = a.morphisms[m];
    for (int h : a.homset(mo.tgt, a0)) act[m].push_back(pos(mo.src, a.compose(h, m)));
  }
  return make_presheaf(base, std::move(card), std::move(act), std::move(names));
}

// B(f-, b): values at a are hom_B(f(a), b); action of h: a -> a' precomposes
// with f(h).
inline Presheaf hom_presheaf(const Functor& f, int b) {
  const Category &a = *f.src, &bc = *f.dst;
  std::vector<int> card(a.objects.size());
  std::vector<std::vector<std::string>> names(a.objects.size());
  for (int x = 0; x < a.n_objects(); ++x) {
    card[x] = static_cast<int>(bc.homset(f.omap[x], b).size());
    for (int h : bc.homset(f.omap[x], b)) names[x].push_back(bc.morphisms[h].id);
  }
  auto pos = [&](int x, int mor) {
    const auto& hs = bc.homset(f.omap[x], b);
    return static_cast<int>(std::find(hs.begin(), hs.end(), mor) - hs.begin());
  };
  std::vector<std::vector<int>> act(a.morphisms.size());
  for (int m = 0; m < a.n_morphisms(); ++m) {
    const Morphism& mo = a.morphisms[m];
    for (int h : bc.homset(f.omap[mo.tgt], b)) act[m].push_back(pos(mo.src, bc.compose(h, f.mmap[m])));
  }
  return make_presheaf(f.src, std::move(card), std::move(act), std::move(names));
}

// The retract of A(-, a) determined by an idempotent e: a -> a: values at x
// are {h: x -> a | e∘h = h}, action is precomposition.
inline Presheaf splitting_presheaf(const CatPtr& base, int a0, int e) {
  const Category& a = *base;
  std::vector<std::vector<int>> members(a.objects.size());  // morphism indices
  std::vector<int> card(a.objects.size());
  std::vector<std::vector<std::string>> names(a.objects.size());
  for (int x = 0; x < a.n_objects(); ++x) {
    for (int h : a.homset(x, a0))
      if (a.compose(e, h) == h) {
        members[x].push_back(h);
        names[x].push_back(a.morphisms[h].id);
      }
    card[x] = static_cast<int>(members[x].size());
  }
  auto pos = [&](int x, int mor) {
    return static_cast<int>(std::find(members[x].begin(), members[x].end(), mor) - members[x].begin());
  };
  std::vector<std::vector<int>> act(a.morphisms.size());
  for (int m = 0; m < a.n_morphisms(); ++m) {
    const Morphism& mo = a.morphisms[m];
    for (int h : members[mo.tgt]) act[m].push_back(pos(mo.src, a.compose(h, m)));
  }
  return make_presheaf(base, std::move(card), std::move(act), std::move(names));
}

//----------------------------------------------------------------------------
// category of elements

struct Elements {
  CatPtr cat;
  std::vector<std::pair<int, int>> objs;  // (base object, element)
  std::vector<int> mor_underlying;        // underlying base morphism
  Functor proj;                           // el(W) -> base
};

inline Elements elements(const Presheaf& w) {
  const Category& a = *w.base;
  Elements out;
  Category k;
  for (int x = 0; x < a.n_objects(); ++x)
    for (int e = 0; e < w.card[x]; ++e) {
      out.objs.push_back({x, e});
      k.objects.push_back(cat(a.objects[x], ":", w.names[x][e]));
    }
  const int ko = static_cast<int>(out.objs.size());
  k.identity.assign(ko, -1);
  std::map<std::tuple<int, int, int>, int> index;  // (src, tgt, underlying)
  for (int i = 0; i < ko; ++i)
    for (int j = 0; j < ko; ++j) {
      auto [x, e] = out.objs[i];
      auto [y, d] = out.objs[j];
      for (int h : a.homset(x, y)) {
        if (w.act[h][d] != e) continue;
        int m = static_cast<int>(k.morphisms.size());
        k.morphisms.push_back({cat(a.morphisms[h].id, "@", i, ">", j), i, j});
        out.mor_underlying.push_back(h);
        index[{i, j, h}] = m;
        if (i == j && h == a.identity[x]) k.identity[i] = m;
      }
    }
  const int km = static_cast<int>(k.morphisms.size());
  k.table.assign(static_cast<std::size_t>(km) * km, -1);
  for (int g = 0; g < km; ++g)
    for (int f = 0; f < km; ++f) {
      if (k.morphisms[f].tgt != k.morphisms[g].src) continue;
      int h = a.compose(out.mor_underlying[g], out.mor_underlying[f]);
      k.table[static_cast<std::size_t>(g) * km + f] = index.at({k.morphisms[f].src, k.morphisms[g].tgt, h});
    }
  out.cat = seal_category(std::move(k));
  {
    std::vector<int> po, pm;
    for (const auto& o : out.objs) po.push_back(o.first);
    for (int m : out.mor_underlying) pm.push_back(m);
    out.proj = make_functor(out.cat, w.base, std::move(po), std::move(pm));
  }
  return out;
}

//----------------------------------------------------------------------------
// isomorphism of presheaves (natural bijections, exhaustive)

// Component bijections sigma[a] : W(a) -> V(a) with sigma natural; lex-least
// found, if any.
inline std::optional<std::vector<std::vector<int>>> presheaf_iso(const Presheaf& w, const Presheaf& v) {
  if (!same_category(w.base, v.base)) return std::nullopt;
  const Category& a = *w.base;
  if (w.card != v.card) return std::nullopt;
  std::vector<std::vector<int>> sigma(a.objects.size());
  std::vector<std::vector<int>> mors_by_max(a.objects.size());
  for (int m = 0; m < a.n_morphisms(); ++m)
    mors_by_max[std::max(a.morphisms[m].src, a.morphisms[m].tgt)].push_back(m);
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == a.n_objects()) return true;
    std::vector<int> perm(w.card[x]);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      sigma[x] = perm;
      bool ok = true;
      // morphisms whose endpoints are both assigned exactly now
      for (int m : mors_by_max[x]) {
        const Morphism& mo = a.morphisms[m];
        for (int d = 0; d < w.card[mo.tgt] && ok; ++d)
          if (sigma[mo.src][w.act[m][d]] != v.act[m][sigma[mo.tgt][d]]) ok = false;
        if (!ok) break;
      }
      if (ok && go(x + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    sigma[x].clear();
    return false;
  };
  if (go(0)) return sigma;
  return std::nullopt;
}

//----------------------------------------------------------------------------
// classification

struct ClassifyResult {
  WeightClass cls = WeightClass::Empty;
  bool verdict = false;
  std::string note;  // degeneracy/diagnostic note, possibly empty

  // witnesses (populated according to cls and verdict)
  std::optional<std::pair<int, int>> terminal_element;                 // (object, element)
  std::vector<std::pair<int, int>> component_terminals;                // per component
  std::optional<FilteredReport> filtered_cert;                         // filtered certificate over el(W)
  std::optional<std::tuple<int, int>> splitting;                       // (object a, idempotent e)
  std::optional<std::vector<std::vector<int>>> iso_components;         // W ≅ splitting presheaf
  std::string counterexample;                                          // human-readable failure detail
};

namespace detail {

// terminal object within one component of el(W): unique morphism from every
// member to it.
inline std::optional<int> component_terminal(const Category& el, const std::vector<int>& members) {
  for (int t : members) {
    bool ok = true;
    for (int x : members)
      if (el.homset(x, t).size() != 1) {
        ok = false;
        break;
      }
    if (ok) return t;
  }
  return std::nullopt;
}

}  // namespace detail

inline ClassifyResult classify(const Presheaf& w, WeightClass cls) {
  ClassifyResult r;
  r.cls = cls;
  Elements el = elements(w);
  const Category& e = *el.cat;
  switch (cls) {
    case WeightClass::Empty: {
      auto t = has_terminal(e);
      r.verdict = t.has_value();
      if (t) r.terminal_element = el.objs[*t];
      else r.counterexample = e.n_objects() == 0 ? "category of elements is empty" : "category of elements has no terminal object";
      break;
    }
    case WeightClass::Discrete: {
      r.verdict = true;
      for (const auto& comp : connected_components(e)) {
        auto t = detail::component_terminal(e, comp);
        if (!t) {
          r.verdict = false;
          r.component_terminals.clear();
          r.counterexample = cat("component of '", e.objects[comp.front()], "' has no terminal object");
          break;
        }
        r.component_terminals.push_back(el.objs[*t]);
      }
      if (r.verdict && e.n_objects() == 0) r.note = "empty presheaf: the empty coproduct of representables";
      break;
    }
    case WeightClass::Connected: {
      r.verdict = is_connected(e);
      if (!r.verdict)
        r.counterexample = e.n_objects() == 0 ? "category of elements is empty"
                                              : cat("category of elements has ", connected_components(e).size(), " components");
      break;
    }
    case WeightClass::Filtered: {
      FilteredReport fr = is_filtered(e);
      r.verdict = fr.filtered;
      if (!fr.filtered) r.counterexample = fr.reason;
      r.filtered_cert = std::move(fr);
      break;
    }
    case WeightClass::Absolute: {
      const Category& a = *w.base;
      for (int x = 0; x < a.n_objects() && !r.verdict; ++x)
        for (int eid : a.homset(x, x)) {
          if (a.compose(eid, eid) != eid) continue;
          Presheaf sp = splitting_presheaf(w.base, x, eid);
          auto iso = presheaf_iso(w, sp);
          if (iso) {
            r.verdict = true;
            r.splitting = {x, eid};
            r.iso_components = std::move(iso);
            break;
          }
        }
      if (!r.verdict) r.counterexample = "no idempotent splitting of a representable is isomorphic to the presheaf";
      break;
    }
    case WeightClass::Finite:
      r.verdict = true;
      r.note = "every presheaf on a finite category is a finite colimit of representables; class is non-restrictive here";
      break;
    case WeightClass::Small:
      r.verdict = true;
      r.note = "every presheaf on a finite category is a small colimit of representables; class is non-restrictive here";
      break;
  }
  return r;
}

//----------------------------------------------------------------------------
// solution-set witness

// A family of elements (a_i, x_i) is jointly surjective when every element
// (c, y) is hit: some h: c -> a_i has act[h](x_i) = y. Starting from all
// elements (lex order), greedily drop each element that stays redundant; the
// result is returned in lex order.
inline std::vector<std::pair<int, int>> solution_set_witness(const Presheaf& w) {
  const Category& a = *w.base;
  std::vector<std::pair<int, int>> family;
  for (int x = 0; x < a.n_objects(); ++x)
    for (int e = 0; e < w.card[x]; ++e) family.push_back({x, e});
  auto covers = [&](const std::vector<std::pair<int, int>>& fam) {
    for (int c = 0; c < a.n_objects(); ++c)
      for (int y = 0; y < w.card[c]; ++y) {
        bool hit = false;
        for (const auto& [ai, xi] : fam) {
          for (int h : a.homset(c, ai))
            if (w.act[h][xi] == y) {
              hit = true;
              break;
            }
          if (hit) break;
        }
        if (!hit) return false;
      }
    return true;
  };
  std::size_t i = 0;
  while (i < family.size()) {
    auto trial = family;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (covers(trial)) family = std::move(trial);
    else ++i;
  }
  return family;
}

}  // namespace aftlab
