#pragma once
// Functors and natural transformations between finite categories, plus
// exhaustive enumeration of both (used by diagram sweeps and by brute-force
// oracles in the test suite).

#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "aftlab/category.hpp"

namespace aftlab {

struct Functor {
  CatPtr src, dst;
  std::vector<int> omap;  // per source object: target object index
  std::vector<int> mmap;  // per source morphism: target morphism index

  int ob(int a) const { return omap[a]; }
  int mor(int m) const { return mmap[m]; }

  std::uint64_t table_hash() const {
    Fnv1a h;
    h.feed(src->table_hash());
    h.feed(dst->table_hash());
    for (int v : omap) h.feed(v);
    for (int v : mmap) h.feed(v);
    return h.value();
  }
};

inline std::vector<std::string> check_functor(const Functor& f) {
  std::vector<std::string> issues;
  const Category &a = *f.src, &b = *f.dst;
  if (static_cast<int>(f.omap.size()) != a.n_objects() || static_cast<int>(f.mmap.size()) != a.n_morphisms()) {
    issues.push_back("object/morphism map sizes differ from source category");
    return issues;
  }
  for (int x : f.omap)
    if (x < 0 || x >= b.n_objects()) {
      issues.push_back("object map is out of range");
      return issues;
    }
  for (int m : f.mmap)
    if (m < 0 || m >= b.n_morphisms()) {
      issues.push_back("morphism map is out of range");
      return issues;
    }
  for (int m = 0; m < a.n_morphisms(); ++m) {
    const Morphism& mo = a.morphisms[m];
    const Morphism& im = b.morphisms[f.mmap[m]];
    if (im.src != f.omap[mo.src] || im.tgt != f.omap[mo.tgt])
      issues.push_back(cat("morphism '", mo.id, "' maps to '", im.id, "' with wrong endpoints"));
  }
  for (int x = 0; x < a.n_objects(); ++x)
    if (f.mmap[a.identity[x]] != b.identity[f.omap[x]])
      issues.push_back(cat("identity of '", a.objects[x], "' is not sent to an identity"));
  for (int g = 0; g < a.n_morphisms(); ++g)
    for (int m = 0; m < a.n_morphisms(); ++m)
      if (a.composable(g, m) && b.compose(f.mmap[g], f.mmap[m]) != f.mmap[a.compose(g, m)])
        issues.push_back(cat("composition not preserved on ", a.morphisms[g].id, " . ", a.morphisms[m].id));
  return issues;
}

inline Functor make_functor(CatPtr src, CatPtr dst, std::vector<int> omap, std::vector<int> mmap) {
  Functor f{std::move(src), std::move(dst), std::move(omap), std::move(mmap)};
  auto issues = check_functor(f);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return f;
}

inline Functor identity_functor(const CatPtr& c) {
  std::vector<int> omap(c->objects.size()), mmap(c->morphisms.size());
  std::iota(omap.begin(), omap.end(), 0);
  std::iota(mmap.begin(), mmap.end(), 0);
  return Functor{c, c, std::move(omap), std::move(mmap)};
}

inline Functor constant_functor(const CatPtr& shape, const CatPtr& c, int obj) {
  std::vector<int> omap(shape->objects.size(), obj);
  std::vector<int> mmap(shape->morphisms.size(), c->identity[obj]);
  return Functor{shape, c, std::move(omap), std::move(mmap)};
}

// g∘f; sources must line up by table.
inline Functor compose_functors(const Functor& g, const Functor& f) {
  if (!same_category(f.dst, g.src)) throw ShapeMismatch("functor composition: inner categories differ");
  std::vector<int> omap, mmap;
  omap.reserve(f.omap.size());
  mmap.reserve(f.mmap.size());
  for (int x : f.omap) omap.push_back(g.omap[x]);
  for (int m : f.mmap) mmap.push_back(g.mmap[m]);
  return Functor{f.src, g.dst, std::move(omap), std::move(mmap)};
}

inline bool same_functor(const Functor& f, const Functor& g) {
  return same_category(f.src, g.src) && same_category(f.dst, g.dst) && f.omap == g.omap && f.mmap == g.mmap;
}

//----------------------------------------------------------------------------
// exhaustive functor enumeration (deterministic lexicographic order)

// All functors src -> dst in lexicographic (omap, mmap) order. Identity images
// are forced; non-identity morphisms are backtracked over the image homsets
// with incremental composition checks.
inline std::vector<Functor> enumerate_functors(const CatPtr& src, const CatPtr& dst) {
  const Category &a = *src, &b = *dst;
  std::vector<Functor> out;
  const int ko = a.n_objects(), km = a.n_morphisms();
  if (ko > 0 && b.n_objects() == 0) return out;

  // non-identity morphisms in index order
  std::vector<int> work;
  for (int m = 0; m < km; ++m)
    if (!a.is_identity(m)) work.push_back(m);

  // composable non-identity-relevant pairs grouped by the largest morphism
  // index involved, so each is checked as soon as all three slots are known
  std::vector<std::vector<std::array<int, 3>>> pairs_by_max(km);
  for (int g = 0; g < km; ++g)
    for (int f = 0; f < km; ++f)
      if (a.composable(g, f)) {
        int h = a.compose(g, f);
        pairs_by_max[std::max({g, f, h})].push_back({g, f, h});
      }

  std::vector<int> omap(ko, -1), mmap(km, -1);
  std::function<void(std::size_t)> go_mor = [&](std::size_t wi) {
    if (wi == work.size()) {
      out.push_back(Functor{src, dst, omap, mmap});
      return;
    }
    int m = work[wi];
    const Morphism& mo = a.morphisms[m];
    for (int cand : b.homset(omap[mo.src], omap[mo.tgt])) {
      mmap[m] = cand;
      bool ok = true;
      for (const auto& p : pairs_by_max[m]) {
        if (mmap[p[0]] == -1 || mmap[p[1]] == -1 || mmap[p[2]] == -1) continue;
        if (b.compose(mmap[p[0]], mmap[p[1]]) != mmap[p[2]]) {
          ok = false;
          break;
        }
      }
      if (ok) go_mor(wi + 1);
      mmap[m] = -1;
    }
  };
  std::function<void(int)> go_obj = [&](int x) {
    if (x == ko) {
      for (int o = 0; o < ko; ++o) mmap[a.identity[o]] = b.identity[omap[o]];
      go_mor(0);
      return;
    }
    for (int y = 0; y < b.n_objects(); ++y) {
      // prune: every populated homset must have a populated image homset
      bool ok = b.homset(y, y).size() >= 1;
      for (int j = 0; j < x && ok; ++j) {
        if (!a.homset(x, j).empty() && b.homset(y, omap[j]).empty()) ok = false;
        if (!a.homset(j, x).empty() && b.homset(omap[j], y).empty()) ok = false;
      }
      if (!a.homset(x, x).empty() && b.homset(y, y).size() < 1) ok = false;
      if (!ok) continue;
      omap[x] = y;
      go_obj(x + 1);
      omap[x] = -1;
    }
  };
  go_obj(0);
  return out;
}

//----------------------------------------------------------------------------
// natural transformations

struct NatTrans {
  Functor f, g;            // parallel functors f, g : A -> B
  std::vector<int> comp;   // per A-object: component morphism f(a) -> g(a) in B
};

inline void check_nat_shape(const NatTrans& t) {
  if (!same_category(t.f.src, t.g.src) || !same_category(t.f.dst, t.g.dst))
    throw ShapeMismatch("natural transformation between non-parallel functors");
  const Category& b = *t.f.dst;
  if (t.comp.size() != t.f.omap.size()) throw ShapeMismatch("component count differs from object count");
  for (std::size_t a = 0; a < t.comp.size(); ++a) {
    const Morphism& m = b.morphisms[t.comp[a]];
    if (m.src != t.f.omap[a] || m.tgt != t.g.omap[a])
      throw ShapeMismatch(cat("component at '", t.f.src->objects[a], "' has wrong endpoints"));
  }
}

// First source morphism whose naturality square fails, if any.
inline std::optional<int> naturality_failure(const NatTrans& t) {
  const Category &a = *t.f.src, &b = *t.f.dst;
  for (int m = 0; m < a.n_morphisms(); ++m) {
    const Morphism& mo = a.morphisms[m];
    if (b.compose(t.comp[mo.tgt], t.f.mmap[m]) != b.compose(t.g.mmap[m], t.comp[mo.src])) return m;
  }
  return std::nullopt;
}

inline bool is_natural(const NatTrans& t) { return !naturality_failure(t).has_value(); }

inline NatTrans make_nat(Functor f, Functor g, std::vector<int> comp) {
  NatTrans t{std::move(f), std::move(g), std::move(comp)};
  check_nat_shape(t);
  return t;
}

// H ∘ τ : H f => H g for H : B -> C.
inline NatTrans whisker_post(const Functor& h, const NatTrans& t) {
  std::vector<int> comp;
  comp.reserve(t.comp.size());
  for (int c : t.comp) comp.push_back(h.mmap[c]);
  return NatTrans{compose_functors(h, t.f), compose_functors(h, t.g), std::move(comp)};
}

// τ ∘ K : f K => g K for K : Z -> A.
inline NatTrans whisker_pre(const NatTrans& t, const Functor& k) {
  std::vector<int> comp;
  comp.reserve(k.omap.size());
  for (int z : k.omap) comp.push_back(t.comp[z]);
  return NatTrans{compose_functors(t.f, k), compose_functors(t.g, k), std::move(comp)};
}

// All natural transformations f => g in lexicographic component order.
inline std::vector<NatTrans> enumerate_nats(const Functor& f, const Functor& g) {
  const Category &a = *f.src, &b = *f.dst;
  std::vector<NatTrans> out;
  const int ko = a.n_objects();
  std::vector<std::vector<int>> mors_by_max(ko);
  for (int m = 0; m < a.n_morphisms(); ++m)
    mors_by_max[std::max(a.morphisms[m].src, a.morphisms[m].tgt)].push_back(m);
  std::vector<int> comp(ko, -1);
  std::function<void(int)> go = [&](int x) {
    if (x == ko) {
      out.push_back(NatTrans{f, g, comp});
      return;
    }
    for (int cand : b.homset(f.omap[x], g.omap[x])) {
      comp[x] = cand;
      bool ok = true;
      for (int m : mors_by_max[x]) {
        const Morphism& mo = a.morphisms[m];
        if (comp[mo.src] == -1 || comp[mo.tgt] == -1) continue;
        if (b.compose(comp[mo.tgt], f.mmap[m]) != b.compose(g.mmap[m], comp[mo.src])) {
          ok = false;
          break;
        }
      }
      if (ok) go(x + 1);
      comp[x] = -1;
    }
  };
  go(0);
  return out;
}

inline bool nat_invertible(const NatTrans& t) {
  const Category& b = *t.f.dst;
  for (int c : t.comp)
    if (!two_sided_inverse(b, c)) return false;
  return true;
}

}  // namespace aftlab
