#pragma once
// Finite categories as explicit composition tables.
//
// A Category owns an ordered list of objects, an ordered list of morphisms
// (identities included), an identity index per object, and a dense partial
// composition table: table[g*n+f] = g∘f whenever tgt(f) = src(g), else -1.
// Everything downstream (functors, colimits, presheaves, adjunctions) works
// over these tables by exhaustive search, so construction keeps deterministic
// index order and validation checks every law instance.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aftlab/util.hpp"

namespace aftlab {

struct Morphism {
  std::string id;
  int src = 0;
  int tgt = 0;
};

struct Category {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identity;  // object index -> morphism index
  std::vector<int> table;     // table[g * n_morphisms() + f] = g∘f, or -1

  // derived cache, built by finalize(): hom[a][b] = morphism indices a -> b
  std::vector<std::vector<std::vector<int>>> hom;

  int n_objects() const { return static_cast<int>(objects.size()); }
  int n_morphisms() const { return static_cast<int>(morphisms.size()); }

  bool composable(int g, int f) const { return morphisms[f].tgt == morphisms[g].src; }

  // g∘f for f: a -> b, g: b -> c.
  int compose(int g, int f) const { return table[static_cast<std::size_t>(g) * morphisms.size() + f]; }

  bool is_identity(int m) const { return identity[morphisms[m].src] == m && morphisms[m].src == morphisms[m].tgt; }

  const std::vector<int>& homset(int a, int b) const { return hom[a][b]; }

  std::optional<int> object_index(const std::string& id) const {
    for (int i = 0; i < n_objects(); ++i)
      if (objects[i] == id) return i;
    return std::nullopt;
  }

  std::optional<int> morphism_index(const std::string& id) const {
    for (int i = 0; i < n_morphisms(); ++i)
      if (morphisms[i].id == id) return i;
    return std::nullopt;
  }

  void finalize() {
    hom.assign(objects.size(), std::vector<std::vector<int>>(objects.size()));
    for (int m = 0; m < n_morphisms(); ++m) hom[morphisms[m].src][morphisms[m].tgt].push_back(m);
  }

  std::uint64_t table_hash() const {
    Fnv1a h;
    h.feed(n_objects());
    for (const auto& o : objects) h.feed(o);
    h.feed(n_morphisms());
    for (const auto& m : morphisms) {
      h.feed(m.id);
      h.feed(m.src);
      h.feed(m.tgt);
    }
    for (int i : identity) h.feed(i);
    for (int v : table) h.feed(v);
    return h.value();
  }
};

using CatPtr = std::shared_ptr<const Category>;

inline bool same_table(const Category& a, const Category& b) {
  return a.objects == b.objects && a.identity == b.identity && a.table == b.table &&
         a.morphisms.size() == b.morphisms.size() &&
         std::equal(a.morphisms.begin(), a.morphisms.end(), b.morphisms.begin(),
                    [](const Morphism& x, const Morphism& y) { return x.id == y.id && x.src == y.src && x.tgt == y.tgt; });
}

// Categories are passed by shared pointer; equality means "same table", with
// pointer equality as the fast path.
inline bool same_category(const CatPtr& a, const CatPtr& b) { return a == b || same_table(*a, *b); }

//----------------------------------------------------------------------------
// validation

inline std::vector<std::string> validate(const Category& c) {
  std::vector<std::string> issues;
  const int n = c.n_morphisms();
  if (static_cast<int>(c.identity.size()) != c.n_objects()) {
    issues.push_back("identity vector size differs from object count");
    return issues;
  }
  if (c.table.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    issues.push_back("composition table size differs from morphism count squared");
    return issues;
  }
  for (int m = 0; m < n; ++m) {
    const Morphism& mo = c.morphisms[m];
    if (mo.src < 0 || mo.src >= c.n_objects() || mo.tgt < 0 || mo.tgt >= c.n_objects())
      issues.push_back(cat("morphism '", mo.id, "' has out-of-range endpoints"));
  }
  if (!issues.empty()) return issues;
  for (int a = 0; a < c.n_objects(); ++a) {
    int i = c.identity[a];
    if (i < 0 || i >= n) {
      issues.push_back(cat("object '", c.objects[a], "' has out-of-range identity"));
      continue;
    }
    if (c.morphisms[i].src != a || c.morphisms[i].tgt != a)
      issues.push_back(cat("identity of '", c.objects[a], "' does not have equal source and target at that object"));
  }
  // duplicate ids
  {
    std::vector<std::string> ids;
    for (const auto& m : c.morphisms) ids.push_back(m.id);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 1; i < ids.size(); ++i)
      if (ids[i] == ids[i - 1]) issues.push_back(cat("duplicate morphism id '", ids[i], "'"));
    std::vector<std::string> oids = c.objects;
    std::sort(oids.begin(), oids.end());
    for (std::size_t i = 1; i < oids.size(); ++i)
      if (oids[i] == oids[i - 1]) issues.push_back(cat("duplicate object id '", oids[i], "'"));
  }
  // totality and typing of the table
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      int h = c.table[static_cast<std::size_t>(g) * n + f];
      if (!c.composable(g, f)) {
        if (h != -1)
          issues.push_back(cat("composite defined for non-composable pair ", c.morphisms[g].id, " . ", c.morphisms[f].id));
        continue;
      }
      if (h == -1) {
        issues.push_back(cat("undefined composite ", c.morphisms[g].id, " . ", c.morphisms[f].id));
        continue;
      }
      if (h < 0 || h >= n || c.morphisms[h].src != c.morphisms[f].src || c.morphisms[h].tgt != c.morphisms[g].tgt)
        issues.push_back(cat("ill-typed composite ", c.morphisms[g].id, " . ", c.morphisms[f].id, " = ",
                             (h >= 0 && h < n) ? c.morphisms[h].id : std::string("?")));
    }
  if (!issues.empty()) return issues;
  // identity laws
  for (int f = 0; f < n; ++f) {
    const Morphism& mo = c.morphisms[f];
    if (c.compose(c.identity[mo.tgt], f) != f)
      issues.push_back(cat("identity law fails: id_", c.objects[mo.tgt], " . ", mo.id, " != ", mo.id));
    if (c.compose(f, c.identity[mo.src]) != f)
      issues.push_back(cat("identity law fails: ", mo.id, " . id_", c.objects[mo.src], " != ", mo.id));
  }
  // associativity over all composable triples
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < n; ++f) {
        if (!c.composable(g, f)) continue;
        int left = c.compose(c.compose(h, g), f);
        int right = c.compose(h, c.compose(g, f));
        if (left != right)
          issues.push_back(cat("associativity fails: (", c.morphisms[h].id, " . ", c.morphisms[g].id, ") . ",
                               c.morphisms[f].id, " != ", c.morphisms[h].id, " . (", c.morphisms[g].id, " . ",
                               c.morphisms[f].id, ")"));
      }
    }
  return issues;
}

// Assembles a category from raw parts: objects, non-identity morphisms, and
// explicit composites for non-identity composable pairs. Identities are
// synthesized as id_<object>; identity composites are filled automatically.
// Throws ValidationError listing every violated law.
struct RawComposite {
  std::string g, f, h;  // g . f = h, by morphism id
};

inline CatPtr make_category(const std::vector<std::string>& objects, const std::vector<Morphism>& arrows,
                            const std::vector<RawComposite>& composites) {
  Category c;
  c.objects = objects;
  std::vector<std::string> issues;
  for (int a = 0; a < c.n_objects(); ++a) {
    c.identity.push_back(static_cast<int>(c.morphisms.size()));
    c.morphisms.push_back({cat("id_", objects[a]), a, a});
  }
  for (const auto& m : arrows) {
    if (std::any_of(c.morphisms.begin(), c.morphisms.end(), [&](const Morphism& x) { return x.id == m.id; }))
      issues.push_back(cat("duplicate morphism id '", m.id, "'"));
    c.morphisms.push_back(m);
  }
  const int n = c.n_morphisms();
  c.table.assign(static_cast<std::size_t>(n) * n, -1);
  auto set = [&](int g, int f, int h) { c.table[static_cast<std::size_t>(g) * n + f] = h; };
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (!c.composable(g, f)) continue;
      if (c.is_identity(g)) set(g, f, f);
      else if (c.is_identity(f)) set(g, f, g);
    }
  for (const auto& e : composites) {
    auto g = c.morphism_index(e.g), f = c.morphism_index(e.f), h = c.morphism_index(e.h);
    if (!g || !f || !h) {
      issues.push_back(cat("composite references unknown morphism: ", e.g, " . ", e.f, " = ", e.h));
      continue;
    }
    if (!c.composable(*g, *f)) {
      issues.push_back(cat("composite declared for non-composable pair ", e.g, " . ", e.f));
      continue;
    }
    int& slot = c.table[static_cast<std::size_t>(*g) * n + *f];
    if (slot != -1 && slot != *h) {
      issues.push_back(cat("conflicting composite for ", e.g, " . ", e.f));
      continue;
    }
    slot = *h;
  }
  if (issues.empty()) issues = validate(c);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  c.finalize();
  return std::make_shared<const Category>(std::move(c));
}

// Trusted path for algorithmic constructions: validates (cheap at this scale,
// and catches construction bugs early) and finalizes.
inline CatPtr seal_category(Category&& c) {
  auto issues = validate(c);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  c.finalize();
  return std::make_shared<const Category>(std::move(c));
}

//----------------------------------------------------------------------------
// canonical small categories

inline CatPtr discrete_category(const std::vector<std::string>& objects) { return make_category(objects, {}, {}); }

inline CatPtr terminal_category() { return discrete_category({"pt"}); }

inline CatPtr empty_category() { return discrete_category({}); }

// The linear order 0 < 1 < ... < n-1 as a category (n objects).
inline CatPtr chain_category(int n) {
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back(cat("c", i));
  std::vector<Morphism> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arrows.push_back({cat("le_c", i, "_c", j), i, j});
  std::vector<RawComposite> comps;
  auto name = [&](int i, int j) { return i == j ? cat("id_c", i) : cat("le_c", i, "_c", j); };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        if (i != j && j != k) comps.push_back({name(j, k), name(i, j), name(i, k)});
  return make_category(objs, arrows, comps);
}

//----------------------------------------------------------------------------
// basic structural queries

inline CatPtr opposite(const CatPtr& c) {
  Category o;
  o.objects = c->objects;
  o.identity = c->identity;
  for (const auto& m : c->morphisms) o.morphisms.push_back({m.id, m.tgt, m.src});
  const int n = c->n_morphisms();
  o.table.assign(static_cast<std::size_t>(n) * n, -1);
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) o.table[static_cast<std::size_t>(g) * n + f] = c->table[static_cast<std::size_t>(f) * n + g];
  return seal_category(std::move(o));
}

// Least object index that is terminal (unique morphism from every object).
inline std::optional<int> has_terminal(const Category& c) {
  for (int t = 0; t < c.n_objects(); ++t) {
    bool ok = true;
    for (int x = 0; x < c.n_objects() && ok; ++x) ok = c.homset(x, t).size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

inline std::optional<int> has_initial(const Category& c) {
  for (int i = 0; i < c.n_objects(); ++i) {
    bool ok = true;
    for (int x = 0; x < c.n_objects() && ok; ++x) ok = c.homset(i, x).size() == 1;
    if (ok) return i;
  }
  return std::nullopt;
}

// Connected components of the underlying zig-zag graph, as sorted object
// index lists, ordered by least member.
inline std::vector<std::vector<int>> connected_components(const Category& c) {
  std::vector<int> parent(c.objects.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& m : c.morphisms) {
    int a = find(m.src), b = find(m.tgt);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < c.n_objects(); ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

inline bool is_connected(const Category& c) { return c.n_objects() > 0 && connected_components(c).size() == 1; }

inline bool is_discrete(const Category& c) {
  return static_cast<std::size_t>(c.n_objects()) == c.morphisms.size();
}

// Filteredness of a finite category: nonempty; every pair of objects has a
// cocone object; every parallel pair of morphisms is coequalized by some
// morphism. The report carries the lexicographically first counterexample.
struct FilteredReport {
  bool filtered = false;
  std::string reason;                                 // empty when filtered
  std::optional<std::pair<int, int>> pair_no_cocone;  // object indices
  std::optional<std::pair<int, int>> parallel_unresolved;  // morphism indices
  // certificate data (for witness re-verification)
  std::vector<std::array<int, 5>> pair_cocones;  // (x, y, z, x->z, y->z)
  std::vector<std::array<int, 3>> equalizers;    // (u, v, w) with w∘u = w∘v
};

inline FilteredReport is_filtered(const Category& c) {
  FilteredReport r;
  if (c.n_objects() == 0) {
    r.reason = "empty category";
    return r;
  }
  for (int x = 0; x < c.n_objects(); ++x)
    for (int y = x; y < c.n_objects(); ++y) {
      bool found = false;
      for (int z = 0; z < c.n_objects() && !found; ++z)
        if (!c.homset(x, z).empty() && !c.homset(y, z).empty()) {
          r.pair_cocones.push_back({x, y, z, c.homset(x, z).front(), c.homset(y, z).front()});
          found = true;
        }
      if (!found) {
        r.pair_no_cocone = {x, y};
        r.reason = cat("objects '", c.objects[x], "', '", c.objects[y], "' admit no cocone object");
        return r;
      }
    }
  for (int u = 0; u < c.n_morphisms(); ++u)
    for (int v = u + 1; v < c.n_morphisms(); ++v) {
      const auto &mu = c.morphisms[u], &mv = c.morphisms[v];
      if (mu.src != mv.src || mu.tgt != mv.tgt) continue;
      bool found = false;
      for (int w = 0; w < c.n_morphisms() && !found; ++w) {
        if (c.morphisms[w].src != mu.tgt) continue;
        if (c.compose(w, u) == c.compose(w, v)) {
          r.equalizers.push_back({u, v, w});
          found = true;
        }
      }
      if (!found) {
        r.parallel_unresolved = {u, v};
        r.reason = cat("parallel pair '", mu.id, "', '", mv.id, "' has no coequalizing morphism");
        return r;
      }
    }
  r.filtered = true;
  return r;
}

//----------------------------------------------------------------------------
// isomorphism of categories (exhaustive, for small tables)

namespace detail {

inline std::vector<std::size_t> object_profile(const Category& c) {
  std::vector<std::size_t> prof;
  for (int a = 0; a < c.n_objects(); ++a) {
    std::vector<std::size_t> row;
    for (int b = 0; b < c.n_objects(); ++b) row.push_back(c.homset(a, b).size());
    std::sort(row.begin(), row.end());
    std::size_t h = row.size();
    for (auto v : row) h = h * 131 + v;
    std::vector<std::size_t> col;
    for (int b = 0; b < c.n_objects(); ++b) col.push_back(c.homset(b, a).size());
    std::sort(col.begin(), col.end());
    for (auto v : col) h = h * 131 + v;
    h = h * 131 + c.homset(a, a).size();
    prof.push_back(h);
  }
  return prof;
}

// Try to extend a full object bijection to a morphism bijection; the morphism
// image is forced per homset only up to permutation, so backtrack within
// homsets checking identities and the composition table.
inline bool morphism_match(const Category& a, const Category& b, const std::vector<int>& omap) {
  const int n = a.n_morphisms();
  if (n != b.n_morphisms()) return false;
  std::vector<int> mmap(n, -1);
  std::vector<bool> used(n, false);
  auto full_check = [&]() {
    for (int g = 0; g < n; ++g)
      for (int f = 0; f < n; ++f)
        if (a.composable(g, f) && b.compose(mmap[g], mmap[f]) != mmap[a.compose(g, f)]) return false;
    return true;
  };
  // order morphisms by index; candidates restricted to the image homset
  std::function<bool(int)> go = [&](int m) -> bool {
    if (m == n) return full_check();
    const Morphism& mo = a.morphisms[m];
    bool m_is_id = a.is_identity(m);
    for (int cand : b.homset(omap[mo.src], omap[mo.tgt])) {
      if (used[cand]) continue;
      if (m_is_id != b.is_identity(cand)) continue;
      // composition constraints against already-assigned morphisms
      bool ok = true;
      for (int j = 0; j < m && ok; ++j) {
        if (a.composable(m, j)) {
          int h = a.compose(m, j);
          if (h <= m && mmap[h] != -1) {
            if (b.compose(cand, mmap[j]) != (h == m ? cand : mmap[h])) ok = false;
          }
        }
        if (ok && a.composable(j, m)) {
          int h = a.compose(j, m);
          if (h <= m && mmap[h] != -1) {
            if (b.compose(mmap[j], cand) != (h == m ? cand : mmap[h])) ok = false;
          }
        }
      }
      if (ok && a.composable(m, m)) {
        int h = a.compose(m, m);
        int expect = (h == m) ? cand : (h < m ? mmap[h] : -1);
        if (expect != -1 && b.compose(cand, cand) != expect) ok = false;
      }
      if (!ok) continue;
      mmap[m] = cand;
      used[cand] = true;
      if (go(m + 1)) return true;
      mmap[m] = -1;
      used[cand] = false;
    }
    return false;
  };
  return go(0);
}

}  // namespace detail

inline bool is_isomorphic(const Category& a, const Category& b) {
  if (a.n_objects() != b.n_objects() || a.n_morphisms() != b.n_morphisms()) return false;
  auto pa = detail::object_profile(a), pb = detail::object_profile(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const int k = a.n_objects();
  std::vector<int> omap(k, -1);
  std::vector<bool> used(k, false);
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == k) return detail::morphism_match(a, b, omap);
    for (int y = 0; y < k; ++y) {
      if (used[y] || pa[x] != pb[y]) continue;
      bool ok = true;
      for (int j = 0; j < x && ok; ++j)
        ok = a.homset(x, j).size() == b.homset(y, omap[j]).size() && a.homset(j, x).size() == b.homset(omap[j], y).size();
      if (!ok) continue;
      omap[x] = y;
      used[y] = true;
      if (go(x + 1)) return true;
      omap[x] = -1;
      used[y] = false;
    }
    return false;
  };
  return go(0);
}

// Two-sided inverse of morphism m, if any (least index).
inline std::optional<int> two_sided_inverse(const Category& c, int m) {
  const Morphism& mo = c.morphisms[m];
  for (int u : c.homset(mo.tgt, mo.src))
    if (c.compose(u, m) == c.identity[mo.src] && c.compose(m, u) == c.identity[mo.tgt]) return u;
  return std::nullopt;
}

}  // namespace aftlab
