#pragma once
// Finite posets and monotone maps: the lattice specialization where the
// adjoint functor theorem reads "left adjoint = join-preserving", downset
// completion is the (desk-scale) free cocompletion, and extension along the
// unit produces left adjoints.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "aftlab/category.hpp"
#include "aftlab/functor.hpp"

namespace aftlab {

struct Poset {
  std::vector<std::string> elems;
  std::vector<std::vector<char>> le;  // le[a][b] = 1 iff a <= b

  int n() const { return static_cast<int>(elems.size()); }
  bool leq(int a, int b) const { return le[a][b] != 0; }
  std::optional<int> element_index(const std::string& id) const {
    for (int i = 0; i < n(); ++i)
      if (elems[i] == id) return i;
    return std::nullopt;
  }
  std::uint64_t hash() const {
    Fnv1a h;
    h.feed(n());
    for (const auto& e : elems) h.feed(e);
    for (const auto& row : le)
      for (char v : row) h.feed(static_cast<int>(v));
    return h.value();
  }
};

using PosetPtr = std::shared_ptr<const Poset>;

inline std::vector<std::string> check_poset(const Poset& p) {
  std::vector<std::string> issues;
  const int n = p.n();
  if (static_cast<int>(p.le.size()) != n) {
    issues.push_back("relation size differs from element count");
    return issues;
  }
  for (const auto& row : p.le)
    if (static_cast<int>(row.size()) != n) {
      issues.push_back("relation row size differs from element count");
      return issues;
    }
  for (int a = 0; a < n; ++a)
    if (!p.leq(a, a)) issues.push_back(cat("relation is not reflexive at '", p.elems[a], "'"));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.leq(a, b) && p.leq(b, a))
        issues.push_back(cat("relation is not antisymmetric on '", p.elems[a], "', '", p.elems[b], "'"));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (p.leq(a, b) && p.leq(b, c) && !p.leq(a, c)) {
          issues.push_back(cat("relation is not transitive via '", p.elems[b], "'"));
          return issues;
        }
  return issues;
}

// Builds a poset from generating pairs a <= b: reflexive-transitively closes,
// then validates (antisymmetry can fail and throws).
inline PosetPtr make_poset(std::vector<std::string> elems, const std::vector<std::pair<int, int>>& pairs) {
  Poset p;
  p.elems = std::move(elems);
  const int n = p.n();
  p.le.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) p.le[a][a] = 1;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError({"relation pair out of range"});
    p.le[a][b] = 1;
  }
  for (int k = 0; k < n; ++k)  // transitive closure
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (p.leq(a, k) && p.leq(k, b)) p.le[a][b] = 1;
  auto issues = check_poset(p);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return std::make_shared<const Poset>(std::move(p));
}

inline PosetPtr chain_poset(int k) {
  std::vector<std::string> elems;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) elems.push_back(cat("c", i));
  for (int i = 0; i + 1 < k; ++i) pairs.push_back({i, i + 1});
  return make_poset(std::move(elems), pairs);
}

inline PosetPtr antichain_poset(std::vector<std::string> elems) { return make_poset(std::move(elems), {}); }

// least upper bound of a subset (empty subset -> bottom), if any
inline std::optional<int> join_of(const Poset& p, const std::vector<int>& subset) {
  std::vector<int> ub;
  for (int x = 0; x < p.n(); ++x) {
    bool above = true;
    for (int s : subset)
      if (!p.leq(s, x)) {
        above = false;
        break;
      }
    if (above) ub.push_back(x);
  }
  for (int x : ub) {
    bool least = true;
    for (int y : ub)
      if (!p.leq(x, y)) {
        least = false;
        break;
      }
    if (least) return x;
  }
  return std::nullopt;
}

inline std::optional<int> bottom_of(const Poset& p) { return join_of(p, {}); }

// All joins exist iff the empty join (bottom) and all binary joins exist —
// finite posets build every join from those.
inline bool is_complete_lattice(const Poset& p) {
  if (p.n() == 0 || !bottom_of(p)) return false;
  for (int a = 0; a < p.n(); ++a)
    for (int b = a + 1; b < p.n(); ++b)
      if (!join_of(p, {a, b})) return false;
  return true;
}

//----------------------------------------------------------------------------
// monotone maps

struct PosetMap {
  PosetPtr src, dst;
  std::vector<int> map;

  int operator()(int a) const { return map[a]; }
  std::uint64_t hash() const {
    Fnv1a h;
    h.feed(src->hash());
    h.feed(dst->hash());
    for (int v : map) h.feed(v);
    return h.value();
  }
};

inline std::vector<std::string> check_monotone(const PosetMap& f) {
  std::vector<std::string> issues;
  if (static_cast<int>(f.map.size()) != f.src->n()) {
    issues.push_back("map size differs from source element count");
    return issues;
  }
  for (int v : f.map)
    if (v < 0 || v >= f.dst->n()) {
      issues.push_back("map value out of range");
      return issues;
    }
  for (int a = 0; a < f.src->n(); ++a)
    for (int b = 0; b < f.src->n(); ++b)
      if (f.src->leq(a, b) && !f.dst->leq(f.map[a], f.map[b]))
        issues.push_back(cat("map is not monotone on '", f.src->elems[a], "' <= '", f.src->elems[b], "'"));
  return issues;
}

inline PosetMap make_monotone(PosetPtr src, PosetPtr dst, std::vector<int> map) {
  PosetMap f{std::move(src), std::move(dst), std::move(map)};
  auto issues = check_monotone(f);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return f;
}

inline PosetMap identity_monotone(const PosetPtr& p) {
  std::vector<int> m(p->n());
  std::iota(m.begin(), m.end(), 0);
  return {p, p, std::move(m)};
}

inline PosetMap compose_monotone(const PosetMap& g, const PosetMap& f) {
  if (g.src->hash() != f.dst->hash()) throw ShapeMismatch("monotone composition: middle posets differ");
  std::vector<int> m(f.src->n());
  for (int a = 0; a < f.src->n(); ++a) m[a] = g.map[f.map[a]];
  return {f.src, g.dst, std::move(m)};
}

// all monotone maps src -> dst in lexicographic order of the value vector
inline std::vector<PosetMap> enumerate_monotone_maps(const PosetPtr& src, const PosetPtr& dst) {
  std::vector<PosetMap> out;
  std::vector<int> m(src->n(), -1);
  std::function<void(int)> go = [&](int a) {
    if (a == src->n()) {
      out.push_back({src, dst, m});
      return;
    }
    for (int v = 0; v < dst->n(); ++v) {
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) {
        if (src->leq(b, a) && !dst->leq(m[b], v)) ok = false;
        if (src->leq(a, b) && !dst->leq(v, m[b])) ok = false;
      }
      if (!ok) continue;
      m[a] = v;
      go(a + 1);
      m[a] = -1;
    }
  };
  go(0);
  return out;
}

//----------------------------------------------------------------------------
// join preservation and Galois adjoints

struct JoinPreservationReport {
  bool ok = true;
  bool empty_join_fails = false;        // bottom not preserved
  std::optional<std::pair<int, int>> failing_pair;  // binary join not preserved
};

// For finite sources with all joins: preserving the empty and binary joins is
// preserving every join.
inline JoinPreservationReport is_join_preserving(const PosetMap& f) {
  const Poset &p = *f.src, &q = *f.dst;
  JoinPreservationReport rep;
  auto pb = bottom_of(p), qb = bottom_of(q);
  if (!pb || !qb) throw NotCompleteLattice("join preservation needs bottoms on both sides");
  if (f.map[*pb] != *qb) {
    rep.ok = false;
    rep.empty_join_fails = true;
    return rep;
  }
  for (int a = 0; a < p.n(); ++a)
    for (int b = a + 1; b < p.n(); ++b) {
      auto j = join_of(p, {a, b});
      if (!j) throw NotCompleteLattice("join preservation needs binary joins in the source");
      auto fj = join_of(q, {f.map[a], f.map[b]});
      if (!fj) throw NotCompleteLattice("join preservation needs binary joins in the target");
      if (f.map[*j] != *fj) {
        rep.ok = false;
        rep.failing_pair = {a, b};
        return rep;
      }
    }
  return rep;
}

struct GaloisResult {
  std::optional<PosetMap> right;
  JoinPreservationReport joins;  // why the adjoint is absent, when it is
};

// g(b) = join{a : f a <= b}, verified against the Galois property; exists iff
// f preserves all joins.
inline GaloisResult galois_right_adjoint(const PosetMap& f) {
  const Poset &p = *f.src, &q = *f.dst;
  if (!is_complete_lattice(p)) throw NotCompleteLattice("source is not a complete lattice");
  if (!is_complete_lattice(q)) throw NotCompleteLattice("target is not a complete lattice");
  GaloisResult res;
  res.joins = is_join_preserving(f);
  if (!res.joins.ok) return res;
  std::vector<int> g(q.n());
  for (int b = 0; b < q.n(); ++b) {
    std::vector<int> below;
    for (int a = 0; a < p.n(); ++a)
      if (q.leq(f.map[a], b)) below.push_back(a);
    auto j = join_of(p, below);
    if (!j) throw Error("complete lattice lost a join");  // unreachable by is_complete_lattice
    g[b] = *j;
  }
  for (int a = 0; a < p.n(); ++a)
    for (int b = 0; b < q.n(); ++b)
      if (q.leq(f.map[a], b) != p.leq(a, g[b]))
        throw Error("join-preserving map failed the Galois property");  // would contradict the formula
  res.right = make_monotone(f.dst, f.src, std::move(g));
  return res;
}

// independent oracle: search every monotone map for the Galois property
inline std::optional<PosetMap> brute_force_right_adjoint(const PosetMap& f) {
  for (const PosetMap& h : enumerate_monotone_maps(f.dst, f.src)) {
    bool ok = true;
    for (int a = 0; a < f.src->n() && ok; ++a)
      for (int b = 0; b < f.dst->n() && ok; ++b)
        if (f.dst->leq(f.map[a], b) != f.src->leq(a, h.map[b])) ok = false;
    if (ok) return h;
  }
  return std::nullopt;
}

//----------------------------------------------------------------------------
// downset completion

struct Completion {
  PosetPtr lattice;                    // downsets ordered by inclusion
  PosetMap unit;                       // p -> principal downset
  std::vector<std::uint32_t> member;   // bitmask of each downset's members
};

inline Completion downset_completion(const PosetPtr& pp) {
  const Poset& p = *pp;
  if (p.n() > 20) throw Error("downset completion capped at 20 elements");
  std::vector<std::uint32_t> downs;
  for (std::uint32_t s = 0; s < (1u << p.n()); ++s) {
    bool closed = true;
    for (int b = 0; b < p.n() && closed; ++b) {
      if (!(s >> b & 1)) continue;
      for (int a = 0; a < p.n() && closed; ++a)
        if (p.leq(a, b) && !(s >> a & 1)) closed = false;
    }
    if (closed) downs.push_back(s);
  }
  Poset d;
  for (std::uint32_t s : downs) {
    std::string name = "{";
    bool first = true;
    for (int a = 0; a < p.n(); ++a)
      if (s >> a & 1) {
        if (!first) name += ",";
        name += p.elems[a];
        first = false;
      }
    name += "}";
    d.elems.push_back(std::move(name));
  }
  const int m = static_cast<int>(downs.size());
  d.le.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) d.le[i][j] = (downs[i] & ~downs[j]) == 0 ? 1 : 0;
  auto lattice = std::make_shared<const Poset>(std::move(d));
  std::vector<int> unit(p.n());
  for (int a = 0; a < p.n(); ++a) {
    std::uint32_t princ = 0;
    for (int b = 0; b < p.n(); ++b)
      if (p.leq(b, a)) princ |= 1u << b;
    unit[a] = static_cast<int>(std::find(downs.begin(), downs.end(), princ) - downs.begin());
  }
  return {lattice, make_monotone(pp, lattice, std::move(unit)), std::move(downs)};
}

// Left extension of f : P -> L along the unit P -> D(P):
// g(S) = join of f over the members of S. Restricts to f along the unit and
// preserves all joins (both facts re-verified here).
inline PosetMap extend_along_yoneda(const PosetMap& f, const Completion& comp) {
  const Poset& l = *f.dst;
  if (!is_complete_lattice(l)) throw NotCompleteLattice("extension target is not a complete lattice");
  if (comp.unit.src->hash() != f.src->hash()) throw ShapeMismatch("completion is not over the map's source");
  std::vector<int> g(comp.lattice->n());
  for (int i = 0; i < comp.lattice->n(); ++i) {
    std::vector<int> vals;
    for (int a = 0; a < f.src->n(); ++a)
      if (comp.member[i] >> a & 1) vals.push_back(f.map[a]);
    auto j = join_of(l, vals);
    if (!j) throw Error("complete lattice lost a join");
    g[i] = *j;
  }
  PosetMap ext = make_monotone(comp.lattice, f.dst, std::move(g));
  for (int a = 0; a < f.src->n(); ++a)
    if (ext.map[comp.unit.map[a]] != f.map[a]) throw Error("extension does not restrict to the map along the unit");
  if (!is_join_preserving(ext).ok) throw Error("extension is not join-preserving");
  return ext;
}

// Two independently computed sides of the presentability statement:
//   g preserves all joins  <=>  g has a right adjoint.
// The right side uses the forced candidate h(l) = join{d : g d <= l} and a
// full Galois verification, never consulting join preservation.
inline bool presentable_aft_check(const PosetMap& g) {
  const Poset &k = *g.src, &l = *g.dst;
  if (!is_complete_lattice(k) || !is_complete_lattice(l)) throw NotCompleteLattice("presentability check needs complete lattices");
  bool joins_side = is_join_preserving(g).ok;
  std::vector<int> h(l.n());
  bool adjoint_side = true;
  for (int b = 0; b < l.n() && adjoint_side; ++b) {
    std::vector<int> below;
    for (int d = 0; d < k.n(); ++d)
      if (l.leq(g.map[d], b)) below.push_back(d);
    auto j = join_of(k, below);
    if (!j) {
      adjoint_side = false;
      break;
    }
    h[b] = *j;
  }
  if (adjoint_side)
    for (int d = 0; d < k.n() && adjoint_side; ++d)
      for (int b = 0; b < l.n() && adjoint_side; ++b)
        if (l.leq(g.map[d], b) != k.leq(d, h[b])) adjoint_side = false;
  return joins_side == adjoint_side;
}

//----------------------------------------------------------------------------
// exhaustive enumeration (canonical under element relabeling)

namespace detail {

// canonical = lex-least relation matrix among relabelings that keep the
// strict part above the diagonal (every poset has such a labeling — a linear
// extension — so comparing within them still picks one per isomorphism class)
inline bool poset_canonical(const std::vector<std::vector<char>>& le) {
  const int n = static_cast<int>(le.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> flatorig;
  for (const auto& row : le) flatorig.insert(flatorig.end(), row.begin(), row.end());
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<char> flat(static_cast<std::size_t>(n) * n);
    bool upper = true;
    for (int a = 0; a < n && upper; ++a)
      for (int b = 0; b < n; ++b) {
        if (le[a][b] && perm[a] > perm[b]) {
          upper = false;
          break;
        }
        flat[static_cast<std::size_t>(perm[a]) * n + perm[b]] = le[a][b];
      }
    if (upper && flat < flatorig) return false;
  }
  return true;
}

}  // namespace detail

// all posets on n elements (p0..p{n-1}), one canonical labeling per
// isomorphism class (strict part above the diagonal), ordered by relation
// matrix; memoized
inline const std::vector<PosetPtr>& enumerate_posets(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<PosetPtr>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n > 6) throw Error("poset enumeration capped at 6 elements");
  std::vector<PosetPtr> out;
  std::vector<std::string> elems;
  for (int i = 0; i < n; ++i) elems.push_back(cat("p", i));
  std::vector<std::pair<int, int>> strict;  // candidate strict pairs, a < b only
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) strict.push_back({a, b});
  const int bits = static_cast<int>(strict.size());
  for (std::uint64_t s = 0; s < (1ull << bits); ++s) {
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a) le[a][a] = 1;
    for (int i = 0; i < bits; ++i)
      if (s >> i & 1) le[strict[i].first][strict[i].second] = 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          if (le[a][b] && le[b][c] && !le[a][c]) ok = false;
    if (!ok || !detail::poset_canonical(le)) continue;
    Poset p;
    p.elems = elems;
    p.le = std::move(le);
    out.push_back(std::make_shared<const Poset>(std::move(p)));
  }
  cache[n] = std::move(out);
  return cache[n];
}

// complete lattices with at most max_elems elements, one per isomorphism class
inline std::vector<PosetPtr> enumerate_lattices(int max_elems) {
  std::vector<PosetPtr> out;
  for (int n = 1; n <= max_elems; ++n)
    for (const PosetPtr& p : enumerate_posets(n))
      if (is_complete_lattice(*p)) out.push_back(p);
  return out;
}

//----------------------------------------------------------------------------
// bridge to the category side

// objects = elements, one morphism le_a_b per related pair
inline CatPtr poset_to_category(const Poset& p) {
  Category c;
  c.objects = p.elems;
  const int n = p.n();
  c.identity.assign(n, -1);
  std::vector<std::vector<int>> morix(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.leq(a, b)) continue;
      morix[a][b] = static_cast<int>(c.morphisms.size());
      if (a == b) {
        c.identity[a] = morix[a][b];
        c.morphisms.push_back({cat("id_", p.elems[a]), a, b});
      } else {
        c.morphisms.push_back({cat("le_", p.elems[a], "_", p.elems[b]), a, b});
      }
    }
  const int m = static_cast<int>(c.morphisms.size());
  c.table.assign(static_cast<std::size_t>(m) * m, -1);
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (c.morphisms[f].tgt == c.morphisms[g].src)
        c.table[static_cast<std::size_t>(g) * m + f] = morix[c.morphisms[f].src][c.morphisms[g].tgt];
  return seal_category(std::move(c));
}

inline Functor monotone_to_functor(const PosetMap& f, const CatPtr& srccat, const CatPtr& dstcat) {
  std::vector<int> mmap;
  for (const auto& mo : srccat->morphisms) {
    const auto& hs = dstcat->homset(f.map[mo.src], f.map[mo.tgt]);
    if (hs.size() != 1) throw ShapeMismatch("image hom-set is not a singleton; categories do not match the posets");
    mmap.push_back(hs[0]);
  }
  return make_functor(srccat, dstcat, f.map, std::move(mmap));
}

}  // namespace aftlab
