#pragma once
// Exhaustive enumeration of finite categories with at most a given number of
// morphisms (identities included), one canonical presentation per isomorphism
// class.
//
// An isomorphism of presentations is an object bijection together with an
// endpoint-respecting bijection of non-identity arrows; the enumerator emits
// the lexicographically least (arrow endpoint list, composition table) over
// that group. Objects are o0..o{k-1}, non-identity arrows g0..g{r-1} with
// non-decreasing (src, tgt) endpoint pairs.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "aftlab/category.hpp"

namespace aftlab {
namespace detail {

struct CatSearch {
  int k = 0;                              // objects
  std::vector<std::pair<int, int>> ends;  // non-identity arrow endpoints, non-decreasing
  int n = 0;                              // total morphisms = k + ends.size()
  std::vector<int> src, tgt;              // per morphism (identities first)
  std::vector<int> table;                 // -1 = unknown
  std::vector<CatPtr>* out = nullptr;

  int cell(int g, int f) const { return table[static_cast<std::size_t>(g) * n + f]; }

  bool assoc_ok_around() const {
    // check every triple whose intermediate products are all known
    for (int h = 0; h < n; ++h)
      for (int g = 0; g < n; ++g) {
        if (src[h] != tgt[g]) continue;
        int hg = cell(h, g);
        for (int f = 0; f < n; ++f) {
          if (src[g] != tgt[f]) continue;
          int gf = cell(g, f);
          if (hg < 0 || gf < 0) continue;
          int a = cell(hg, f), b = cell(h, gf);
          if (a >= 0 && b >= 0 && a != b) return false;
        }
      }
    return true;
  }

  // canonical = lex-least (endpoint list, table) over object permutations and
  // endpoint-respecting arrow permutations
  bool is_canonical() const {
    const int r = static_cast<int>(ends.size());
    std::vector<int> operm(k);
    std::iota(operm.begin(), operm.end(), 0);
    do {
      std::vector<std::pair<int, int>> newends(r);
      for (int i = 0; i < r; ++i) newends[i] = {operm[ends[i].first], operm[ends[i].second]};
      std::vector<int> order(r);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int i, int j) { return newends[i] < newends[j]; });
      std::vector<std::pair<int, int>> sortedends(r);
      for (int p = 0; p < r; ++p) sortedends[p] = newends[order[p]];
      if (sortedends > ends) continue;
      if (sortedends < ends) return false;  // smaller endpoint list exists under relabeling
      // enumerate arrow permutations within parallel blocks: 'order' gives one
      // assignment old-arrow -> position; permute within equal endpoint runs
      std::vector<std::pair<int, int>> blocks;  // [begin, end) runs of equal endpoints
      for (int p = 0; p < r;) {
        int q = p;
        while (q < r && sortedends[q] == sortedends[p]) ++q;
        blocks.push_back({p, q});
        p = q;
      }
      std::vector<int> pos(r);  // old arrow index -> new position
      std::function<bool(std::size_t)> blockperm = [&](std::size_t bi) -> bool {
        if (bi == blocks.size()) {
          // morphism index map: identities j -> operm[j], arrow i -> k + pos[i]
          std::vector<int> p(n);
          for (int j = 0; j < k; ++j) p[j] = operm[j];
          for (int i = 0; i < r; ++i) p[k + i] = k + pos[i];
          std::vector<int> newtab(static_cast<std::size_t>(n) * n, -1);
          for (int g = 0; g < n; ++g)
            for (int f = 0; f < n; ++f) {
              int t = cell(g, f);
              if (t >= 0) newtab[static_cast<std::size_t>(p[g]) * n + p[f]] = p[t];
            }
          return newtab < table;  // true = a smaller presentation exists
        }
        auto [b0, b1] = blocks[bi];
        std::vector<int> members;  // old arrow indices landing in this block
        for (int i = 0; i < r; ++i) {
          int slot = static_cast<int>(std::find(order.begin(), order.end(), i) - order.begin());
          if (slot >= b0 && slot < b1) members.push_back(i);
        }
        std::sort(members.begin(), members.end());
        std::vector<int> slots(members.size());
        std::iota(slots.begin(), slots.end(), b0);
        do {
          for (std::size_t j = 0; j < members.size(); ++j) pos[members[j]] = slots[j];
          if (blockperm(bi + 1)) return true;
        } while (std::next_permutation(slots.begin(), slots.end()));
        return false;
      };
      if (blockperm(0)) return false;
    } while (std::next_permutation(operm.begin(), operm.end()));
    return true;
  }

  void emit() {
    if (!is_canonical()) return;
    Category c;
    for (int j = 0; j < k; ++j) c.objects.push_back(cat("o", j));
    for (int j = 0; j < k; ++j) c.morphisms.push_back({cat("id_o", j), j, j});
    for (std::size_t i = 0; i < ends.size(); ++i)
      c.morphisms.push_back({cat("g", i), ends[i].first, ends[i].second});
    c.identity.resize(k);
    std::iota(c.identity.begin(), c.identity.end(), 0);
    c.table = table;
    out->push_back(seal_category(std::move(c)));
  }

  void fill(int cellidx) {
    const int total = n * n;
    while (cellidx < total) {
      int g = cellidx / n, f = cellidx % n;
      if (src[g] == tgt[f] && cell(g, f) < 0) break;
      ++cellidx;
    }
    if (cellidx == n * n) {
      emit();
      return;
    }
    int g = cellidx / n, f = cellidx % n;
    for (int h = 0; h < n; ++h) {
      if (src[h] != src[f] || tgt[h] != tgt[g]) continue;
      table[static_cast<std::size_t>(g) * n + f] = h;
      if (assoc_ok_around()) fill(cellidx + 1);
      table[static_cast<std::size_t>(g) * n + f] = -1;
    }
  }
};

// all canonical categories with exactly `total` morphisms, lex order
inline std::vector<CatPtr> categories_exactly(int total) {
  std::vector<CatPtr> out;
  for (int k = (total == 0 ? 0 : 1); k <= total; ++k) {
    int r = total - k;
    if (total == 0 && k == 0) {
      out.push_back(empty_category());
      continue;
    }
    // all non-decreasing endpoint sequences of length r over [0,k)^2
    std::vector<std::pair<int, int>> ends(r);
    std::function<void(int, std::pair<int, int>)> pick = [&](int i, std::pair<int, int> lo) {
      if (i == r) {
        CatSearch s;
        s.k = k;
        s.ends = ends;
        s.n = total;
        s.src.resize(total);
        s.tgt.resize(total);
        for (int j = 0; j < k; ++j) s.src[j] = s.tgt[j] = j;
        for (int a = 0; a < r; ++a) {
          s.src[k + a] = ends[a].first;
          s.tgt[k + a] = ends[a].second;
        }
        s.table.assign(static_cast<std::size_t>(total) * total, -1);
        // identity composites are forced
        for (int m = 0; m < total; ++m) {
          s.table[static_cast<std::size_t>(m) * total + s.src[m]] = m;  // m . id
          s.table[static_cast<std::size_t>(s.tgt[m]) * total + m] = m;  // id . m
        }
        s.out = &out;
        s.fill(0);
        return;
      }
      for (int a = lo.first; a < k; ++a)
        for (int b = (a == lo.first ? lo.second : 0); b < k; ++b) {
          ends[i] = {a, b};
          pick(i + 1, {a, b});
        }
    };
    pick(0, {0, 0});
  }
  return out;
}

}  // namespace detail

// every canonical finite category with at most max_morphisms morphisms,
// ordered by (morphism count, object count, arrow endpoints, table); memoized
inline const std::vector<CatPtr>& all_categories(int max_morphisms) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<CatPtr>>> cache;
  static std::vector<std::vector<CatPtr>> exact;  // exact[m] = categories with m morphisms
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(max_morphisms); it != cache.end()) return *it->second;
  while (static_cast<int>(exact.size()) <= max_morphisms)
    exact.push_back(detail::categories_exactly(static_cast<int>(exact.size())));
  auto flat = std::make_shared<std::vector<CatPtr>>();
  for (int m = 0; m <= max_morphisms; ++m) flat->insert(flat->end(), exact[m].begin(), exact[m].end());
  cache[max_morphisms] = flat;
  return *cache[max_morphisms];
}

}  // namespace aftlab
