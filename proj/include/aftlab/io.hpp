#pragma once

// Line-oriented text formats (all UTF-8, `#` starts a comment):
//
//   .fincat   object <id>...            declares objects, in order
//             morphism <id> : <a> -> <b>
//             compose <g> . <f> = <h>   identities are implicit, named id_<obj>
//
//   .fun      source <name> / target <name> headers, then
//             object <a> |-> <b>
//             morphism <f> |-> <g>      identity morphisms map implicitly
//             (poset maps use the same format with object lines only)
//
//   .psh      base <name> header, then
//             elements <obj> : <e>...   one line per base object
//             action <f> : <e> |-> <e'> one line per element of the far end
//
//   .poset    element <id>...
//             leq <a> <b>               closed reflexively/transitively on load
//
// Writers are deterministic: loading what they emit reproduces the structure
// exactly (same ids, same order).

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "aftlab/category.hpp"
#include "aftlab/functor.hpp"
#include "aftlab/poset.hpp"
#include "aftlab/presheaf.hpp"
#include "aftlab/util.hpp"

namespace aftlab {

// ---------------------------------------------------------------------------
// tokenizer

namespace detail {

struct Line {
  int number = 0;                   // 1-based
  std::vector<std::string> tokens;  // never empty
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline int expect_tokens(const Line& l, std::size_t count, const char* shape) {
  if (l.tokens.size() != count)
    throw ParseError(l.number, cat("expected '", shape, "'"));
  return 0;
}

inline void expect_literal(const Line& l, std::size_t at, const char* lit) {
  if (l.tokens[at] != lit)
    throw ParseError(l.number, cat("expected '", lit, "', got '", l.tokens[at], "'"));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// file helpers

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(cat("cannot open '", path, "'"));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(cat("cannot write '", path, "'"));
  out << content;
}

// Strips directory and extension: "corpus/chain2.fincat" -> "chain2".
inline std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

// ---------------------------------------------------------------------------
// .fincat

inline CatPtr parse_fincat(const std::string& text) {
  std::vector<std::string> objects;
  std::map<std::string, int> obj_index;
  struct RawArrow {
    std::string id, src, tgt;
    int line;
  };
  std::vector<RawArrow> arrows;
  std::vector<RawComposite> composites;

  for (const detail::Line& l : detail::tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "object") {
      if (t.size() < 2) throw ParseError(l.number, "expected 'object <id>...'");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (obj_index.count(t[i])) throw ParseError(l.number, cat("duplicate object '", t[i], "'"));
        obj_index[t[i]] = static_cast<int>(objects.size());
        objects.push_back(t[i]);
      }
    } else if (t[0] == "morphism") {
      detail::expect_tokens(l, 6, "morphism <id> : <src> -> <tgt>");
      detail::expect_literal(l, 2, ":");
      detail::expect_literal(l, 4, "->");
      arrows.push_back({t[1], t[3], t[5], l.number});
    } else if (t[0] == "compose") {
      detail::expect_tokens(l, 6, "compose <g> . <f> = <h>");
      detail::expect_literal(l, 2, ".");
      detail::expect_literal(l, 4, "=");
      composites.push_back({t[1], t[3], t[5]});
    } else {
      throw ParseError(l.number, cat("unknown directive '", t[0], "'"));
    }
  }

  std::vector<Morphism> mor;
  for (const RawArrow& a : arrows) {
    auto s = obj_index.find(a.src);
    auto g = obj_index.find(a.tgt);
    if (s == obj_index.end()) throw ParseError(a.line, cat("unknown object '", a.src, "'"));
    if (g == obj_index.end()) throw ParseError(a.line, cat("unknown object '", a.tgt, "'"));
    if (a.id.rfind("id_", 0) == 0 && obj_index.count(a.id.substr(3)))
      throw ParseError(a.line, cat("'", a.id, "' is reserved for the implicit identity"));
    mor.push_back({a.id, s->second, g->second});
  }
  return make_category(objects, mor, composites);
}

inline std::string write_fincat(const Category& c) {
  std::ostringstream out;
  if (c.n_objects() > 0) out << "object" << cat(" ", join_ids(c.objects, " ")) << "\n";
  for (int m = 0; m < c.n_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    out << "morphism " << c.morphisms[m].id << " : " << c.objects[c.morphisms[m].src] << " -> "
        << c.objects[c.morphisms[m].tgt] << "\n";
  }
  for (int g = 0; g < c.n_morphisms(); ++g) {
    if (c.is_identity(g)) continue;
    for (int f = 0; f < c.n_morphisms(); ++f) {
      if (c.is_identity(f) || !c.composable(g, f)) continue;
      out << "compose " << c.morphisms[g].id << " . " << c.morphisms[f].id << " = "
          << c.morphisms[c.compose(g, f)].id << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// .fun (shared by functors and poset maps)

struct ParsedMap {
  std::string source_name, target_name;
  std::vector<std::pair<std::string, std::string>> object_pairs;
  std::vector<std::pair<std::string, std::string>> morphism_pairs;
};

inline ParsedMap parse_map_file(const std::string& text) {
  ParsedMap pm;
  bool have_source = false, have_target = false;
  for (const detail::Line& l : detail::tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "source") {
      detail::expect_tokens(l, 2, "source <name>");
      if (have_source) throw ParseError(l.number, "duplicate source header");
      pm.source_name = t[1];
      have_source = true;
    } else if (t[0] == "target") {
      detail::expect_tokens(l, 2, "target <name>");
      if (have_target) throw ParseError(l.number, "duplicate target header");
      pm.target_name = t[1];
      have_target = true;
    } else if (t[0] == "object") {
      detail::expect_tokens(l, 4, "object <a> |-> <b>");
      detail::expect_literal(l, 2, "|->");
      pm.object_pairs.emplace_back(t[1], t[3]);
    } else if (t[0] == "morphism") {
      detail::expect_tokens(l, 4, "morphism <f> |-> <g>");
      detail::expect_literal(l, 2, "|->");
      pm.morphism_pairs.emplace_back(t[1], t[3]);
    } else {
      throw ParseError(l.number, cat("unknown directive '", t[0], "'"));
    }
  }
  if (!have_source || !have_target)
    throw ParseError(1, "missing source/target header");
  return pm;
}

inline Functor bind_functor(const ParsedMap& pm, CatPtr src, CatPtr dst) {
  std::vector<std::string> issues;
  std::vector<int> omap(src->n_objects(), -1);
  for (const auto& [a, b] : pm.object_pairs) {
    auto ai = src->object_index(a);
    auto bi = dst->object_index(b);
    if (!ai) issues.push_back(cat("unknown source object '", a, "'"));
    if (!bi) issues.push_back(cat("unknown target object '", b, "'"));
    if (ai && bi) {
      if (omap[*ai] >= 0) issues.push_back(cat("object '", a, "' mapped twice"));
      omap[*ai] = *bi;
    }
  }
  for (int a = 0; a < src->n_objects(); ++a)
    if (omap[a] < 0) issues.push_back(cat("object '", src->objects[a], "' not mapped"));
  if (!issues.empty()) throw ValidationError(std::move(issues));

  std::vector<int> mmap(src->n_morphisms(), -1);
  for (const auto& [f, g] : pm.morphism_pairs) {
    auto fi = src->morphism_index(f);
    auto gi = dst->morphism_index(g);
    if (!fi) issues.push_back(cat("unknown source morphism '", f, "'"));
    if (!gi) issues.push_back(cat("unknown target morphism '", g, "'"));
    if (fi && src->is_identity(*fi))
      issues.push_back(cat("identity '", f, "' maps implicitly; do not list it"));
    else if (fi && gi) {
      if (mmap[*fi] >= 0) issues.push_back(cat("morphism '", f, "' mapped twice"));
      mmap[*fi] = *gi;
    }
  }
  for (int a = 0; a < src->n_objects(); ++a) mmap[src->identity[a]] = dst->identity[omap[a]];
  for (int m = 0; m < src->n_morphisms(); ++m)
    if (mmap[m] < 0) issues.push_back(cat("morphism '", src->morphisms[m].id, "' not mapped"));
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return make_functor(std::move(src), std::move(dst), std::move(omap), std::move(mmap));
}

inline PosetMap bind_monotone(const ParsedMap& pm, PosetPtr src, PosetPtr dst) {
  std::vector<std::string> issues;
  if (!pm.morphism_pairs.empty())
    issues.push_back("poset maps take object lines only");
  std::vector<int> map(src->n(), -1);
  for (const auto& [a, b] : pm.object_pairs) {
    auto ai = src->element_index(a);
    auto bi = dst->element_index(b);
    if (!ai) issues.push_back(cat("unknown source element '", a, "'"));
    if (!bi) issues.push_back(cat("unknown target element '", b, "'"));
    if (ai && bi) {
      if (map[*ai] >= 0) issues.push_back(cat("element '", a, "' mapped twice"));
      map[*ai] = *bi;
    }
  }
  for (int a = 0; a < src->n(); ++a)
    if (map[a] < 0) issues.push_back(cat("element '", src->elems[a], "' not mapped"));
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return make_monotone(std::move(src), std::move(dst), std::move(map));
}

inline std::string write_functor(const Functor& f, const std::string& source_name,
                                 const std::string& target_name) {
  std::ostringstream out;
  out << "source " << source_name << "\n";
  out << "target " << target_name << "\n";
  for (int a = 0; a < f.src->n_objects(); ++a)
    out << "object " << f.src->objects[a] << " |-> " << f.dst->objects[f.omap[a]] << "\n";
  for (int m = 0; m < f.src->n_morphisms(); ++m) {
    if (f.src->is_identity(m)) continue;
    out << "morphism " << f.src->morphisms[m].id << " |-> " << f.dst->morphisms[f.mmap[m]].id
        << "\n";
  }
  return out.str();
}

inline std::string write_monotone(const PosetMap& f, const std::string& source_name,
                                  const std::string& target_name) {
  std::ostringstream out;
  out << "source " << source_name << "\n";
  out << "target " << target_name << "\n";
  for (int a = 0; a < f.src->n(); ++a)
    out << "object " << f.src->elems[a] << " |-> " << f.dst->elems[f.map[a]] << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// .psh

inline Presheaf parse_presheaf(const std::string& text, CatPtr base) {
  struct ActionPair {
    std::string mor, from, to;
    int line;
  };
  std::vector<std::vector<std::string>> names(base->n_objects());
  std::vector<char> seen(base->n_objects(), 0);
  std::vector<ActionPair> actions;
  bool have_base = false;

  for (const detail::Line& l : detail::tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "base") {
      detail::expect_tokens(l, 2, "base <name>");
      have_base = true;
    } else if (t[0] == "elements") {
      if (t.size() < 3 || t[2] != ":")
        throw ParseError(l.number, "expected 'elements <obj> : <e>...'");
      auto idx = base->object_index(t[1]);
      if (!idx) throw ParseError(l.number, cat("unknown object '", t[1], "'"));
      int a = *idx;
      if (seen[a]) throw ParseError(l.number, cat("duplicate elements line for '", t[1], "'"));
      seen[a] = 1;
      for (std::size_t i = 3; i < t.size(); ++i) names[a].push_back(t[i]);
    } else if (t[0] == "action") {
      detail::expect_tokens(l, 6, "action <f> : <e> |-> <e'>");
      detail::expect_literal(l, 2, ":");
      detail::expect_literal(l, 4, "|->");
      actions.push_back({t[1], t[3], t[5], l.number});
    } else {
      throw ParseError(l.number, cat("unknown directive '", t[0], "'"));
    }
  }
  if (!have_base) throw ParseError(1, "missing base header");

  std::vector<std::string> issues;
  for (int a = 0; a < base->n_objects(); ++a) {
    if (!seen[a]) issues.push_back(cat("no elements line for object '", base->objects[a], "'"));
    for (std::size_t i = 1; i < names[a].size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names[a][i] == names[a][j])
          issues.push_back(cat("duplicate element '", names[a][i], "' at '", base->objects[a], "'"));
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  auto elem_index = [&](int a, const std::string& e) {
    for (std::size_t i = 0; i < names[a].size(); ++i)
      if (names[a][i] == e) return static_cast<int>(i);
    return -1;
  };

  std::vector<int> card(base->n_objects());
  for (int a = 0; a < base->n_objects(); ++a) card[a] = static_cast<int>(names[a].size());
  std::vector<std::vector<int>> act(base->n_morphisms());
  for (int m = 0; m < base->n_morphisms(); ++m) {
    if (base->is_identity(m)) {
      act[m].resize(card[base->morphisms[m].tgt]);
      for (std::size_t i = 0; i < act[m].size(); ++i) act[m][i] = static_cast<int>(i);
    } else {
      act[m].assign(card[base->morphisms[m].tgt], -1);
    }
  }
  for (const ActionPair& p : actions) {
    auto midx = base->morphism_index(p.mor);
    if (!midx) throw ParseError(p.line, cat("unknown morphism '", p.mor, "'"));
    int m = *midx;
    if (base->is_identity(m))
      throw ParseError(p.line, cat("identity '", p.mor, "' acts implicitly; do not list it"));
    int from = elem_index(base->morphisms[m].tgt, p.from);
    int to = elem_index(base->morphisms[m].src, p.to);
    if (from < 0)
      throw ParseError(p.line, cat("'", p.from, "' is not an element at '",
                                   base->objects[base->morphisms[m].tgt], "'"));
    if (to < 0)
      throw ParseError(p.line, cat("'", p.to, "' is not an element at '",
                                   base->objects[base->morphisms[m].src], "'"));
    if (act[m][from] >= 0)
      throw ParseError(p.line, cat("conflicting action for '", p.mor, "' at '", p.from, "'"));
    act[m][from] = to;
  }
  for (int m = 0; m < base->n_morphisms(); ++m)
    for (std::size_t i = 0; i < act[m].size(); ++i)
      if (act[m][i] < 0)
        issues.push_back(cat("action of '", base->morphisms[m].id, "' undefined at '",
                             names[base->morphisms[m].tgt][i], "'"));
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return make_presheaf(std::move(base), std::move(card), std::move(act), std::move(names));
}

inline std::string write_presheaf(const Presheaf& w, const std::string& base_name) {
  std::ostringstream out;
  out << "base " << base_name << "\n";
  const Category& c = *w.base;
  for (int a = 0; a < c.n_objects(); ++a) {
    out << "elements " << c.objects[a] << " :";
    for (const std::string& e : w.names[a]) out << " " << e;
    out << "\n";
  }
  for (int m = 0; m < c.n_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    int src = c.morphisms[m].src, tgt = c.morphisms[m].tgt;
    for (std::size_t i = 0; i < w.act[m].size(); ++i)
      out << "action " << c.morphisms[m].id << " : " << w.names[tgt][i] << " |-> "
          << w.names[src][w.act[m][i]] << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// .poset

inline PosetPtr parse_poset(const std::string& text) {
  std::vector<std::string> elems;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> pairs;
  for (const detail::Line& l : detail::tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "element") {
      if (t.size() < 2) throw ParseError(l.number, "expected 'element <id>...'");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (index.count(t[i])) throw ParseError(l.number, cat("duplicate element '", t[i], "'"));
        index[t[i]] = static_cast<int>(elems.size());
        elems.push_back(t[i]);
      }
    } else if (t[0] == "leq") {
      detail::expect_tokens(l, 3, "leq <a> <b>");
      auto a = index.find(t[1]);
      auto b = index.find(t[2]);
      if (a == index.end()) throw ParseError(l.number, cat("unknown element '", t[1], "'"));
      if (b == index.end()) throw ParseError(l.number, cat("unknown element '", t[2], "'"));
      pairs.emplace_back(a->second, b->second);
    } else {
      throw ParseError(l.number, cat("unknown directive '", t[0], "'"));
    }
  }
  return make_poset(std::move(elems), pairs);
}

inline std::string write_poset(const Poset& p) {
  std::ostringstream out;
  if (p.n() > 0) out << "element " << join_ids(p.elems, " ") << "\n";
  for (int a = 0; a < p.n(); ++a)
    for (int b = 0; b < p.n(); ++b)
      if (a != b && p.le[a][b]) out << "leq " << p.elems[a] << " " << p.elems[b] << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// diagnostics

// Stable label for an input-validation failure, used by the command line tool.
inline std::string diagnostic_label(const ValidationError& e) {
  for (const std::string& issue : e.issues)
    if (issue.rfind("undefined composite", 0) == 0) return "UndefinedCompositeError";
  return "ValidationError";
}

}  // namespace aftlab
