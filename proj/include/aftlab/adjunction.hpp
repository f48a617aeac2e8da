#pragma once
// Adjunctions between finite categories: verification of the triangle
// identities, right-adjoint search by comma-category terminality, per-class
// admissibility, and the mixed composition construction
//       l' r  -|  l r'     (from  l -| r : Y -> X  and  l' -| r' : Y -> Z)
// with its explicit unit (l eta' r) . eps^{-1} and counit eps' . (l' eta r')^{-1}.

#include <optional>
#include <string>
#include <vector>

#include "aftlab/presheaf.hpp"

namespace aftlab {

struct Adjunction {
  Functor left;    // l : X -> Y
  Functor right;   // r : Y -> X
  NatTrans unit;   // 1_X => r l
  NatTrans counit; // l r => 1_Y
};

struct TriangleReport {
  bool ok = false;
  std::string failure;  // first failing law, empty when ok
};

// Throws ShapeMismatch for mis-wired data; naturality and triangle failures
// are verdicts, not errors.
inline TriangleReport verify_adjunction(const Adjunction& adj) {
  const Functor &l = adj.left, &r = adj.right;
  if (!same_category(l.src, r.dst) || !same_category(l.dst, r.src))
    throw ShapeMismatch("adjunction functors do not form a cycle");
  const Category &x = *l.src, &y = *l.dst;
  Functor rl = compose_functors(r, l), lr = compose_functors(l, r);
  if (!same_functor(adj.unit.f, identity_functor(l.src)) || !same_functor(adj.unit.g, rl))
    throw ShapeMismatch("unit is not a family 1 => r l");
  if (!same_functor(adj.counit.f, lr) || !same_functor(adj.counit.g, identity_functor(l.dst)))
    throw ShapeMismatch("counit is not a family l r => 1");
  check_nat_shape(adj.unit);
  check_nat_shape(adj.counit);
  if (auto m = naturality_failure(adj.unit))
    return {false, cat("unit is not natural at '", x.morphisms[*m].id, "'")};
  if (auto m = naturality_failure(adj.counit))
    return {false, cat("counit is not natural at '", y.morphisms[*m].id, "'")};
  for (int a = 0; a < x.n_objects(); ++a) {
    // counit_{l a} . l(unit_a) = id_{l a}
    int lhs = y.compose(adj.counit.comp[l.omap[a]], l.mmap[adj.unit.comp[a]]);
    if (lhs != y.identity[l.omap[a]])
      return {false, cat("left triangle fails at object '", x.objects[a], "'")};
  }
  for (int b = 0; b < y.n_objects(); ++b) {
    // r(counit_b) . unit_{r b} = id_{r b}
    int lhs = x.compose(r.mmap[adj.counit.comp[b]], adj.unit.comp[r.omap[b]]);
    if (lhs != x.identity[r.omap[b]])
      return {false, cat("right triangle fails at object '", y.objects[b], "'")};
  }
  return {true, ""};
}

inline Adjunction identity_adjunction(const CatPtr& c) {
  Functor id = identity_functor(c);
  std::vector<int> comp(c->identity);
  return {id, id, make_nat(id, compose_functors(id, id), comp), make_nat(compose_functors(id, id), id, comp)};
}

//----------------------------------------------------------------------------
// right-adjoint search via comma-category terminal objects

struct RightAdjointSearch {
  std::optional<Adjunction> adjunction;
  std::optional<int> failing_object;  // first object of the target whose comma category lacks a terminal
};

inline RightAdjointSearch search_right_adjoint(const Functor& f) {
  const Category &a = *f.src, &b = *f.dst;
  std::vector<int> robj(b.objects.size()), eps(b.objects.size());
  for (int bo = 0; bo < b.n_objects(); ++bo) {
    Comma slice = comma_to_object(f, bo);
    auto t = has_terminal(*slice.cat);
    if (!t) return {std::nullopt, bo};
    robj[bo] = slice.objs[*t].a;
    eps[bo] = slice.objs[*t].h;
  }
  // r(k : b -> b') is the unique u with eps_{b'} . f(u) = k . eps_b, supplied
  // by terminality of (r b', eps_{b'}) under the cone (r b, k . eps_b).
  std::vector<int> rmor(b.morphisms.size(), -1);
  for (int k = 0; k < b.n_morphisms(); ++k) {
    const Morphism& mo = b.morphisms[k];
    int want = b.compose(k, eps[mo.src]);
    for (int u : a.homset(robj[mo.src], robj[mo.tgt]))
      if (b.compose(eps[mo.tgt], f.mmap[u]) == want) {
        rmor[k] = u;
        break;
      }
    if (rmor[k] < 0) throw Error("right-adjoint assembly: no mediating morphism despite terminality");
  }
  Functor r = make_functor(f.dst, f.src, robj, rmor);
  // unit_a is the unique u : a -> r f a with eps_{f a} . f(u) = id_{f a}
  std::vector<int> unit(a.objects.size(), -1);
  for (int ao = 0; ao < a.n_objects(); ++ao) {
    for (int u : a.homset(ao, robj[f.omap[ao]]))
      if (b.compose(eps[f.omap[ao]], f.mmap[u]) == b.identity[f.omap[ao]]) {
        unit[ao] = u;
        break;
      }
    if (unit[ao] < 0) throw Error("right-adjoint assembly: unit component missing despite terminality");
  }
  Adjunction adj{f, r, make_nat(identity_functor(f.src), compose_functors(r, f), unit),
                 make_nat(compose_functors(f, r), identity_functor(f.dst), eps)};
  TriangleReport tr = verify_adjunction(adj);
  if (!tr.ok) throw Error(cat("right-adjoint assembly produced a non-adjunction: ", tr.failure));
  return {std::move(adj), std::nullopt};
}

inline std::optional<Adjunction> find_right_adjoint(const Functor& f) { return search_right_adjoint(f).adjunction; }

//----------------------------------------------------------------------------
// admissibility: every slice presheaf B(f-, b) lies in the class

struct AdmissibilityReport {
  WeightClass cls = WeightClass::Empty;
  bool overall = false;
  std::vector<ClassifyResult> per_object;  // indexed by objects of the target
  std::optional<int> failing_object;       // first object whose slice fails
};

inline AdmissibilityReport is_phi_admissible(const Functor& f, WeightClass phi) {
  AdmissibilityReport rep;
  rep.cls = phi;
  rep.overall = true;
  const Category& b = *f.dst;
  for (int bo = 0; bo < b.n_objects(); ++bo) {
    rep.per_object.push_back(classify(hom_presheaf(f, bo), phi));
    if (!rep.per_object.back().verdict && rep.overall) {
      rep.overall = false;
      rep.failing_object = bo;
    }
  }
  return rep;
}

inline bool admissible_closed_under_composition_check(const Functor& f, const Functor& g, WeightClass phi) {
  if (!same_category(f.dst, g.src)) throw ShapeMismatch("composition closure: target of f is not source of g");
  bool hyp = is_phi_admissible(f, phi).overall && is_phi_admissible(g, phi).overall;
  if (!hyp) return true;
  return is_phi_admissible(compose_functors(g, f), phi).overall;
}

//----------------------------------------------------------------------------
// mixed composition

// first: l -| r with l : Y -> X; second: l' -| r' with l' : Y -> Z.
// Requires every counit component eps_x and every whiskered component
// (l' eta r')_z to be invertible; produces l' r -| l r' : X <-> Z.
inline Adjunction compose_adjunctions_mixed(const Adjunction& first, const Adjunction& second) {
  if (!same_category(first.left.src, second.left.src))
    throw ShapeMismatch("mixed composition: the two left adjoints must share their source");
  {
    TriangleReport a = verify_adjunction(first);
    if (!a.ok) throw Error(cat("mixed composition: first argument is not an adjunction (", a.failure, ")"));
    TriangleReport b = verify_adjunction(second);
    if (!b.ok) throw Error(cat("mixed composition: second argument is not an adjunction (", b.failure, ")"));
  }
  const Category& x = *first.left.dst;   // X
  const Category& z = *second.left.dst;  // Z
  std::vector<int> inv_eps(x.objects.size());
  for (int xo = 0; xo < x.n_objects(); ++xo) {
    auto inv = two_sided_inverse(x, first.counit.comp[xo]);
    if (!inv) throw HypothesisFailure("counit", x.objects[xo]);
    inv_eps[xo] = *inv;
  }
  std::vector<int> theta(z.objects.size()), inv_theta(z.objects.size());
  for (int zo = 0; zo < z.n_objects(); ++zo) {
    theta[zo] = second.left.mmap[first.unit.comp[second.right.omap[zo]]];
    auto inv = two_sided_inverse(z, theta[zo]);
    if (!inv) throw HypothesisFailure("whiskered-unit", z.objects[zo]);
    inv_theta[zo] = *inv;
  }
  Functor left = compose_functors(second.left, first.right);   // l' r : X -> Z
  Functor right = compose_functors(first.left, second.right);  // l r' : Z -> X
  std::vector<int> unit(x.objects.size()), counit(z.objects.size());
  for (int xo = 0; xo < x.n_objects(); ++xo)
    unit[xo] = x.compose(first.left.mmap[second.unit.comp[first.right.omap[xo]]], inv_eps[xo]);
  for (int zo = 0; zo < z.n_objects(); ++zo) counit[zo] = z.compose(second.counit.comp[zo], inv_theta[zo]);
  Adjunction out{left, right, make_nat(identity_functor(first.left.dst), compose_functors(right, left), unit),
                 make_nat(compose_functors(left, right), identity_functor(second.left.dst), counit)};
  TriangleReport tr = verify_adjunction(out);
  if (!tr.ok) throw Error(cat("mixed composition produced a non-adjunction: ", tr.failure));
  return out;
}

}  // namespace aftlab
