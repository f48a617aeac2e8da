// Galois connections on finite lattices: compute the right adjoint of a
// join-preserving map, then freely complete a poset and extend a map along
// the principal-downset embedding.
#include <cstdio>

#include "aftlab/poset.hpp"

using namespace aftlab;

int main() {
  // the diamond: bot < l, r < top
  PosetPtr dia = make_poset({"bot", "l", "r", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  PosetPtr c2 = chain_poset(2);

  // send bot, l to the bottom and r, top to the top: join-preserving
  PosetMap f = make_monotone(dia, c2, {0, 0, 1, 1});
  GaloisResult res = galois_right_adjoint(f);
  if (res.right) {
    std::printf("right adjoint of the diamond collapse:\n");
    for (int b = 0; b < c2->n(); ++b)
      std::printf("  g(%s) = %s\n", c2->elems[b].c_str(), dia->elems[res.right->map[b]].c_str());
  }

  // a map that misses the bottom has no adjoint, and the report says why
  PosetMap top_map = make_monotone(c2, c2, {1, 1});
  GaloisResult none = galois_right_adjoint(top_map);
  std::printf("constant-top adjoint exists: %s (empty join preserved: %s)\n",
              none.right ? "yes" : "no", none.joins.empty_join_fails ? "no" : "yes");

  // free join-completion of a poset with no bottom
  PosetPtr vee = make_poset({"a", "b", "c"}, {{0, 2}, {1, 2}});
  Completion comp = downset_completion(vee);
  std::printf("downsets of the vee: %d (complete lattice: %s)\n", comp.lattice->n(),
              is_complete_lattice(*comp.lattice) ? "yes" : "no");
  PosetMap g = extend_along_yoneda(make_monotone(vee, dia, {1, 2, 3}), comp);
  std::printf("yoneda extension is join-preserving: %s\n",
              is_join_preserving(g).ok ? "yes" : "no");
  return 0;
}
