// Build two finite categories, search for a right adjoint, and contrast a
// functor that only has one in the multi-valued sense.
#include <cstdio>

#include "aftlab/adjunction.hpp"

using namespace aftlab;

int main() {
  CatPtr c2 = chain_category(2);  // c0 <= c1
  CatPtr c3 = chain_category(3);  // c0 <= c1 <= c2

  // the inclusion of the short chain into the long one
  Functor incl = make_functor(c2, c3, {0, 1}, {0, 1, 3});
  auto adj = find_right_adjoint(incl);
  if (adj) {
    std::printf("inclusion chain2 -> chain3 has a right adjoint:\n");
    for (int b = 0; b < c3->n_objects(); ++b)
      std::printf("  r(%s) = %s\n", c3->objects[b].c_str(),
                  c2->objects[adj->right.omap[b]].c_str());
    std::printf("  triangles verified: %s\n", verify_adjunction(*adj).ok ? "yes" : "no");
  }

  // collapsing two isolated points onto one: no right adjoint, but every
  // slice splits into components with terminals (a multiadjoint)
  CatPtr d2 = discrete_category({"a1", "a2"});
  CatPtr pt = terminal_category();
  Functor collapse = make_functor(d2, pt, {0, 0}, {0, 0});
  std::printf("\ncollapse {a1,a2} -> pt:\n");
  std::printf("  right adjoint: %s\n", find_right_adjoint(collapse) ? "found" : "none");
  std::printf("  discrete-class admissible: %s\n",
              is_phi_admissible(collapse, WeightClass::Discrete).overall ? "yes" : "no");
  std::printf("  empty-class admissible:    %s\n",
              is_phi_admissible(collapse, WeightClass::Empty).overall ? "yes" : "no");
  return 0;
}
