#include <catch2/catch_amalgamated.hpp>

#include "aftlab/enumerate.hpp"
#include "aftlab/presheaf.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace aftlab;

namespace {
const std::vector<WeightClass> kAllClasses = {WeightClass::Empty,    WeightClass::Discrete,
                                              WeightClass::Connected, WeightClass::Filtered,
                                              WeightClass::Absolute, WeightClass::Finite,
                                              WeightClass::Small};
}

TEST_CASE("category of elements has one object per element") {
  CatPtr base = testutil::corpus_cat("chain3");
  Presheaf w = testutil::corpus_presheaf("repr_c2", base);
  Elements el = elements(w);
  CHECK(el.cat->n_objects() == w.total_elements());
  CHECK(validate(*el.cat).empty());
}

TEST_CASE("representables classify true under every class") {
  for (const char* stem : {"chain2", "walking_arrow", "parallel_pair", "z2", "idem_monoid",
                           "split_idem"}) {
    CatPtr c = testutil::corpus_cat(stem);
    for (int a = 0; a < c->n_objects(); ++a) {
      Presheaf w = representable(c, a);
      for (WeightClass cls : kAllClasses) {
        INFO(stem << " object " << a << " class " << static_cast<int>(cls));
        CHECK(classify(w, cls).verdict);
      }
    }
  }
}

TEST_CASE("corpus weights classify as designed") {
  CatPtr chain3 = testutil::corpus_cat("chain3");
  Presheaf repr = testutil::corpus_presheaf("repr_c2", chain3);
  CHECK(classify(repr, WeightClass::Empty).terminal_element == std::pair<int, int>{2, 0});

  CatPtr chain2 = testutil::corpus_cat("chain2");
  Presheaf empty_w = testutil::corpus_presheaf("empty_weight", chain2);
  CHECK(!classify(empty_w, WeightClass::Empty).verdict);
  ClassifyResult d = classify(empty_w, WeightClass::Discrete);
  CHECK(d.verdict);  // vacuously: no components
  CHECK(!d.note.empty());
  CHECK(!classify(empty_w, WeightClass::Connected).verdict);
  CHECK(!classify(empty_w, WeightClass::Filtered).verdict);
  CHECK(!classify(empty_w, WeightClass::Absolute).verdict);
  CHECK(classify(empty_w, WeightClass::Small).verdict);

  CatPtr disc2 = testutil::corpus_cat("discrete2");
  Presheaf islands = testutil::corpus_presheaf("two_islands", disc2);
  CHECK(!classify(islands, WeightClass::Empty).verdict);
  ClassifyResult di = classify(islands, WeightClass::Discrete);
  CHECK(di.verdict);
  CHECK(di.component_terminals.size() == 2);
  CHECK(!classify(islands, WeightClass::Connected).verdict);
  CHECK(!classify(islands, WeightClass::Filtered).verdict);
  CHECK(!classify(islands, WeightClass::Absolute).verdict);

  CatPtr idem = testutil::corpus_cat("idem_monoid");
  Presheaf split_w = testutil::corpus_presheaf("split_weight", idem);
  ClassifyResult ab = classify(split_w, WeightClass::Absolute);
  CHECK(ab.verdict);
  REQUIRE(ab.splitting.has_value());
  // the witness re-verifies: W is isomorphic to the named splitting presheaf
  auto [sa, se] = *ab.splitting;
  CHECK(presheaf_iso(split_w, splitting_presheaf(idem, sa, se)));
  // this weight is isomorphic to the representable, so even Empty holds
  CHECK(classify(split_w, WeightClass::Empty).verdict);

  // the splitting of e itself is absolute without being representable
  auto e_idx = idem->morphism_index("e");
  REQUIRE(e_idx.has_value());
  Presheaf split_e = splitting_presheaf(idem, 0, *e_idx);
  CHECK(classify(split_e, WeightClass::Absolute).verdict);
  CHECK(!classify(split_e, WeightClass::Empty).verdict);
  CHECK(classify(split_e, WeightClass::Filtered).verdict);

  CatPtr pp = testutil::corpus_cat("parallel_pair");
  Presheaf fork = testutil::corpus_presheaf("fork_weight", pp);
  CHECK(classify(fork, WeightClass::Connected).verdict);
  CHECK(!classify(fork, WeightClass::Empty).verdict);
  CHECK(!classify(fork, WeightClass::Discrete).verdict);
  CHECK(!classify(fork, WeightClass::Filtered).verdict);
  CHECK(!classify(fork, WeightClass::Absolute).verdict);
}

TEST_CASE("finite and small verdicts carry their degeneracy note") {
  CatPtr c = testutil::corpus_cat("chain2");
  Presheaf w = representable(c, 0);
  for (WeightClass cls : {WeightClass::Finite, WeightClass::Small}) {
    ClassifyResult r = classify(w, cls);
    CHECK(r.verdict);
    CHECK(!r.note.empty());
  }
}

TEST_CASE("classification witnesses re-verify") {
  // terminal-element witnesses are actual terminals of the elements category
  CatPtr c3 = testutil::corpus_cat("chain3");
  Presheaf w = testutil::corpus_presheaf("repr_c2", c3);
  ClassifyResult r = classify(w, WeightClass::Empty);
  REQUIRE(r.terminal_element.has_value());
  Elements el = elements(w);
  bool found = false;
  for (std::size_t i = 0; i < el.objs.size(); ++i)
    if (el.objs[i] == *r.terminal_element) {
      found = true;
      auto t = has_terminal(*el.cat);
      REQUIRE(t.has_value());
      CHECK(static_cast<std::size_t>(*t) == i);
    }
  CHECK(found);

  // filtered certificates re-verify on the elements category
  ClassifyResult f = classify(w, WeightClass::Filtered);
  REQUIRE(f.filtered_cert.has_value());
  CHECK(f.filtered_cert->filtered);
}

TEST_CASE("absolute agrees with fixed-point counts on the split example") {
  CatPtr idem = testutil::corpus_cat("idem_monoid");
  Karoubi k = karoubi_completion(idem);
  Presheaf split_w = testutil::corpus_presheaf("split_weight", idem);
  auto counts = oracle::karoubi_fixed_counts(split_w, k);
  // the extension is representable exactly when it matches a karoubi homset
  Presheaf ext = oracle::karoubi_extend(split_w, k);
  bool repr = false;
  for (int o = 0; o < ext.base->n_objects() && !repr; ++o)
    if (presheaf_iso(ext, representable(ext.base, o))) repr = true;
  CHECK(repr);
  CHECK(counts.size() == 2);
}

// The heavyweight sweep: every presheaf with fibers <= 3 over every category
// with <= 6 morphisms (one presentation per isomorphism class). Verifies the
// subsumption chains and cross-checks the absolute classifier against
// representability over the idempotent completion. Takes a minute or two.
TEST_CASE("exhaustive classification sweep", "[sweep]") {
  long long presheaves = 0, violations = 0;
  for (const CatPtr& c : all_categories(6)) {
    Karoubi k = karoubi_completion(c);
    oracle::for_each_presheaf(c, 3, [&](const Presheaf& w) {
      ++presheaves;
      bool e = classify(w, WeightClass::Empty).verdict;
      bool d = classify(w, WeightClass::Discrete).verdict;
      bool co = classify(w, WeightClass::Connected).verdict;
      bool fi = classify(w, WeightClass::Filtered).verdict;
      bool ab = classify(w, WeightClass::Absolute).verdict;
      bool sm = classify(w, WeightClass::Small).verdict;
      if (e && !d) ++violations;
      if (d && !sm) ++violations;
      if (e && !co) ++violations;
      if (e && !fi) ++violations;
      if (fi && !sm) ++violations;
      if (ab && !fi) ++violations;
      Presheaf ext = oracle::karoubi_extend(w, k);
      bool repr = false;
      for (int o = 0; o < ext.base->n_objects() && !repr; ++o)
        if (presheaf_iso(ext, representable(ext.base, o))) repr = true;
      if (repr != ab) ++violations;
    });
  }
  CHECK(presheaves == 1464417);
  CHECK(violations == 0);
}
