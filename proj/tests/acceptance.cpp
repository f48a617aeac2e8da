// End-to-end acceptance harness. Each criterion prints exactly one line:
//   PASS <n> <name> (<details>)
//   FAIL <n> <name> (<details>)
// The process exits nonzero if any criterion fails. Run with:
//   acceptance --cli <path-to-cli-binary> --corpus <corpus-dir>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aftlab/adjunction.hpp"
#include "aftlab/enumerate.hpp"
#include "aftlab/io.hpp"
#include "aftlab/poset.hpp"
#include "aftlab/theorems.hpp"
#include "oracles.hpp"

using namespace aftlab;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_cli, g_corpus;
int g_failures = 0;

void report(int n, const char* name, bool ok, const std::string& details) {
  std::printf("%s %d %s (%s)\n", ok ? "PASS" : "FAIL", n, name, details.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

CatPtr load_cat(const std::string& file) { return parse_fincat(read_text(g_corpus + "/" + file)); }

Functor load_fun(const std::string& file, const CatPtr& src, const CatPtr& dst) {
  return bind_functor(parse_map_file(read_text(g_corpus + "/" + file)), src, dst);
}

int run_cli(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = "\"" + g_cli + "\" " + args;
  if (!stdout_file.empty()) cmd += " > \"" + stdout_file + "\"";
  cmd += " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) { return read_text(path); }

// is m invertible: some u with u.m and m.u both identities
bool invertible(const Category& c, int m) {
  for (int u = 0; u < c.n_morphisms(); ++u) {
    if (!c.composable(u, m) || !c.composable(m, u)) continue;
    if (c.compose(u, m) == c.identity[c.morphisms[m].src] &&
        c.compose(m, u) == c.identity[c.morphisms[m].tgt])
      return true;
  }
  return false;
}

const std::vector<std::string> kCorpusStems = {
    "empty",        "terminal", "discrete2", "discrete3", "walking_arrow",
    "chain2",       "chain3",   "parallel_pair", "walking_iso", "span",
    "cospan",       "idem_monoid", "z2",     "split_idem"};

std::vector<CatPtr> corpus_cats_small() {
  std::vector<CatPtr> cats;
  for (const auto& stem : kCorpusStems) cats.push_back(load_cat(stem + ".fincat"));
  return cats;
}

struct CuratedRow {
  TheoremInstance inst;
};

// curated instances for one table pair, from the corpus manifest
std::vector<TheoremInstance> curated_for(WeightClass psi, WeightClass phi, int bound) {
  json manifest = json::parse(slurp(g_corpus + "/instances.json"));
  std::vector<TheoremInstance> out;
  for (const json& e : manifest.at("instances")) {
    bool wanted = false;
    for (const json& p : e.at("pairs")) {
      auto ps = parse_weight_class(p.at(0).get<std::string>());
      auto ph = parse_weight_class(p.at(1).get<std::string>());
      if (ps && ph && *ps == psi && *ph == phi) wanted = true;
    }
    if (!wanted) continue;
    CatPtr src = load_cat(e.at("source").get<std::string>());
    CatPtr dst = load_cat(e.at("target").get<std::string>());
    Functor f = load_fun(e.at("functor").get<std::string>(), src, dst);
    out.push_back({e.at("id").get<std::string>(), f, psi, phi, bound});
  }
  return out;
}

//--------------------------------------------------------------------------
// 1: over all complete lattices with at most 5 elements and ALL monotone
// maps between them, a brute-force right-adjoint search agrees with join
// preservation, with zero exceptions, in under five minutes.
void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  auto lattices = enumerate_lattices(5);
  long long maps = 0, adjoints = 0, exceptions = 0;
  for (const PosetPtr& p : lattices)
    for (const PosetPtr& q : lattices)
      for (const PosetMap& f : enumerate_monotone_maps(p, q)) {
        ++maps;
        bool brute = brute_force_right_adjoint(f).has_value();
        bool joins = is_join_preserving(f).ok;
        if (brute != joins) ++exceptions;
        if (brute) ++adjoints;
        // the two packaged procedures must concur as well
        if (galois_right_adjoint(f).right.has_value() != brute) ++exceptions;
        if (presentable_aft_check(f) != true) ++exceptions;
      }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << lattices.size() << " lattices, " << maps << " monotone maps, " << adjoints
    << " adjoints, " << exceptions << " exceptions, " << static_cast<int>(secs) << "s";
  report(1, "poset-adjoint-criterion-exhaustive", exceptions == 0 && maps > 0 && secs < 300.0,
         d.str());
}

//--------------------------------------------------------------------------
// 2: for every supported (psi, phi) row, at least 200 generated instances
// plus the handcrafted corpus all report agreement between the two sides.
void criterion_2() {
  long long total = 0, agreements = 0, prefails = 0;
  std::ostringstream d;
  bool ok = true;
  for (const TablePair& row : table_pairs()) {
    GenProfile prof;
    prof.psi = row.psi;
    prof.phi = row.phi;
    prof.size_bound = row.default_bound;
    prof.count = 400;
    auto curated = curated_for(row.psi, row.phi, row.default_bound);
    GeneratedSuite suite = generate_instances(0, prof, curated);
    long long row_total = 0, row_agree = 0, row_pre = 0;
    for (const TheoremInstance& inst : suite.instances) {
      try {
        DaftRecord rec = verify_daft(inst);
        ++row_total;
        if (rec.agreement) ++row_agree;
      } catch (const PreconditionFailure&) {
        ++row_pre;  // excluded from agreement accounting by design
      }
    }
    ok = ok && row_total >= 200 + static_cast<long long>(curated.size()) - row_pre &&
         row_agree == row_total;
    total += row_total;
    agreements += row_agree;
    prefails += row_pre;
    d << row.row_name << "=" << row_agree << "/" << row_total << " ";
  }
  d << "precondition-excluded=" << prefails;
  report(2, "daft-agreement-all-rows", ok && agreements == total, d.str());
}

//--------------------------------------------------------------------------
// 3: the canonical separation: collapsing two points onto one is
// discrete-class admissible (a multiadjoint) but has no right adjoint; the
// (connected, discrete) biconditional still holds on it.
void criterion_3() {
  CatPtr d2 = load_cat("discrete2.fincat"), pt = load_cat("terminal.fincat");
  Functor collapse = load_fun("collapse_discrete2.fun", d2, pt);
  bool multi = is_phi_admissible(collapse, WeightClass::Discrete).overall;
  bool adjoint = find_right_adjoint(collapse).has_value();
  bool empty_adm = is_phi_admissible(collapse, WeightClass::Empty).overall;
  DaftRecord rec = verify_daft({"sep", collapse, WeightClass::Connected, WeightClass::Discrete, 5});
  std::ostringstream d;
  d << "discrete-admissible=" << multi << " right-adjoint=" << adjoint
    << " empty-admissible=" << empty_adm << " daft-agreement=" << rec.agreement << " lhs="
    << rec.lhs << " rhs=" << rec.rhs;
  report(3, "multiadjoint-separation", multi && !adjoint && !empty_adm && rec.agreement && rec.lhs,
         d.str());
}

//--------------------------------------------------------------------------
// 4: the mixed composition of adjunctions. Every hypothesis-satisfying pair
// composes into a verified adjunction (>= 100 pairs); every violating pair
// raises a hypothesis failure naming the offending 2-cell (>= 10 pairs).
void criterion_4() {
  auto cats = corpus_cats_small();
  // pool of adjunctions grouped by the shared source of their left adjoints
  std::vector<Adjunction> pool;
  for (const CatPtr& y : cats)
    for (const CatPtr& x : cats)
      for (const Functor& f : enumerate_functors(y, x))
        if (auto adj = find_right_adjoint(f)) pool.push_back(*adj);

  long long satisfied = 0, violating = 0, compose_fail = 0, mislabel = 0;
  for (const Adjunction& first : pool)
    for (const Adjunction& second : pool) {
      if (!same_category(first.left.src, second.left.src)) continue;
      // manual hypothesis precheck, independent of the construction
      const Category& x = *first.left.dst;
      bool counit_ok = true;
      for (int xo = 0; xo < x.n_objects() && counit_ok; ++xo)
        if (!invertible(x, first.counit.comp[xo])) counit_ok = false;
      const Category& z = *second.left.dst;
      bool theta_ok = true;
      for (int zo = 0; zo < z.n_objects() && theta_ok; ++zo) {
        int ry = second.right.omap[zo];
        int theta = second.left.mmap[first.unit.comp[ry]];
        if (!invertible(z, theta)) theta_ok = false;
      }
      if (counit_ok && theta_ok) {
        ++satisfied;
        try {
          Adjunction out = compose_adjunctions_mixed(first, second);
          if (!verify_adjunction(out).ok) ++compose_fail;
        } catch (const Error&) {
          ++compose_fail;
        }
      } else {
        ++violating;
        try {
          compose_adjunctions_mixed(first, second);
          ++mislabel;  // should have refused
        } catch (const HypothesisFailure& e) {
          bool named = (e.cell == "counit" && !counit_ok) ||
                       (e.cell == "whiskered-unit" && !theta_ok);
          if (!named) ++mislabel;
        } catch (const Error&) {
          ++mislabel;
        }
      }
    }
  std::ostringstream d;
  d << "pairs-satisfying=" << satisfied << " violating=" << violating
    << " compose-failures=" << compose_fail << " mislabeled=" << mislabel;
  report(4, "mixed-composition-lemma",
         satisfied >= 100 && violating >= 10 && compose_fail == 0 && mislabel == 0, d.str());
}

//--------------------------------------------------------------------------
// 5: three independent decision procedures for "has a right adjoint" agree
// on every functor between the small corpus categories.
void criterion_5() {
  auto cats = corpus_cats_small();
  long long functors = 0, adjoints = 0, mismatches = 0;
  for (const CatPtr& a : cats)
    for (const CatPtr& b : cats)
      for (const Functor& f : enumerate_functors(a, b)) {
        ++functors;
        bool brute = oracle::has_right_adjoint_brute(f);
        bool comma = find_right_adjoint(f).has_value();
        bool elements = is_phi_admissible(f, WeightClass::Empty).overall;
        if (brute != comma || brute != elements) ++mismatches;
        if (brute) ++adjoints;
      }
  std::ostringstream d;
  d << functors << " functors, " << adjoints << " with right adjoint, " << mismatches
    << " mismatches";
  report(5, "adjoint-oracle-equivalence", functors == 775 && mismatches == 0, d.str());
}

//--------------------------------------------------------------------------
// 6: the one-directional lemma (admissible implies cocontinuous) and
// closure of admissibility under composition, across generated suites.
void criterion_6() {
  long long lemma_checked = 0, lemma_violations = 0;
  long long closure_checked = 0, closure_violations = 0;
  for (const TablePair& row : table_pairs()) {
    GenProfile prof;
    prof.psi = row.psi;
    prof.phi = row.phi;
    prof.size_bound = row.default_bound;
    prof.count = 200;
    GeneratedSuite suite = generate_instances(0, prof);
    std::vector<const TheoremInstance*> valid;
    for (const TheoremInstance& inst : suite.instances) {
      try {
        ++lemma_checked;
        if (!verify_admissible_implies_cocontinuous(inst.f, inst.psi, inst.phi, inst.size_bound))
          ++lemma_violations;
        valid.push_back(&inst);
      } catch (const PreconditionFailure&) {
        --lemma_checked;
      }
    }
    for (const TheoremInstance* f : valid)
      for (const TheoremInstance* g : valid) {
        if (!same_category(f->f.dst, g->f.src)) continue;
        ++closure_checked;
        if (!admissible_closed_under_composition_check(f->f, g->f, row.phi)) ++closure_violations;
      }
  }
  std::ostringstream d;
  d << "lemma=" << lemma_checked - lemma_violations << "/" << lemma_checked
    << " closure=" << closure_checked - closure_violations << "/" << closure_checked;
  report(6, "admissibility-lemma-and-closure",
         lemma_violations == 0 && closure_violations == 0 && lemma_checked > 0 &&
             closure_checked > 0,
         d.str());
}

//--------------------------------------------------------------------------
// 7: cocompleteness decomposes over the two shape-enumerable rows on the
// exhaustive small-category suite plus the corpus.
void criterion_7() {
  std::vector<CatPtr> suite = all_categories(4);
  for (const auto& stem : kCorpusStems) suite.push_back(load_cat(stem + ".fincat"));
  long long checked = 0, violations = 0;
  for (const CatPtr& c : suite) {
    if (!cocompleteness_decomposition_check(c, WeightClass::Finite, WeightClass::Filtered, 4))
      ++violations;
    if (!cocompleteness_decomposition_check(c, WeightClass::Connected, WeightClass::Discrete, 5))
      ++violations;
    checked += 2;
  }
  std::ostringstream d;
  d << suite.size() << " categories, " << checked << " decompositions, " << violations
    << " violations";
  report(7, "cocompleteness-decomposition", violations == 0, d.str());
}

//--------------------------------------------------------------------------
// 8: the command-line tool is deterministic: identical seeds and inputs give
// byte-identical reports, and embedded counterexamples replay to the same
// verdict.
void criterion_8() {
  fs::path tmp = fs::path("acceptance_scratch");
  fs::create_directories(tmp);
  std::string r1 = (tmp / "r1.json").string(), r2 = (tmp / "r2.json").string();

  // identical argv both times (the report echoes its command line), stdout
  // captured by the shell; count 120 reaches past the deterministic lattice
  // prefix so the report holds genuinely non-admissible instances to replay
  std::string daft_args = "daft --psi connected --phi discrete --seed 5 --count 120 --json";
  int e1 = run_cli(daft_args, r1);
  int e2 = run_cli(daft_args, r2);
  bool daft_same = e1 == 0 && e2 == 0 && slurp(r1) == slurp(r2);

  std::string pa = "poset-aft \"" + g_corpus + "/diamond.poset\" \"" + g_corpus +
                   "/chain2.poset\" \"" + g_corpus + "/galois_diamond_chain2.fun\" --json";
  int p1 = run_cli(pa, (tmp / "p1.json").string());
  int p2 = run_cli(pa, (tmp / "p2.json").string());
  bool poset_same =
      p1 == 0 && p2 == 0 && slurp((tmp / "p1.json").string()) == slurp((tmp / "p2.json").string());

  // replay: pull an embedded non-admissible instance back out of the report
  // and let the tool re-decide it from files
  bool replay_ok = false;
  json rep = json::parse(slurp(r1));
  for (const json& inst : rep.at("result").at("instances")) {
    if (inst.contains("precondition_failed") || inst.at("admissible").get<bool>()) continue;
    write_text((tmp / "replay-src.fincat").string(),
               inst.at("source").at("fincat").get<std::string>());
    write_text((tmp / "replay-tgt.fincat").string(),
               inst.at("target").at("fincat").get<std::string>());
    std::string fun = inst.at("functor").at("fun").get<std::string>();
    // the embedded headers name the original stems; rename for the new files
    std::istringstream in(fun);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("source ", 0) == 0) out << "source replay-src\n";
      else if (line.rfind("target ", 0) == 0) out << "target replay-tgt\n";
      else out << line << "\n";
    }
    write_text((tmp / "replay.fun").string(), out.str());
    int rc = run_cli("admissible \"" + (tmp / "replay-src.fincat").string() + "\" \"" +
                     (tmp / "replay-tgt.fincat").string() + "\" \"" +
                     (tmp / "replay.fun").string() + "\" --phi discrete --quiet");
    replay_ok = rc == 1;  // the non-admissible verdict replays as exit 1
    break;
  }

  std::ostringstream d;
  d << "daft-bytes-identical=" << daft_same << " poset-bytes-identical=" << poset_same
    << " counterexample-replay=" << replay_ok;
  report(8, "cli-determinism-and-replay", daft_same && poset_same && replay_ok, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") g_cli = argv[i + 1];
    else if (flag == "--corpus") g_corpus = argv[i + 1];
  }
  if (g_cli.empty() || g_corpus.empty()) {
    std::fprintf(stderr, "usage: acceptance --cli <binary> --corpus <dir>\n");
    return 2;
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::printf("ALL CRITERIA PASS\n");
    return 0;
  }
  std::printf("%d CRITERIA FAILED\n", g_failures);
  return 1;
}
