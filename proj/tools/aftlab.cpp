// aftlab — decide adjointness, admissibility, cocontinuity, and cocompleteness
// for functors between finite categories and monotone maps between finite
// posets, at desk scale.
//
// Exit codes: 0 the property holds (or every checked instance agrees),
//             1 it fails and the report carries a counterexample,
//             2 the input is malformed or violates a precondition.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "aftlab/enumerate.hpp"
#include "aftlab/report.hpp"

namespace fs = std::filesystem;
using namespace aftlab;

namespace {

struct Output {
  bool json = false;
  bool quiet = false;
  bool timing = false;
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, Output& out, bool with_out_file = true) {
  cmd->add_flag("--json", out.json, "emit the full JSON report on stdout");
  cmd->add_flag("--quiet", out.quiet, "suppress stdout (exit code only)");
  cmd->add_flag("--timing", out.timing, "include wall-clock timing in the report");
  if (with_out_file) cmd->add_option("--out", out.out_path, "also write the JSON report to this file");
}

// Human mode prints the scalar facts of the result; witnesses stay in --json.
void print_human(const Json& root) {
  const Json& result = root["result"];
  for (auto it = result.begin(); it != result.end(); ++it) {
    const Json& v = it.value();
    if (v.is_boolean())
      std::cout << it.key() << ": " << (v.get<bool>() ? "true" : "false") << "\n";
    else if (v.is_number_integer())
      std::cout << it.key() << ": " << v.get<long long>() << "\n";
    else if (v.is_string())
      std::cout << it.key() << ": " << v.get<std::string>() << "\n";
  }
  for (const Json& n : root["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
}

void emit(ReportBuilder& rb, const Output& out, double elapsed_ms) {
  if (out.timing) rb.set_timing(elapsed_ms);
  if (!out.quiet) {
    if (out.json)
      std::cout << rb.dump();
    else
      print_human(rb.root);
  }
  if (!out.out_path.empty()) write_text(out.out_path, rb.dump());
}

struct LoadedCat {
  CatPtr cat;
  std::string name;  // file stem; .fun headers must cite it
};

LoadedCat load_fincat(ReportBuilder& rb, const std::string& path) {
  std::string text = read_text(path);
  rb.add_input(path, text);
  return {parse_fincat(text), file_stem(path)};
}

Functor load_functor(ReportBuilder& rb, const std::string& path, const LoadedCat& src,
                     const LoadedCat& dst) {
  std::string text = read_text(path);
  rb.add_input(path, text);
  ParsedMap pm = parse_map_file(text);
  std::vector<std::string> issues;
  if (pm.source_name != src.name)
    issues.push_back(cat("functor header says source '", pm.source_name, "', expected '", src.name, "'"));
  if (pm.target_name != dst.name)
    issues.push_back(cat("functor header says target '", pm.target_name, "', expected '", dst.name, "'"));
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return bind_functor(pm, src.cat, dst.cat);
}

WeightClass need_class(const std::string& name, const char* flag) {
  auto cls = parse_weight_class(name);
  if (!cls) throw Error(cat("unknown weight class '", name, "' for ", flag,
                            " (one of: empty, absolute, discrete, connected, finite, filtered, small)"));
  return *cls;
}

std::string echo_command(int argc, char** argv) {
  std::vector<std::string> parts(argv, argv + argc);
  return join_ids(parts, " ");
}

int thread_budget(int jobs_flag) {
  if (jobs_flag > 0) return jobs_flag;
  if (const char* env = std::getenv("AFTLAB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// ---------------------------------------------------------------------------
// check-adjoint

int run_check_adjoint(ReportBuilder& rb, const std::string& a_path, const std::string& b_path,
                      const std::string& f_path) {
  LoadedCat a = load_fincat(rb, a_path);
  LoadedCat b = load_fincat(rb, b_path);
  Functor f = load_functor(rb, f_path, a, b);
  RightAdjointSearch search = search_right_adjoint(f);
  Json result{{"has_right_adjoint", search.adjunction.has_value()}};
  if (search.adjunction) {
    result["adjunction"] = json_adjunction(*search.adjunction, a.name, b.name);
  } else {
    result["failing_object"] = b.cat->objects[*search.failing_object];
    result["counterexample"] = cat("the comma category (", file_stem(f_path), " | ",
                                   b.cat->objects[*search.failing_object], ") has no terminal object");
  }
  rb.root["result"] = result;
  return search.adjunction ? 0 : 1;
}

// ---------------------------------------------------------------------------
// classify

int run_classify(ReportBuilder& rb, const std::string& base_path, const std::string& psh_path,
                 const std::string& cls_name) {
  LoadedCat base = load_fincat(rb, base_path);
  std::string text = read_text(psh_path);
  rb.add_input(psh_path, text);
  Presheaf w = parse_presheaf(text, base.cat);
  WeightClass cls = need_class(cls_name, "--class");
  ClassifyResult res = classify(w, cls);
  rb.root["result"] = json_classify(res);
  rb.add_note(res.note);
  return res.verdict ? 0 : 1;
}

// ---------------------------------------------------------------------------
// admissible / cocontinuous

int run_admissible(ReportBuilder& rb, const std::string& a_path, const std::string& b_path,
                   const std::string& f_path, const std::string& phi_name) {
  LoadedCat a = load_fincat(rb, a_path);
  LoadedCat b = load_fincat(rb, b_path);
  Functor f = load_functor(rb, f_path, a, b);
  WeightClass phi = need_class(phi_name, "--phi");
  AdmissibilityReport rep = is_phi_admissible(f, phi);
  rb.root["result"] = json_admissibility(rep, *b.cat);
  std::vector<std::string> seen;
  for (const ClassifyResult& r : rep.per_object)
    if (!r.note.empty() && std::find(seen.begin(), seen.end(), r.note) == seen.end()) {
      seen.push_back(r.note);
      rb.add_note(r.note);
    }
  return rep.overall ? 0 : 1;
}

int run_cocontinuous(ReportBuilder& rb, const std::string& a_path, const std::string& b_path,
                     const std::string& f_path, const std::string& psi_name, int bound) {
  LoadedCat a = load_fincat(rb, a_path);
  LoadedCat b = load_fincat(rb, b_path);
  Functor f = load_functor(rb, f_path, a, b);
  WeightClass psi = need_class(psi_name, "--psi");
  if (bound <= 0) bound = 4;
  CocontinuityReport rep = is_cocontinuous(f, psi, bound);
  rb.root["result"] = json_cocontinuity(rep);
  rb.add_note(rep.note);
  return rep.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// daft

struct CorpusInstance {
  TheoremInstance inst;
};

std::vector<TheoremInstance> load_corpus_instances(ReportBuilder& rb, const std::string& dir,
                                                   WeightClass psi, WeightClass phi, int bound) {
  std::string manifest_path = (fs::path(dir) / "instances.json").string();
  std::string text = read_text(manifest_path);
  rb.add_input(manifest_path, text);
  Json manifest = Json::parse(text);
  std::vector<TheoremInstance> out;
  for (const Json& entry : manifest["instances"]) {
    bool applicable = false;
    for (const Json& pair : entry["pairs"])
      if (pair[0].get<std::string>() == to_string(psi) && pair[1].get<std::string>() == to_string(phi))
        applicable = true;
    if (!applicable) continue;
    LoadedCat src = load_fincat(rb, (fs::path(dir) / entry["source"].get<std::string>()).string());
    LoadedCat dst = load_fincat(rb, (fs::path(dir) / entry["target"].get<std::string>()).string());
    Functor f = load_functor(rb, (fs::path(dir) / entry["functor"].get<std::string>()).string(), src, dst);
    out.push_back({entry["id"].get<std::string>(), std::move(f), psi, phi, bound});
  }
  return out;
}

int run_daft(ReportBuilder& rb, const std::string& psi_name, const std::string& phi_name,
             std::uint32_t seed, int count, int bound, const std::string& corpus, int jobs_flag) {
  WeightClass psi = need_class(psi_name, "--psi");
  WeightClass phi = need_class(phi_name, "--phi");
  const TablePair* pair = find_table_pair(psi, phi);
  if (!pair)
    throw UnsupportedPair(cat("(", to_string(psi), ", ", to_string(phi), ") is not a supported row"));
  if (bound <= 0) bound = pair->default_bound;

  std::vector<TheoremInstance> curated;
  if (!corpus.empty()) curated = load_corpus_instances(rb, corpus, psi, phi, bound);

  GenProfile profile;
  profile.psi = psi;
  profile.phi = phi;
  profile.size_bound = bound;
  profile.count = count;
  GeneratedSuite suite = generate_instances(seed, profile, curated);
  const int n = static_cast<int>(suite.instances.size());

  struct Row {
    Json json;
    bool disagreement = false;
    bool precondition_failed = false;
    std::string degeneracy;
  };
  std::vector<Row> rows(suite.instances.size());
  std::atomic<int> cursor{0};
  auto worker = [&]() {
    for (;;) {
      int i = cursor.fetch_add(1);
      if (i >= n) return;
      const TheoremInstance& inst = suite.instances[i];
      try {
        DaftRecord rec = verify_daft(inst);
        rows[i].json = json_daft_record(inst.id, inst, rec);
        rows[i].disagreement = !rec.agreement;
        rows[i].degeneracy = rec.degeneracy;
      } catch (const PreconditionFailure& e) {
        rows[i].json = Json{{"instance", inst.id},
                            {"psi", to_string(inst.psi)},
                            {"phi", to_string(inst.phi)},
                            {"size_bound", inst.size_bound},
                            {"precondition_failed", Json{{"side", e.side}, {"detail", e.detail}}},
                            {"source", json_category(*inst.f.src)},
                            {"target", json_category(*inst.f.dst)},
                            {"functor", json_functor(inst.f, "source", "target")}};
        rows[i].precondition_failed = true;
      }
    }
  };
  int jobs = thread_budget(jobs_flag);
  if (jobs <= 1 || n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<int> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return suite.instances[x].id < suite.instances[y].id;
  });

  Json instances = Json::array();
  int disagreements = 0, prefail = 0;
  std::vector<std::string> notes;
  for (int i : order) {
    instances.push_back(rows[i].json);
    if (rows[i].disagreement) ++disagreements;
    if (rows[i].precondition_failed) ++prefail;
    if (!rows[i].degeneracy.empty() &&
        std::find(notes.begin(), notes.end(), rows[i].degeneracy) == notes.end())
      notes.push_back(rows[i].degeneracy);
  }
  for (const std::string& note : notes) rb.add_note(note);

  rb.root["result"] =
      Json{{"row", pair->row_name},
           {"psi", to_string(psi)},
           {"phi", to_string(phi)},
           {"size_bound", bound},
           {"seed", seed},
           {"instances_checked", n},
           {"curated", static_cast<int>(curated.size())},
           {"generated", n - static_cast<int>(curated.size())},
           {"agreements", n - disagreements - prefail},
           {"disagreements", disagreements},
           {"precondition_failures", prefail},
           {"pool", Json{{"categories", suite.pool_categories},
                         {"preorders", suite.pool_preorders},
                         {"rejected", suite.pool_rejected},
                         {"lattices", suite.lattice_members}}},
           {"instances", instances}};
  return disagreements == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// compose-adjunctions

Adjunction synthesize_adjunction(const Functor& left, const Functor& right, const char* which) {
  Functor rl = compose_functors(right, left);
  Functor lr = compose_functors(left, right);
  Functor id_src = identity_functor(left.src);
  Functor id_dst = identity_functor(left.dst);
  for (const NatTrans& unit : enumerate_nats(id_src, rl))
    for (const NatTrans& counit : enumerate_nats(lr, id_dst)) {
      Adjunction cand{left, right, unit, counit};
      if (verify_adjunction(cand).ok) return cand;
    }
  throw ValidationError({cat(which, ": no unit/counit satisfy the triangle identities; the pair is not adjoint")});
}

int run_compose(ReportBuilder& rb, const std::vector<std::string>& paths) {
  // paths: X Y Z l1 r1 l2 r2, with l1: Y -> X, l2: Y -> Z
  LoadedCat x = load_fincat(rb, paths[0]);
  LoadedCat y = load_fincat(rb, paths[1]);
  LoadedCat z = load_fincat(rb, paths[2]);
  Functor l1 = load_functor(rb, paths[3], y, x);
  Functor r1 = load_functor(rb, paths[4], x, y);
  Functor l2 = load_functor(rb, paths[5], y, z);
  Functor r2 = load_functor(rb, paths[6], z, y);
  Adjunction first = synthesize_adjunction(l1, r1, "first adjunction");
  Adjunction second = synthesize_adjunction(l2, r2, "second adjunction");
  rb.root["result"] = Json{{"first", json_adjunction(first, y.name, x.name)},
                           {"second", json_adjunction(second, y.name, z.name)}};
  try {
    Adjunction composite = compose_adjunctions_mixed(first, second);
    rb.root["result"]["composite"] = json_adjunction(composite, z.name, x.name);
    rb.root["result"]["hypotheses_hold"] = true;
    return 0;
  } catch (const HypothesisFailure& e) {
    rb.root["result"]["hypotheses_hold"] = false;
    rb.root["result"]["failing_cell"] = Json{{"cell", e.cell}, {"object", e.object}};
    rb.root["result"]["counterexample"] = e.what();
    return 1;
  }
}

// ---------------------------------------------------------------------------
// poset-aft

int run_poset_aft(ReportBuilder& rb, const std::string& p_path, const std::string& q_path,
                  const std::string& f_path) {
  std::string ptext = read_text(p_path), qtext = read_text(q_path), ftext = read_text(f_path);
  rb.add_input(p_path, ptext);
  rb.add_input(q_path, qtext);
  rb.add_input(f_path, ftext);
  PosetPtr p = parse_poset(ptext);
  PosetPtr q = parse_poset(qtext);
  ParsedMap pm = parse_map_file(ftext);
  std::vector<std::string> issues;
  if (pm.source_name != file_stem(p_path))
    issues.push_back(cat("map header says source '", pm.source_name, "', expected '", file_stem(p_path), "'"));
  if (pm.target_name != file_stem(q_path))
    issues.push_back(cat("map header says target '", pm.target_name, "', expected '", file_stem(q_path), "'"));
  if (!issues.empty()) throw ValidationError(std::move(issues));
  PosetMap f = bind_monotone(pm, p, q);

  GaloisResult res = galois_right_adjoint(f);
  bool sides_agree = presentable_aft_check(f);
  Json result{{"source", json_poset(*p)},
              {"target", json_poset(*q)},
              {"join_preservation", json_join_preservation(res.joins, *p)},
              {"has_right_adjoint", res.right.has_value()},
              {"check", sides_agree ? "join-preservation and adjoint search agree"
                                    : "join-preservation and adjoint search disagree"}};
  if (res.right)
    result["right_adjoint"] = json_monotone(*res.right, file_stem(q_path), file_stem(p_path));
  rb.root["result"] = result;
  if (!sides_agree) throw Error("internal: the two decision procedures disagree");
  return res.right ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gen-corpus

int run_gen_corpus(ReportBuilder& rb, const std::string& out_dir, const std::string& psi_name,
                   const std::string& phi_name, std::uint32_t seed, int count, int bound) {
  WeightClass psi = need_class(psi_name, "--psi");
  WeightClass phi = need_class(phi_name, "--phi");
  const TablePair* pair = find_table_pair(psi, phi);
  if (!pair)
    throw UnsupportedPair(cat("(", to_string(psi), ", ", to_string(phi), ") is not a supported row"));
  if (bound <= 0) bound = pair->default_bound;
  GenProfile profile;
  profile.psi = psi;
  profile.phi = phi;
  profile.size_bound = bound;
  profile.count = count;
  GeneratedSuite suite = generate_instances(seed, profile);
  fs::create_directories(out_dir);
  Json manifest{{"schema", "aftlab.corpus/1"},
                {"psi", to_string(psi)},
                {"phi", to_string(phi)},
                {"seed", seed},
                {"size_bound", bound},
                {"instances", Json::array()}};
  for (const TheoremInstance& inst : suite.instances) {
    std::string src_name = cat(inst.id, "-src"), dst_name = cat(inst.id, "-tgt");
    write_text((fs::path(out_dir) / cat(src_name, ".fincat")).string(), write_fincat(*inst.f.src));
    write_text((fs::path(out_dir) / cat(dst_name, ".fincat")).string(), write_fincat(*inst.f.dst));
    write_text((fs::path(out_dir) / cat(inst.id, ".fun")).string(),
               write_functor(inst.f, src_name, dst_name));
    manifest["instances"].push_back({{"id", inst.id},
                                     {"source", cat(src_name, ".fincat")},
                                     {"target", cat(dst_name, ".fincat")},
                                     {"functor", cat(inst.id, ".fun")},
                                     {"pairs", Json::array({Json::array({to_string(psi), to_string(phi)})})}});
  }
  write_text((fs::path(out_dir) / "instances.json").string(), manifest.dump(2) + "\n");
  rb.root["result"] = Json{{"directory", out_dir},
                           {"instances_written", static_cast<int>(suite.instances.size())},
                           {"files_written", static_cast<int>(suite.instances.size()) * 3 + 1}};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adjointness, admissibility, and cocompleteness checks for finite categories"};
  app.require_subcommand(1);

  Output out;
  std::string a_path, b_path, f_path, cls_name, psi_name, phi_name, corpus, out_dir;
  std::vector<std::string> compose_paths;
  int bound = 0, count = 200, jobs = 0;  // bound 0 = per-row default (4 for plain cocontinuity)
  std::uint32_t seed = 0;

  CLI::App* cadj = app.add_subcommand("check-adjoint", "decide whether a functor has a right adjoint");
  cadj->add_option("source", a_path, "source .fincat")->required();
  cadj->add_option("target", b_path, "target .fincat")->required();
  cadj->add_option("functor", f_path, "functor .fun")->required();
  add_output_flags(cadj, out);

  CLI::App* ccls = app.add_subcommand("classify", "classify a presheaf against a weight class");
  ccls->add_option("base", a_path, "base category .fincat")->required();
  ccls->add_option("presheaf", b_path, "presheaf .psh")->required();
  ccls->add_option("--class", cls_name, "weight class name")->required();
  add_output_flags(ccls, out);

  CLI::App* cadm = app.add_subcommand("admissible", "decide relative adjointness (admissibility)");
  cadm->add_option("source", a_path, "source .fincat")->required();
  cadm->add_option("target", b_path, "target .fincat")->required();
  cadm->add_option("functor", f_path, "functor .fun")->required();
  cadm->add_option("--phi", phi_name, "weight class for the slices")->required();
  add_output_flags(cadm, out);

  CLI::App* ccoc = app.add_subcommand("cocontinuous", "decide bounded preservation of class colimits");
  ccoc->add_option("source", a_path, "source .fincat")->required();
  ccoc->add_option("target", b_path, "target .fincat")->required();
  ccoc->add_option("functor", f_path, "functor .fun")->required();
  ccoc->add_option("--psi", psi_name, "weight class for the shapes")->required();
  ccoc->add_option("--bound", bound, "max shape morphisms (default: 4)");
  add_output_flags(ccoc, out);

  CLI::App* cdaft = app.add_subcommand("daft", "verify the adjoint correspondence over generated instances");
  cdaft->add_option("--psi", psi_name, "cocontinuity weight class")->required();
  cdaft->add_option("--phi", phi_name, "admissibility weight class")->required();
  cdaft->add_option("--seed", seed, "generator seed (default 0)");
  cdaft->add_option("--count", count, "generated instances (default 200)");
  cdaft->add_option("--bound", bound, "max shape morphisms (default: per-row stabilization bound)");
  cdaft->add_option("--corpus", corpus, "directory with instances.json and its files");
  cdaft->add_option("--jobs", jobs, "worker threads (default AFTLAB_JOBS or 1)");
  add_output_flags(cdaft, out);

  CLI::App* ccomp = app.add_subcommand("compose-adjunctions",
                                       "compose a right adjoint with a left adjoint (mixed composition)");
  ccomp->add_option("files", compose_paths,
                    "X.fincat Y.fincat Z.fincat l1.fun r1.fun l2.fun r2.fun  (l1: Y->X, l2: Y->Z)")
      ->expected(7);
  add_output_flags(ccomp, out);

  CLI::App* cpos = app.add_subcommand("poset-aft", "right adjoints of monotone maps between complete lattices");
  cpos->add_option("source", a_path, "source .poset")->required();
  cpos->add_option("target", b_path, "target .poset")->required();
  cpos->add_option("map", f_path, "monotone map .fun (object lines)")->required();
  add_output_flags(cpos, out);

  CLI::App* cgen = app.add_subcommand("gen-corpus", "write a generated instance suite to a directory");
  cgen->add_option("--out", out_dir, "output directory")->required();
  cgen->add_option("--psi", psi_name, "cocontinuity weight class")->required();
  cgen->add_option("--phi", phi_name, "admissibility weight class")->required();
  cgen->add_option("--seed", seed, "generator seed (default 0)");
  cgen->add_option("--count", count, "generated instances (default 200)");
  cgen->add_option("--bound", bound, "max shape morphisms (default: per-row stabilization bound)");
  add_output_flags(cgen, out, false);

  CLI11_PARSE(app, argc, argv);

  ReportBuilder rb(echo_command(argc, argv));
  auto started = std::chrono::steady_clock::now();
  try {
    int code = 2;
    if (cadj->parsed()) code = run_check_adjoint(rb, a_path, b_path, f_path);
    else if (ccls->parsed()) code = run_classify(rb, a_path, b_path, cls_name);
    else if (cadm->parsed()) code = run_admissible(rb, a_path, b_path, f_path, phi_name);
    else if (ccoc->parsed()) code = run_cocontinuous(rb, a_path, b_path, f_path, psi_name, bound);
    else if (cdaft->parsed()) code = run_daft(rb, psi_name, phi_name, seed, count, bound, corpus, jobs);
    else if (ccomp->parsed()) code = run_compose(rb, compose_paths);
    else if (cpos->parsed()) code = run_poset_aft(rb, a_path, b_path, f_path);
    else if (cgen->parsed()) code = run_gen_corpus(rb, out_dir, psi_name, phi_name, seed, count, bound);
    rb.root["verdict_code"] = code;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    emit(rb, out, ms);
    return code;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << diagnostic_label(e) << ": " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
