// rigidlab: command-line front end.
//
//   rigidlab gen <family> --d D [--n N] [--seed S] [--out F] [--coloring-out C]
//   rigidlab color file.scx [--a 2,1,1] [--seed S] [--out C]
//   rigidlab rigid file.scx [--sparse C --a 1,1,1] [--trials K] [--seed S] [--json F]
//   rigidlab srdims file.scx [--coloring C --a ...] [--seed S] [--json F]
//   rigidlab verify <claim-id|all> [--seed S] [--trials K] [--json F]
//   rigidlab list-claims [--json F]
//
// Exit codes: 0 success (including warn-only verdicts), 1 an exact claim
// failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigidlab/rigidlab.hpp"

namespace {

using namespace rigidlab;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

void emit_coloring(const ColorMap& k, const std::string& path) {
  if (path.empty() || path == "-") {
    write_coloring(std::cout, k);
    return;
  }
  save_coloring(path, k);
}

/// The all-1 coloring, which makes (κ, (d)) the generic full-support case.
ColorMap single_color(const Complex& c) {
  ColorMap k{{}, 1};
  for (Vertex v : c.vertices()) k.color[v] = 1;
  return k;
}

struct GenArgs {
  std::string family;
  int d = 3;
  int n = 0;
  std::uint64_t seed = 0;
  bool arbitrary_gamma = false;
  std::string out, coloring_out;
};

int run_gen(const GenArgs& a) {
  Complex c;
  std::optional<ColorMap> k;
  if (a.family == "simplex") {
    c = simplex_boundary(a.d);
    k = ColorMap{{}, a.d + 1};
    for (Vertex v : c.vertices()) k->color[v] = v;
  } else if (a.family == "cross") {
    auto x = cross_polytope_boundary(a.d);
    c = x.complex;
    k = x.coloring;
  } else if (a.family == "stacked") {
    c = stacked_sphere(a.d, a.n ? a.n : a.d + 1, a.seed);
  } else if (a.family == "stacked-cross") {
    auto x = stacked_cross_polytopal_sphere(a.d, a.n ? a.n : 2 * a.d, a.seed, !a.arbitrary_gamma);
    c = x.complex;
    if (!a.arbitrary_gamma) k = x.coloring;
  } else if (a.family == "subdivided") {
    auto s = subdivide_all_facets(stacked_sphere(a.d, a.n ? a.n : a.d + 1, a.seed));
    c = s.complex;
    k = ColorMap{{}, 2};
    for (Vertex v : s.original) k->color[v] = 1;
    for (Vertex v : s.apices) k->color[v] = 2;
  } else {
    throw UsageError("unknown family '" + a.family + "' (simplex|cross|stacked|stacked-cross|subdivided)");
  }
  if (a.out.empty() || a.out == "-") write_scx(std::cout, c);
  else save_scx(a.out, c);
  if (!a.coloring_out.empty()) {
    if (!k) throw UsageError("family '" + a.family + "' has no canonical coloring");
    emit_coloring(*k, a.coloring_out);
  }
  std::cerr << "f-vector " << to_json(f_vector(c)).dump() << " h-vector " << to_json(h_vector(c)).dump() << '\n';
  return kExitOk;
}

struct ColorArgs {
  std::string file;
  std::vector<int> a;
  std::uint64_t seed = 0;
  std::string out;
};

int run_color(const ColorArgs& a) {
  const Complex c = load_scx(a.file);
  const auto res = find_proper_coloring(c, a.seed);
  if (!res.ok()) {
    if (res.status == ColoringStatus::node_limit) std::cerr << "coloring search hit its node limit\n";
    else std::cerr << "no proper " << c.dim() + 1 << "-coloring exists\n";
    return kExitFail;
  }
  ColorMap k = canonical_colors(*res.coloring);
  if (!a.a.empty()) {
    k = merge_colors(k, a.a);
    if (!verify_a_coloring(c, k, a.a)) {
      std::cerr << "merged coloring is not an a-coloring\n";
      return kExitFail;
    }
  }
  emit_coloring(k, a.out);
  return kExitOk;
}

struct RigidArgs {
  std::string file, sparse;
  std::vector<int> a;
  int trials = 3;
  std::uint64_t seed = 0;
  std::string json;
};

int run_rigid(const RigidArgs& a) {
  const Complex c = load_scx(a.file);
  const int d = c.dim() + 1;
  const Graph g = graph_of(c);
  SupportMap l;
  if (!a.sparse.empty()) {
    if (a.a.empty()) throw UsageError("--sparse needs --a");
    const ColorMap k = load_coloring(a.sparse);
    if (!verify_a_coloring(c, k, a.a)) throw UsageError("coloring is not an a-coloring of the complex");
    l = from_coloring(k, a.a);
  } else {
    l = free_support(g.vertices, d);
  }
  const auto v = is_sparse_rigid(g, l, a.trials, a.seed);
  Json j;
  j["schema"] = kReportSchema;
  const Json best = to_json(v.best);
  for (const auto& [key, val] : best.items()) j[key] = val;
  j["trials"] = v.trials;
  j["note"] = v.note;
  if (!a.json.empty()) emit(j, a.json);
  (a.json == "-" ? std::cerr : std::cout) << (v.rigid ? "rigid" : "not rigid (no witness)") << ": rank " << v.best.rank << ", stresses "
            << v.best.stress_dim << ", trials " << v.trials << '\n';
  return kExitOk;
}

struct SrArgs {
  std::string file, coloring;
  std::vector<int> a;
  std::uint64_t seed = 0;
  std::string json;
};

int run_srdims(const SrArgs& a) {
  const Complex c = load_scx(a.file);
  const int d = c.dim() + 1;
  ColorMap k = single_color(c);
  std::vector<int> blocks{d};
  if (!a.coloring.empty()) {
    if (a.a.empty()) throw UsageError("--coloring needs --a");
    k = load_coloring(a.coloring);
    blocks = a.a;
  }
  const auto cand = colored_sop(c, k, blocks, a.seed);
  const auto omega = omega_injective(c, cand);
  Json j;
  j["schema"] = kReportSchema;
  j["a"] = to_json(blocks);
  j["lsop_seed"] = *cand.seed;
  j["h_vector"] = to_json(h_vector(c));
  j["graded_dims"] = to_json(omega.dims);
  j["omega"] = to_json(omega);
  if (!a.json.empty()) emit(j, a.json);
  (a.json == "-" ? std::cerr : std::cout) << "dim1 " << omega.dims.degree1 << ", dim2 " << omega.dims.degree2 << ", dim2 with omega "
            << omega.dims.degree2_mod_omega << ", x omega " << (omega.injective ? "injective" : "not injective")
            << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string claim;
  std::uint64_t seed = 0;
  int trials = 3;
  std::string json;
};

int run_verify(const VerifyArgs& a) {
  std::vector<const Claim*> selected;
  if (a.claim == "all") {
    for (const auto& c : claim_registry()) selected.push_back(&c);
  } else {
    selected.push_back(&find_claim(a.claim));
  }
  Json reports = Json::array();
  bool failed = false;
  // Keep stdout parseable when the JSON goes there.
  std::ostream& log = a.json == "-" ? std::cerr : std::cout;
  for (const Claim* c : selected) {
    const auto o = run_claim(*c, a.seed, a.trials);
    failed = failed || o.failed > 0;
    log << status_name(o.verdict()) << ' ' << c->id << " (" << o.passed << " pass, " << o.warned
              << " warn, " << o.failed << " fail)\n";
    reports.push_back(o.report);
  }
  if (!a.json.empty()) emit(selected.size() == 1 ? reports.front() : reports, a.json);
  return failed ? kExitFail : kExitOk;
}

int run_list(const std::string& json) {
  if (!json.empty()) {
    emit(list_claims(), json);
    return kExitOk;
  }
  for (const auto& c : claim_registry()) std::cout << c.id << '\t' << c.statement << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigidlab: combinatorial rigidity workbench"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a complex");
  g->add_option("family", gen.family, "simplex|cross|stacked|stacked-cross|subdivided")->required();
  g->add_option("--d", gen.d, "dimension parameter d (the complex has dimension d-1)")->check(CLI::Range(1, 64));
  g->add_option("--n", gen.n, "target vertex count");
  g->add_option("--seed", gen.seed, "seed");
  g->add_flag("--arbitrary-gamma", gen.arbitrary_gamma, "stacked-cross: do not preserve colors when gluing");
  g->add_option("--out", gen.out, "output .scx (default stdout)");
  g->add_option("--coloring-out", gen.coloring_out, "write the canonical coloring here");

  ColorArgs col;
  auto* c = app.add_subcommand("color", "find a proper coloring, optionally merged into an a-coloring");
  c->add_option("file", col.file, "input .scx")->required()->check(CLI::ExistingFile);
  c->add_option("--a", col.a, "block sizes, e.g. 2,1,1")->delimiter(',');
  c->add_option("--seed", col.seed, "seed");
  c->add_option("--out", col.out, "output coloring (default stdout)");

  RigidArgs rig;
  auto* r = app.add_subcommand("rigid", "test infinitesimal rigidity of the 1-skeleton");
  r->add_option("file", rig.file, "input .scx")->required()->check(CLI::ExistingFile);
  r->add_option("--sparse", rig.sparse, "coloring file for (kappa,a)-sparse sampling")->check(CLI::ExistingFile);
  r->add_option("--a", rig.a, "block sizes")->delimiter(',');
  r->add_option("--trials", rig.trials, "sampling attempts")->check(CLI::PositiveNumber);
  r->add_option("--seed", rig.seed, "seed");
  r->add_option("--json", rig.json, "JSON report path");

  SrArgs sr;
  auto* s = app.add_subcommand("srdims", "graded dimensions and x omega injectivity at a colored s.o.p.");
  s->add_option("file", sr.file, "input .scx")->required()->check(CLI::ExistingFile);
  s->add_option("--coloring", sr.coloring, "coloring file")->check(CLI::ExistingFile);
  s->add_option("--a", sr.a, "block sizes")->delimiter(',');
  s->add_option("--seed", sr.seed, "seed");
  s->add_option("--json", sr.json, "JSON report path");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "check a registered claim (or all) and report");
  v->add_option("claim", ver.claim, "claim id or 'all'")->required();
  v->add_option("--seed", ver.seed, "seed");
  v->add_option("--trials", ver.trials, "sampling attempts per sparse-rigidity test");
  v->add_option("--json", ver.json, "JSON report path ('-' for stdout)");

  std::string list_json;
  auto* l = app.add_subcommand("list-claims", "list the claim registry");
  l->add_option("--json", list_json, "JSON output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*c) return run_color(col);
    if (*r) return run_rigid(rig);
    if (*s) return run_srdims(sr);
    if (*v) return run_verify(ver);
    if (*l) return run_list(list_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
