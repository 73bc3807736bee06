#include "orbitope/cli.hpp"

#include "orbitope/error.hpp"
#include "orbitope/grpalg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

namespace orbitope::cli {

namespace {

struct Options {
  std::string group;
  std::string family;
  std::string point;
  std::string test_point;
  std::string graph;
  std::string c_matrix;
  std::uint64_t seed = 1;
  std::size_t samples = 8;
  bool exact = false;
  bool sampled = false;
  std::size_t max_order = 10000;
  std::size_t threads = 1;
  bool emit_matrices = false;
  bool perm_rep = false;
  int max_dim = admissible_dim_cap;
  int n = 0;
  int d = 0;
};

// What a handler hands back: the payload, its mode object and the raw inputs for the digest.
struct Outcome {
  Json result;
  Json mode = Json{{"kind", "exact"}};
};

class Context {
 public:
  explicit Context(const Options& o) : o_(o) {}

  const std::string& input(const std::string& path) {
    inputs_.push_back(read_file(path));
    return inputs_.back();
  }
  void literal(const std::string& text) { inputs_.push_back(text); }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const Options& options() const { return o_; }

  Json load_json(const std::string& path) {
    try {
      return Json::parse(input(path));
    } catch (const Json::exception& e) {
      throw ParseError("'" + path + "': " + e.what());
    }
  }
  MatrixGroup group() { return group_from_json(load_json(o_.group), o_.max_order); }
  VectorQ point(const MatrixGroup& g) {
    literal(o_.point);
    VectorQ v = parse_point(o_.point);
    if (v.size() != g.dim()) throw ParseError("point has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(g.dim()));
    return v;
  }
  GenericOptions generic_options() const {
    GenericOptions g;
    g.mode = o_.exact ? GenericMode::Exact : (o_.sampled ? GenericMode::MonteCarlo : GenericMode::Auto);
    g.samples = o_.samples;
    g.seed = o_.seed;
    g.threads = o_.threads;
    g.max_order = o_.max_order;
    return g;
  }

 private:
  const Options& o_;
  std::vector<std::string> inputs_;
};

std::string str(const Integer& x) { return x.str(); }

template <class Check>
Json generators_json(const PermGroup& g, Check verified) {
  Json out = Json::array();
  for (const auto& p : g.generators())
    out.push_back(Json{{"images", to_json(p)}, {"cycles", p.cycle_str()}, {"verified", verified(p)}});
  return out;
}

// Permutation p of G preserves the colors c(g^-1 h).
template <class Scalar>
bool preserves(const MatrixGroup& g, const std::vector<Scalar>& row, const Permutation& p) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (!(row[static_cast<std::size_t>(g.mul(g.inv(p(a)), p(b)))] == row[static_cast<std::size_t>(g.mul(g.inv(a), b))]))
        return false;
  return true;
}

Outcome cmd_linsym(Context& ctx) {
  const auto& o = ctx.options();
  Json j;
  try {
    j = Json::parse(ctx.input(o.family));
  } catch (const Json::exception& e) {
    throw ParseError("'" + o.family + "': " + e.what());
  }
  const MatrixQ v = family_from_json(j);
  const auto w = color_matrix<Rational>(v);
  const PermGroup g = linsym_group<Rational>(v);
  const FiberInfo fib = fibers(v);
  Outcome out;
  out.result["points"] = v.cols();
  out.result["distinct_points"] = fib.distinct;
  out.result["order"] = str(g.order());
  out.result["distinct_image_order"] = str(g.order() / fib.kernel_order);
  out.result["generators"] = generators_json(g, [&](const Permutation& p) { return is_linear_symmetry(w, p); });
  if (o.emit_matrices) {
    Json mats = Json::array();
    for (const auto& p : g.generators()) mats.push_back(to_json(realize(v, p)));
    out.result["realizations"] = mats;
  }
  return out;
}

Outcome cmd_orbit_sym(Context& ctx) {
  const MatrixGroup g = ctx.group();
  const VectorQ v = ctx.point(g);
  const PermGroup sym = affsym_group(g, v);
  const VectorQ c = barycenter(g, v);
  const auto row = orbit_color_row(g, v - c);
  const auto stab = stabilizer_in_group(g, v);
  const FiberInfo fib = fibers(orbit_family(g, v));
  Outcome out;
  out.result["group_order"] = g.order();
  out.result["barycenter"] = to_json(c);
  out.result["stabilizer_size"] = stab.size();
  out.result["order"] = str(sym.order());
  out.result["vertices"] = fib.distinct;
  out.result["vertex_action_order"] = str(sym.order() / fib.kernel_order);
  out.result["additional_symmetries"] = sym.order() / fib.kernel_order > Integer(g.order()) / Integer(stab.size());
  out.result["generators"] = generators_json(sym, [&](const Permutation& p) { return preserves(g, row, p); });
  if (ctx.options().emit_matrices) {
    Json maps = Json::array();
    for (const auto& p : sym.generators()) {
      const MatrixQ a = realize_affine(g, v, p);
      maps.push_back(Json{{"linear", to_json(a)}, {"translation", to_json(VectorQ(c - a * c))}});
    }
    out.result["realizations"] = maps;
  }
  return out;
}

Json generic_mode(const GenericResult& r) {
  if (r.exact) return Json{{"kind", "exact"}};
  return Json{{"kind", r.verified ? "verified" : "probabilistic"}, {"seed", r.seed}, {"samples", r.samples}};
}

Outcome cmd_generic_sym(Context& ctx) {
  const MatrixGroup g = ctx.group();
  const GenericResult r = generic_linsym(g, ctx.generic_options());
  std::vector<MultiPoly> row;
  if (r.verified) row = symbolic_color_row(g);
  Outcome out;
  out.result["group_order"] = g.order();
  out.result["order"] = str(r.group.order());
  out.result["additional_symmetries"] = r.group.order() > g.order();
  out.result["generators"] =
      generators_json(r.group, [&](const Permutation& p) { return r.verified && preserves(g, row, p); });
  if (!r.exact) {
    Json pts = Json::array();
    for (const auto& p : r.sample_points) pts.push_back(to_json(p));
    out.result["sample_points"] = pts;
  }
  out.mode = generic_mode(r);
  return out;
}

Outcome cmd_is_generic(Context& ctx) {
  const MatrixGroup g = ctx.group();
  const VectorQ v = ctx.point(g);
  const auto opts = ctx.generic_options();
  const GenericResult gen = generic_linsym(g, opts);
  const GenericReport r = is_generic(g, v, opts);
  Outcome out;
  out.result["full_dimensional"] = r.full_dimensional;
  out.result["trivial_stabilizer"] = r.trivial_stabilizer;
  out.result["symmetry_match"] = r.symmetry_match;
  out.result["generic"] = r.generic();
  out.result["generic_order"] = str(r.generic_order);
  if (r.full_dimensional) out.result["point_order"] = str(r.point_order);
  out.mode = generic_mode(gen);
  return out;
}

Outcome cmd_closure_check(Context& ctx) {
  const auto& o = ctx.options();
  const MatrixGroup g = ctx.group();
  const VectorQ v = ctx.point(g);
  std::optional<VectorQ> w;
  if (!o.test_point.empty()) {
    ctx.literal(o.test_point);
    w = parse_point(o.test_point);
    if (w->size() != g.dim()) throw ParseError("test point has the wrong dimension");
  }
  const ClosureReport r = generic_closure_check(g, v, w, ctx.generic_options());
  Outcome out;
  out.result["group_order"] = g.order();
  out.result["hat_order"] = r.hat_order;
  out.result["test_point"] = to_json(r.test_point);
  out.result["test_order"] = str(r.test_order);
  out.result["closed"] = r.closed;
  out.result["certified"] = r.certified;
  if (o.emit_matrices) {
    Json mats = Json::array();
    for (const auto& m : r.hat_generators) mats.push_back(to_json(m));
    out.result["hat_generators"] = mats;
  }
  if (!r.certified) out.mode = Json{{"kind", "probabilistic"}, {"seed", o.seed}, {"samples", 1}};
  return out;
}

Outcome cmd_reppoly_sym(Context& ctx) {
  const MatrixGroup g = ctx.group();
  const auto gamma = gamma_character(g);
  const PermGroup sym = reppoly_symgroup(g);
  std::vector<Permutation> big;
  bool left = true;
  bool right = true;
  for (int x : g.generators()) {
    big.push_back(g.left_mult(x));
    big.push_back(g.right_mult(x));
    left = left && sym.contains(big[big.size() - 2]);
    right = right && sym.contains(big.back());
  }
  big.push_back(g.inversion());
  const bool inversion = sym.contains(g.inversion());
  const PermGroup generated(g.order(), big);
  Outcome out;
  Json gj = Json::object();
  for (std::size_t i = 0; i < gamma.size(); ++i) gj[std::to_string(i)] = gamma[i].convert_to<long long>();
  out.result["group_order"] = g.order();
  out.result["gamma"] = gj;
  out.result["order"] = str(sym.order());
  out.result["contains_left"] = left;
  out.result["contains_right"] = right;
  out.result["contains_inversion"] = inversion;
  out.result["left_right_inversion_order"] = str(generated.order());
  out.result["bigsym_lower_bound"] = str(bigsym_lower_bound(g));
  out.result["generators"] = generators_json(sym, [&](const Permutation& p) { return preserves(g, gamma, p); });
  return out;
}

Json element_json(const GroupAlgebraElement& a) {
  Json c = Json::array();
  for (const auto& q : a.coefficients()) c.push_back(to_string(q));
  return c;
}

Outcome cmd_idempotent(Context& ctx) {
  const MatrixGroup g = ctx.group();
  const VectorQ v = ctx.point(g);
  const auto s = splitting_idempotent(g, v);
  Outcome out;
  out.result["coefficients"] = element_json(s.f);
  out.result["idempotent"] = s.certificate.idempotent;
  out.result["fixes_point"] = s.certificate.fixes_point;
  out.result["orthogonal"] = s.certificate.orthogonal;
  out.result["central"] = is_central(s.f);
  return out;
}

Outcome cmd_inversion_test(Context& ctx) {
  const MatrixGroup g = ctx.group();
  const VectorQ v = ctx.point(g);
  Outcome out;
  out.result["inversion_symmetry"] = has_inversion_symmetry(g, v);
  return out;
}

Outcome cmd_gale_check(Context& ctx) {
  const MatrixGroup g = ctx.group();
  const VectorQ v = ctx.point(g);
  const auto s = splitting_idempotent(g, v);
  const GaleReport r = gale_check(s.f);
  Outcome out;
  out.result["idempotent"] = element_json(s.f);
  out.result["complement"] = element_json(gale_complement(s.f));
  out.result["order_f"] = str(r.order_f);
  out.result["order_complement"] = str(r.order_complement);
  out.result["same_group"] = r.same_group;
  return out;
}

Json class_t_json(const ClassTReport& r) {
  return Json{{"enough_vertices", r.enough_vertices},
              {"complement_is_tree", r.complement_is_tree},
              {"cover_exceeds_three", r.cover_exceeds_three},
              {"in_class", r.in_class()}};
}

Graph load_graph(Context& ctx) { return parse_graph(ctx.input(ctx.options().graph)); }

Outcome cmd_cutpoly(Context& ctx) {
  const Graph graph = load_graph(ctx);
  if (graph.component_count() != 1) throw PreconditionError("graph must be connected");
  const CutSpace space(graph);
  const PermGroup adm = admissible_perms(graph, ctx.options().max_dim);
  const auto cuts = space.enumerate();
  Outcome out;
  out.result["vertices"] = graph.vertex_count();
  out.result["edges"] = graph.edge_count();
  out.result["cut_dimension"] = space.dimension();
  out.result["cut_sets"] = space.size();
  out.result["admissible_order"] = str(adm.order());
  out.result["vertex_stabilizer_trivial"] = adm.order() == 1;
  out.result["agl_order"] = str(Integer(space.size()) * adm.order());
  out.result["graph_automorphism_order"] = str(graph_automorphisms(graph).order());
  out.result["class_t"] = class_t_json(class_t_check(graph));
  out.result["generators"] = generators_json(adm, [&](const Permutation& p) {
    if (p(0) != 0) return false;
    for (std::size_t a = 0; a < cuts.size(); ++a)
      for (std::size_t b = 0; b < cuts.size(); ++b)
        if ((cuts[static_cast<std::size_t>(p(static_cast<int>(a)))] ^ cuts[static_cast<std::size_t>(p(static_cast<int>(b)))]).count() !=
            (cuts[a] ^ cuts[b]).count())
          return false;
    return true;
  });
  return out;
}

Outcome cmd_elab2_sym(Context& ctx) {
  const GF2Matrix c = parse_gf2_matrix(ctx.input(ctx.options().c_matrix));
  const MatrixGroup d = diag_rep(c);
  const PermGroup sym = reppoly_symgroup(d);
  std::vector<int> gamma;
  for (int x = 0; x < d.order(); ++x) gamma.push_back(hamming_gamma(c, static_cast<std::uint64_t>(x)));
  const auto computed = gamma_character(d);
  bool agree = true;
  for (std::size_t x = 0; x < gamma.size(); ++x) agree = agree && computed[x] == gamma[x];
  Outcome out;
  out.result["rows"] = c.rows();
  out.result["cols"] = c.cols();
  out.result["ideal"] = is_ideal_character(c);
  out.result["faithful"] = c.rank() == c.cols();
  out.result["group_order"] = d.order();
  out.result["order"] = str(sym.order());
  out.result["additional_symmetries"] = sym.order() > d.order();
  out.result["gamma"] = gamma;
  out.result["gamma_matches_hamming"] = agree;
  if (ctx.options().perm_rep) out.result["permutation_rep_order"] = str(reppoly_symgroup(permutation_rep(c)).order());
  out.result["generators"] = generators_json(sym, [&](const Permutation& p) { return preserves(d, gamma, p); });
  return out;
}

Outcome cmd_class_t_check(Context& ctx) {
  const Graph graph = load_graph(ctx);
  const ClassTReport r = class_t_check(graph);
  Outcome out;
  out.result = class_t_json(r);
  if (r.in_class()) {
    const CutSizeReport b = cut_size_bounds_check(graph);
    out.result["max_principal_cut"] = b.max_principal;
    out.result["min_nonprincipal_cut"] = b.min_nonprincipal;
    out.result["bounds_hold"] = b.bounds_hold;
    out.result["no_four_cycle"] = b.no_four_cycle;
    out.result["all_cuts_bipartite"] = b.all_bipartite;
  }
  return out;
}

Outcome cmd_caterpillar(Context& ctx) {
  const int n = ctx.options().n;
  ctx.literal(std::to_string(n));
  const Graph complement = caterpillar_complement(n);
  Outcome out;
  out.result["n"] = n;
  out.result["tree"] = to_json(caterpillar_tree(n));
  out.result["complement"] = to_json(complement);
  out.result["class_t"] = class_t_json(class_t_check(complement));
  return out;
}

Outcome cmd_count_ideal_bound(Context& ctx) {
  const auto& o = ctx.options();
  ctx.literal(std::to_string(o.n) + "," + std::to_string(o.d));
  const IdealOrbitBound b = count_ideal_orbit_bound(o.n, o.d);
  Outcome out;
  out.result["n"] = o.n;
  out.result["d"] = o.d;
  out.result["count"] = str(b.count);
  out.result["gl_order"] = str(b.gl_order);
  out.result["forced_stabilizer"] = b.forced_stabilizer;
  return out;
}

Json error_json(const std::string& command, const std::string& kind, const std::string& message) {
  return Json{{"schema", 1}, {"command", command}, {"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

RunReport dispatch(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact symmetry groups of orbit polytopes", "orbitope"};
  app.require_subcommand(1);
  using Handler = std::function<Outcome(Context&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto group_opts = [&](CLI::App* s, bool point) {
    s->add_option("--group", o.group, "group JSON {\"dim\", \"generators\"}")->required();
    if (point) s->add_option("--point", o.point, "point, e.g. \"2,1\"")->required();
    s->add_option("--max-order", o.max_order, "closure bound")->capture_default_str();
  };
  auto generic_opts = [&](CLI::App* s) {
    auto* exact = s->add_flag("--exact", o.exact, "symbolic computation over Q(X)");
    s->add_option("--samples", o.samples, "Monte-Carlo sample count")->capture_default_str()->excludes(exact)->each(
        [&](const std::string&) { o.sampled = true; });
    s->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    s->add_option("--threads", o.threads, "sampling threads")->capture_default_str();
  };

  auto* linsym = add("linsym", "linear symmetry group of a vector family", cmd_linsym);
  linsym->add_option("--family", o.family, "family JSON {\"dim\", \"columns\"}")->required();
  linsym->add_flag("--emit-matrices", o.emit_matrices, "include realizing matrices");

  auto* orbit_sym = add("orbit-sym", "affine symmetries of P(G, v)", cmd_orbit_sym);
  group_opts(orbit_sym, true);
  orbit_sym->add_flag("--emit-matrices", o.emit_matrices, "include realizing affine maps");

  auto* generic = add("generic-sym", "generic orbit symmetry group LinSym((gX)_g)", cmd_generic_sym);
  group_opts(generic, false);
  generic_opts(generic);

  auto* is_gen = add("is-generic", "decide whether v is a generic point", cmd_is_generic);
  group_opts(is_gen, true);
  generic_opts(is_gen);

  auto* closure = add("closure-check", "generic closedness of the symmetry group of P(G, v)", cmd_closure_check);
  group_opts(closure, true);
  closure->add_option("--test-point", o.test_point, "generic point for the closed group (sampled if absent)");
  closure->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  closure->add_flag("--emit-matrices", o.emit_matrices, "include generators of the realized group");

  auto* reppoly = add("reppoly-sym", "affine symmetries of the representation polytope", cmd_reppoly_sym);
  group_opts(reppoly, false);

  auto* idem = add("idempotent", "splitting idempotent of v", cmd_idempotent);
  group_opts(idem, true);
  auto* inv = add("inversion-test", "is g v -> g^-1 v an affine symmetry", cmd_inversion_test);
  group_opts(inv, true);
  auto* gale = add("gale-check", "LinSym of the orbits of f and 1 - f", cmd_gale_check);
  group_opts(gale, true);

  auto* cutpoly = add("cutpoly", "affine symmetries of a cut polytope", cmd_cutpoly);
  cutpoly->add_option("--graph", o.graph, "edge list or graph JSON")->required();
  cutpoly->add_option("--max-dim", o.max_dim, "cut-space dimension cap (at most 20)")->capture_default_str();

  auto* elab = add("elab2-sym", "representation polytope of diag((-1)^{Cx})", cmd_elab2_sym);
  elab->add_option("--c-matrix", o.c_matrix, "GF(2) matrix, one 0/1 row per line")->required();
  elab->add_flag("--perm-rep", o.perm_rep, "also run the permutation representation");

  auto* classt = add("class-t-check", "membership in class T and the cut-size bounds", cmd_class_t_check);
  classt->add_option("--graph", o.graph, "edge list or graph JSON")->required();

  auto* cat = add("caterpillar", "complement of the asymmetric caterpillar tree", cmd_caterpillar);
  cat->add_option("n", o.n, "vertex count (>= 7)")->required();

  auto* bound = add("count-ideal-bound", "binom(2^n - 1, d) versus |GL(n, 2)|", cmd_count_ideal_bound);
  bound->add_option("--n", o.n, "rank")->required();
  bound->add_option("--d", o.d, "dimension")->required();

  RunReport report;
  std::string command = args.empty() ? "" : args.front();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    report.text = app.help();
    for (auto& [sub, h] : commands)
      if (sub->parsed()) report.text = sub->help();
    return report;
  } catch (const CLI::ParseError& e) {
    report.exit_code = parse;
    report.json = error_json(command, "parse", e.what());
    return report;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    command = sub->get_name();
    Context ctx(o);
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome outcome = handler(ctx);
      std::string digest_input = command;
      for (const auto& in : ctx.inputs()) digest_input += '\0' + in;
      const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      report.json = Json{{"schema", 1},
                         {"command", command},
                         {"input_digest", fnv1a_hex(digest_input)},
                         {"result", std::move(outcome.result)},
                         {"mode", std::move(outcome.mode)},
                         {"timing_ms", elapsed.count()}};
    } catch (const Error& e) {
      static const char* names[] = {"parse", "precondition", "resource", "internal"};
      static const int codes[] = {parse, precondition, resource, internal};
      const auto k = static_cast<int>(e.kind());
      report.exit_code = codes[k];
      report.json = error_json(command, names[k], e.what());
    } catch (const std::exception& e) {
      report.exit_code = internal;
      report.json = error_json(command, "internal", e.what());
    }
    break;
  }
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const RunReport r = dispatch(args);
  if (!r.text.empty()) {
    out << r.text;
    return r.exit_code;
  }
  out << r.json.dump(2) << '\n';
  if (r.exit_code != ok && r.json.contains("error")) err << "error: " << r.json["error"]["message"].get<std::string>() << '\n';
  return r.exit_code;
}

}  // namespace orbitope::cli
