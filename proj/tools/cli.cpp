#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "edgeham/cw_pipeline.hpp"
#include "edgeham/error.hpp"
#include "edgeham/generators.hpp"
#include "edgeham/hyper_solver.hpp"
#include "edgeham/io.hpp"
#include "edgeham/oracle.hpp"
#include "edgeham/transforms.hpp"
#include "edgeham/tw_solver.hpp"
#include "edgeham/vc_kernel.hpp"

namespace edgeham::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int oracle_cap() {
  const char* env = std::getenv("EDGEHAM_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultEdgeHamCap;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 31) fail(ErrorCode::InvalidConfig, "EDGEHAM_ORACLE_CAP must be an integer in 0..31");
  return static_cast<int>(v);
}

int exit_for(Answer a) {
  switch (a) {
    case Answer::Yes:
      return kExitYes;
    case Answer::No:
      return kExitNo;
    case Answer::ProbablyNo:
      return kExitProbablyNo;
  }
  return kExitLibraryError;
}

struct SolveOptions {
  std::string problem = "path";
  std::string method = "auto";
  std::string input;
  std::string td;
  std::string cwe;
  std::string hitting_set;
  std::uint64_t seed = 0;
  double delta = 0.01;
  std::uint64_t max_rounds = 1'000'000;
  bool certificate = false;
};

struct Verdict {
  Answer answer = Answer::No;
  std::optional<EdgeSeq> cert;
  std::vector<std::string> notes;  // printed as comment lines
};

void print_verdict(std::ostream& out, const Verdict& v, const SolveOptions& o, const std::string& method, int m,
                   bool want_cert) {
  out << "s " << to_string(v.answer) << " problem=" << o.problem << " method=" << method << " edges=" << m << '\n';
  for (const auto& n : v.notes) out << "c " << n << '\n';
  if (want_cert && v.cert) out << serialize_edge_list(v.cert->order);
}

// Certificates for graphs with fewer than three edges, where the DES view
// does not apply.
Verdict tiny_cycle(const Graph& g) {
  Verdict v;
  EdgeSeq s{{}, Mode::Cycle};
  for (EdgeId e = 0; e < g.edge_count(); ++e) s.order.push_back(e);
  v.answer = validate_edge_sequence(g, s) ? Answer::Yes : Answer::No;
  if (v.answer == Answer::Yes) v.cert = s;
  return v;
}

Verdict cycle_by_td(const Graph& g, const TreeDecomposition& td) {
  if (g.edge_count() < 3) {
    if (!validate_td(g, td)) fail(ErrorCode::InvalidDecomposition, "decomposition does not fit the graph");
    return tiny_cycle(g);
  }
  const SolveResult r = des_dp(g, make_nice(g, td));
  Verdict v;
  v.answer = r.answer();
  if (r.is_yes()) v.cert = des_to_edge_cycle(g, r.des());
  v.notes.push_back("width " + std::to_string(td.width()) + " dp_states " + std::to_string(r.stats().nodes));
  return v;
}

Verdict path_by_td(const Graph& g) {
  Verdict v;
  if (g.edge_count() == 0) {
    v.answer = Answer::Yes;
    v.cert = EdgeSeq{{}, Mode::Path};
    return v;
  }
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    if (g.degree(a) == 0) continue;
    for (Vertex b = 0; b < g.vertex_count(); ++b) {
      if (a == b || g.degree(b) == 0) continue;
      const auto [h, trace] = ehp_to_ehc_gadget(g, a, b);
      const SolveResult r = des_dp(h, make_nice(h, min_fill_decomposition(h)));
      if (!r.is_yes()) continue;
      v.answer = Answer::Yes;
      v.cert = path_from_gadget_cycle(trace, des_to_edge_cycle(h, r.des()));
      v.notes.push_back("gadget anchors " + std::to_string(a + 1) + " " + std::to_string(b + 1));
      return v;
    }
  }
  v.answer = Answer::No;
  return v;
}

Verdict from_result(const SolveResult& r) {
  Verdict v;
  v.answer = r.answer();
  if (r.is_yes()) v.cert = r.edge_sequence();
  return v;
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  const Mode mode = o.problem == "cycle" ? Mode::Cycle : Mode::Path;
  const auto instance = parse_instance(read_file(o.input));
  const int cap = oracle_cap();
  const bool is_graph = std::holds_alternative<Graph>(instance);
  const int m = is_graph ? std::get<Graph>(instance).edge_count() : std::get<Hypergraph>(instance).edge_count();

  std::string method = o.method;
  if (method == "auto") {
    if (m <= cap) {
      method = "oracle";
    } else if (!is_graph) {
      method = "hyper";
    } else {
      method = o.cwe.empty() ? "tw" : "cw";
    }
  }
  if (!is_graph && method != "oracle" && method != "hyper") {
    throw UsageError("method " + method + " needs a graph input");
  }

  Verdict v;
  if (method == "oracle") {
    v = is_graph ? from_result(solve_edge_ham_exact(std::get<Graph>(instance), mode, cap))
                 : from_result(solve_edge_ham_exact(std::get<Hypergraph>(instance), mode, cap));
  } else if (method == "hyper") {
    if (mode != Mode::Path) throw UsageError("method hyper solves the path problem only");
    if (o.hitting_set.empty()) throw UsageError("method hyper needs --hitting-set");
    const Hypergraph h = is_graph ? Hypergraph::from_graph(std::get<Graph>(instance)) : std::get<Hypergraph>(instance);
    HyperSolveConfig cfg;
    cfg.delta = o.delta;
    cfg.max_rounds = o.max_rounds;
    cfg.seed = o.seed;
    cfg.oracle_cap = cap;
    const SolveResult r = decide_hyper_ehp(h, parse_vertex_list(o.hitting_set), cfg);
    v = from_result(r);
    v.notes.push_back("rounds " + std::to_string(r.stats().rounds));
  } else if (method == "vc") {
    if (mode != Mode::Path) throw UsageError("method vc solves the path problem only");
    const Graph& g = std::get<Graph>(instance);
    const std::vector<Vertex> cover = o.hitting_set.empty() ? two_approx_vc(g) : parse_vertex_list(o.hitting_set);
    const KernelTrace trace = kernelize(g, cover);
    v.notes.push_back("kernel edges " + std::to_string(trace.kernel.edge_count()) + " of " + std::to_string(m));
    const SolveResult r = solve_edge_ham_exact(trace.kernel, Mode::Path, cap);
    v.answer = r.answer();
    if (r.is_yes()) v.cert = lift_certificate(trace, r.edge_sequence());
  } else if (method == "tw") {
    const Graph& g = std::get<Graph>(instance);
    if (mode == Mode::Cycle) {
      v = cycle_by_td(g, o.td.empty() ? min_fill_decomposition(g) : parse_td(read_file(o.td), g));
    } else {
      if (!o.td.empty()) v.notes.push_back("--td ignored for the path problem");
      v = path_by_td(g);
    }
  } else if (method == "cw") {
    if (mode != Mode::Cycle) throw UsageError("method cw solves the cycle problem only");
    if (o.cwe.empty()) throw UsageError("method cw needs --cwe");
    const Graph& g = std::get<Graph>(instance);
    const CwExpr e = parse_cwe(read_file(o.cwe));
    if (!(eval_cwe(e).graph == g)) throw UsageError("the expression does not evaluate to the input graph");
    const PipelineReport rep = decide_ehc_cw(e);
    v.answer = rep.answer ? Answer::Yes : Answer::No;
    if (rep.rewrites.empty()) {
      if (g.edge_count() < 3) {
        v.cert = tiny_cycle(g).cert;
      } else if (rep.certificate) {
        v.cert = des_to_edge_cycle(g, *rep.certificate);
      }
    } else {
      v.notes.push_back("certificate refers to the rewritten graph and is not printed");
    }
    std::ostringstream os;
    os << "edges " << rep.edges_original << " -> " << rep.edges_after_big_joins << " -> " << rep.edges_after_bicliques
       << " rewrites " << rep.rewrites.size() << " labels " << rep.after_bicliques.label_budget << " width "
       << rep.decomposition_width;
    if (rep.gw_bound) os << " treewidth " << *rep.exact_treewidth << " bound " << *rep.gw_bound;
    v.notes.push_back(os.str());
  } else {
    throw UsageError("unknown method " + method);
  }
  print_verdict(out, v, o, method, m, o.certificate);
  return exit_for(v.answer);
}

int cmd_check(const std::string& kind, const std::string& input, const std::string& witness, std::ostream& out) {
  const std::string text = read_file(witness);
  std::string why;
  bool ok = false;
  if (kind == "td") {
    const Graph g = parse_graph(read_file(input));
    ok = validate_td(g, parse_td(text, g.vertex_count()), &why);
  } else if (kind == "des") {
    const Graph g = parse_graph(read_file(input));
    ok = validate_des(g, parse_des(text), &why);
  } else {
    const EdgeSeq s{parse_edge_list(text), kind == "cycle" ? Mode::Cycle : Mode::Path};
    const auto instance = parse_instance(read_file(input));
    try {
      ok = std::visit([&](const auto& x) { return validate_edge_sequence(x, s); }, instance);
      if (!ok) why = "consecutive edges do not share a vertex";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAPermutation) throw;
      why = e.what();
    }
  }
  out << "s " << (ok ? "valid" : "invalid") << " kind=" << kind << '\n';
  if (!ok && !why.empty()) out << "c " << why << '\n';
  return ok ? kExitYes : kExitNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge Hamiltonian path and cycle solvers", "edgeham"};
  app.require_subcommand(1);

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Decide an instance");
  solve->add_option("--problem", so.problem)->check(CLI::IsMember({"path", "cycle"}));
  solve->add_option("--method", so.method)->check(CLI::IsMember({"auto", "oracle", "vc", "tw", "cw", "hyper"}));
  solve->add_option("--input", so.input, "Graph or hypergraph file")->required();
  solve->add_option("--td", so.td, "Tree decomposition (tw, cycle)");
  solve->add_option("--cwe", so.cwe, "Clique-width expression (cw)");
  solve->add_option("--hitting-set", so.hitting_set, "1-based vertices, e.g. 1,4 (hyper; cover for vc)");
  solve->add_option("--seed", so.seed);
  solve->add_option("--delta", so.delta)->check(CLI::Range(0.0, 1.0));
  solve->add_option("--max-rounds", so.max_rounds)->check(CLI::PositiveNumber);
  solve->add_flag("--certificate", so.certificate, "Print the edge order after the verdict");

  std::string k_input, k_cover, k_output, k_trace;
  auto* kern = app.add_subcommand("kernelize", "Vertex-cover kernel for the path problem");
  kern->add_option("--input", k_input)->required();
  kern->add_option("--cover", k_cover, "1-based vertex cover")->required();
  kern->add_option("--output", k_output, "Kernel graph file")->required();
  kern->add_option("--trace", k_trace, "Trace file (JSON)")->required();

  std::string l_trace, l_cert;
  auto* lift = app.add_subcommand("lift", "Lift a kernel path back to the original graph");
  lift->add_option("--trace", l_trace)->required();
  lift->add_option("--kernel-cert", l_cert)->required();

  std::string r_to, r_input, r_output;
  int r_u = 1;
  int r_v = 2;
  auto* reduce = app.add_subcommand("reduce", "Path/cycle gadget transformation");
  reduce->add_option("--to", r_to)->required()->check(CLI::IsMember({"cycle", "path"}));
  reduce->add_option("--input", r_input)->required();
  reduce->add_option("--u", r_u, "1-based anchor (default 1)");
  reduce->add_option("--v", r_v, "1-based second anchor for --to cycle (default 2)");
  reduce->add_option("--output", r_output);

  std::string g_family;
  std::uint64_t g_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", g_family, "e.g. \"cycle 6\", \"gnm 10 15\", \"hyper_hs 10 2 12 4\"")->required();
  gen->add_option("--seed", g_seed);

  std::string c_kind, c_input, c_witness;
  auto* check = app.add_subcommand("check", "Validate a witness");
  check->add_option("--kind", c_kind)->required()->check(CLI::IsMember({"path", "cycle", "des", "td"}));
  check->add_option("--input", c_input)->required();
  check->add_option("--witness", c_witness)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(so, out);
    if (*kern) {
      const Graph g = parse_graph(read_file(k_input));
      const KernelTrace t = kernelize(g, parse_vertex_list(k_cover));
      write_file(k_output, serialize_graph(t.kernel));
      write_file(k_trace, serialize_trace(t));
      out << "s kernel edges=" << t.kernel.edge_count() << " original_edges=" << g.edge_count()
          << " deletions=" << t.deletions.size() << '\n';
      return kExitYes;
    }
    if (*lift) {
      const KernelTrace t = parse_trace(read_file(l_trace));
      const EdgeSeq lifted = lift_certificate(t, EdgeSeq{parse_edge_list(read_file(l_cert)), Mode::Path});
      out << "s lifted edges=" << lifted.order.size() << '\n' << serialize_edge_list(lifted.order);
      return kExitYes;
    }
    if (*reduce) {
      const Graph g = parse_graph(read_file(r_input));
      const auto [h, trace] = r_to == "cycle" ? ehp_to_ehc_gadget(g, r_u - 1, r_v - 1) : ehc_to_ehp_gadget(g, r_u - 1);
      std::ostringstream os;
      os << "c gadget to " << r_to << " anchors";
      for (Vertex a : trace.anchor) os << ' ' << a + 1;
      os << '\n' << serialize_graph(h);
      if (r_output.empty()) {
        out << os.str();
      } else {
        write_file(r_output, os.str());
      }
      return kExitYes;
    }
    if (*gen) {
      const GeneratedInstance gi = generate_family(g_family, g_seed);
      out << "c family " << gi.family << " seed " << gi.seed << '\n';
      if (!gi.planted.empty()) {
        out << "c planted";
        for (Vertex v : gi.planted) out << ' ' << v + 1;
        out << '\n';
      }
      out << std::visit(
          [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Graph>) {
              return serialize_graph(x);
            } else {
              return serialize_hypergraph(x);
            }
          },
          gi.instance);
      return kExitYes;
    }
    if (*check) return cmd_check(c_kind, c_input, c_witness, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitLibraryError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitUsage;
}

}  // namespace edgeham::cli
