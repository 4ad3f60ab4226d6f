#include "czc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "czc/ceresa.hpp"
#include "czc/fixtures.hpp"
#include "czc/graph_io.hpp"
#include "czc/minors.hpp"

namespace czc::cli {

using nlohmann::json;

nlohmann::json CommandReport::to_json() const {
  return {{"command", command}, {"inputs", inputs}, {"result", result}, {"exact", exact}};
}

namespace {

// --------------------------------------------------------------- rendering

json index_json(const IndexTriple& idx) { return json::array({idx[0], idx[1], idx[2]}); }

json coefficients_json(const CoefficientMap& m) {
  json out = json::array();
  for (const auto& [idx, p] : m)
    out.push_back({{"index", index_json(idx)}, {"poly", p.to_string()}});
  return out;
}

json certificate_json(const IntegerCertificate& cert) {
  json out = json::array();
  for (const auto& [idx, v] : cert)
    out.push_back({{"index", index_json(idx)}, {"value", integer_to_json(v)}});
  return out;
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

json rows_json(const std::vector<IntVector>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(vector_json(r));
  return out;
}

json matrix_json(const IntMatrix& M) { return rows_json(M.row_list()); }

json witness_json(const MultiGraph& G, const MinorWitness& w) {
  json branch = json::array();
  for (const auto& s : w.branch_sets) branch.push_back(s);
  return {{"pattern", to_string(w.pattern)},
          {"contracted", w.contracted},
          {"deleted", w.deleted},
          {"branch_sets", branch},
          {"replays", verify_minor_witness(G, w)}};
}

std::string hex(std::uint64_t h) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

json verdict_json(const MultiGraph& G, const TrivialityVerdict& v) {
  json out = {{"trivial", v.trivial},
              {"method", to_string(v.method)},
              {"certificate", certificate_json(v.certificate)},
              {"detail", v.detail},
              {"replay_hash", hex(v.replay_hash)}};
  if (!v.cube_certificate.empty()) out["cube_certificate"] = certificate_json(v.cube_certificate);
  if (v.minor) out["minor"] = witness_json(G, *v.minor);
  return out;
}

std::string scalar_text(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string render_text(const CommandReport& r) {
  std::string out = r.command + "\n";
  for (const auto& [key, value] : r.result.items()) {
    const bool grid = value.is_array() && !value.empty() &&
                      std::all_of(value.begin(), value.end(), [](const json& row) {
                        return row.is_array() &&
                               std::none_of(row.begin(), row.end(),
                                            [](const json& x) { return x.is_structured(); });
                      });
    if (grid) {
      out += key + ":\n";
      for (const auto& row : value) {
        std::string line;
        for (const auto& x : row) line += (line.empty() ? "  " : "  ") + scalar_text(x);
        out += line + "\n";
      }
    } else if (value.is_structured()) {
      out += key + ": " + value.dump() + "\n";
    } else {
      out += key + ": " + scalar_text(value) + "\n";
    }
  }
  return out;
}

// ------------------------------------------------------------------ inputs

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(csv);
  while (std::getline(in, field, ',')) {
    field.erase(0, field.find_first_not_of(" \t"));
    field.erase(field.find_last_not_of(" \t") + 1);
    out.push_back(field);
  }
  return out;
}

std::vector<Integer> parse_lengths(const std::string& csv) {
  std::vector<Integer> out;
  for (const auto& f : split_csv(csv)) {
    Integer v;
    if (f.empty() || v.set_str(f, 10) != 0) throw ParseError("bad length '" + f + "' in --lengths");
    out.push_back(v);
  }
  return out;
}

std::set<EdgeId> parse_tree(const std::string& csv) {
  std::set<EdgeId> out;
  for (const auto& f : split_csv(csv)) {
    try {
      std::size_t used = 0;
      out.insert(std::stoi(f, &used));
      if (used != f.size()) throw std::invalid_argument(f);
    } catch (const std::exception&) {
      throw ParseError("bad edge id '" + f + "' in --tree");
    }
  }
  return out;
}

TropicalCurve curve_for(const GraphFile& file, const std::string& lengths) {
  if (!lengths.empty()) return TropicalCurve::positional(file.graph, parse_lengths(lengths));
  if (file.has_all_lengths()) return TropicalCurve(file.graph, file.lengths);
  throw PreconditionError("edge lengths needed: pass --lengths or give every edge a length");
}

CeresaCocycle load_cocycle(const std::string& source, const MultiGraph& G) {
  static const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return fixtures::builtin_cocycle(source.substr(prefix.size()), G);
  json j;
  try {
    j = json::parse(read_file(source));
  } catch (const json::parse_error& ex) {
    throw ParseError("cocycle file '" + source + "': " + ex.what());
  }
  CeresaCocycle v = fixtures::cocycle_from_json(j);
  if (!(v.context().graph() == G))
    throw PreconditionError("cocycle graph differs from the graph file");
  return v;
}

// -------------------------------------------------------------- invocation

struct Invocation {
  std::string command;
  std::string graph_file;
  std::string cocycle;
  std::string lengths;
  std::string pattern;
  std::string tree;
  std::string mode = "image2";
  int max_edges = 6;
  unsigned threads = 0;
  bool json = false;
  std::string help;
};

Invocation parse_invocation(const std::vector<std::string>& args) {
  Invocation inv;
  CLI::App app{"Ceresa-Zharkov triviality toolkit", "czc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", inv.json, "machine-readable JSON report");

  auto* qmatrix = app.add_subcommand("qmatrix", "polynomial period matrix Q of a graph");
  qmatrix->add_option("graph", inv.graph_file, "graph file")->required();
  qmatrix->add_option("--tree", inv.tree, "spanning tree edge ids, comma separated");

  auto* classify_cmd = app.add_subcommand("classify", "hyperelliptic type and triviality verdict");
  classify_cmd->add_option("graph", inv.graph_file, "graph file")->required();

  auto* cz = app.add_subcommand("cz-test", "algebraic triviality test for a cocycle");
  cz->add_option("graph", inv.graph_file, "graph file")->required();
  cz->add_option("--cocycle", inv.cocycle, "cocycle JSON file, builtin:K4 or builtin:L3")->required();
  cz->add_option("--lengths", inv.lengths, "edge lengths in edge order; selects the curve test");
  cz->add_option("--mode", inv.mode, "graph test: image2 or psi")
      ->check(CLI::IsMember({"image2", "psi"}));

  auto* minor = app.add_subcommand("minor", "search for a K4 or L3 minor");
  minor->add_option("graph", inv.graph_file, "graph file")->required();
  minor->add_option("--pattern", inv.pattern, "K4 or L3")
      ->required()
      ->check(CLI::IsMember({"K4", "L3"}));

  auto* lattice = app.add_subcommand("lattice", "Hermite form of the image lattice of a curve");
  lattice->add_option("graph", inv.graph_file, "graph file")->required();
  lattice->add_option("--lengths", inv.lengths, "edge lengths in edge order");

  auto* verify = app.add_subcommand("verify-theorem", "enumerate stable graphs and cross-check");
  verify->add_option("--max-edges", inv.max_edges, "edge bound")
      ->required()
      ->check(CLI::Range(1, 12));
  verify->add_option("--threads", inv.threads, "worker count, 0 = all cores");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    inv.help = app.help();
    return inv;
  } catch (const CLI::ParseError& ex) {
    throw UsageError(ex.what());
  }
  inv.command = app.get_subcommands().front()->get_name();
  return inv;
}

CommandReport execute(const Invocation& inv) {
  CommandReport report;
  report.command = inv.command;
  report.inputs = json::object();
  if (!inv.graph_file.empty()) report.inputs["graph"] = inv.graph_file;

  if (inv.command == "verify-theorem") {
    report.inputs["max_edges"] = inv.max_edges;
    report.result = verify_theorem(inv.max_edges, inv.threads).to_json();
    return report;
  }

  const GraphFile file = load_graph_file(inv.graph_file);
  const MultiGraph& G = file.graph;
  json& r = report.result;

  if (inv.command == "qmatrix") {
    std::optional<std::set<EdgeId>> tree;
    if (!inv.tree.empty()) {
      tree = parse_tree(inv.tree);
      report.inputs["tree"] = *tree;
    }
    const auto ctx = CycleBasisContext::build(G, tree);
    json Q = json::array();
    for (const auto& row : ctx.Q()) {
      json out = json::array();
      for (const auto& p : row) out.push_back(p.to_string());
      Q.push_back(std::move(out));
    }
    r["genus"] = ctx.genus();
    r["ordering"] = ctx.ordering();
    r["tree"] = ctx.tree_edges();
    r["Q"] = std::move(Q);
    if (file.has_all_lengths())
      r["Q_specialized"] = matrix_json(specialize_Q(ctx, TropicalCurve(G, file.lengths)));
  } else if (inv.command == "classify") {
    const TrivialityVerdict v = classify(G);
    r["genus"] = genus(G);
    r["stable"] = is_stable(G);
    r["hyperelliptic_type"] = v.trivial;
    r["cz_trivial"] = v.trivial;
    r["verdict"] = verdict_json(G, v);
  } else if (inv.command == "cz-test") {
    report.inputs["cocycle"] = inv.cocycle;
    const CeresaCocycle v = load_cocycle(inv.cocycle, G);
    const CZClass w = compute_w(v);
    r["genus"] = v.context().genus();
    r["w"] = coefficients_json(w.c);
    if (inv.lengths.empty()) {
      report.inputs["mode"] = inv.mode;
      const auto mode = inv.mode == "psi" ? GraphTestMode::Psi : GraphTestMode::Image2;
      const TrivialityVerdict verdict = is_cz_trivial_graph(G, v, mode);
      r["level"] = "graph";
      r["trivial"] = verdict.trivial;
      r["verdict"] = verdict_json(G, verdict);
    } else {
      report.inputs["lengths"] = inv.lengths;
      const TropicalCurve curve = curve_for(file, inv.lengths);
      const TrivialityVerdict verdict = is_cz_trivial_curve(curve, v);
      r["level"] = "curve";
      r["trivial"] = verdict.trivial;
      r["w_specialized"] = vector_json(specialize(w, curve));
      r["lattice_hnf"] = rows_json(image_lattice(v.context(), curve));
      r["verdict"] = verdict_json(G, verdict);
    }
  } else if (inv.command == "minor") {
    report.inputs["pattern"] = inv.pattern;
    const MinorSearch search = has_minor(G, parse_pattern(inv.pattern));
    r["pattern"] = inv.pattern;
    r["found"] = search.found;
    if (search.witness) r["witness"] = witness_json(G, *search.witness);
  } else if (inv.command == "lattice") {
    if (!inv.lengths.empty()) report.inputs["lengths"] = inv.lengths;
    const TropicalCurve curve = curve_for(file, inv.lengths);
    const auto ctx = CycleBasisContext::build(G);
    const auto hnf = image_lattice(ctx, curve);
    r["genus"] = ctx.genus();
    r["coordinates"] = json::array();
    for (const auto& idx : beta_triples(ctx.genus())) r["coordinates"].push_back(index_json(idx));
    r["generators"] = image_generators(ctx, curve).size();
    r["hnf"] = rows_json(hnf);
    if (!hnf.empty() && hnf.size() == hnf.front().size()) {
      Integer index = 1;
      for (std::size_t i = 0; i < hnf.size(); ++i) index *= hnf[i][i];
      r["index"] = integer_to_json(index);
    }
  }
  return report;
}

}  // namespace

CommandReport run_command(const std::vector<std::string>& args) {
  const Invocation inv = parse_invocation(args);
  if (!inv.help.empty()) throw UsageError(inv.help);
  return execute(inv);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const Invocation inv = parse_invocation(args);
    if (!inv.help.empty()) {
      out << inv.help;
      return kOk;
    }
    const CommandReport report = execute(inv);
    if (inv.json) {
      out << report.to_json().dump(2) << "\n";
    } else {
      out << render_text(report);
    }
    if (report.command == "verify-theorem" && !report.result.at("violations").empty())
      return kInternal;
    return kOk;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kParse;
  } catch (const PreconditionError& ex) {
    err << "precondition violated: " << ex.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kInternal;
  }
}

// ---------------------------------------------------------- verify-theorem

nlohmann::json TheoremSummary::to_json() const {
  return {{"max_edges", max_edges},
          {"graphs", graphs},
          {"trivial", trivial},
          {"not_trivial", not_trivial},
          {"minor_steps_checked", minor_steps_checked},
          {"family_checked", family_checked},
          {"fixture_checks", fixture_checks},
          {"patterns_flagged", patterns_flagged},
          {"violations", violations},
          {"scope",
           "algebraic verdicts are compared only on the subdivision family of K4 and L3, "
           "where cocycles are transported from the shipped ones; other graphs are checked "
           "through the minor characterization"}};
}

namespace {

struct Outcome {
  bool trivial = false;
  long minor_steps = 0;
  std::vector<std::string> violations;
};

std::string describe(const MultiGraph& G) {
  std::string out = "graph[";
  for (const auto& e : G.edges())
    out += std::to_string(e.id) + ":" + std::to_string(e.tail) + "-" + std::to_string(e.head) + " ";
  if (!G.edges().empty()) out.pop_back();
  return out + "]";
}

Outcome check_graph(const MultiGraph& G) {
  Outcome o;
  auto fail = [&](const std::string& what) { o.violations.push_back(describe(G) + ": " + what); };
  const TrivialityVerdict verdict = classify(G);
  const bool het = is_hyperelliptic_type(G);
  o.trivial = verdict.trivial;
  if (verdict.trivial != het) fail("classifier disagrees with the direct minor test");
  if (!verdict.trivial && (!verdict.minor || !verify_minor_witness(G, *verdict.minor)))
    fail("minor witness does not replay");

  const auto parts = blocks(two_edge_connectivization(stabilize(G)));
  int genus_sum = 0;
  bool blocks_het = true;
  for (const auto& B : parts) {
    genus_sum += genus(B);
    blocks_het = blocks_het && is_hyperelliptic_type(B);
  }
  if (genus_sum != genus(G)) fail("block genera do not sum to the genus");
  if (blocks_het != het) fail("block decomposition changes the verdict");

  if (het) {
    const auto bridge_list = bridges(G);
    const std::set<EdgeId> bridge_set(bridge_list.begin(), bridge_list.end());
    for (const auto& e : G.edges()) {
      if (!bridge_set.contains(e.id)) {
        ++o.minor_steps;
        if (!is_hyperelliptic_type(delete_edge(G, e.id))) fail("deleting an edge creates a minor");
      }
      if (!e.is_loop()) {
        ++o.minor_steps;
        if (!is_hyperelliptic_type(contract_edge(G, e.id))) fail("contracting an edge creates a minor");
      }
    }
  }
  return o;
}

// Subdivision chains with non-decreasing subdivided edge ids.
void collect_family(const CeresaCocycle& v, int max_edges, EdgeId from,
                    std::vector<CeresaCocycle>& out) {
  if (static_cast<int>(v.context().graph().edge_count()) >= max_edges) return;
  for (EdgeId f : v.context().graph().edge_ids()) {
    if (f < from) continue;
    CeresaCocycle next = pushforward_subdivide(v, f);
    out.push_back(next);
    collect_family(next, max_edges, f, out);
  }
}

std::vector<std::string> check_family_member(const CeresaCocycle& v, const MultiGraph& base) {
  std::vector<std::string> bad;
  const MultiGraph& G = v.context().graph();
  const TrivialityVerdict algebraic = is_cz_trivial_graph(G, v);
  const TrivialityVerdict minor = classify(G);
  if (algebraic.trivial != minor.trivial)
    bad.push_back(describe(G) + ": algebraic and minor verdicts differ");
  if (algebraic.trivial) bad.push_back(describe(G) + ": transported class became trivial");
  if (!isomorphic(stabilize(G), base)) bad.push_back(describe(G) + ": stabilization is not the base");
  return bad;
}

template <typename Result>
std::vector<Result> parallel_map(std::size_t n, unsigned threads,
                                 const std::function<Result(std::size_t)>& work) {
  std::vector<Result> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = work(i);
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return results;
}

std::vector<std::pair<std::string, bool>> fixture_identities() {
  using fixtures::k4_context;
  using fixtures::l3_context;
  auto P = [](const char* s) { return IntPolynomial::parse(s); };
  auto q_equals = [](const CycleBasisContext& ctx, const std::vector<std::vector<IntPolynomial>>& Q) {
    return ctx.Q() == Q;
  };
  const auto k4 = fixtures::v_tau_k4();
  const auto l3 = fixtures::v_tau_l3();
  const auto k4_unit = TropicalCurve::unit(fixtures::k4_graph());
  const auto k4_long = TropicalCurve::positional(fixtures::k4_graph(), {2, 1, 1, 1, 1, 1});
  const auto l3_unit = TropicalCurve::unit(fixtures::l3_graph());
  const std::vector<IntVector> l3_listed{{2, 2, 0, 2}, {0, 4, 0, 0}, {0, 0, 2, 2}, {0, 0, 0, 4}};
  const auto listed_hnf = hermite_normal_form(IntMatrix::from_rows(l3_listed));
  std::vector<IntVector> listed_rows;
  for (std::size_t r = 0; r < listed_hnf.rank; ++r) listed_rows.push_back(listed_hnf.H.row(r));

  return {
      {"K4 period matrix",
       q_equals(k4_context(), {{P("x1 + x5 + x6"), P("-x6"), P("-x5")},
                               {P("-x6"), P("x2 + x4 + x6"), P("-x4")},
                               {P("-x5"), P("-x4"), P("x3 + x4 + x5")}})},
      {"L3 period matrix",
       q_equals(l3_context(), {{P("x1 + x6"), 0, P("x6"), P("x6")},
                               {0, P("x2 + x5"), P("x5"), P("x5")},
                               {P("x6"), P("x5"), P("x3 + x5 + x6"), P("x5 + x6")},
                               {P("x6"), P("x5"), P("x5 + x6"), P("x4 + x5 + x6")}})},
      {"K4 class", compute_w(k4).c == CoefficientMap{{{1, 2, 3}, P("-2*x2*x5")}}},
      {"L3 class",
       compute_w(l3).c == CoefficientMap{{{1, 2, 3}, P("-2*x5*x6")}, {{1, 2, 4}, P("-2*x5*x6")}}},
      {"K4 graph verdict", !is_cz_trivial_graph(k4.context().graph(), k4).trivial},
      {"L3 graph verdict", !is_cz_trivial_graph(l3.context().graph(), l3).trivial},
      {"K4 unit curve verdict", !is_cz_trivial_curve(k4_unit, k4).trivial},
      {"K4 lengthened curve verdict", is_cz_trivial_curve(k4_long, k4).trivial},
      {"L3 unit lattice", image_lattice(l3.context(), l3_unit) == listed_rows},
      {"L3 unit curve verdict", !is_cz_trivial_curve(l3_unit, l3).trivial},
  };
}

}  // namespace

TheoremSummary verify_theorem(int max_edges, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  TheoremSummary s;
  s.max_edges = max_edges;

  const std::vector<MultiGraph> graphs = enumerate_graphs(max_edges, 2, max_edges);
  const auto outcomes = parallel_map<Outcome>(graphs.size(), threads, [&](std::size_t i) {
    try {
      return check_graph(graphs[i]);
    } catch (const std::exception& ex) {
      return Outcome{false, 0, {describe(graphs[i]) + ": exception: " + ex.what()}};
    }
  });
  s.graphs = static_cast<long>(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Outcome& o = outcomes[i];
    for (MinorPattern p : {MinorPattern::K4, MinorPattern::L3})
      if (!o.trivial && isomorphic(graphs[i], pattern_graph(p)))
        s.patterns_flagged.push_back(to_string(p));
    (o.trivial ? s.trivial : s.not_trivial) += 1;
    s.minor_steps_checked += o.minor_steps;
    s.violations.insert(s.violations.end(), o.violations.begin(), o.violations.end());
  }

  std::vector<std::pair<CeresaCocycle, MultiGraph>> family;
  for (const auto& [base, graph] : {std::pair{fixtures::v_tau_k4(), fixtures::k4_graph()},
                                    std::pair{fixtures::v_tau_l3(), fixtures::l3_graph()}}) {
    if (static_cast<int>(graph.edge_count()) > max_edges) continue;
    std::vector<CeresaCocycle> chain{base};
    collect_family(base, max_edges, 0, chain);
    for (auto& v : chain) family.emplace_back(std::move(v), graph);
  }
  const auto family_results =
      parallel_map<std::vector<std::string>>(family.size(), threads, [&](std::size_t i) {
        try {
          return check_family_member(family[i].first, family[i].second);
        } catch (const std::exception& ex) {
          return std::vector<std::string>{describe(family[i].first.context().graph()) +
                                          ": exception: " + ex.what()};
        }
      });
  s.family_checked = static_cast<long>(family.size());
  for (const auto& r : family_results) s.violations.insert(s.violations.end(), r.begin(), r.end());

  for (const auto& [name, ok] : fixture_identities()) {
    ++s.fixture_checks;
    if (!ok) s.violations.push_back("fixture identity failed: " + name);
  }
  return s;
}

}  // namespace czc::cli
