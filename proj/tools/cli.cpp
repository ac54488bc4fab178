#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "homflytop/arborescence.hpp"
#include "homflytop/blocks.hpp"
#include "homflytop/errors.hpp"
#include "homflytop/generate.hpp"
#include "homflytop/homfly.hpp"
#include "homflytop/io.hpp"
#include "homflytop/parking.hpp"
#include "homflytop/root_polytope.hpp"
#include "verify.hpp"

namespace homflytop::cli {

using nlohmann::json;

namespace {

json poly_json(const Laurent1& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coefficient", c.get_str()}});
  return {{"var", p.var()}, {"text", p.to_string()}, {"terms", terms}};
}

json poly_json(const Laurent2& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{p.var1(), e.first}, {p.var2(), e.second}, {"coefficient", c.get_str()}});
  }
  return {{"text", p.to_string()}, {"terms", terms}};
}

json top_json(const TopPolynomial& t) { return {{"z_exponent", t.z_exponent}, {"poly", poly_json(t.poly)}}; }

GraphDocument load(const RunConfig& config) {
  if (config.input.empty()) throw InputError("--input is required for '" + config.command + "'");
  if (config.input == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return parse_graph_document(buffer.str());
  }
  return load_graph_document(config.input);
}

RootChoice choose_root(const RunConfig& config, const GraphDocument& doc) {
  const auto& g = doc.graph;
  if (config.r0 && (*config.r0 < 0 || *config.r0 >= g.num_faces())) throw InputError("--r0 is not a face");
  if (config.r0 && config.kappa) {
    build_dual(g, *config.r0, *config.kappa);
    return {*config.r0, *config.kappa};
  }
  if (config.r0) return default_choice_for_root(g, *config.r0);
  if (config.kappa) {
    if (*config.kappa < 0 || *config.kappa >= g.num_edges()) throw InputError("--kappa is not an edge");
    return {g.face_of(dart_v_to_e(*config.kappa)), *config.kappa};
  }
  return doc.root_choice();
}

std::vector<RootChoice> choices_for(const RunConfig& config, const GraphDocument& doc) {
  if (!config.all_roots) return {choose_root(config, doc)};
  auto all = admissible_roots(doc.graph);
  std::sort(all.begin(), all.end(),
            [](const RootChoice& a, const RootChoice& b) { return std::tie(a.root, a.kappa) < std::tie(b.root, b.kappa); });
  return all;
}

std::string choice_label(const RootChoice& c) {
  return "r0=" + std::to_string(c.root) + " kappa=" + std::to_string(c.kappa);
}

void require_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (config.format == f) return;
  }
  throw InputError("format '" + config.format + "' is not available for '" + config.command + "'");
}

// Emits one JSON value, or an array of them when several root choices ran.
void emit(std::ostream& out, const std::vector<json>& values) {
  out << (values.size() == 1 ? values.front() : json(values)).dump(2) << '\n';
}

int cmd_faces(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text", "dot"});
  const auto doc = load(config);
  const auto& g = doc.graph;
  if (config.format == "json") {
    out << faces_json(g) << '\n';
  } else if (config.format == "dot") {
    out << graph_dot(g);
  } else {
    out << "vertices " << g.num_vertices() << ", edges " << g.num_edges() << ", faces " << g.num_faces() << '\n';
    for (int f = 0; f < g.num_faces(); ++f) {
      out << "face " << f << ':';
      for (Dart d : g.face(f)) {
        out << ' ' << g.vertex(g.tail(d)).name << "->" << g.vertex(g.head(d)).name << '#' << edge_of(d);
      }
      out << '\n';
    }
  }
  return Pass;
}

int cmd_dual(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text", "dot"});
  const auto doc = load(config);
  const auto choice = choose_root(config, doc);
  const auto dual = build_dual(doc.graph, choice.root, choice.kappa);
  if (config.format == "json") {
    out << dual_json(dual) << '\n';
  } else if (config.format == "dot") {
    out << overlay_dot(doc.graph, dual);
  } else {
    out << "dual: " << dual.num_vertices() << " vertices, root r" << dual.root() << ", kappa " << dual.kappa() << '\n';
    for (int i = 0; i < dual.num_edges(); ++i) {
      out << "edge " << i << ": r" << dual.edge(i).tail << " -> r" << dual.edge(i).head << '\n';
    }
    out << "strongly connected: " << (check_strong_connectivity(dual) ? "yes" : "no") << '\n';
  }
  return Pass;
}

int cmd_arbtree(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text", "dot"});
  const auto doc = load(config);
  std::vector<json> values;
  for (const auto& choice : choices_for(config, doc)) {
    const auto dual = build_dual(doc.graph, choice.root, choice.kappa);
    const auto tree = build_arb_tree(dual);
    if (config.format == "json") {
      values.push_back(json::parse(arb_tree_json(tree)));
    } else if (config.format == "dot") {
      out << arb_tree_dot(tree);
    } else {
      out << choice_label(choice) << ": " << tree.nodes.size() << " nodes, " << tree.type_one_leaves().size()
          << " type I, " << tree.type_two_leaves().size() << " type II\n";
      for (int id : tree.leaves) {
        const auto& n = tree.nodes[id];
        out << "  " << (n.type == LeafType::TypeI ? "I " : "II") << " k=" << n.S.size() << " A={";
        const auto a = n.A.ids();
        for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
        out << "} S={";
        const auto sk = n.S.ids();
        for (std::size_t i = 0; i < sk.size(); ++i) out << (i ? "," : "") << sk[i];
        out << "}\n";
      }
    }
  }
  if (!values.empty()) emit(out, values);
  return Pass;
}

int cmd_triangulate(const RunConfig& config, std::ostream& out, bool h_only) {
  require_format(config, {"json", "text"});
  const auto doc = load(config);
  std::vector<json> values;
  for (const auto& choice : choices_for(config, doc)) {
    const auto dual = build_dual(doc.graph, choice.root, choice.kappa);
    const auto tri = triangulation_from_arbtree(build_arb_tree(dual), doc.graph);
    if (config.format == "json") {
      if (h_only) {
        values.push_back({{"r0", choice.root}, {"kappa", choice.kappa}, {"dimension", tri.dimension},
                          {"f", poly_json(tri.f)}, {"h", poly_json(tri.h)}});
      } else {
        json t = json::parse(triangulation_json(doc.graph, tri, config.coordinates));
        t["r0"] = choice.root;
        t["kappa"] = choice.kappa;
        values.push_back(t);
      }
      continue;
    }
    out << choice_label(choice) << '\n';
    if (!h_only) {
      for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
        out << "  simplex " << i << " edges {";
        const auto ids = tri.simplices[i].edges.ids();
        for (std::size_t j = 0; j < ids.size(); ++j) out << (j ? "," : "") << ids[j];
        out << "} c=" << tri.simplices[i].attach_count << '\n';
      }
    }
    out << "  f = " << tri.f.to_string() << "\n  h = " << tri.h.to_string() << '\n';
  }
  if (!values.empty()) emit(out, values);
  return Pass;
}

int cmd_parking(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text", "csv"});
  const auto doc = load(config);
  std::vector<json> values;
  for (const auto& choice : choices_for(config, doc)) {
    const auto dual = build_dual(doc.graph, choice.root, choice.kappa);
    const auto functions = enumerate_parking(as_rooted_digraph(dual));
    const auto p = parking_enumerator(functions);
    if (config.format == "json") {
      values.push_back(json::parse(parking_json(functions, dual.root())));
    } else if (config.format == "csv") {
      out << coefficients_csv(p);
    } else {
      out << choice_label(choice) << ": " << functions.size() << " parking functions, p = " << p.to_string() << '\n';
      for (const auto& pi : functions) {
        out << "  (";
        bool first = true;
        for (int r = 0; r < dual.num_vertices(); ++r) {
          if (r == dual.root()) continue;
          out << (first ? "" : ", ") << "pi(" << r << ")=" << pi.values[r];
          first = false;
        }
        out << ") index " << pi.index() << '\n';
      }
    }
  }
  if (!values.empty()) emit(out, values);
  return Pass;
}

int cmd_top(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text"});
  const auto doc = load(config);
  const auto& g = doc.graph;
  const int n = g.num_edges();
  const int s = g.num_vertices();
  std::optional<TopPolynomial> oracle_top;
  const auto median = median_diagram(g);
  if (median.num_crossings() <= config.cap) oracle_top = top_coefficient(homfly_skein(median, config.cap), n, s);
  bool agree = true;
  std::vector<json> values;
  for (const auto& choice : choices_for(config, doc)) {
    const auto dual = build_dual(g, choice.root, choice.kappa);
    const auto tree = build_arb_tree(dual);
    const auto tri = triangulation_from_arbtree(tree, g);
    const auto p = parking_enumerator(enumerate_parking(as_rooted_digraph(dual)));
    const auto by_tree = top_via_tree(tree, n, s);
    const auto by_h = top_via_h(tri.h, n, s);
    const auto by_p = top_via_p(p, n, s);
    const bool same = by_tree == by_h && by_tree == by_p && (!oracle_top || by_tree == *oracle_top);
    agree = agree && same;
    if (config.format == "json") {
      json v{{"r0", choice.root},          {"kappa", choice.kappa},     {"n", n}, {"s", s},
             {"via_tree", top_json(by_tree)}, {"via_h", top_json(by_h)}, {"via_p", top_json(by_p)},
             {"agree", same}};
      v["oracle"] = oracle_top ? top_json(*oracle_top) : json(nullptr);
      values.push_back(v);
    } else {
      out << choice_label(choice) << " (z^" << by_tree.z_exponent << ")\n";
      out << "  via tree: " << by_tree.poly.to_string() << '\n';
      out << "  via h:    " << by_h.poly.to_string() << '\n';
      out << "  via p:    " << by_p.poly.to_string() << '\n';
      out << "  oracle:   " << (oracle_top ? oracle_top->poly.to_string() : std::string("skipped (cap)")) << '\n';
      out << "  agree:    " << (same ? "yes" : "NO") << '\n';
    }
  }
  if (!values.empty()) emit(out, values);
  return agree ? Pass : InvariantFailure;
}

int cmd_homfly(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text"});
  const auto doc = load(config);
  const auto& g = doc.graph;
  const auto dec = doc.signs ? signed_subgraph(g, *doc.signs) : full_subgraph(g);
  const auto diagram = median_diagram(g, dec);
  const auto P = homfly_skein(diagram, config.cap);
  const int n = diagram.num_crossings();
  const int s = diagram.seifert_count();
  const auto top = top_coefficient(P, n, s);
  std::optional<ConwayAlexander> ca;
  try {
    ca = conway_alexander(P);
  } catch (const std::invalid_argument&) {
  }
  if (config.format == "json") {
    json v{{"n", n}, {"s", s}, {"writhe", diagram.writhe()}, {"components", diagram.num_components()},
           {"homfly", poly_json(P)}, {"top", top_json(top)}, {"pd", to_pd_text(diagram)}};
    if (ca) {
      v["conway"] = poly_json(ca->conway);
      v["alexander_half"] = poly_json(ca->alexander_half);
      v["alexander"] = ca->alexander ? poly_json(*ca->alexander) : json(nullptr);
      v["half_integer"] = ca->half_integer;
    }
    out << v.dump(2) << '\n';
  } else {
    out << "n = " << n << ", s = " << s << ", writhe = " << diagram.writhe() << ", components = "
        << diagram.num_components() << '\n';
    out << "P = " << P.to_string() << '\n';
    out << "top (z^" << top.z_exponent << ") = " << top.poly.to_string() << '\n';
    if (ca) {
      out << "conway = " << ca->conway.to_string() << '\n';
      out << "alexander = "
          << (ca->alexander ? ca->alexander->to_string() : half_integer_to_string(ca->alexander_half) + " (half-integer)")
          << '\n';
    }
    out << "pd = " << to_pd_text(diagram) << '\n';
  }
  return Pass;
}

int cmd_homogeneous(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text"});
  const auto doc = load(config);
  const auto& g = doc.graph;
  const std::vector<Sign> signs = doc.signs.value_or(std::vector<Sign>(g.num_edges(), Sign::Positive));
  const auto blocks = biconnected_blocks(g, signs);
  const auto product = homogeneous_top(blocks, block_enumerators(g, blocks));
  const auto diagram = median_diagram(g, signed_subgraph(g, signs));
  std::optional<TopPolynomial> oracle_top;
  if (diagram.num_crossings() <= config.cap) {
    oracle_top = top_coefficient(homfly_skein(diagram, config.cap), diagram.num_crossings(), diagram.seifert_count());
  }
  const bool same = !oracle_top || oracle_top->poly == product;
  if (config.format == "json") {
    json v{{"positive_blocks", blocks.positive_blocks},
           {"negative_blocks", blocks.negative_blocks},
           {"writhe", blocks.writhe()},
           {"product", poly_json(product)},
           {"z_exponent", diagram.num_crossings() - diagram.seifert_count() + 1},
           {"agree", same}};
    v["oracle"] = oracle_top ? poly_json(oracle_top->poly) : json(nullptr);
    out << v.dump(2) << '\n';
  } else {
    out << "blocks: " << blocks.positive_blocks << " positive, " << blocks.negative_blocks << " negative\n";
    out << "product formula: " << product.to_string() << '\n';
    out << "oracle slice:    " << (oracle_top ? oracle_top->poly.to_string() : std::string("skipped (cap)")) << '\n';
    out << "agree: " << (same ? "yes" : "NO") << '\n';
  }
  return same ? Pass : InvariantFailure;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text"});
  const auto doc = load(config);
  VerifyOptions options;
  options.crossing_cap = config.cap;
  const auto report = verify_graph(doc.graph, options);
  const auto& first = report.choices.front();
  if (config.format == "json") {
    json failures = json::array();
    for (const auto& f : report.failures) {
      json item{{"invariant", f.invariant}, {"detail", f.detail}};
      if (f.choice) {
        item["r0"] = f.choice->root;
        item["kappa"] = f.choice->kappa;
      }
      failures.push_back(item);
    }
    json v{{"status", report.ok() ? "pass" : "fail"},
           {"root_choices", report.choices.size()},
           {"top", poly_json(first.top_tree.poly)},
           {"z_exponent", first.top_tree.z_exponent},
           {"h", poly_json(first.h)},
           {"p", poly_json(first.p)},
           {"failures", failures}};
    v["homfly"] = report.homfly ? poly_json(*report.homfly) : json(nullptr);
    out << v.dump(2) << '\n';
  } else {
    out << "root choices checked: " << report.choices.size() << '\n';
    out << "top = " << first.top_tree.poly.to_string() << " (z^" << first.top_tree.z_exponent << ")\n";
    out << "h = " << first.h.to_string() << '\n';
    out << "p = " << first.p.to_string() << '\n';
    out << "homfly = " << (report.homfly ? report.homfly->to_string() : std::string("skipped (cap)")) << '\n';
    for (const auto& f : report.failures) {
      out << "FAIL " << f.invariant;
      if (f.choice) out << " [" << choice_label(*f.choice) << "]";
      out << ": " << f.detail << '\n';
    }
    out << (report.ok() ? "PASS" : "FAIL") << '\n';
  }
  return report.ok() ? Pass : InvariantFailure;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
  require_format(config, {"json", "text", "dot"});
  if (config.count < 1 || config.max_edges < 1) throw InputError("--count and --max-edges must be positive");
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.count; ++i) {
    const int edges = std::uniform_int_distribution<int>(1, config.max_edges)(rng);
    const auto g = random_plane_bipartite_graph(rng, edges);
    if (config.format == "dot") {
      out << graph_dot(g);
    } else {
      out << graph_document_json(g, admissible_roots(g).front()) << '\n';
    }
  }
  return Pass;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"faces", "dual",   "arbtree",     "triangulate", "hvector", "parking",
                                              "top",   "homfly", "homogeneous", "verify",      "gen"};
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& c = config.command;
    if (c == "faces") return cmd_faces(config, out);
    if (c == "dual") return cmd_dual(config, out);
    if (c == "arbtree") return cmd_arbtree(config, out);
    if (c == "triangulate") return cmd_triangulate(config, out, false);
    if (c == "hvector") return cmd_triangulate(config, out, true);
    if (c == "parking") return cmd_parking(config, out);
    if (c == "top") return cmd_top(config, out);
    if (c == "homfly") return cmd_homfly(config, out);
    if (c == "homogeneous") return cmd_homogeneous(config, out);
    if (c == "verify") return cmd_verify(config, out);
    if (c == "gen") return cmd_gen(config, out);
    throw InputError("unknown command '" + c + "'");
  } catch (const InvariantViolation& e) {
    err << json{{"status", "fail"}, {"invariant", e.invariant()}, {"detail", e.what()}}.dump() << '\n';
    return InvariantFailure;
  } catch (const InputError& e) {
    err << json{{"status", "input-error"}, {"detail", e.what()}}.dump() << '\n';
    return InputFailure;
  } catch (const CapExceeded& e) {
    err << json{{"status", "input-error"}, {"detail", e.what()}}.dump() << '\n';
    return InputFailure;
  } catch (const std::invalid_argument& e) {
    err << json{{"status", "input-error"}, {"detail", e.what()}}.dump() << '\n';
    return InputFailure;
  }
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Top of the HOMFLY polynomial of special alternating links from plane bipartite graphs"};
  app.name("homflytop");
  RunConfig config;
  app.add_option("command", config.command, "faces | dual | arbtree | triangulate | hvector | parking | top | "
                                            "homfly | homogeneous | verify | gen")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("-i,--input", config.input, "graph document (JSON), or - for stdin");
  app.add_option("--r0", config.r0, "root face id");
  app.add_option("--kappa", config.kappa, "edge whose dual points to r0");
  app.add_option("--cap", config.cap, "skein oracle crossing cap")->check(CLI::NonNegativeNumber);
  app.add_option("--format", config.format, "json | text | dot (csv for parking)")
      ->check(CLI::IsMember({"json", "text", "dot", "csv"}));
  app.add_option("--seed", config.seed, "seed for gen");
  app.add_flag("--all-roots", config.all_roots, "repeat for every admissible (r0, kappa)");
  app.add_option("--count", config.count, "number of graphs for gen");
  app.add_option("--max-edges", config.max_edges, "largest edge count for gen");
  app.add_flag("--coordinates", config.coordinates, "include the coordinate matrix in triangulate JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Pass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return InputFailure;
  }
  return run(config, out, err);
}

}  // namespace homflytop::cli
