#include "homflytop/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "homflytop/errors.hpp"

namespace homflytop {

using nlohmann::json;

namespace {

json ids_json(const EdgeSet& s) { return json(s.ids()); }

json coefficients(const Laurent1& p) {
  json out = json::object();
  out["var"] = p.var();
  out["text"] = p.to_string();
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coefficient", c.get_str()}});
  out["terms"] = terms;
  return out;
}

const char* leaf_name(LeafType t) {
  switch (t) {
    case LeafType::TypeI:
      return "I";
    case LeafType::TypeII:
      return "II";
    default:
      return "internal";
  }
}

}  // namespace

RootChoice GraphDocument::root_choice() const {
  if (root_dart) {
    const int face = graph.face_of(*root_dart);
    if (!kappa) return default_choice_for_root(graph, face);
    build_dual(graph, face, *kappa);
    return {face, *kappa};
  }
  const int k = kappa.value_or(0);
  if (k < 0 || k >= graph.num_edges()) throw InputError("kappa is not an edge of the graph");
  return {graph.face_of(dart_v_to_e(k)), k};
}

GraphDocument parse_graph_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw InputError(std::string("malformed JSON: ") + err.what());
  }
  try {
    std::vector<VertexInfo> vertices;
    std::map<std::string, int> index;
    auto add = [&](const json& names, Color c) {
      for (const auto& n : names) {
        const auto name = n.get<std::string>();
        if (!index.emplace(name, static_cast<int>(vertices.size())).second) {
          throw InputError("vertex '" + name + "' listed twice");
        }
        vertices.push_back({name, c});
      }
    };
    add(doc.at("E"), Color::E);
    add(doc.at("V"), Color::V);
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end()) throw InputError("unknown vertex '" + name + "'");
      return it->second;
    };
    std::vector<EdgeEnds> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("each edge must be a pair [e, v]");
      edges.push_back({lookup(pair[0].get<std::string>()), lookup(pair[1].get<std::string>())});
    }
    std::vector<std::vector<int>> rotation(vertices.size());
    const auto& rot = doc.at("rotation");
    if (!rot.is_object()) throw InputError("rotation must map vertex names to edge lists");
    for (const auto& [name, list] : rot.items()) rotation[lookup(name)] = list.get<std::vector<int>>();
    for (std::size_t x = 0; x < vertices.size(); ++x) {
      if (!rot.contains(vertices[x].name)) throw InputError("rotation of '" + vertices[x].name + "' missing");
    }

    GraphDocument out{PlaneBipartiteGraph(std::move(vertices), std::move(edges), rotation), std::nullopt,
                      std::nullopt, std::nullopt};
    if (doc.contains("r0") && !doc["r0"].is_null()) {
      const auto& root_ref = doc["r0"];
      if (!root_ref.is_array() || root_ref.size() != 2) throw InputError("r0 must be [edge-id, \"ev\" | \"ve\"]");
      const int edge = root_ref[0].get<int>();
      const auto dir = root_ref[1].get<std::string>();
      if (edge < 0 || edge >= out.graph.num_edges()) throw InputError("r0 names an unknown edge");
      if (dir != "ev" && dir != "ve") throw InputError("r0 direction must be \"ev\" or \"ve\"");
      out.root_dart = dir == "ev" ? dart_e_to_v(edge) : dart_v_to_e(edge);
    }
    if (doc.contains("kappa") && !doc["kappa"].is_null()) out.kappa = doc["kappa"].get<int>();
    if (doc.contains("signs") && !doc["signs"].is_null()) {
      std::vector<Sign> signs;
      for (const auto& s : doc["signs"]) {
        const int v = s.get<int>();
        if (v != 1 && v != -1) throw InputError("signs must be +1 or -1");
        signs.push_back(v > 0 ? Sign::Positive : Sign::Negative);
      }
      if (static_cast<int>(signs.size()) != out.graph.num_edges()) throw InputError("need one sign per edge");
      out.signs = std::move(signs);
    }
    return out;
  } catch (const json::exception& err) {
    throw InputError(std::string("malformed graph document: ") + err.what());
  }
}

GraphDocument load_graph_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_document(buffer.str());
}

std::string graph_document_json(const PlaneBipartiteGraph& g, std::optional<RootChoice> root,
                                const std::vector<Sign>* signs) {
  json doc;
  json es = json::array(), vs = json::array(), edges = json::array(), rotation = json::object();
  for (const auto& v : g.vertices()) (v.color == Color::E ? es : vs).push_back(v.name);
  for (const auto& [e, v] : g.edges()) edges.push_back({g.vertex(e).name, g.vertex(v).name});
  for (int x = 0; x < g.num_vertices(); ++x) rotation[g.vertex(x).name] = g.rotation_edges(x);
  doc["E"] = es;
  doc["V"] = vs;
  doc["edges"] = edges;
  doc["rotation"] = rotation;
  if (root) {
    doc["r0"] = {root->kappa, "ve"};
    doc["kappa"] = root->kappa;
  }
  if (signs != nullptr) {
    json s = json::array();
    for (Sign x : *signs) s.push_back(static_cast<int>(x));
    doc["signs"] = s;
  }
  return doc.dump();
}

std::string faces_json(const PlaneBipartiteGraph& g) {
  json faces = json::array();
  for (int f = 0; f < g.num_faces(); ++f) {
    json darts = json::array();
    for (Dart d : g.face(f)) darts.push_back({edge_of(d), runs_e_to_v(d) ? "ev" : "ve"});
    faces.push_back({{"face", f}, {"darts", darts}});
  }
  return json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"faces", faces}}.dump(2);
}

std::string dual_json(const DualDigraph& dual) {
  json edges = json::array();
  for (int i = 0; i < dual.num_edges(); ++i) {
    edges.push_back({{"edge", i}, {"tail", dual.edge(i).tail}, {"head", dual.edge(i).head}});
  }
  json rotation = json::array();
  for (int r = 0; r < dual.num_vertices(); ++r) {
    json around = json::array();
    for (Dart d : dual.rotation(r)) around.push_back({edge_of(d), DualDigraph::is_out_end(d) ? "out" : "in"});
    rotation.push_back(around);
  }
  return json{{"vertices", dual.num_vertices()},
              {"root", dual.root()},
              {"kappa", dual.kappa()},
              {"edges", edges},
              {"rotation", rotation}}
      .dump(2);
}

std::string arb_tree_json(const ArbTree& tree) {
  json nodes = json::array();
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    json node{{"id", i}, {"A", ids_json(n.A)}, {"S", ids_json(n.S)}, {"type", leaf_name(n.type)}};
    if (n.augmenting) node["augmenting"] = *n.augmenting;
    if (n.right != -1) node["right"] = n.right;
    if (n.left != -1) node["left"] = n.left;
    nodes.push_back(node);
  }
  json leaves = json::array();
  for (int id : tree.leaves) {
    const auto& n = tree.nodes[id];
    leaves.push_back({{"node", id}, {"type", leaf_name(n.type)}, {"k", n.S.size()}, {"A", ids_json(n.A)},
                      {"S", ids_json(n.S)}});
  }
  return json{{"root", tree.dual_root}, {"kappa", tree.dual_kappa}, {"nodes", nodes}, {"leaves", leaves}}.dump(2);
}

std::string triangulation_json(const PlaneBipartiteGraph& g, const Triangulation& tri, bool with_coordinates) {
  json simplices = json::array();
  for (const auto& s : tri.simplices) {
    simplices.push_back({{"edges", ids_json(s.edges)}, {"points", s.points}, {"attach_count", s.attach_count}});
  }
  json out{{"dimension", tri.dimension}, {"simplices", simplices}, {"f", coefficients(tri.f)},
           {"h", coefficients(tri.h)}};
  if (with_coordinates) {
    json names = json::array();
    for (const auto& v : g.vertices()) names.push_back(v.name);
    out["coordinate_axes"] = names;
    out["coordinates"] = coordinate_matrix(g);
  }
  return out.dump(2);
}

std::string parking_json(const std::vector<ParkingFunction>& functions, int root) {
  json list = json::array();
  for (const auto& pi : functions) {
    json values = json::object();
    for (std::size_t r = 0; r < pi.values.size(); ++r) {
      if (static_cast<int>(r) != root) values[std::to_string(r)] = pi.values[r];
    }
    list.push_back({{"values", values}, {"index", pi.index()}});
  }
  return json{{"root", root}, {"count", functions.size()}, {"functions", list},
              {"enumerator", coefficients(parking_enumerator(functions))}}
      .dump(2);
}

std::string coefficients_csv(const Laurent1& p) {
  std::ostringstream os;
  os << "exponent,coefficient\n";
  for (const auto& [e, c] : p.terms()) os << e << ',' << c.get_str() << '\n';
  return os.str();
}

std::string graph_dot(const PlaneBipartiteGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int x = 0; x < g.num_vertices(); ++x) {
    os << "  n" << x << " [label=\"" << g.vertex(x).name << "\", shape="
       << (g.vertex(x).color == Color::E ? "box" : "circle") << "];\n";
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    os << "  n" << g.edge(i).e << " -- n" << g.edge(i).v << " [label=\"" << i << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string dual_dot(const DualDigraph& dual) {
  std::ostringstream os;
  os << "digraph Gstar {\n";
  for (int r = 0; r < dual.num_vertices(); ++r) {
    os << "  r" << r << " [label=\"r" << r << "\"" << (r == dual.root() ? ", peripheries=2" : "") << "];\n";
  }
  for (int i = 0; i < dual.num_edges(); ++i) {
    os << "  r" << dual.edge(i).tail << " -> r" << dual.edge(i).head << " [label=\"" << i << "\""
       << (i == dual.kappa() ? ", penwidth=2" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string overlay_dot(const PlaneBipartiteGraph& g, const DualDigraph& dual) {
  std::ostringstream os;
  os << "digraph Overlay {\n";
  for (int x = 0; x < g.num_vertices(); ++x) {
    os << "  n" << x << " [label=\"" << g.vertex(x).name << "\", shape="
       << (g.vertex(x).color == Color::E ? "box" : "circle") << "];\n";
  }
  for (int r = 0; r < dual.num_vertices(); ++r) {
    os << "  r" << r << " [label=\"r" << r << "\", shape=diamond, color=blue];\n";
  }
  for (int i = 0; i < g.num_edges(); ++i) {
    os << "  c" << i << " [label=\"" << i << "\", shape=point];\n";
    os << "  n" << g.edge(i).e << " -> c" << i << " [dir=none];\n";
    os << "  c" << i << " -> n" << g.edge(i).v << " [dir=none];\n";
    os << "  r" << dual.edge(i).tail << " -> c" << i << " [color=blue, dir=none];\n";
    os << "  c" << i << " -> r" << dual.edge(i).head << " [color=blue];\n";
  }
  os << "}\n";
  return os.str();
}

std::string arb_tree_dot(const ArbTree& tree) {
  std::ostringstream os;
  os << "digraph ArbTree {\n  ordering=out;\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    os << "  t" << i << " [label=\"A={";
    bool first = true;
    for (int id : n.A.ids()) {
      os << (first ? "" : ",") << id;
      first = false;
    }
    os << "} S={";
    first = true;
    for (int id : n.S.ids()) {
      os << (first ? "" : ",") << id;
      first = false;
    }
    os << "}";
    if (n.type != LeafType::Internal) os << "\\ntype " << leaf_name(n.type);
    os << "\"" << (n.type == LeafType::TypeI ? ", shape=box" : "") << "];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    if (n.left != -1) os << "  t" << i << " -> t" << n.left << " [label=\"skip " << *n.augmenting << "\", style=dashed];\n";
    if (n.right != -1) os << "  t" << i << " -> t" << n.right << " [label=\"add " << *n.augmenting << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace homflytop
