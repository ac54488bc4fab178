#include "homflytop/plane_graph.hpp"

#include <algorithm>
#include <queue>

#include "detail/union_find.hpp"
#include "homflytop/errors.hpp"

namespace homflytop {

using detail::UnionFind;

std::vector<std::vector<Dart>> trace_faces(const std::vector<std::vector<Dart>>& rotation,
                                           int num_darts) {
  std::vector<int> owner(num_darts, -1);
  std::vector<int> pos(num_darts, -1);
  for (std::size_t x = 0; x < rotation.size(); ++x) {
    for (std::size_t i = 0; i < rotation[x].size(); ++i) {
      owner[rotation[x][i]] = static_cast<int>(x);
      pos[rotation[x][i]] = static_cast<int>(i);
    }
  }
  auto next = [&](Dart d) {
    const Dart t = twin(d);
    const auto& around = rotation[owner[t]];
    const int n = static_cast<int>(around.size());
    const int p = pos[t];
    return around[(p + n - 1) % n];
  };
  std::vector<std::vector<Dart>> faces;
  std::vector<bool> seen(num_darts, false);
  for (Dart start = 0; start < num_darts; ++start) {
    if (seen[start]) continue;
    std::vector<Dart> walk;
    Dart d = start;
    do {
      seen[d] = true;
      walk.push_back(d);
      d = next(d);
    } while (d != start);
    faces.push_back(std::move(walk));
  }
  return faces;
}

PlaneBipartiteGraph::PlaneBipartiteGraph(std::vector<VertexInfo> vertices, std::vector<EdgeEnds> edges,
                                         const std::vector<std::vector<int>>& rotation)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int nv = num_vertices();
  const int ne = num_edges();
  if (ne == 0) throw InputError("graph has no edges");
  if (static_cast<int>(rotation.size()) != nv) throw InputError("rotation must list every vertex");

  for (int i = 0; i < ne; ++i) {
    const auto [e, v] = edges_[i];
    if (e < 0 || e >= nv || v < 0 || v >= nv) throw InputError("edge " + std::to_string(i) + " has an unknown endpoint");
    if (vertex(e).color != Color::E || vertex(v).color != Color::V) {
      throw InputError("edge " + std::to_string(i) + " does not join E to V (graph not bipartite)");
    }
  }

  rotation_.resize(nv);
  rotation_pos_.assign(num_darts(), -1);
  for (int x = 0; x < nv; ++x) {
    for (int id : rotation[x]) {
      if (id < 0 || id >= ne) throw InputError("rotation of '" + vertex(x).name + "' names unknown edge " + std::to_string(id));
      const EdgeEnds ends = edge(id);
      Dart d;
      if (ends.e == x) {
        d = dart_e_to_v(id);
      } else if (ends.v == x) {
        d = dart_v_to_e(id);
      } else {
        throw InputError("rotation of '" + vertex(x).name + "' names non-incident edge " + std::to_string(id));
      }
      if (rotation_pos_[d] != -1) {
        throw InputError("rotation of '" + vertex(x).name + "' repeats edge " + std::to_string(id));
      }
      rotation_pos_[d] = static_cast<int>(rotation_[x].size());
      rotation_[x].push_back(d);
    }
  }
  for (Dart d = 0; d < num_darts(); ++d) {
    if (rotation_pos_[d] == -1) {
      throw InputError("edge " + std::to_string(edge_of(d)) + " missing from rotation of '" + vertex(tail(d)).name + "'");
    }
  }

  UnionFind uf(nv);
  int pieces = nv;
  for (const auto& [e, v] : edges_) {
    if (uf.unite(e, v)) --pieces;
  }
  if (pieces != 1) throw InputError("graph is disconnected");

  faces_ = trace_faces(rotation_, num_darts());
  dart_face_.assign(num_darts(), -1);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    for (Dart d : faces_[f]) dart_face_[d] = static_cast<int>(f);
  }
  if (nv - ne + num_faces() != 2) {
    throw InputError("rotation system is not planar: V - E + F = " + std::to_string(nv - ne + num_faces()));
  }
}

std::optional<int> PlaneBipartiteGraph::find_vertex(std::string_view name) const {
  for (int x = 0; x < num_vertices(); ++x) {
    if (vertex(x).name == name) return x;
  }
  return std::nullopt;
}

std::vector<int> PlaneBipartiteGraph::rotation_edges(int x) const {
  std::vector<int> out;
  for (Dart d : rotation(x)) out.push_back(edge_of(d));
  return out;
}

Dart PlaneBipartiteGraph::rotate_ccw(Dart d) const {
  const auto around = rotation(tail(d));
  const auto n = around.size();
  return around[(rotation_pos_[d] + 1) % n];
}

Dart PlaneBipartiteGraph::rotate_cw(Dart d) const {
  const auto around = rotation(tail(d));
  const auto n = around.size();
  return around[(rotation_pos_[d] + n - 1) % n];
}

int PlaneBipartiteGraph::count(Color c) const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(),
                                        [c](const VertexInfo& info) { return info.color == c; }));
}

PlaneBipartiteGraph PlaneBipartiteGraph::restricted_to(const EdgeSet& keep, std::vector<int>* edge_map) const {
  std::vector<int> new_vertex(num_vertices(), -1);
  std::vector<int> new_edge(num_edges(), -1);
  std::vector<VertexInfo> vs;
  std::vector<EdgeEnds> es;
  std::vector<int> original;
  auto map_vertex = [&](int x) {
    if (new_vertex[x] == -1) {
      new_vertex[x] = static_cast<int>(vs.size());
      vs.push_back(vertex(x));
    }
    return new_vertex[x];
  };
  for (int i = 0; i < num_edges(); ++i) {
    if (!keep.contains(i)) continue;
    new_edge[i] = static_cast<int>(es.size());
    es.push_back({map_vertex(edge(i).e), map_vertex(edge(i).v)});
    original.push_back(i);
  }
  std::vector<std::vector<int>> rot(vs.size());
  for (int x = 0; x < num_vertices(); ++x) {
    const int nx = new_vertex[x];
    if (nx == -1) continue;
    for (Dart d : rotation(x)) {
      const int ne = new_edge[edge_of(d)];
      if (ne != -1) rot[nx].push_back(ne);
    }
  }
  if (edge_map != nullptr) *edge_map = original;
  return PlaneBipartiteGraph(std::move(vs), std::move(es), rot);
}

// ------------------------------------------------------------------ dual

DualDigraph::DualDigraph(const PlaneBipartiteGraph& g, int root, int kappa)
    : rotation_(g.faces()), root_(root), kappa_(kappa) {
  edges_.reserve(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) {
    edges_.push_back({g.face_of(dart_e_to_v(i)), g.face_of(dart_v_to_e(i))});
  }
  vertex_of_.assign(g.num_darts(), -1);
  position_.assign(g.num_darts(), -1);
  for (std::size_t r = 0; r < rotation_.size(); ++r) {
    for (std::size_t i = 0; i < rotation_[r].size(); ++i) {
      vertex_of_[rotation_[r][i]] = static_cast<int>(r);
      position_[rotation_[r][i]] = static_cast<int>(i);
    }
  }
}

int DualDigraph::in_degree(int r) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [r](const DualEdge& e) { return e.head == r; }));
}

int DualDigraph::out_degree(int r) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [r](const DualEdge& e) { return e.tail == r; }));
}

DualDigraph build_dual(const PlaneBipartiteGraph& g, int root_face, int kappa_edge) {
  if (root_face < 0 || root_face >= g.num_faces()) throw InputError("r0 is not a face of the graph");
  if (kappa_edge < 0 || kappa_edge >= g.num_edges()) throw InputError("kappa is not an edge of the graph");
  if (g.face_of(dart_v_to_e(kappa_edge)) != root_face) {
    throw InputError("dual of kappa (edge " + std::to_string(kappa_edge) + ") does not point to r0 (face " +
                     std::to_string(root_face) + ")");
  }
  return DualDigraph(g, root_face, kappa_edge);
}

std::vector<RootChoice> admissible_roots(const PlaneBipartiteGraph& g) {
  std::vector<RootChoice> out;
  for (int k = 0; k < g.num_edges(); ++k) out.push_back({g.face_of(dart_v_to_e(k)), k});
  return out;
}

RootChoice default_choice_for_root(const PlaneBipartiteGraph& g, int root_face) {
  for (int k = 0; k < g.num_edges(); ++k) {
    if (g.face_of(dart_v_to_e(k)) == root_face) return {root_face, k};
  }
  throw InputError("face " + std::to_string(root_face) + " has no incoming dual edge");
}

EdgeSet dual_subgraph(const EdgeSet& primal_edges) { return primal_edges.complement(); }

bool check_strong_connectivity(const DualDigraph& dual) {
  const int n = dual.num_vertices();
  auto reaches_all = [&](bool forward) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : dual.edges()) {
      if (forward) {
        adj[e.tail].push_back(e.head);
      } else {
        adj[e.head].push_back(e.tail);
      }
    }
    std::vector<bool> seen(n, false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int count = 1;
    while (!queue.empty()) {
      const int r = queue.front();
      queue.pop();
      for (int w : adj[r]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          queue.push(w);
        }
      }
    }
    return count == n;
  };
  return reaches_all(true) && reaches_all(false);
}

bool is_spanning_tree(int num_vertices, std::span<const std::pair<int, int>> endpoints, const EdgeSet& edges) {
  if (edges.size() != num_vertices - 1) return false;
  UnionFind uf(num_vertices);
  for (int id : edges.ids()) {
    const auto [a, b] = endpoints[id];
    if (!uf.unite(a, b)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> primal_endpoints(const PlaneBipartiteGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [e, v] : g.edges()) out.emplace_back(e, v);
  return out;
}

std::vector<std::pair<int, int>> dual_endpoints(const DualDigraph& dual) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [t, h] : dual.edges()) out.emplace_back(t, h);
  return out;
}

}  // namespace homflytop
