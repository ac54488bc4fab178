#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homflytop/edge_set.hpp"

namespace homflytop {

enum class Color : std::uint8_t { E, V };

struct VertexInfo {
  std::string name;
  Color color;
};

/// Endpoints of a primal edge as vertex indices, E-side first.
struct EdgeEnds {
  int e;
  int v;
};

/// Oriented edge-end. Dart 2i runs e -> v along edge i and dart 2i+1 runs
/// v -> e; the dart "leaves" its tail vertex.
using Dart = int;

constexpr int edge_of(Dart d) { return d >> 1; }
constexpr Dart twin(Dart d) { return d ^ 1; }
constexpr bool runs_e_to_v(Dart d) { return (d & 1) == 0; }
constexpr Dart dart_e_to_v(int edge) { return 2 * edge; }
constexpr Dart dart_v_to_e(int edge) { return 2 * edge + 1; }

/// Face walks of a rotation system. `rotation[x]` lists the darts leaving x
/// in counterclockwise order. Each walk keeps its face on the left; faces are
/// numbered by their smallest dart, and each walk starts at that dart.
std::vector<std::vector<Dart>> trace_faces(const std::vector<std::vector<Dart>>& rotation,
                                           int num_darts);

/// Connected bipartite graph embedded in the sphere via a rotation system.
/// Parallel edges are allowed; loops cannot occur. Construction validates
/// bipartiteness, connectivity, rotation consistency and the genus-0 Euler
/// relation, throwing InputError on failure.
class PlaneBipartiteGraph {
 public:
  /// `rotation[x]` lists the edge ids incident to x in counterclockwise order.
  PlaneBipartiteGraph(std::vector<VertexInfo> vertices, std::vector<EdgeEnds> edges,
                      const std::vector<std::vector<int>>& rotation);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const VertexInfo& vertex(int x) const { return vertices_[x]; }
  const std::vector<VertexInfo>& vertices() const { return vertices_; }
  EdgeEnds edge(int i) const { return edges_[i]; }
  const std::vector<EdgeEnds>& edges() const { return edges_; }
  std::optional<int> find_vertex(std::string_view name) const;

  int tail(Dart d) const { return runs_e_to_v(d) ? edge(edge_of(d)).e : edge(edge_of(d)).v; }
  int head(Dart d) const { return tail(twin(d)); }

  /// Darts leaving x, counterclockwise.
  std::span<const Dart> rotation(int x) const { return rotation_[x]; }
  /// Edge ids around x, counterclockwise.
  std::vector<int> rotation_edges(int x) const;
  Dart rotate_ccw(Dart d) const;
  Dart rotate_cw(Dart d) const;

  /// Successor of d along the face on its left.
  Dart face_next(Dart d) const { return rotate_cw(twin(d)); }
  int face_of(Dart d) const { return dart_face_[d]; }
  std::span<const Dart> face(int f) const { return faces_[f]; }
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }

  int count(Color c) const;

  /// Plane subgraph on the given edges with the inherited rotation. Vertices
  /// without kept edges are dropped. `edge_map`, when supplied, receives the
  /// original id of each new edge.
  PlaneBipartiteGraph restricted_to(const EdgeSet& keep, std::vector<int>* edge_map = nullptr) const;

 private:
  std::vector<VertexInfo> vertices_;
  std::vector<EdgeEnds> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> rotation_pos_;  // index of each dart in its tail's rotation
  std::vector<std::vector<Dart>> faces_;
  std::vector<int> dart_face_;
};

struct DualEdge {
  int tail;
  int head;
};

/// Planar dual, directed so each dual edge has the E-end of its primal edge
/// on the right. Dual darts are identified with primal darts: primal dart d
/// is the end of dual edge edge_of(d) lying in face_of(d), the tail end when
/// d runs e -> v. The rotation around a dual vertex is the walk of its face.
class DualDigraph {
 public:
  DualDigraph(const PlaneBipartiteGraph& g, int root, int kappa);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  DualEdge edge(int i) const { return edges_[i]; }
  const std::vector<DualEdge>& edges() const { return edges_; }
  bool is_loop(int i) const { return edge(i).tail == edge(i).head; }

  int root() const { return root_; }
  int kappa() const { return kappa_; }

  /// Dual darts around r in counterclockwise order.
  std::span<const Dart> rotation(int r) const { return rotation_[r]; }
  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int position(Dart d) const { return position_[d]; }
  /// True when d is the tail end of its dual edge.
  static bool is_out_end(Dart d) { return runs_e_to_v(d); }

  int in_degree(int r) const;
  int out_degree(int r) const;

 private:
  std::vector<DualEdge> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<int> vertex_of_;
  std::vector<int> position_;
  int root_;
  int kappa_;
};

/// Validates that kappa's dual edge points to `root_face`; throws InputError
/// otherwise.
DualDigraph build_dual(const PlaneBipartiteGraph& g, int root_face, int kappa_edge);

/// A root face r0 together with an edge kappa whose dual points to r0.
struct RootChoice {
  int root;
  int kappa;
  friend bool operator==(const RootChoice&, const RootChoice&) = default;
};

/// Every admissible (r0, kappa): one per primal edge, ordered by kappa.
std::vector<RootChoice> admissible_roots(const PlaneBipartiteGraph& g);

/// First admissible kappa for a given root face.
RootChoice default_choice_for_root(const PlaneBipartiteGraph& g, int root_face);

/// Dual edges of the primal complement: the dual subgraph paired with a
/// primal edge set.
EdgeSet dual_subgraph(const EdgeSet& primal_edges);

/// Every vertex reaches every other by a directed path.
bool check_strong_connectivity(const DualDigraph& dual);

/// Undirected spanning-tree test on a vertex count and edge endpoint list.
bool is_spanning_tree(int num_vertices, std::span<const std::pair<int, int>> endpoints,
                      const EdgeSet& edges);

std::vector<std::pair<int, int>> primal_endpoints(const PlaneBipartiteGraph& g);
std::vector<std::pair<int, int>> dual_endpoints(const DualDigraph& dual);

}  // namespace homflytop
