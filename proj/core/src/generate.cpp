#include "homflytop/generate.hpp"

#include <algorithm>
#include <string>

#include "homflytop/errors.hpp"

namespace homflytop {

namespace {

// Mutable rotation system used while growing a map.
struct MapBuilder {
  std::vector<VertexInfo> vertices;
  std::vector<EdgeEnds> edges;
  std::vector<std::vector<int>> rotation;  // edge ids, counterclockwise
  int e_count = 0;
  int v_count = 0;

  int add_vertex(Color c) {
    const std::string name = (c == Color::E ? "e" + std::to_string(e_count++) : "v" + std::to_string(v_count++));
    vertices.push_back({name, c});
    rotation.emplace_back();
    return static_cast<int>(vertices.size()) - 1;
  }

  int add_edge(int a, int b) {
    const int e = vertices[a].color == Color::E ? a : b;
    const int v = e == a ? b : a;
    edges.push_back({e, v});
    return static_cast<int>(edges.size()) - 1;
  }

  // Inserts `edge` counterclockwise-after `after` (or anywhere when x has no
  // edges yet).
  void insert_after(int x, int after, int edge) {
    auto& rot = rotation[x];
    if (rot.empty()) {
      rot.push_back(edge);
      return;
    }
    auto it = std::find(rot.begin(), rot.end(), after);
    rot.insert(it + 1, edge);
  }

  void insert_at(int x, std::size_t pos, int edge) {
    auto& rot = rotation[x];
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(std::min(pos, rot.size())), edge);
  }

  bool adjacent(int a, int b) const {
    return std::any_of(edges.begin(), edges.end(),
                       [&](const EdgeEnds& x) { return (x.e == a && x.v == b) || (x.e == b && x.v == a); });
  }

  PlaneBipartiteGraph build() const { return PlaneBipartiteGraph(vertices, edges, rotation); }
};

struct Corner {
  int vertex;
  int after_edge;  // new darts go counterclockwise-after this edge
};

// Corners of every face of the current map, grouped by face.
std::vector<std::vector<Corner>> face_corners(const PlaneBipartiteGraph& g) {
  std::vector<std::vector<Corner>> out;
  for (const auto& walk : g.faces()) {
    std::vector<Corner> corners;
    for (Dart d : walk) corners.push_back({g.head(d), edge_of(g.face_next(d))});
    out.push_back(std::move(corners));
  }
  return out;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

PlaneBipartiteGraph single_edge_graph() { return banded_theta_graph(1); }

PlaneBipartiteGraph banded_theta_graph(int bands) {
  if (bands < 1) throw InputError("banded_theta_graph needs at least one band");
  std::vector<VertexInfo> vs{{"e0", Color::E}, {"v0", Color::V}};
  std::vector<EdgeEnds> es(bands, EdgeEnds{0, 1});
  std::vector<int> around_e(bands);
  for (int i = 0; i < bands; ++i) around_e[i] = i;
  std::vector<int> around_v(around_e.rbegin(), around_e.rend());
  return PlaneBipartiteGraph(vs, es, {around_e, around_v});
}

PlaneBipartiteGraph k32_graph() {
  std::vector<VertexInfo> vs{{"e0", Color::E}, {"e1", Color::E}, {"e2", Color::E}, {"v0", Color::V}, {"v1", Color::V}};
  std::vector<EdgeEnds> es{{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
  std::vector<std::vector<int>> rot{
      {0, 1},     // e0
      {2, 3},     // e1
      {4, 5},     // e2
      {4, 2, 0},  // v0 (below): e2, e1, e0 counterclockwise
      {1, 3, 5},  // v1 (above): e0, e1, e2 counterclockwise
  };
  return PlaneBipartiteGraph(vs, es, rot);
}

PlaneBipartiteGraph one_point_union(const PlaneBipartiteGraph& a, int vertex_a, const PlaneBipartiteGraph& b,
                                    int vertex_b) {
  if (a.vertex(vertex_a).color != b.vertex(vertex_b).color) {
    throw InputError("one_point_union: glued vertices must share a colour");
  }
  std::vector<VertexInfo> vs = a.vertices();
  std::vector<int> b_to_new(b.num_vertices(), -1);
  b_to_new[vertex_b] = vertex_a;
  for (int x = 0; x < b.num_vertices(); ++x) {
    if (x == vertex_b) continue;
    b_to_new[x] = static_cast<int>(vs.size());
    VertexInfo info = b.vertex(x);
    info.name = "b." + info.name;
    vs.push_back(info);
  }
  std::vector<EdgeEnds> es = a.edges();
  const int offset = a.num_edges();
  for (const auto& [e, v] : b.edges()) es.push_back({b_to_new[e], b_to_new[v]});

  std::vector<std::vector<int>> rot(vs.size());
  for (int x = 0; x < a.num_vertices(); ++x) rot[x] = a.rotation_edges(x);
  for (int x = 0; x < b.num_vertices(); ++x) {
    for (int id : b.rotation_edges(x)) rot[b_to_new[x]].push_back(id + offset);
  }
  return PlaneBipartiteGraph(std::move(vs), std::move(es), rot);
}

PlaneBipartiteGraph random_plane_bipartite_graph(std::mt19937_64& rng, int num_edges) {
  if (num_edges < 1) throw InputError("random graph needs at least one edge");
  MapBuilder m;
  const int e0 = m.add_vertex(Color::E);
  const int v0 = m.add_vertex(Color::V);
  const int first = m.add_edge(e0, v0);
  m.rotation[e0].push_back(first);
  m.rotation[v0].push_back(first);

  while (static_cast<int>(m.edges.size()) < num_edges) {
    const int roll = uniform(rng, 0, 99);
    const bool room_for_two = static_cast<int>(m.edges.size()) + 2 <= num_edges;
    if (roll < 12) {
      const int x = uniform(rng, 0, static_cast<int>(m.vertices.size()) - 1);
      const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(m.rotation[x].size())));
      const int y = m.add_vertex(m.vertices[x].color == Color::E ? Color::V : Color::E);
      const int id = m.add_edge(x, y);
      m.insert_at(x, pos, id);
      m.rotation[y].push_back(id);
      continue;
    }
    const auto corners = face_corners(m.build());
    const auto& face = corners[uniform(rng, 0, static_cast<int>(corners.size()) - 1)];
    const bool allow_parallel = uniform(rng, 0, 99) < 10;
    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (std::size_t i = 0; i < face.size(); ++i) {
      for (std::size_t j = 0; j < face.size(); ++j) {
        if (m.vertices[face[i].vertex].color != Color::E || m.vertices[face[j].vertex].color != Color::V) continue;
        if (allow_parallel || !m.adjacent(face[i].vertex, face[j].vertex)) chords.emplace_back(i, j);
      }
    }
    if (roll < 50 && !chords.empty()) {
      const auto [i, j] = chords[uniform(rng, 0, static_cast<int>(chords.size()) - 1)];
      const int id = m.add_edge(face[i].vertex, face[j].vertex);
      m.insert_after(face[i].vertex, face[i].after_edge, id);
      m.insert_after(face[j].vertex, face[j].after_edge, id);
      continue;
    }
    if (!room_for_two) continue;
    // New vertex inside the face, joined to two corners of the other colour.
    const Color colour = uniform(rng, 0, 1) == 0 ? Color::E : Color::V;
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t i = 0; i < face.size(); ++i) {
      for (std::size_t j = 0; j < face.size(); ++j) {
        if (m.vertices[face[i].vertex].color == colour || m.vertices[face[j].vertex].color == colour) continue;
        if (allow_parallel || face[i].vertex != face[j].vertex) ends.emplace_back(i, j);
      }
    }
    if (ends.empty()) continue;
    const auto [i, j] = ends[uniform(rng, 0, static_cast<int>(ends.size()) - 1)];
    const int y = m.add_vertex(colour);
    const int a = m.add_edge(y, face[i].vertex);
    const int b = m.add_edge(y, face[j].vertex);
    m.insert_after(face[i].vertex, face[i].after_edge, a);
    if (i == j) {
      m.insert_after(face[j].vertex, a, b);
      m.rotation[y] = {b, a};
    } else {
      m.insert_after(face[j].vertex, face[j].after_edge, b);
      m.rotation[y] = {a, b};
    }
  }
  return m.build();
}

PlaneBipartiteGraph random_subdivided_graph(std::mt19937_64& rng, int num_subdivided) {
  if (num_subdivided < 1) throw InputError("random graph needs at least one subdivided edge");
  MapBuilder m;
  const int v0 = m.add_vertex(Color::V);
  const int e0 = m.add_vertex(Color::E);
  const int v1 = m.add_vertex(Color::V);
  const int a0 = m.add_edge(e0, v0);
  const int b0 = m.add_edge(e0, v1);
  m.rotation[v0] = {a0};
  m.rotation[e0] = {a0, b0};
  m.rotation[v1] = {b0};

  while (m.e_count < num_subdivided) {
    if (uniform(rng, 0, 99) < 40) {
      std::vector<int> vs;
      for (int x = 0; x < static_cast<int>(m.vertices.size()); ++x) {
        if (m.vertices[x].color == Color::V) vs.push_back(x);
      }
      const int x = vs[uniform(rng, 0, static_cast<int>(vs.size()) - 1)];
      const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(m.rotation[x].size())));
      const int e = m.add_vertex(Color::E);
      const int y = m.add_vertex(Color::V);
      const int a = m.add_edge(e, x);
      const int b = m.add_edge(e, y);
      m.insert_at(x, pos, a);
      m.rotation[e] = {a, b};
      m.rotation[y] = {b};
      continue;
    }
    const auto corners = face_corners(m.build());
    const auto& face = corners[uniform(rng, 0, static_cast<int>(corners.size()) - 1)];
    std::vector<std::size_t> v_corners;
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (m.vertices[face[i].vertex].color == Color::V) v_corners.push_back(i);
    }
    // Two distinct corners of the face; the same vertex twice gives a loop of K.
    if (v_corners.size() < 2) continue;
    const auto i = v_corners[uniform(rng, 0, static_cast<int>(v_corners.size()) - 1)];
    auto j = v_corners[uniform(rng, 0, static_cast<int>(v_corners.size()) - 2)];
    if (j >= i) j = v_corners[std::find(v_corners.begin(), v_corners.end(), j) - v_corners.begin() + 1];
    const Corner c1 = face[i];
    const Corner c2 = face[j];
    const int e = m.add_vertex(Color::E);
    const int a = m.add_edge(e, c1.vertex);
    const int b = m.add_edge(e, c2.vertex);
    m.insert_after(c1.vertex, c1.after_edge, a);
    m.insert_after(c2.vertex, c2.after_edge, b);
    m.rotation[e] = {a, b};
  }
  return m.build();
}

std::vector<PlaneBipartiteGraph> generate_corpus(std::uint64_t seed, int count, int max_edges) {
  std::mt19937_64 rng(seed);
  std::vector<PlaneBipartiteGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (i % 4 == 3 && max_edges >= 2) {
      out.push_back(random_subdivided_graph(rng, uniform(rng, 1, max_edges / 2)));
    } else {
      out.push_back(random_plane_bipartite_graph(rng, uniform(rng, 1, max_edges)));
    }
  }
  return out;
}

}  // namespace homflytop
