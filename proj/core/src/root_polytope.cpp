#include "homflytop/root_polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "detail/union_find.hpp"
#include "homflytop/errors.hpp"

namespace homflytop {

using detail::UnionFind;

PointMap root_polytope_points(const PlaneBipartiteGraph& g) {
  PointMap out;
  std::map<std::pair<int, int>, int> seen;
  for (const auto& [e, v] : g.edges()) {
    auto [it, fresh] = seen.try_emplace({e, v}, out.size());
    if (fresh) out.points.push_back({e, v});
    out.point_of_edge.push_back(it->second);
  }
  return out;
}

std::vector<std::vector<int>> coordinate_matrix(const PlaneBipartiteGraph& g) {
  std::vector<std::vector<int>> rows;
  for (const auto& [e, v] : g.edges()) {
    std::vector<int> row(g.num_vertices(), 0);
    row[e] = 1;
    row[v] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Fraction-free elimination; exact for any integer matrix.
int exact_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[row][col];
    ++row;
  }
  return static_cast<int>(row);
}

}  // namespace

AffineCheck affine_independence_check(const PlaneBipartiteGraph& g, const EdgeSet& edges) {
  AffineCheck out;
  UnionFind uf(g.num_vertices());
  std::vector<std::vector<Integer>> m;
  for (int id : edges.ids()) {
    const auto [e, v] = g.edge(id);
    if (!uf.unite(e, v)) out.cycle_free = false;
    std::vector<Integer> row(g.num_vertices(), 0);
    row[e] = 1;
    row[v] = 1;
    m.push_back(std::move(row));
  }
  out.rank = exact_rank(std::move(m));
  out.independent = out.rank == edges.size();
  return out;
}

bool compatible(const PlaneBipartiteGraph& g, const EdgeSet& t1, const EdgeSet& t2) {
  const int n = g.num_vertices();
  std::set<std::pair<int, int>> arcs;
  for (int id : t1.ids()) arcs.insert({g.edge(id).e, g.edge(id).v});
  for (int id : t2.ids()) arcs.insert({g.edge(id).v, g.edge(id).e});
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : arcs) adj[a].push_back(b);

  // Tarjan SCC.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;
  int comps = 0;
  std::function<void(int)> strong = [&](int x) {
    index[x] = low[x] = counter++;
    stack.push_back(x);
    on_stack[x] = true;
    for (int y : adj[x]) {
      if (index[y] == -1) {
        strong(y);
        low[x] = std::min(low[x], low[y]);
      } else if (on_stack[y]) {
        low[x] = std::min(low[x], index[y]);
      }
    }
    if (low[x] == index[x]) {
      int y;
      do {
        y = stack.back();
        stack.pop_back();
        on_stack[y] = false;
        comp[y] = comps;
      } while (y != x);
      ++comps;
    }
  };
  for (int x = 0; x < n; ++x) {
    if (index[x] == -1) strong(x);
  }

  // Inside each component every arc must be paired with its reverse and the
  // paired edges must form a tree.
  std::vector<int> size(comps, 0), undirected(comps, 0);
  for (int x = 0; x < n; ++x) ++size[comp[x]];
  for (const auto& [a, b] : arcs) {
    if (comp[a] != comp[b]) continue;
    if (!arcs.contains({b, a})) return false;
    if (a < b) ++undirected[comp[a]];
  }
  for (int c = 0; c < comps; ++c) {
    if (undirected[c] != size[c] - 1) return false;
  }
  return true;
}

bool has_alternating_cycle(const PlaneBipartiteGraph& g, const EdgeSet& t1, const EdgeSet& t2) {
  const int n = g.num_vertices();
  // Membership per point pair: bit 0 for t1, bit 1 for t2.
  std::map<std::pair<int, int>, int> member;
  for (int id : t1.ids()) member[{g.edge(id).e, g.edge(id).v}] |= 1;
  for (int id : t2.ids()) member[{g.edge(id).e, g.edge(id).v}] |= 2;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, membership)
  for (const auto& [ends, bits] : member) {
    adj[ends.first].push_back({ends.second, bits});
    adj[ends.second].push_back({ends.first, bits});
  }
  std::vector<bool> used(n, false);
  // Walk from `start`; step i uses a tree chosen by parity `phase`.
  std::function<bool(int, int, int, int)> walk = [&](int start, int x, int len, int phase) {
    const int want = ((len + phase) % 2 == 0) ? 1 : 2;
    for (const auto& [y, bits] : adj[x]) {
      if ((bits & want) == 0) continue;
      if (y == start && len + 1 >= 4) return true;
      if (used[y] || y < start) continue;
      used[y] = true;
      const bool found = walk(start, y, len + 1, phase);
      used[y] = false;
      if (found) return true;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    for (int phase = 0; phase < 2; ++phase) {
      used.assign(n, false);
      used[s] = true;
      if (walk(s, s, 0, phase)) return true;
    }
  }
  return false;
}

std::vector<EdgeSet> spanning_trees(const PlaneBipartiteGraph& g) {
  const int need = g.num_vertices() - 1;
  const int ne = g.num_edges();
  std::vector<EdgeSet> out;
  EdgeSet chosen(ne);
  std::function<void(int, UnionFind)> extend = [&](int next, UnionFind uf) {
    if (chosen.size() == need) {
      out.push_back(chosen);
      return;
    }
    if (ne - next < need - chosen.size()) return;
    for (int id = next; id < ne; ++id) {
      UnionFind copy = uf;
      if (!copy.unite(g.edge(id).e, g.edge(id).v)) continue;
      chosen.insert(id);
      extend(id + 1, copy);
      chosen.erase(id);
    }
  };
  extend(0, UnionFind(g.num_vertices()));
  return out;
}

std::vector<Hypertree> hypertrees(const PlaneBipartiteGraph& g) {
  std::set<Hypertree> seen;
  std::vector<int> e_index(g.num_vertices(), -1);
  int ne = 0;
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (g.vertex(x).color == Color::E) e_index[x] = ne++;
  }
  for (const auto& tree : spanning_trees(g)) {
    Hypertree h(ne, -1);
    for (int id : tree.ids()) ++h[e_index[g.edge(id).e]];
    seen.insert(h);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> verify_shelling(const std::vector<std::vector<int>>& simplices) {
  std::vector<int> counts;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& sigma = simplices[i];
    auto in_earlier = [&](const std::vector<int>& face) {
      for (std::size_t j = 0; j < i; ++j) {
        if (std::includes(simplices[j].begin(), simplices[j].end(), face.begin(), face.end())) return true;
      }
      return false;
    };
    // Points whose removal leaves a facet shared with an earlier simplex.
    std::vector<int> dropped;
    for (std::size_t p = 0; p < sigma.size(); ++p) {
      std::vector<int> facet = sigma;
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(p));
      if (in_earlier(facet)) dropped.push_back(sigma[p]);
    }
    if (i > 0 && dropped.empty()) {
      throw InvariantViolation("shelling", "simplex " + std::to_string(i) + " meets its predecessors in no facet");
    }
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<int> common;
      std::set_intersection(sigma.begin(), sigma.end(), simplices[j].begin(), simplices[j].end(),
                            std::back_inserter(common));
      // common lies in the facet missing p exactly when p is not in common.
      const bool covered = std::any_of(dropped.begin(), dropped.end(), [&](int p) {
        return !std::binary_search(common.begin(), common.end(), p);
      });
      if (!covered) {
        throw InvariantViolation("shelling", "simplex " + std::to_string(i) + " meets simplex " + std::to_string(j) +
                                                 " outside its attaching facets");
      }
    }
    counts.push_back(static_cast<int>(dropped.size()));
  }
  return counts;
}

Laurent1 f_vector(const std::vector<std::vector<int>>& simplices, int dimension) {
  std::set<std::vector<int>> faces;
  for (const auto& sigma : simplices) {
    const std::size_t k = sigma.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (1UL << b)) face.push_back(sigma[b]);
      }
      faces.insert(std::move(face));
    }
  }
  Laurent1 f("y");
  for (const auto& face : faces) f.add_term(dimension + 1 - static_cast<int>(face.size()), 1);
  return f;
}

Laurent1 h_from_f(const Laurent1& f) { return shift_compose(f).renamed("x"); }

Laurent1 h_from_shelling(const std::vector<int>& attach_counts, int dimension) {
  Laurent1 h("x");
  for (int c : attach_counts) h.add_term(dimension + 1 - c, 1);
  return h;
}

Triangulation triangulation_from_arbtree(const ArbTree& tree, const PlaneBipartiteGraph& g) {
  const PointMap pts = root_polytope_points(g);
  const auto endpoints = primal_endpoints(g);
  Triangulation tri;
  tri.dimension = g.num_vertices() - 2;
  for (const auto& leaf : tree.type_one_leaves()) {
    TreeSimplex simplex;
    simplex.edges = dual_subgraph(leaf.A);
    if (!is_spanning_tree(g.num_vertices(), endpoints, simplex.edges)) {
      throw InvariantViolation("triangulation", "dual of a type-I leaf is not a spanning tree of G");
    }
    for (int id : simplex.edges.ids()) simplex.points.push_back(pts.point_of_edge[id]);
    std::sort(simplex.points.begin(), simplex.points.end());
    tri.simplices.push_back(std::move(simplex));
  }
  for (std::size_t i = 0; i < tri.simplices.size(); ++i) {
    for (std::size_t j = i + 1; j < tri.simplices.size(); ++j) {
      if (!compatible(g, tri.simplices[i].edges, tri.simplices[j].edges)) {
        throw InvariantViolation("triangulation", "simplices " + std::to_string(i) + " and " + std::to_string(j) +
                                                      " are not compatible");
      }
    }
  }
  const auto count = hypertrees(g).size();
  if (count != tri.simplices.size()) {
    throw InvariantViolation("triangulation", std::to_string(tri.simplices.size()) + " simplices but " +
                                                  std::to_string(count) + " hypertrees");
  }
  std::vector<std::vector<int>> point_sets;
  for (const auto& s : tri.simplices) point_sets.push_back(s.points);
  const auto c = verify_shelling(point_sets);
  for (std::size_t i = 0; i < c.size(); ++i) tri.simplices[i].attach_count = c[i];
  tri.f = f_vector(point_sets, tri.dimension);
  tri.h = h_from_shelling(c, tri.dimension);
  if (h_from_f(tri.f) != tri.h) {
    throw InvariantViolation("h-vector", "f(x - 1) = " + h_from_f(tri.f).to_string() + " but shelling gives " +
                                             tri.h.to_string());
  }
  return tri;
}

}  // namespace homflytop
