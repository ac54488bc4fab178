#include "homflytop/blocks.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "homflytop/errors.hpp"

namespace homflytop {

SignedBlockGraph biconnected_blocks(int num_vertices, std::span<const std::pair<int, int>> endpoints,
                                    std::span<const Sign> signs) {
  if (signs.size() != endpoints.size()) throw InputError("one sign per edge required");
  const int m = static_cast<int>(endpoints.size());

  std::vector<std::vector<std::pair<int, int>>> adj(num_vertices);  // (neighbour, edge)
  for (int i = 0; i < m; ++i) {
    const auto [a, b] = endpoints[i];
    adj[a].emplace_back(b, i);
    if (a != b) adj[b].emplace_back(a, i);
  }

  std::vector<int> disc(num_vertices, -1);
  std::vector<int> low(num_vertices, 0);
  std::vector<int> edge_stack;
  std::vector<bool> edge_seen(m, false);
  std::vector<std::vector<int>> components;
  int time = 0;

  // Parallel edges are told apart by id, so a 2-cycle forms its own block.
  std::function<void(int, int)> dfs = [&](int x, int via_edge) {
    disc[x] = low[x] = time++;
    for (const auto& [w, id] : adj[x]) {
      if (id == via_edge) continue;
      if (!edge_seen[id]) {
        edge_seen[id] = true;
        edge_stack.push_back(id);
      }
      if (disc[w] == -1) {
        dfs(w, id);
        low[x] = std::min(low[x], low[w]);
        if (low[w] >= disc[x]) {
          std::vector<int> comp;
          while (true) {
            const int top = edge_stack.back();
            edge_stack.pop_back();
            comp.push_back(top);
            if (top == id) break;
          }
          components.push_back(std::move(comp));
        }
      } else {
        low[x] = std::min(low[x], disc[w]);
      }
    }
  };

  if (num_vertices > 0) dfs(0, -1);
  if (std::find(disc.begin(), disc.end(), -1) != disc.end()) throw InputError("graph is disconnected");

  SignedBlockGraph out;
  for (auto& comp : components) {
    std::sort(comp.begin(), comp.end());
    Block block;
    block.edges = comp;
    block.sign = signs[comp.front()];
    std::set<int> verts;
    for (int id : comp) {
      if (signs[id] != block.sign) throw InputError("block mixes positive and negative edges");
      verts.insert(endpoints[id].first);
      verts.insert(endpoints[id].second);
    }
    block.vertices.assign(verts.begin(), verts.end());
    const int s = static_cast<int>(block.vertices.size());
    const int n = static_cast<int>(block.edges.size());
    if (block.sign == Sign::Positive) {
      ++out.positive_blocks;
      out.positive_vertices += s;
      out.positive_edges += n;
    } else {
      ++out.negative_blocks;
      out.negative_vertices += s;
      out.negative_edges += n;
    }
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return out;
}

SignedBlockGraph biconnected_blocks(const PlaneBipartiteGraph& g, std::span<const Sign> signs) {
  const auto ends = primal_endpoints(g);
  return biconnected_blocks(g.num_vertices(), ends, signs);
}

}  // namespace homflytop
