#include "homflytop/arborescence.hpp"

#include <algorithm>
#include <functional>

namespace homflytop {

std::vector<ArbLeaf> ArbTree::type_one_leaves() const {
  std::vector<ArbLeaf> out;
  for (int id : leaves) {
    const auto& n = nodes[id];
    if (n.type == LeafType::TypeI) out.push_back({id, n.type, n.A, n.S});
  }
  return out;
}

std::vector<ArbLeaf> ArbTree::type_two_leaves() const {
  std::vector<ArbLeaf> out;
  for (int id : leaves) {
    const auto& n = nodes[id];
    if (n.type == LeafType::TypeII) out.push_back({id, n.type, n.A, n.S});
  }
  return out;
}

std::vector<bool> root_component(const DualDigraph& dual, const EdgeSet& A) {
  std::vector<std::vector<int>> out(dual.num_vertices());
  for (int id : A.ids()) out[dual.edge(id).tail].push_back(dual.edge(id).head);
  std::vector<bool> seen(dual.num_vertices(), false);
  std::vector<int> stack{dual.root()};
  seen[dual.root()] = true;
  while (!stack.empty()) {
    const int r = stack.back();
    stack.pop_back();
    for (int w : out[r]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool is_arborescence(const DualDigraph& dual, const EdgeSet& A) {
  std::vector<int> in(dual.num_vertices(), 0);
  for (int id : A.ids()) {
    if (dual.is_loop(id)) return false;
    const int h = dual.edge(id).head;
    if (h == dual.root() || ++in[h] > 1) return false;
  }
  const auto reached = root_component(dual, A);
  for (int id : A.ids()) {
    if (!reached[dual.edge(id).tail]) return false;
  }
  return true;
}

bool is_spanning_arborescence(const DualDigraph& dual, const EdgeSet& A) {
  return A.size() == dual.num_vertices() - 1 && is_arborescence(dual, A);
}

std::optional<int> augmenting_edge(const DualDigraph& dual, const EdgeSet& A, const EdgeSet& S) {
  const auto inside = root_component(dual, A);
  const Dart start = dart_v_to_e(dual.kappa());
  int r = dual.vertex_of(start);
  int pos = dual.position(start);
  const int limit = 4 * static_cast<int>(inside.size()) + 4 * A.universe() + 4;
  for (int steps = 0; steps < limit; ++steps) {
    const auto around = dual.rotation(r);
    pos = (pos + 1) % static_cast<int>(around.size());
    const Dart d = around[pos];
    if (d == start) return std::nullopt;
    const int id = edge_of(d);
    if (A.contains(id)) {
      const Dart across = twin(d);
      r = dual.vertex_of(across);
      pos = dual.position(across);
      continue;
    }
    if (DualDigraph::is_out_end(d) && !S.contains(id) && !dual.is_loop(id) && !inside[dual.edge(id).head]) {
      return id;
    }
  }
  return std::nullopt;
}

Arborescence clocked_arborescence(const DualDigraph& dual) {
  Arborescence out{EdgeSet(dual.num_edges()), dual.root()};
  std::vector<bool> reached(dual.num_vertices(), false);
  reached[dual.root()] = true;
  std::function<void(Dart)> visit = [&](Dart entry) {
    const int r = dual.vertex_of(entry);
    const auto around = dual.rotation(r);
    const int n = static_cast<int>(around.size());
    for (int i = 1; i < n; ++i) {
      const Dart d = around[(dual.position(entry) + i) % n];
      const int id = edge_of(d);
      if (!DualDigraph::is_out_end(d) || dual.is_loop(id)) continue;
      const int h = dual.edge(id).head;
      if (reached[h]) continue;
      reached[h] = true;
      out.edges.insert(id);
      visit(twin(d));
    }
  };
  visit(dart_v_to_e(dual.kappa()));
  return out;
}

ArbTree build_arb_tree(const DualDigraph& dual) {
  ArbTree tree;
  tree.dual_root = dual.root();
  tree.dual_kappa = dual.kappa();
  const int target = dual.num_vertices() - 1;
  std::function<int(EdgeSet, EdgeSet, int)> grow = [&](EdgeSet A, EdgeSet S, int parent) {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({A, S, std::nullopt, -1, -1, parent, LeafType::Internal});
    if (A.size() == target) {
      tree.nodes[id].type = LeafType::TypeI;
      tree.leaves.push_back(id);
      return id;
    }
    const auto delta = augmenting_edge(dual, A, S);
    if (!delta) {
      tree.nodes[id].type = LeafType::TypeII;
      tree.leaves.push_back(id);
      return id;
    }
    tree.nodes[id].augmenting = delta;
    const int right = grow(A.with(*delta), S, id);
    const int left = grow(A, S.with(*delta), id);
    tree.nodes[id].right = right;
    tree.nodes[id].left = left;
    return id;
  };
  grow(EdgeSet(dual.num_edges()), EdgeSet(dual.num_edges()), -1);
  return tree;
}

std::vector<Arborescence> spanning_arborescences_bruteforce(const DualDigraph& dual) {
  const int nv = dual.num_vertices();
  std::vector<std::vector<int>> in_edges(nv);
  for (int id = 0; id < dual.num_edges(); ++id) {
    if (!dual.is_loop(id)) in_edges[dual.edge(id).head].push_back(id);
  }
  std::vector<Arborescence> out;
  EdgeSet chosen(dual.num_edges());
  std::function<void(int)> choose = [&](int r) {
    if (r == nv) {
      if (is_spanning_arborescence(dual, chosen)) out.push_back({chosen, dual.root()});
      return;
    }
    if (r == dual.root()) {
      choose(r + 1);
      return;
    }
    for (int id : in_edges[r]) {
      chosen.insert(id);
      choose(r + 1);
      chosen.erase(id);
    }
  };
  choose(0);
  std::sort(out.begin(), out.end(), [](const Arborescence& a, const Arborescence& b) { return a.edges < b.edges; });
  return out;
}

bool has_blocked_frontier(const DualDigraph& dual, const EdgeSet& A, const EdgeSet& S) {
  const auto inside = root_component(dual, A);
  for (int id = 0; id < dual.num_edges(); ++id) {
    const auto [t, h] = dual.edge(id);
    if (inside[t] && !inside[h] && !S.contains(id)) return false;
  }
  return true;
}

}  // namespace homflytop
