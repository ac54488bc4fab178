#include "homflytop/tutte.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "detail/union_find.hpp"
#include "homflytop/errors.hpp"
#include "homflytop/parking.hpp"

namespace homflytop {

using detail::UnionFind;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

int components(int n, const EdgeList& edges, int skip = -1) {
  UnionFind uf(n);
  int pieces = n;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (i != skip && uf.unite(edges[i].first, edges[i].second)) --pieces;
  }
  return pieces;
}

// Relabels vertices by first appearance after sorting; used as a memo key.
std::pair<int, EdgeList> normalized(int n, EdgeList edges) {
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<int> label(n, -1);
  int next = 0;
  for (auto& [a, b] : edges) {
    if (label[a] == -1) label[a] = next++;
    if (label[b] == -1) label[b] = next++;
    a = label[a];
    b = label[b];
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return {std::max(next, 1), edges};
}

class TutteSolver {
 public:
  Laurent2 solve(int n, const EdgeList& edges) {
    auto key = normalized(n, edges);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto& [m, es] = key;
    Laurent2 result = Laurent2::constant(1, "x", "y");
    int loops = 0;
    int bridges = 0;
    int pivot = -1;
    for (int i = 0; i < static_cast<int>(es.size()); ++i) {
      if (es[i].first == es[i].second) {
        ++loops;
      } else if (components(m, es, i) > 1) {
        ++bridges;
      } else if (pivot == -1) {
        pivot = i;
      }
    }
    if (pivot == -1) {
      result = Laurent2::monomial(1, bridges, loops, "x", "y");
    } else {
      EdgeList deleted = es;
      deleted.erase(deleted.begin() + pivot);
      const auto [a, b] = es[pivot];
      EdgeList contracted;
      for (int i = 0; i < static_cast<int>(es.size()); ++i) {
        if (i == pivot) continue;
        auto [p, q] = es[i];
        if (p == b) p = a;
        if (q == b) q = a;
        contracted.emplace_back(p, q);
      }
      result = solve(m, deleted) + solve(m, contracted);
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::pair<int, EdgeList>, Laurent2> memo_;
};

// x^a y^b -> u^(sx*a + sy*b)
Laurent1 specialize(const Laurent2& t, int sx, int sy) {
  Laurent1 out("u");
  for (const auto& [exps, c] : t.terms()) out.add_term(sx * exps.first + sy * exps.second, c);
  return out;
}

}  // namespace

bool is_connected(const Multigraph& k) {
  return k.num_vertices <= 1 || components(k.num_vertices, k.edges) == 1;
}

Laurent2 tutte(const Multigraph& k, int edge_cap) {
  if (!is_connected(k)) throw InputError("tutte: graph is disconnected");
  if (static_cast<int>(k.edges.size()) > edge_cap) {
    throw CapExceeded("tutte: " + std::to_string(k.edges.size()) + " edges exceed the cap of " +
                      std::to_string(edge_cap));
  }
  TutteSolver solver;
  return solver.solve(std::max(k.num_vertices, 1), k.edges);
}

std::vector<std::pair<int, int>> doubled_arcs(const Multigraph& k) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [a, b] : k.edges) {
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  return arcs;
}

TutteComparison doubled_graph_crosscheck(const Multigraph& k) {
  TutteComparison out;
  const RootedDigraph j{std::max(k.num_vertices, 1), 0, doubled_arcs(k)};
  out.parking = parking_enumerator(enumerate_parking(j));
  const int betti = static_cast<int>(k.edges.size()) - std::max(k.num_vertices, 1) + 1;
  out.tutte_side = Laurent1::monomial("u", 1, betti) * specialize(tutte(k), 0, -1);
  return out;
}

std::optional<Multigraph> contracted_graph(const PlaneBipartiteGraph& g) {
  std::vector<int> v_index(g.num_vertices(), -1);
  Multigraph k;
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (g.vertex(x).color == Color::V) v_index[x] = k.num_vertices++;
  }
  for (int x = 0; x < g.num_vertices(); ++x) {
    if (g.vertex(x).color != Color::E) continue;
    const auto around = g.rotation_edges(x);
    if (around.size() != 2) return std::nullopt;
    k.edges.emplace_back(v_index[g.edge(around[0]).v], v_index[g.edge(around[1]).v]);
  }
  return k;
}

TutteComparison dual_crosscheck(const PlaneBipartiteGraph& g, int root_face) {
  const auto k = contracted_graph(g);
  if (!k) throw InputError("dual_crosscheck needs every E-vertex to have degree 2");
  TutteComparison out;
  const auto choice = default_choice_for_root(g, root_face);
  out.parking = parking_enumerator(enumerate_parking(as_rooted_digraph(build_dual(g, choice.root, choice.kappa))));
  out.tutte_side = Laurent1::monomial("u", 1, k->num_vertices - 1) * specialize(tutte(*k), -1, 0);
  return out;
}

std::vector<std::pair<int, int>> canonical_form(const Multigraph& k) {
  const int n = k.num_vertices;
  std::vector<int> degree(n, 0);
  for (const auto& [a, b] : k.edges) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] < degree[b]; });
  // Class boundaries in `order`; only permutations inside a class are tried.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && degree[order[j]] == degree[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::vector<std::pair<int, int>> best;
  bool have = false;
  std::function<void(std::size_t)> permute = [&](std::size_t c) {
    if (c == classes.size()) {
      std::vector<int> label(n);
      for (int i = 0; i < n; ++i) label[order[i]] = i;
      std::vector<std::pair<int, int>> es;
      for (const auto& [a, b] : k.edges) es.emplace_back(std::min(label[a], label[b]), std::max(label[a], label[b]));
      std::sort(es.begin(), es.end());
      if (!have || es < best) {
        best = std::move(es);
        have = true;
      }
      return;
    }
    auto first = order.begin() + classes[c].first;
    auto last = order.begin() + classes[c].second;
    std::sort(first, last);
    do {
      permute(c + 1);
    } while (std::next_permutation(first, last));
  };
  permute(0);
  return best;
}

std::vector<Multigraph> connected_multigraphs(int max_edges) {
  std::vector<Multigraph> out;
  std::set<std::pair<int, std::vector<std::pair<int, int>>>> seen;
  std::vector<Multigraph> layer{Multigraph{1, {}}};
  seen.insert({1, {}});
  out.push_back(layer.front());
  for (int m = 1; m <= max_edges; ++m) {
    std::vector<Multigraph> next;
    auto offer = [&](Multigraph k) {
      auto key = std::make_pair(k.num_vertices, canonical_form(k));
      if (seen.insert(key).second) {
        k.edges = key.second;
        next.push_back(k);
      }
    };
    for (const auto& k : layer) {
      for (int a = 0; a < k.num_vertices; ++a) {
        for (int b = a; b < k.num_vertices; ++b) {
          Multigraph grown = k;
          grown.edges.emplace_back(a, b);
          offer(std::move(grown));
        }
        Multigraph pendant = k;
        pendant.edges.emplace_back(a, pendant.num_vertices++);
        offer(std::move(pendant));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace homflytop
