#include "homflytop/parking.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homflytop/errors.hpp"

namespace homflytop {

RootedDigraph as_rooted_digraph(const DualDigraph& dual) {
  RootedDigraph d{dual.num_vertices(), dual.root(), {}};
  for (const auto& [t, h] : dual.edges()) d.arcs.emplace_back(t, h);
  return d;
}

int ParkingFunction::index() const { return std::accumulate(values.begin(), values.end(), 0); }

int relative_indegree(const RootedDigraph& d, const std::vector<bool>& subset, int r) {
  if (static_cast<int>(subset.size()) != d.num_vertices) throw InputError("subset is not indexed by the vertices");
  if (!subset[r]) throw InputError("vertex " + std::to_string(r) + " is not in the subset");
  if (subset[d.root]) throw InputError("subset contains the root");
  int count = 0;
  for (const auto& [t, h] : d.arcs) {
    if (h == r && !subset[t]) ++count;
  }
  return count;
}

bool is_parking_function(const RootedDigraph& d, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != d.num_vertices) {
    throw InputError("parking function must assign a value to every vertex");
  }
  if (values[d.root] != 0) throw InputError("parking function is not defined at the root");
  std::vector<int> others;
  for (int r = 0; r < d.num_vertices; ++r) {
    if (r == d.root) continue;
    if (values[r] < 0) return false;
    others.push_back(r);
  }
  const auto k = others.size();
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    std::vector<bool> subset(d.num_vertices, false);
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (1UL << b)) subset[others[b]] = true;
    }
    bool witnessed = false;
    for (int r : others) {
      if (subset[r] && values[r] < relative_indegree(d, subset, r)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

std::vector<ParkingFunction> enumerate_parking(const RootedDigraph& d) {
  std::vector<int> indeg(d.num_vertices, 0);
  for (const auto& [t, h] : d.arcs) {
    if (t != h) ++indeg[h];
  }
  std::vector<ParkingFunction> out;
  std::vector<int> values(d.num_vertices, 0);
  // Odometer over the box.
  while (true) {
    if (is_parking_function(d, values)) out.push_back({values});
    int r = 0;
    for (; r < d.num_vertices; ++r) {
      if (r == d.root) continue;
      if (++values[r] < indeg[r]) break;
      values[r] = 0;
    }
    if (r == d.num_vertices) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Laurent1 parking_enumerator(const std::vector<ParkingFunction>& functions) {
  Laurent1 p("u");
  for (const auto& pi : functions) p.add_term(pi.index(), 1);
  return p;
}

ParkingFunction parking_from_leaf(const DualDigraph& dual, const EdgeSet& A, const EdgeSet& S) {
  if (!is_spanning_arborescence(dual, A)) throw InputError("leaf is not of type I");
  ParkingFunction pi{std::vector<int>(dual.num_vertices(), 0)};
  for (int id : S.ids()) ++pi.values[dual.edge(id).head];
  return pi;
}

ArbLeaf arborescence_from_parking(const ParkingFunction& pi, const DualDigraph& dual) {
  if (!is_parking_function(as_rooted_digraph(dual), pi.values)) throw InputError("input is not a parking function");
  EdgeSet A(dual.num_edges());
  EdgeSet S(dual.num_edges());
  std::vector<int> skipped_into(dual.num_vertices(), 0);
  while (A.size() < dual.num_vertices() - 1) {
    const auto delta = augmenting_edge(dual, A, S);
    if (!delta) throw InvariantViolation("parking bijection", "parking function led to a type-II leaf");
    const int r = dual.edge(*delta).head;
    if (pi.values[r] > skipped_into[r]) {
      S.insert(*delta);
      ++skipped_into[r];
    } else {
      A.insert(*delta);
    }
  }
  return {-1, LeafType::TypeI, A, S};
}

}  // namespace homflytop
