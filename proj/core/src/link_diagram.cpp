#include "homflytop/link_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "detail/union_find.hpp"
#include "homflytop/errors.hpp"

namespace homflytop {

using detail::UnionFind;

int opposite_slot(int slot) { return (slot + 2) % 4; }

bool slot_is_entry(int slot, Sign sign) {
  if (slot == 0) return true;
  if (slot == 2) return false;
  return (slot == 3) == (sign == Sign::Positive);
}

namespace {

// Exit slot joined to an entry slot by the orientation-preserving smoothing.
int smoothing_exit(int entry_slot, Sign sign) {
  if (sign == Sign::Positive) return entry_slot == 0 ? 1 : 2;
  return entry_slot == 0 ? 3 : 2;
}

using CodeTuple = std::array<int, 5>;

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw InputError("negative number of free loops");
  const int labels = num_labels();
  entry_.assign(labels, {-1, -1});
  exit_.assign(labels, {-1, -1});
  for (int c = 0; c < num_crossings(); ++c) {
    for (int s = 0; s < 4; ++s) {
      const int label = crossings_[c].slots[s];
      if (label < 0 || label >= labels) {
        throw InputError("arc label " + std::to_string(label) + " out of range at crossing " + std::to_string(c));
      }
      auto& end = slot_is_entry(s, crossings_[c].sign) ? entry_[label] : exit_[label];
      if (end.first != -1) {
        throw InputError("arc " + std::to_string(label) + " has two " +
                         (slot_is_entry(s, crossings_[c].sign) ? "heads" : "tails"));
      }
      end = {c, s};
    }
  }
}

int LinkDiagram::successor(int label) const {
  const auto [c, s] = entry_[label];
  return crossings_[c].slots[opposite_slot(s)];
}

std::vector<std::vector<int>> LinkDiagram::component_cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(num_labels(), false);
  for (int start = 0; start < num_labels(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int l = start; !seen[l]; l = successor(l)) {
      seen[l] = true;
      cycle.push_back(l);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int LinkDiagram::num_components() const { return static_cast<int>(component_cycles().size()) + free_loops_; }

int LinkDiagram::seifert_count() const {
  std::vector<bool> seen(num_labels(), false);
  int circles = free_loops_;
  for (int start = 0; start < num_labels(); ++start) {
    if (seen[start]) continue;
    ++circles;
    for (int l = start; !seen[l];) {
      seen[l] = true;
      const auto [c, s] = entry_[l];
      l = crossings_[c].slots[smoothing_exit(s, crossings_[c].sign)];
    }
  }
  return circles;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += static_cast<int>(x.sign);
  return w;
}

LinkDiagram LinkDiagram::changed(int crossing) const {
  auto xs = crossings_;
  auto& x = xs[crossing];
  const auto [a, b, c, d] = x.slots;
  if (x.sign == Sign::Positive) {
    x = {{d, a, b, c}, Sign::Negative};
  } else {
    x = {{b, c, d, a}, Sign::Positive};
  }
  return LinkDiagram(std::move(xs), free_loops_);
}

LinkDiagram LinkDiagram::mirrored() const {
  LinkDiagram d = *this;
  for (int c = 0; c < num_crossings(); ++c) d = d.changed(c);
  return d;
}

LinkDiagram LinkDiagram::smoothed(int crossing) const {
  const Crossing& x = crossings_[crossing];
  UnionFind uf(num_labels());
  for (int s = 0; s < 4; ++s) {
    if (slot_is_entry(s, x.sign)) uf.unite(x.slots[s], x.slots[smoothing_exit(s, x.sign)]);
  }
  std::vector<bool> used(num_labels(), false);
  for (int c = 0; c < num_crossings(); ++c) {
    if (c == crossing) continue;
    for (int label : crossings_[c].slots) used[uf.find(label)] = true;
  }
  int loops = free_loops_;
  std::vector<bool> counted(num_labels(), false);
  for (int label : x.slots) {
    const int rep = uf.find(label);
    if (!used[rep] && !counted[rep]) {
      counted[rep] = true;
      ++loops;
    }
  }
  std::vector<int> compact(num_labels(), -1);
  int next = 0;
  for (int l = 0; l < num_labels(); ++l) {
    if (used[l]) compact[l] = next++;
  }
  std::vector<Crossing> xs;
  for (int c = 0; c < num_crossings(); ++c) {
    if (c == crossing) continue;
    Crossing y = crossings_[c];
    for (int& label : y.slots) label = compact[uf.find(label)];
    xs.push_back(y);
  }
  return LinkDiagram(std::move(xs), loops);
}

std::vector<LinkDiagram> LinkDiagram::split() const {
  const int n = num_crossings();
  UnionFind uf(std::max(n, 1));
  for (int l = 0; l < num_labels(); ++l) uf.unite(entry_[l].first, exit_[l].first);
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < n; ++c) groups[uf.find(c)].push_back(c);
  std::vector<LinkDiagram> out;
  for (const auto& [root, members] : groups) {
    std::vector<int> labels;
    for (int c : members) {
      for (int l : crossings_[c].slots) labels.push_back(l);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<Crossing> xs;
    for (int c : members) {
      Crossing y = crossings_[c];
      for (int& l : y.slots) l = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
      xs.push_back(y);
    }
    out.emplace_back(std::move(xs), 0);
  }
  for (int i = 0; i < free_loops_; ++i) out.emplace_back(std::vector<Crossing>{}, 1);
  return out;
}

LinkDiagram LinkDiagram::relabelled_consecutively() const {
  std::vector<int> fresh(num_labels(), -1);
  int next = 0;
  for (const auto& cycle : component_cycles()) {
    for (int l : cycle) fresh[l] = next++;
  }
  std::vector<Crossing> xs = crossings_;
  for (auto& x : xs) {
    for (int& l : x.slots) l = fresh[l];
  }
  return LinkDiagram(std::move(xs), free_loops_);
}

std::string LinkDiagram::canonical_code() const {
  const auto pieces = split();
  if (pieces.size() > 1) {
    std::vector<std::string> codes;
    for (const auto& p : pieces) codes.push_back(p.canonical_code());
    std::sort(codes.begin(), codes.end());
    std::string out = "{";
    for (const auto& c : codes) out += c + "|";
    return out + "}";
  }
  if (num_crossings() == 0) return "O" + std::to_string(free_loops_);

  const int labels = num_labels();
  std::vector<CodeTuple> best;
  for (int start = 0; start < labels; ++start) {
    std::vector<int> fresh(labels, -1);
    std::vector<int> touched;  // crossings in order of first contact
    std::vector<bool> seen_crossing(num_crossings(), false);
    int next = 0;
    int from = start;
    while (from != -1) {
      for (int l = from; fresh[l] == -1; l = successor(l)) {
        fresh[l] = next++;
        const int c = entry_[l].first;
        if (!seen_crossing[c]) {
          seen_crossing[c] = true;
          touched.push_back(c);
        }
      }
      from = -1;
      for (int c : touched) {
        for (int l : crossings_[c].slots) {
          if (fresh[l] == -1) {
            from = l;
            break;
          }
        }
        if (from != -1) break;
      }
    }
    std::vector<CodeTuple> code;
    for (const auto& x : crossings_) {
      code.push_back({static_cast<int>(x.sign), fresh[x.slots[0]], fresh[x.slots[1]], fresh[x.slots[2]],
                      fresh[x.slots[3]]});
    }
    std::sort(code.begin(), code.end());
    if (best.empty() || code < best) best = std::move(code);
  }
  std::ostringstream os;
  for (const auto& t : best) {
    os << (t[0] > 0 ? '+' : '-') << t[1] << '.' << t[2] << '.' << t[3] << '.' << t[4] << ';';
  }
  return os.str();
}

std::string to_pd_text(const LinkDiagram& d) {
  const LinkDiagram r = d.relabelled_consecutively();
  std::ostringstream os;
  os << "PD[";
  bool first = true;
  for (const auto& x : r.crossings()) {
    if (!first) os << ", ";
    first = false;
    os << "X[" << x.slots[0] + 1 << ',' << x.slots[1] + 1 << ',' << x.slots[2] + 1 << ',' << x.slots[3] + 1 << ']';
  }
  for (int i = 0; i < r.free_loops(); ++i) {
    if (!first) os << ", ";
    first = false;
    os << "Loop[" << r.num_labels() + i + 1 << ']';
  }
  os << ']';
  return os.str();
}

LinkDiagram parse_pd_text(std::string_view text) {
  const std::string s(text);
  const std::regex outer(R"(^\s*PD\s*\[(.*)\]\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, outer)) throw InputError("PD text must look like PD[...]");
  const std::string body = m[1];
  const std::regex item(R"(\s*(X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]|Loop\s*\[\s*(\d+)\s*\])\s*(,|$))");
  std::vector<std::array<int, 4>> raw;
  int loops = 0;
  auto it = body.cbegin();
  while (it != body.cend()) {
    std::smatch im;
    if (!std::regex_search(it, body.cend(), im, item, std::regex_constants::match_continuous)) {
      throw InputError("unreadable PD entry near '" + std::string(it, body.cend()) + "'");
    }
    if (im[6].matched) {
      ++loops;
    } else {
      raw.push_back({std::stoi(im[2]), std::stoi(im[3]), std::stoi(im[4]), std::stoi(im[5])});
    }
    it = im[0].second;
    if (im[0].length() == 0) break;
  }

  std::vector<int> labels;
  for (const auto& x : raw) labels.insert(labels.end(), x.begin(), x.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() != 2 * raw.size()) throw InputError("PD code must use each arc label exactly twice");
  const int n = static_cast<int>(raw.size());
  std::vector<std::array<int, 4>> xs(n);
  std::vector<std::vector<std::pair<int, int>>> occurrences(labels.size());
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      xs[c][k] = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), raw[c][k]) - labels.begin());
      occurrences[xs[c][k]].push_back({c, k});
    }
  }
  for (const auto& occ : occurrences) {
    if (occ.size() != 2) throw InputError("PD code must use each arc label exactly twice");
  }

  // +1 entering, -1 leaving, 0 unknown.
  std::vector<std::array<int, 4>> dir(n, {1, 0, -1, 0});
  auto assign = [&](int c, int k, int value) {
    if (dir[c][k] == value) return false;
    if (dir[c][k] != 0) throw InputError("PD code has inconsistent orientations");
    dir[c][k] = value;
    return true;
  };
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& occ : occurrences) {
        const auto [c0, k0] = occ[0];
        const auto [c1, k1] = occ[1];
        if (dir[c0][k0] != 0) changed |= assign(c1, k1, -dir[c0][k0]);
        if (dir[c1][k1] != 0) changed |= assign(c0, k0, -dir[c1][k1]);
      }
      for (int c = 0; c < n; ++c) {
        if (dir[c][1] != 0) changed |= assign(c, 3, -dir[c][1]);
        if (dir[c][3] != 0) changed |= assign(c, 1, -dir[c][3]);
      }
    }
  };
  propagate();
  for (int c = 0; c < n; ++c) {
    if (dir[c][1] != 0) continue;
    const int j = raw[c][1];
    const int l = raw[c][3];
    assign(c, 3, (j - l == 1 || l - j > 1) ? 1 : -1);
    propagate();
  }
  std::vector<Crossing> crossings;
  for (int c = 0; c < n; ++c) crossings.push_back({xs[c], dir[c][3] == 1 ? Sign::Positive : Sign::Negative});
  return LinkDiagram(std::move(crossings), loops);
}

}  // namespace homflytop
