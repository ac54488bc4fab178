#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace homflytop {

/// Subset of a fixed universe of edge identifiers {0, ..., universe-1}.
/// Shared by primal and dual edge sets, which use the same identifiers.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe) : bits_(universe, false) {}

  static EdgeSet full(int universe) {
    EdgeSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  static EdgeSet of(int universe, std::span<const int> ids) {
    EdgeSet s(universe);
    for (int id : ids) s.insert(id);
    return s;
  }

  static EdgeSet of(int universe, std::initializer_list<int> ids) {
    return of(universe, std::span<const int>(ids.begin(), ids.size()));
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int id) const { return bits_[id]; }

  void insert(int id) {
    auto ref = bits_[id];
    if (!ref) {
      ref = true;
      ++count_;
    }
  }

  void erase(int id) {
    auto ref = bits_[id];
    if (ref) {
      ref = false;
      --count_;
    }
  }

  EdgeSet with(int id) const {
    EdgeSet copy = *this;
    copy.insert(id);
    return copy;
  }

  EdgeSet complement() const {
    EdgeSet out(universe());
    for (int i = 0; i < universe(); ++i) {
      if (!contains(i)) out.insert(i);
    }
    return out;
  }

  bool is_subset_of(const EdgeSet& other) const {
    for (int i = 0; i < universe(); ++i) {
      if (contains(i) && !other.contains(i)) return false;
    }
    return true;
  }

  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int i = 0; i < universe(); ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) { return a.bits_ < b.bits_; }

 private:
  std::vector<bool> bits_;
  int count_ = 0;
};

}  // namespace homflytop
