#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "homflytop/blocks.hpp"

namespace homflytop {

/// X[i, j, k, l]: arc labels counterclockwise starting at the incoming
/// under-strand, which leaves through k. The over-strand runs l -> j when the
/// crossing is positive and j -> l when it is negative.
struct Crossing {
  std::array<int, 4> slots{};
  Sign sign = Sign::Positive;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented link diagram in planar-diagram form. Arc labels are 0..L-1 and
/// each appears at exactly two crossing slots, once entering and once
/// leaving. Crossingless unknotted components are counted separately.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Validates labels; throws InputError on malformed codes.
  LinkDiagram(std::vector<Crossing> crossings, int free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_labels() const { return 2 * num_crossings(); }
  int free_loops() const { return free_loops_; }

  /// Crossing index and slot where `label` enters / leaves a crossing.
  std::pair<int, int> entry_of(int label) const { return entry_[label]; }
  std::pair<int, int> exit_of(int label) const { return exit_[label]; }
  /// Label leaving the crossing that `label` enters, along the same strand.
  int successor(int label) const;
  bool entry_is_under(int label) const { return entry_[label].second == 0; }

  /// Label cycles of the components threaded through crossings; free loops
  /// are not listed.
  std::vector<std::vector<int>> component_cycles() const;
  int num_components() const;
  int seifert_count() const;
  int writhe() const;

  LinkDiagram changed(int crossing) const;
  LinkDiagram smoothed(int crossing) const;
  LinkDiagram mirrored() const;

  /// Identical strings exactly for diagrams equal up to relabelling arcs and
  /// reordering crossings.
  std::string canonical_code() const;

  /// Connected pieces, each relabelled from 0; a free loop is its own piece.
  std::vector<LinkDiagram> split() const;

  /// Relabels arcs so each component is numbered consecutively, components
  /// in order of their smallest current label.
  LinkDiagram relabelled_consecutively() const;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<std::pair<int, int>> entry_;
  std::vector<std::pair<int, int>> exit_;
};

/// Slot through which the strand entering at `slot` leaves.
int opposite_slot(int slot);
/// True when the slot is an entering end for a crossing of the given sign.
bool slot_is_entry(int slot, Sign sign);

/// `PD[X[1,2,3,4], ..., Loop[9]]` with 1-based labels numbered along
/// components.
std::string to_pd_text(const LinkDiagram& d);
/// Accepts the format above; crossing signs are inferred from the labels'
/// orientation, falling back to consecutive numbering on components that
/// never pass under.
LinkDiagram parse_pd_text(std::string_view text);

}  // namespace homflytop
