#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace gordian {

/// A dart is one end of an edge at a crossing: dart = 4 * crossing + slot.
/// Slots 0..3 run counterclockwise around the crossing; slots s and s+2 lie on
/// the same strand.
using Dart = int;

constexpr int crossing_of(Dart d) noexcept { return d >> 2; }
constexpr int slot_of(Dart d) noexcept { return d & 3; }
constexpr Dart make_dart(int crossing, int slot) noexcept { return 4 * crossing + slot; }
constexpr Dart opposite_slot(Dart d) noexcept { return make_dart(crossing_of(d), (slot_of(d) + 2) & 3); }

/// One crossing of an oriented knot diagram.
///
/// The strand through slots 0 and 2 always enters at slot 0 and leaves at
/// slot 2.  The other strand runs 1 -> 3 when dir13 is set, else 3 -> 1.
struct Crossing {
  std::array<Dart, 4> adj{};  // adj[s]: the dart at the other end of the edge leaving slot s
  bool over02 = true;         // the 0-2 strand passes over
  bool dir13 = true;

  /// +1 or -1 by the right-hand rule.
  int sign() const noexcept { return (over02 ? 1 : -1) * (dir13 ? 1 : -1); }
  bool is_incoming(int slot) const noexcept {
    switch (slot & 3) {
      case 0: return true;
      case 2: return false;
      case 1: return dir13;
      default: return !dir13;
    }
  }
  bool is_over(int slot) const noexcept { return ((slot & 1) == 0) == over02; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class DiagramError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Position of a crossing in DT-entry order.
struct CrossingRef {
  int index = 0;
};

/// Knot diagram stored as a rotation system with over/under data.
///
/// Crossings are numbered so that crossing i is met at the (2i)-th passage
/// (0-based) of the traversal starting at origin(); this is the order of the
/// entries of the DT code.  A diagram with no crossings is the round unknot.
class PlanarDiagram {
public:
  PlanarDiagram() = default;

  /// Validates (involutive adjacency, orientation consistency, one component,
  /// planarity) and renumbers crossings into traversal order starting from
  /// the incoming dart `origin`.
  static PlanarDiagram from_crossings(std::vector<Crossing> crossings, Dart origin);

  /// Builds from a KnotInfo-style PD code: each X[i,j,k,l] lists edge labels
  /// counterclockwise starting from the incoming under-strand, and edge
  /// labels increase along the orientation (cyclically).
  static PlanarDiagram from_pd(const std::vector<std::array<int, 4>>& pd);

  int size() const noexcept { return static_cast<int>(crossings_.size()); }
  bool empty() const noexcept { return crossings_.empty(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }
  Dart origin() const noexcept { return origin_; }

  Dart adjacent(Dart d) const { return crossings_[crossing_of(d)].adj[slot_of(d)]; }
  bool is_incoming(Dart d) const { return crossings_[crossing_of(d)].is_incoming(slot_of(d)); }
  bool is_over(Dart d) const { return crossings_[crossing_of(d)].is_over(slot_of(d)); }

  /// The incoming dart of the passage following the passage entering at `in`.
  Dart next_passage(Dart in) const { return adjacent(opposite_slot(in)); }

  /// Incoming darts of all 2n passages, starting at origin().
  std::vector<Dart> passages() const;

  /// Faces as lists of corners.  Corner make_dart(c, k) is the angle between
  /// slots k and k+1 of crossing c.  Each face is listed in walking order.
  std::vector<std::vector<Dart>> faces() const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

private:
  std::vector<Crossing> crossings_;
  Dart origin_ = 0;
};

/// The corner following `corner` along its face.
Dart next_corner(const PlanarDiagram& d, Dart corner);

/// Swaps over and under at one crossing.
PlanarDiagram change_crossing(const PlanarDiagram& d, CrossingRef c);

/// Swaps over and under at every crossing.
PlanarDiagram mirror(const PlanarDiagram& d);

/// Cuts the last edge of a's traversal and the first edge of b's and joins
/// the loose ends, keeping both orientations.
PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b);

/// Same knot diagram traversed the other way.
PlanarDiagram reverse_orientation(const PlanarDiagram& d);

int writhe(const PlanarDiagram& d);

/// Signed Gauss word read from the passage entering at `start`: one entry per
/// passage, packing (first-visit number, over bit, sign bit).
std::vector<int> gauss_word(const PlanarDiagram& d, Dart start);

/// Lexicographically least gauss_word over all starting passages.  Equal
/// keys mean the diagrams agree up to relabelling and choice of basepoint.
std::vector<int> canonical_key(const PlanarDiagram& d);

}  // namespace gordian
