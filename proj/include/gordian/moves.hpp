#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/invariants.hpp"

namespace gordian {

enum class MoveKind { R1Minus, R1Plus, R2Minus, R2Plus, R3 };

std::string_view to_string(MoveKind kind);

/// A Reidemeister move at a particular site.
///
///   R1-, R2-, R3: `a` is a corner of the monogon, bigon or triangle.
///   R1+: `a` is the outgoing dart of the edge that receives the kink (-1 on
///        the crossingless diagram); `side` picks the side of the edge the
///        loop lies on and `over` whether the entering strand passes over.
///   R2+: `a` and `b` are outgoing darts of two edges on a common face, read
///        in the face walk; a finger of edge b is pushed across edge a,
///        passing over it when `over` is set.
struct Move {
  MoveKind kind = MoveKind::R1Minus;
  Dart a = -1;
  Dart b = -1;
  bool over = false;
  int side = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

std::string describe(const Move& m);

class StaleMove : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Crossings touched by the move (empty for the increasing moves).
std::vector<int> move_crossings(const PlanarDiagram& d, const Move& m);

/// All R1-, R2- and R3 moves, ordered by lowest crossing index involved.
std::vector<Move> find_moves(const PlanarDiagram& d);
std::vector<Move> find_reductions(const PlanarDiagram& d);
std::vector<Move> find_r3_moves(const PlanarDiagram& d);

/// Sites for the increasing moves.
std::vector<Move> r1_plus_sites(const PlanarDiagram& d);
std::vector<Move> r2_plus_sites(const PlanarDiagram& d);

bool is_applicable(const PlanarDiagram& d, const Move& m);

/// Throws StaleMove if the move does not apply to d.
PlanarDiagram apply_move(const PlanarDiagram& d, const Move& m);

constexpr int kDefaultSimplifyBudget = 10000;
constexpr int kExcursionWidth = 4;

struct SimplifyReport {
  int initial_crossings = 0;
  int final_crossings = 0;
  int moves_applied = 0;
  bool budget_exhausted = false;
};

struct SimplifyResult {
  PlanarDiagram diagram;
  SimplifyReport report;
};

/// Greedy R1-/R2- descent, then best-first exploration through R3 and R2+
/// moves among diagrams with at most best + kExcursionWidth crossings.
SimplifyResult simplify(const PlanarDiagram& d, int budget = kDefaultSimplifyBudget);

enum class UnknotVerdict { Unknot, Unknown };

struct UnknotCertification {
  UnknotVerdict verdict = UnknotVerdict::Unknown;
  bool knotted = false;  // an invariant already rules out the unknot
  SimplifyReport report;
};

UnknotCertification certify_unknot(const PlanarDiagram& d, int budget = kDefaultSimplifyBudget);

}  // namespace gordian
