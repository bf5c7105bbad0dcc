#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gordian/atlas.hpp"
#include "gordian/certify.hpp"
#include "gordian/diagram.hpp"
#include "gordian/moves.hpp"

namespace gordian {

class SearchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  int depth = 1;                                 // max crossing changes
  int simplify_budget = kDefaultSimplifyBudget;  // moves per node
  std::uint64_t rng_seed = 0;
  int max_nodes = 100000;
  const KnotTable* table = nullptr;  // nullptr: bundled table

  const KnotTable& knot_table() const { return table ? *table : KnotTable::bundled(); }
  /// Throws SearchError on a negative depth or a non-positive cap.
  void validate() const;
};

struct SearchOutcome {
  std::optional<int> bound_found;
  std::optional<Certificate> witness;
  long nodes_explored = 0;
  bool exhausted = false;  // max_nodes was reached before the search finished
  int trial = -1;          // symbiont_search only
  std::string summary;     // symbiont_search only
};

/// Breadth-first over (change a crossing, simplify) up to cfg.depth changes.
/// A missing bound is not a lower bound.
SearchOutcome unknotting_upper_bound(const PlanarDiagram& d, const SearchConfig& cfg);

struct SubsetCount {
  long count = 0;
  std::vector<std::vector<int>> flagged;  // trivial fingerprint but no unknot certificate
};

/// k-subsets of crossings whose simultaneous change gives a certified unknot.
/// Throws SearchError when k is negative or exceeds the crossing count.
SubsetCount count_unknotting_subsets(const PlanarDiagram& d, int k, const SearchConfig& cfg);

struct CrossingChangeResult {
  int crossing = 0;
  bool unknot = false;
  IdentifyResult identification;
};

struct AdjacencyReport {
  std::vector<Identification> knots;  // distinct nontrivial results, sorted by name
  std::vector<int> unknot_crossings;
  std::vector<int> unidentified_crossings;  // knotted, or unresolved, with no table match
  std::vector<CrossingChangeResult> per_crossing;

  std::vector<std::string> names() const;
};

AdjacencyReport adjacent_knots(const PlanarDiagram& d, const SearchConfig& cfg);

/// Seeded random R1+/R2+/R3 moves, kinds weighted 1:2:2, sites uniform.
PlanarDiagram random_diagram(const PlanarDiagram& d, int inflation, std::mt19937_64& rng);

struct SymbiontConfig {
  SearchConfig search;
  int inflation = 4;
  SumMirror mirror = SumMirror::None;
  std::optional<PlanarDiagram> injected;  // replaces the random diagram of trial 0
  std::ostream* log = nullptr;            // one line per trial
};

/// Accepted trials only, in trial order.  Throws TableError on unknown names
/// or missing unknotting data.
std::vector<SearchOutcome> symbiont_search(const std::string& left, const std::string& right, int trials,
                                           const SymbiontConfig& cfg);

}  // namespace gordian
