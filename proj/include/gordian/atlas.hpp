#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/invariants.hpp"
#include "gordian/notation.hpp"

namespace gordian {

class TableError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Known unknotting number: exact when low == high.
struct UnknottingRange {
  int low = 0;
  int high = 0;

  bool exact() const noexcept { return low == high; }
  /// "3" or "2..3"
  std::string to_string() const;
  static UnknottingRange parse(std::string_view text);

  friend bool operator==(const UnknottingRange&, const UnknottingRange&) = default;
};

struct KnotTableEntry {
  std::string name;
  DtCode dt;
  std::optional<UnknottingRange> u;
  std::vector<std::string> aliases;
  PlanarDiagram diagram;
  Fingerprint fingerprint;
};

enum class Chirality { AsTabulated, Mirrored, Amphichiral };

std::string_view to_string(Chirality c);

struct Match {
  std::string name;
  Chirality chirality = Chirality::AsTabulated;

  friend bool operator==(const Match&, const Match&) = default;
};

struct Identification {
  std::string name;  // first match in table order
  Chirality chirality = Chirality::AsTabulated;
  std::vector<std::string> collision_list;  // every matching name, table order
  std::vector<Match> matches;

  /// "8_14", "9_10 (mirror)", or "10_41|10_94" when several names match.
  std::string label() const;
};

/// identify() result: either a match, or none; the fingerprint is always set.
struct IdentifyResult {
  std::optional<Identification> match;
  Fingerprint fingerprint;
  int crossings_used = 0;  // size of the diagram the fingerprint was taken from

  bool matched() const noexcept { return match.has_value(); }
  std::string label() const;
};

class KnotTable {
public:
  /// Rows "name,[dt],u[,alias=NAME]"; '#' starts a comment line.
  static KnotTable parse(std::string_view text, const std::string& source = "<table>");
  static KnotTable load(const std::filesystem::path& path);

  /// The table compiled into the library.
  static const KnotTable& bundled();

  const std::vector<KnotTableEntry>& entries() const noexcept { return entries_; }
  /// Lookup by name or alias; nullptr when absent.
  const KnotTableEntry* find(std::string_view name) const;
  /// Lookup by name or alias; throws TableError when absent.
  const KnotTableEntry& at(std::string_view name) const;

  std::vector<Match> lookup(const Fingerprint& fp) const;

private:
  std::vector<KnotTableEntry> entries_;
};

/// Path from the environment variable GORDIAN_TABLE, if set.
std::optional<std::filesystem::path> table_path_from_environment();

/// Matches against tabulated and mirrored fingerprints.  Diagrams above the
/// invariant cap are simplified first.
IdentifyResult identify(const PlanarDiagram& d, const KnotTable& table);
IdentifyResult identify_fingerprint(const Fingerprint& fp, const KnotTable& table);

}  // namespace gordian
