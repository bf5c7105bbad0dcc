#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gordian/diagram.hpp"

namespace gordian {

/// Dowker-Thistlethwaite code.  Entry i pairs odd label 2i+1 with even label
/// |entries[i]|; an entry is negative when the even-labelled passage is the
/// over-strand.  The empty code stands for the crossingless unknot.
struct DtCode {
  std::vector<int> entries;

  int size() const noexcept { return static_cast<int>(entries.size()); }
  friend bool operator==(const DtCode&, const DtCode&) = default;
};

enum class NotationErrorKind { MalformedSyntax, OddEntry, DuplicateMagnitude, NonRealizable, EmptyDiagram };

class NotationError : public std::runtime_error {
public:
  NotationError(NotationErrorKind kind, const std::string& detail);
  NotationErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

private:
  NotationErrorKind kind_;
  std::string detail_;
};

std::string_view to_string(NotationErrorKind kind);

/// Accepts "[a,b,...]" or "DT:[a,b,...]" with optional whitespace.
DtCode parse_dt(std::string_view text);

/// Canonical text "[a,b,...]" (no spaces, no prefix).
std::string to_string(const DtCode& code);

/// Realizes the code as a planar diagram, or throws NonRealizable.
/// The crossing paired with label 1 is drawn with the even strand crossing
/// from right to left; a code determines its diagram up to this reflection.
PlanarDiagram dt_to_diagram(const DtCode& code);

/// A DT code whose realization is the given diagram (up to basepoint and,
/// for diagrams with several realizations of the same code, up to the choice
/// dt_to_diagram makes).  Throws EmptyDiagram on the crossingless diagram.
DtCode emit_dt(const PlanarDiagram& d);

/// The DT code read off from the passage entering at `start`.
DtCode dt_from_start(const PlanarDiagram& d, Dart start);

/// Convenience: parse_dt then dt_to_diagram.
PlanarDiagram diagram_from_text(std::string_view text);

}  // namespace gordian
