#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gordian/atlas.hpp"
#include "gordian/moves.hpp"
#include "gordian/notation.hpp"

namespace gordian {

class CertificateFormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class StepKind { Start, Change, Substitute };

struct Step {
  StepKind kind = StepKind::Start;
  DtCode dt;                                 // Start, Substitute
  int index = -1;                            // Change
  std::optional<std::string> expected_name;  // Change
  std::string annotation;
};

enum class SumMirror { None, Left, Right, Both };

std::string_view to_string(SumMirror m);

struct ClaimedSum {
  std::string left;
  std::string right;
  SumMirror mirror = SumMirror::None;
  std::optional<int> signature;      // asserted signature of the constructed sum
  std::optional<int> abs_signature;  // asserted |signature| of the constructed sum
};

struct Certificate {
  std::string id;
  std::string title;
  std::optional<ClaimedSum> sum;  // absent for a plain unknotting witness
  int claimed_bound = 0;
  std::vector<Step> steps;
};

/// Grammar in docs/certificate-format.md.
Certificate parse_certificate(std::string_view text, const std::string& source = "<certificate>");
Certificate load_certificate(const std::filesystem::path& path);
std::string render_certificate(const Certificate& c);

/// The certificates compiled into the library (C3, C4, C5 by file name).
std::vector<Certificate> bundled_certificates();
Certificate bundled_certificate(std::string_view id);

/// The diagram of a connected sum built from table entries as the claim states.
PlanarDiagram claimed_sum_diagram(const ClaimedSum& sum, const KnotTable& table);

enum class FailureKind { None, StepMismatch, UnknotNotReached, TableMissingName, InvalidCertificate };

std::string_view to_string(FailureKind k);

struct StepReport {
  std::string description;
  std::string annotation;
  int crossings = 0;
  Fingerprint fingerprint;
  std::string identification;
  bool passed = true;
  std::string note;
};

struct VerificationReport {
  std::string id;
  std::string title;
  int bound = 0;
  bool passed = false;
  FailureKind failure = FailureKind::None;
  std::string failure_detail;
  bool has_sum = false;
  bool sum_matches_start = false;
  Fingerprint sum_fingerprint;
  std::vector<StepReport> steps;
  SimplifyReport final_simplification;

  /// "C4: u(4_1#9_10) <= 3 certified at invariant level, bound 3: PASS"
  std::string verdict_line() const;
  /// Multi-line human-readable account of every step.
  std::string details() const;
};

VerificationReport verify_certificate(const Certificate& c, const KnotTable& table,
                                      int budget = kDefaultSimplifyBudget);

enum class AdditivityKind { StrictFailureOfAdditivity, ConditionalOnRange, Inconclusive };

std::string_view to_string(AdditivityKind k);

struct AdditivityVerdict {
  AdditivityKind kind = AdditivityKind::Inconclusive;
  int bound = 0;
  UnknottingRange left;
  UnknottingRange right;
  int sum_low = 0;   // u(left) + u(right), lowest tabulated values
  int sum_high = 0;  // u(left) + u(right), highest tabulated values
  int murasugi_floor = 0;

  std::string to_string() const;
};

/// Compares the claimed bound with u(left) + u(right) from the table.
/// Throws TableError when the sum is absent or a summand lacks unknotting data.
AdditivityVerdict summarize_additivity(const Certificate& c, const KnotTable& table);

/// Fingerprint, simplifying first when the diagram is above the invariant cap.
Fingerprint fingerprint_any_size(const PlanarDiagram& d);

}  // namespace gordian
