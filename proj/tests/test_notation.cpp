#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gordian/atlas.hpp"
#include "gordian/invariants.hpp"
#include "gordian/notation.hpp"
#include "oracles.hpp"

using namespace gordian;

namespace {

const char* kStarCode = "[6,-10,24,20,-4,-22,-8,26,28,30,-12,-2,14,18,16]";

NotationErrorKind kind_of(std::string_view text) {
  try {
    dt_to_diagram(parse_dt(text));
  } catch (const NotationError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return NotationErrorKind::MalformedSyntax;
}

}  // namespace

TEST(parse_dt, fifteen_crossing_code_has_fifteen_entries) {
  DtCode c = parse_dt(kStarCode);
  EXPECT_EQ(c.entries.size(), 15u);
  EXPECT_EQ(c.entries[1], -10);
}

TEST(parse_dt, accepts_prefix_and_spacing) {
  EXPECT_EQ(parse_dt("DT:[4, 6, 2]").entries, (std::vector<int>{4, 6, 2}));
  EXPECT_EQ(parse_dt("  dt: [ 4,6 ,2 ] ").entries, (std::vector<int>{4, 6, 2}));
  EXPECT_TRUE(parse_dt("[]").entries.empty());
}

TEST(parse_dt, error_kinds) {
  EXPECT_EQ(kind_of("[3,4]"), NotationErrorKind::OddEntry);
  EXPECT_EQ(kind_of("[4,4]"), NotationErrorKind::DuplicateMagnitude);
  EXPECT_EQ(kind_of("[4,-4]"), NotationErrorKind::DuplicateMagnitude);
  EXPECT_EQ(kind_of("[0,2]"), NotationErrorKind::DuplicateMagnitude);
  EXPECT_EQ(kind_of("[4,8]"), NotationErrorKind::DuplicateMagnitude);
  EXPECT_EQ(kind_of("4,6,2"), NotationErrorKind::MalformedSyntax);
  EXPECT_EQ(kind_of("[4,6,x]"), NotationErrorKind::MalformedSyntax);
  EXPECT_EQ(kind_of("[4,,6]"), NotationErrorKind::MalformedSyntax);
  EXPECT_EQ(kind_of("[4,6,2]]"), NotationErrorKind::MalformedSyntax);
  EXPECT_EQ(kind_of(""), NotationErrorKind::MalformedSyntax);
}

TEST(parse_dt, odd_entry_reported_before_duplicates) {
  EXPECT_EQ(kind_of("[3,3]"), NotationErrorKind::OddEntry);
}

TEST(parse_dt, text_round_trip_is_identity) {
  for (const auto& e : KnotTable::bundled().entries()) {
    std::string text = to_string(e.dt);
    EXPECT_EQ(to_string(parse_dt(text)), text);
  }
  EXPECT_EQ(to_string(parse_dt(kStarCode)), kStarCode);
}

TEST(dt_to_diagram, fifteen_entry_code_gives_fifteen_crossings) {
  PlanarDiagram d = dt_to_diagram(parse_dt(kStarCode));
  EXPECT_EQ(d.size(), 15);
  EXPECT_EQ(d.passages().size(), 30u);
}

TEST(dt_to_diagram, single_kink) {
  PlanarDiagram d = dt_to_diagram(parse_dt("[2]"));
  EXPECT_EQ(d.size(), 1);
  EXPECT_EQ(fingerprint(d), Fingerprint{});
}

TEST(dt_to_diagram, empty_code_is_the_unknot) { EXPECT_TRUE(dt_to_diagram(parse_dt("[]")).empty()); }

// No length-3 pairing fails to embed, so the regression input is the
// smallest failing one the oracle finds.
TEST(dt_to_diagram, every_length_three_pattern_is_realizable) {
  std::vector<int> mags{2, 4, 6};
  int checked = 0;
  do {
    for (int signs = 0; signs < 8; ++signs) {
      DtCode c;
      for (int i = 0; i < 3; ++i) c.entries.push_back((signs >> i) & 1 ? -mags[i] : mags[i]);
      EXPECT_TRUE(oracle::realizable(c)) << to_string(c);
      EXPECT_NO_THROW(dt_to_diagram(c)) << to_string(c);
      ++checked;
    }
  } while (std::next_permutation(mags.begin(), mags.end()));
  EXPECT_EQ(checked, 48);
}

TEST(dt_to_diagram, non_realizable_regression) {
  DtCode c = parse_dt("[4,6,8,10,2]");
  EXPECT_FALSE(oracle::realizable(c));
  EXPECT_EQ(kind_of("[4,6,8,10,2]"), NotationErrorKind::NonRealizable);
  EXPECT_EQ(kind_of("[-4,6,-8,10,2]"), NotationErrorKind::NonRealizable);
}

TEST(dt_to_diagram, agrees_with_embedding_oracle_up_to_six) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> mags(n);
    for (int i = 0; i < n; ++i) mags[i] = 2 * (i + 1);
    int failing = 0;
    do {
      DtCode c{mags};
      bool produced = true;
      try {
        dt_to_diagram(c);
      } catch (const NotationError& e) {
        EXPECT_EQ(e.kind(), NotationErrorKind::NonRealizable);
        produced = false;
      }
      EXPECT_EQ(produced, oracle::realizable(c)) << to_string(c);
      failing += !produced;
    } while (std::next_permutation(mags.begin(), mags.end()));
    if (n <= 4) EXPECT_EQ(failing, 0) << n;
    if (n == 5) EXPECT_EQ(failing, 7);
  }
}

TEST(emit_dt, trefoil_round_trip) {
  PlanarDiagram d = diagram_from_text("[4,6,2]");
  DtCode c = emit_dt(d);
  EXPECT_EQ(c.entries.size(), 3u);
  EXPECT_EQ(fingerprint(dt_to_diagram(c)), fingerprint(d));
}

TEST(emit_dt, eight_crossing_code_is_8_14) {
  PlanarDiagram d = diagram_from_text("[-10,-6,-14,-12,-16,-8,-2,-4]");
  DtCode c = emit_dt(d);
  EXPECT_EQ(c.entries.size(), 8u);
  EXPECT_EQ(fingerprint(dt_to_diagram(c)), KnotTable::bundled().at("8_14").fingerprint);
}

TEST(emit_dt, crossingless_diagram_has_no_code) {
  try {
    emit_dt(PlanarDiagram{});
    FAIL();
  } catch (const NotationError& e) {
    EXPECT_EQ(e.kind(), NotationErrorKind::EmptyDiagram);
  }
}

TEST(emit_dt, reproduces_table_codes_up_to_fingerprint) {
  for (const auto& e : KnotTable::bundled().entries()) {
    if (e.diagram.empty()) continue;
    PlanarDiagram back = dt_to_diagram(emit_dt(e.diagram));
    EXPECT_EQ(back.size(), e.diagram.size()) << e.name;
    EXPECT_EQ(fingerprint(back), e.fingerprint) << e.name;
  }
}

TEST(emit_dt, start_choice_does_not_change_the_knot) {
  PlanarDiagram d = diagram_from_text(kStarCode);
  Fingerprint fp = fingerprint(d);
  for (Dart start : d.passages()) {
    DtCode c = dt_from_start(d, start);
    PlanarDiagram back = dt_to_diagram(c);
    EXPECT_EQ(fingerprint(back).determinant, fp.determinant);
    EXPECT_EQ(std::abs(fingerprint(back).signature), std::abs(fp.signature));
  }
}
