#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "gordian/notation.hpp"
#include "gordian/search.hpp"

using namespace gordian;

namespace {

const KnotTable& table() { return KnotTable::bundled(); }
const PlanarDiagram& diagram(const char* name) { return table().at(name).diagram; }

const char* kStarCode = "[6,-10,24,20,-4,-22,-8,26,28,30,-12,-2,14,18,16]";

}  // namespace

TEST(search_config, validation) {
  SearchConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.depth = -1;
  EXPECT_THROW(cfg.validate(), SearchError);
  cfg = {};
  cfg.simplify_budget = 0;
  EXPECT_THROW(cfg.validate(), SearchError);
  cfg = {};
  cfg.max_nodes = 0;
  EXPECT_THROW(cfg.validate(), SearchError);
}

TEST(unknotting_upper_bound, unknot_needs_no_changes) {
  SearchConfig cfg;
  cfg.depth = 0;
  SearchOutcome o = unknotting_upper_bound(PlanarDiagram{}, cfg);
  ASSERT_TRUE(o.bound_found);
  EXPECT_EQ(*o.bound_found, 0);
  ASSERT_TRUE(o.witness);
  EXPECT_TRUE(verify_certificate(*o.witness, table()).passed);
}

TEST(unknotting_upper_bound, unknotting_number_one_knots) {
  SearchConfig cfg;
  cfg.depth = 1;
  for (const char* code : {"[-10,-6,-14,-12,-16,-8,-2,-4]", "[14,8,18,12,-16,4,2,20,-10,6]",
                           "[-16,-14,-24,-18,-22,-20,-2,-4,-6,-8,-10,-12]"}) {
    SearchOutcome o = unknotting_upper_bound(diagram_from_text(code), cfg);
    ASSERT_TRUE(o.bound_found) << code;
    EXPECT_EQ(*o.bound_found, 1) << code;
    ASSERT_TRUE(o.witness);
    EXPECT_TRUE(verify_certificate(*o.witness, table()).passed) << code;
  }
}

TEST(unknotting_upper_bound, depth_zero_on_a_knot_finds_nothing) {
  SearchConfig cfg;
  cfg.depth = 0;
  SearchOutcome o = unknotting_upper_bound(diagram("3_1"), cfg);
  EXPECT_FALSE(o.bound_found);
  EXPECT_FALSE(o.witness);
  EXPECT_FALSE(o.exhausted);
}

TEST(unknotting_upper_bound, node_cap_is_reported) {
  SearchConfig cfg;
  cfg.depth = 3;
  cfg.max_nodes = 5;
  SearchOutcome o = unknotting_upper_bound(diagram("9_10"), cfg);
  EXPECT_TRUE(o.exhausted);
  EXPECT_FALSE(o.bound_found);
  EXPECT_LE(o.nodes_explored, 5);
}

TEST(unknotting_upper_bound, two_changes_for_5_1) {
  SearchConfig cfg;
  cfg.depth = 2;
  SearchOutcome o = unknotting_upper_bound(diagram("5_1"), cfg);
  ASSERT_TRUE(o.bound_found);
  EXPECT_EQ(*o.bound_found, 2);
  EXPECT_TRUE(verify_certificate(*o.witness, table()).passed);
}

TEST(count_unknotting_subsets, known_counts) {
  SearchConfig cfg;
  EXPECT_EQ(count_unknotting_subsets(diagram("5_1"), 2, cfg).count, 10);
  EXPECT_EQ(count_unknotting_subsets(diagram("8_2"), 2, cfg).count, 5);
  SubsetCount six = count_unknotting_subsets(diagram("10_6"), 3, cfg);
  EXPECT_EQ(six.count, 35);
  EXPECT_TRUE(six.flagged.empty());
}

TEST(count_unknotting_subsets, trivial_sizes) {
  SearchConfig cfg;
  EXPECT_EQ(count_unknotting_subsets(diagram("3_1"), 1, cfg).count, 3);
  EXPECT_EQ(count_unknotting_subsets(diagram("3_1"), 0, cfg).count, 0);
  EXPECT_EQ(count_unknotting_subsets(PlanarDiagram{}, 0, cfg).count, 1);
  EXPECT_THROW(count_unknotting_subsets(diagram("3_1"), 4, cfg), SearchError);
  EXPECT_THROW(count_unknotting_subsets(diagram("3_1"), -1, cfg), SearchError);
}

TEST(count_unknotting_subsets, mirror_preserves_the_count) {
  SearchConfig cfg;
  for (const char* name : {"5_1", "8_2", "8_6", "7_1"}) {
    EXPECT_EQ(count_unknotting_subsets(mirror(diagram(name)), 2, cfg).count,
              count_unknotting_subsets(diagram(name), 2, cfg).count)
        << name;
  }
}

TEST(adjacent_knots, ten_six) {
  AdjacencyReport r = adjacent_knots(diagram("10_6"), SearchConfig{});
  EXPECT_EQ(r.names(), (std::vector<std::string>{"5_1", "8_2", "8_6"}));
  EXPECT_TRUE(r.unknot_crossings.empty());
  EXPECT_TRUE(r.unidentified_crossings.empty());
  EXPECT_EQ(r.per_crossing.size(), 10u);
}

TEST(adjacent_knots, trefoil_changes_all_unknot) {
  AdjacencyReport r = adjacent_knots(diagram("3_1"), SearchConfig{});
  EXPECT_TRUE(r.knots.empty());
  EXPECT_EQ(r.unknot_crossings, (std::vector<int>{0, 1, 2}));
}

TEST(adjacent_knots, crossingless_unknot) {
  AdjacencyReport r = adjacent_knots(PlanarDiagram{}, SearchConfig{});
  EXPECT_TRUE(r.knots.empty());
  EXPECT_TRUE(r.unknot_crossings.empty());
}

TEST(adjacent_knots, independent_of_crossing_order) {
  const PlanarDiagram& d = diagram("10_6");
  auto base = adjacent_knots(d, SearchConfig{}).names();
  for (Dart start : d.passages()) {
    PlanarDiagram relabelled = dt_to_diagram(dt_from_start(d, start));
    if (gauss_word(relabelled, relabelled.origin()) != gauss_word(d, start)) continue;
    EXPECT_EQ(adjacent_knots(relabelled, SearchConfig{}).names(), base);
  }
}

TEST(random_diagram, zero_inflation_is_identity) {
  std::mt19937_64 rng(1);
  EXPECT_EQ(random_diagram(diagram("4_1"), 0, rng), diagram("4_1"));
  EXPECT_THROW(random_diagram(diagram("4_1"), -1, rng), SearchError);
}

TEST(random_diagram, deterministic_and_invariant) {
  std::mt19937_64 a(42), b(42);
  PlanarDiagram x = random_diagram(diagram("4_1"), 50, a);
  PlanarDiagram y = random_diagram(diagram("4_1"), 50, b);
  EXPECT_EQ(x, y);
  EXPECT_LE(x.size(), diagram("4_1").size() + 100);
  EXPECT_EQ(fingerprint_any_size(x), table().at("4_1").fingerprint);
}

TEST(random_diagram, small_inflation_keeps_fingerprint) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 rng(seed);
    PlanarDiagram x = random_diagram(diagram("3_1"), 6, rng);
    EXPECT_LE(x.size(), 3 + 12);
    EXPECT_EQ(fingerprint(x), table().at("3_1").fingerprint) << seed;
  }
}

TEST(symbiont_search, zero_trials) {
  EXPECT_TRUE(symbiont_search("4_1", "9_10", 0, SymbiontConfig{}).empty());
}

TEST(symbiont_search, requires_unknotting_data) {
  KnotTable t = KnotTable::parse("3_1,[4,6,2]\n4_1,[4,6,8,2],1\n");
  SymbiontConfig cfg;
  cfg.search.table = &t;
  EXPECT_THROW(symbiont_search("3_1", "4_1", 1, cfg), TableError);
  EXPECT_THROW(symbiont_search("5_1", "4_1", 1, cfg), TableError);
}

TEST(symbiont_search, injected_diagram_is_accepted) {
  SymbiontConfig cfg;
  cfg.injected = diagram_from_text(kStarCode);
  std::ostringstream log;
  cfg.log = &log;
  auto found = symbiont_search("4_1", "9_10", 1, cfg);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].trial, 0);
  ASSERT_TRUE(found[0].bound_found);
  EXPECT_EQ(*found[0].bound_found, 3);
  ASSERT_TRUE(found[0].witness);
  EXPECT_EQ(found[0].witness->steps[1].expected_name, "K15n4866");
  EXPECT_TRUE(verify_certificate(*found[0].witness, table()).passed);
  EXPECT_NE(log.str().find("trial 0 seed 0"), std::string::npos);
}

TEST(symbiont_search, same_chirality_7_1_finds_no_shortcut) {
  SymbiontConfig cfg;
  cfg.search.rng_seed = 9;
  std::ostringstream log;
  cfg.log = &log;
  auto found = symbiont_search("7_1", "7_1", 2, cfg);
  for (const auto& o : found) EXPECT_GE(*o.bound_found, 6);
  std::string text = log.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
}

TEST(symbiont_search, reproducible_from_seed) {
  SymbiontConfig cfg;
  cfg.search.rng_seed = 3;
  std::ostringstream a, b;
  cfg.log = &a;
  symbiont_search("3_1", "4_1", 2, cfg);
  cfg.log = &b;
  symbiont_search("3_1", "4_1", 2, cfg);
  EXPECT_EQ(a.str(), b.str());
}
