// Acceptance criteria A1-A8.  Prints one line per criterion; exits nonzero
// when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "gordian/certify.hpp"
#include "gordian/search.hpp"
#include "property_checks.hpp"
#include "tamper.hpp"

using namespace gordian;

namespace {

constexpr double kReplayLimitSeconds = 60.0;
constexpr double kCountLimitSeconds = 30.0;
constexpr double kDepthOneLimitSeconds = 10.0;

const char* kStarCode = "[6,-10,24,20,-4,-22,-8,26,28,30,-12,-2,14,18,16]";

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  std::string failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    failures += (pass ? "" : "; ") + what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const KnotTable& table() { return KnotTable::bundled(); }

void a1(Outcome& o) {
  auto t0 = Clock::now();
  const char* expected[] = {"u(3_1#10_6) <= 3", "u(4_1#9_10) <= 3", "u(5_1#8_2) <= 3"};
  auto certs = bundled_certificates();
  o.require(certs.size() == 3, "three bundled certificates");
  for (std::size_t i = 0; i < certs.size() && i < 3; ++i) {
    VerificationReport r = verify_certificate(certs[i], table());
    std::cout << "  " << r.verdict_line() << "\n";
    o.require(r.passed, certs[i].id + " failed: " + r.failure_detail);
    o.require(certs[i].title == expected[i], certs[i].id + " title " + certs[i].title);
    o.require(r.verdict_line().ends_with("bound 3: PASS"), certs[i].id + " verdict line");
  }
  double replay = seconds_since(t0);
  o.require(replay < kReplayLimitSeconds, "replay took " + std::to_string(replay) + " s");
  int rejected = 0;
  for (const auto& p : tamper::perturbations()) {
    Certificate c = bundled_certificate(p.certificate);
    p.apply(c);
    VerificationReport r = verify_certificate(c, table());
    rejected += !r.passed;
    o.require(!r.passed, "tamper '" + p.field + "' of " + p.certificate + " still passes");
  }
  o.note << "replay " << replay << " s, " << rejected << "/9 tampers rejected";
}

void a2(Outcome& o) {
  Fingerprint sum = fingerprint_any_size(connected_sum(table().at("4_1").diagram, table().at("9_10").diagram));
  Fingerprint star = fingerprint(diagram_from_text(kStarCode));
  o.require(sum == star, "fingerprint(4_1#9_10) " + sum.to_string() + " vs (*) " + star.to_string());
  int s5 = fingerprint_any_size(claimed_sum_diagram(*bundled_certificate("C5").sum, table())).signature;
  int s3 = fingerprint_any_size(claimed_sum_diagram(*bundled_certificate("C3").sum, table())).signature;
  o.require(s5 == 0, "sigma(C5 sum) = " + std::to_string(s5));
  o.require(std::abs(s3) == 2, "sigma(C3 sum) = " + std::to_string(s3));
  o.note << "det " << sum.determinant << " sigma " << sum.signature << "; sigma(C5)=" << s5
         << " sigma(C3)=" << s3;
}

void a3(Outcome& o) {
  struct Case {
    const char* name;
    int k;
    long expected;
  } cases[] = {{"5_1", 2, 10}, {"8_2", 2, 5}, {"10_6", 3, 35}};
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    SubsetCount r = count_unknotting_subsets(table().at(c.name).diagram, c.k, SearchConfig{});
    double s = seconds_since(t0);
    o.require(r.count == c.expected, std::string(c.name) + " counted " + std::to_string(r.count));
    o.require(r.flagged.empty(), std::string(c.name) + " has flagged subsets");
    o.require(s < kCountLimitSeconds, std::string(c.name) + " took " + std::to_string(s) + " s");
    o.note << c.name << " k=" << c.k << ": " << r.count << " (" << s << " s) ";
  }
}

void a4(Outcome& o) {
  AdjacencyReport six = adjacent_knots(table().at("10_6").diagram, SearchConfig{});
  AdjacencyReport tre = adjacent_knots(table().at("3_1").diagram, SearchConfig{});
  auto names = six.names();
  o.require(names == std::vector<std::string>({"5_1", "8_2", "8_6"}), "10_6 adjacency differs");
  o.require(six.unidentified_crossings.empty(), "10_6 has unidentified changes");
  o.require(tre.knots.empty() && tre.unknot_crossings.size() == 3, "3_1 adjacency differs");
  o.note << "10_6 -> {";
  for (std::size_t i = 0; i < names.size(); ++i) o.note << (i ? "," : "") << names[i];
  o.note << "}; 3_1 -> {} with " << tre.unknot_crossings.size() << " unknot reports";
}

void a5(Outcome& o) {
  struct Case {
    const char* name;
    const char* code;
  } cases[] = {{"8_14", "[-10,-6,-14,-12,-16,-8,-2,-4]"},
               {"10_129", "[14,8,18,12,-16,4,2,20,-10,6]"},
               {"K12a1135", "[-16,-14,-24,-18,-22,-20,-2,-4,-6,-8,-10,-12]"}};
  SearchConfig cfg;
  cfg.depth = 1;
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    SearchOutcome r = unknotting_upper_bound(diagram_from_text(c.code), cfg);
    double s = seconds_since(t0);
    o.require(r.bound_found && *r.bound_found == 1, std::string(c.name) + " no depth-1 bound");
    o.require(r.witness && verify_certificate(*r.witness, table()).passed, std::string(c.name) + " witness fails");
    o.require(s < kDepthOneLimitSeconds, std::string(c.name) + " took " + std::to_string(s) + " s");
    o.note << c.name << ": " << (r.bound_found ? std::to_string(*r.bound_found) : "none")
           << " (" << s << " s) ";
  }
}

void a6(Outcome& o) {
  int f51 = murasugi_lower_bound(table().at("5_1").diagram);
  int f82 = murasugi_lower_bound(table().at("8_2").diagram);
  ClaimedSum same{"5_1", "8_2", SumMirror::None, std::nullopt, std::nullopt};
  int sigma = fingerprint_any_size(claimed_sum_diagram(same, table())).signature;
  int f_sum = murasugi_lower_bound(sigma);
  o.require(f51 == 2, "floor(5_1) = " + std::to_string(f51));
  o.require(f82 == 2, "floor(8_2) = " + std::to_string(f82));
  o.require(std::abs(sigma) == 8 && f_sum == 4, "5_1#8_2 sigma " + std::to_string(sigma));
  auto k4 = summarize_additivity(bundled_certificate("C4"), table()).kind;
  auto k5 = summarize_additivity(bundled_certificate("C5"), table()).kind;
  auto k3 = summarize_additivity(bundled_certificate("C3"), table()).kind;
  o.require(k4 == AdditivityKind::StrictFailureOfAdditivity, "C4 verdict " + std::string(to_string(k4)));
  o.require(k5 == AdditivityKind::StrictFailureOfAdditivity, "C5 verdict " + std::string(to_string(k5)));
  o.require(k3 == AdditivityKind::ConditionalOnRange, "C3 verdict " + std::string(to_string(k3)));
  o.note << "floors 2,2,4; C4 " << to_string(k4) << ", C5 " << to_string(k5) << ", C3 "
         << to_string(k3);
}

void a7(Outcome& o) {
  std::set<MoveKind> kinds;
  props::Result parts[] = {props::random_moves(table(), 100, 20240601, &kinds), props::multiplicativity(table(), 10),
                           props::mirror_laws(table()), props::determinant_from_jones(table()),
                           props::dt_round_trip(table(), 5)};
  const char* names[] = {"random moves", "multiplicativity", "mirror laws", "det = |V(-1)|", "DT round trip"};
  long checks = 0;
  for (int i = 0; i < 5; ++i) {
    checks += parts[i].checks;
    o.require(parts[i].failures == 0, std::string(names[i]) + ": " + parts[i].first);
  }
  o.require(kinds.size() == 5, "not every move kind was exercised");
  o.note << checks << " checks, all move kinds exercised";
}

void a8(Outcome& o) {
  for (const auto& c : bundled_certificates()) {
    PlanarDiagram d;
    for (const Step& s : c.steps) {
      if (s.kind == StepKind::Change) d = change_crossing(d, CrossingRef{s.index});
      else d = dt_to_diagram(s.dt);
    }
    SimplifyResult r = simplify(d);
    o.require(r.diagram.empty(), c.id + " stopped at " + std::to_string(r.diagram.size()) + " crossings");
    o.note << c.id << ": " << r.report.initial_crossings << "->"
           << r.report.final_crossings << " in " << r.report.moves_applied << " moves ";
  }
}

}  // namespace

int main() {
  std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"A1 certificate replay", a1}, {"A2 sum construction", a2}, {"A3 counting", a3},
      {"A4 adjacency", a4},          {"A5 depth-1 searches", a5}, {"A6 Murasugi floors", a6},
      {"A7 property suites", a7},    {"A8 simplification", a8},
  };
  int failed = 0;
  for (auto& [name, check] : criteria) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%-24s %s  (%.2f s)  %s\n", name, o.pass ? "PASS" : "FAIL", seconds_since(t0), o.note.str().c_str());
    if (!o.pass) std::printf("%-24s   failures: %s\n", "", o.failures.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
