#include "gordian/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gordian/notation.hpp"

namespace gordian {

void SearchConfig::validate() const {
  if (depth < 0) throw SearchError("depth must not be negative");
  if (simplify_budget <= 0) throw SearchError("simplify budget must be positive");
  if (max_nodes <= 0) throw SearchError("node cap must be positive");
}

namespace {

// "[]" stands for the crossingless diagram in certificates
DtCode code_of(const PlanarDiagram& d) { return d.empty() ? DtCode{} : emit_dt(d); }

struct Node {
  PlanarDiagram diagram;
  std::vector<Step> path;
};

Step start_step(const DtCode& dt) {
  Step s;
  s.kind = StepKind::Start;
  s.dt = dt;
  return s;
}

Step change_step(int crossing) {
  Step s;
  s.kind = StepKind::Change;
  s.index = crossing;
  return s;
}

Step substitute_step(const DtCode& dt) {
  Step s;
  s.kind = StepKind::Substitute;
  s.dt = dt;
  return s;
}

Certificate witness_from_path(std::vector<Step> path, int bound, const KnotTable& table) {
  Certificate c;
  c.id = "W";
  c.title = "unknotting sequence of length " + std::to_string(bound);
  c.claimed_bound = bound;
  if (!path.empty() && path.back().kind == StepKind::Change && table.find("0_1")) path.back().expected_name = "0_1";
  c.steps = std::move(path);
  return c;
}

}  // namespace

SearchOutcome unknotting_upper_bound(const PlanarDiagram& d, const SearchConfig& cfg) {
  cfg.validate();
  const KnotTable& table = cfg.knot_table();
  SearchOutcome out;

  DtCode dt0 = code_of(d);
  Node root{dt_to_diagram(dt0), {start_step(dt0)}};
  out.nodes_explored = 1;
  if (certify_unknot(root.diagram, cfg.simplify_budget).verdict == UnknotVerdict::Unknot) {
    out.bound_found = 0;
    out.witness = witness_from_path(root.path, 0, table);
    return out;
  }

  std::set<std::vector<int>> seen{canonical_key(root.diagram)};
  std::vector<Node> frontier{std::move(root)};
  for (int level = 1; level <= cfg.depth && !frontier.empty(); ++level) {
    const int remaining = cfg.depth - level;
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (int c = 0; c < node.diagram.size(); ++c) {
        if (out.nodes_explored >= cfg.max_nodes) {
          out.exhausted = true;
          return out;
        }
        ++out.nodes_explored;
        PlanarDiagram child = change_crossing(node.diagram, CrossingRef{c});
        // signature bound: the rest of the path cannot reach the unknot
        if (murasugi_lower_bound(signature(child)) > remaining) continue;
        std::vector<Step> path = node.path;
        path.push_back(change_step(c));
        if (certify_unknot(child, cfg.simplify_budget).verdict == UnknotVerdict::Unknot) {
          out.bound_found = level;
          out.witness = witness_from_path(std::move(path), level, table);
          return out;
        }
        if (remaining == 0) continue;
        PlanarDiagram simplified = simplify(child, cfg.simplify_budget).diagram;
        if (simplified.size() < child.size()) {
          DtCode dt = code_of(simplified);
          child = dt_to_diagram(dt);
          path.push_back(substitute_step(dt));
        }
        // tabulated diagrams of recognised intermediate knots join the frontier too
        if (child.size() <= kDefaultCrossingCap) {
          IdentifyResult id = identify_fingerprint(fingerprint(child), table);
          if (id.match && id.match->name != "0_1") {
            const KnotTableEntry& e = table.at(id.match->name);
            PlanarDiagram alt = id.match->chirality == Chirality::Mirrored ? mirror(e.diagram) : e.diagram;
            DtCode dt = code_of(alt);
            alt = dt_to_diagram(dt);
            if (seen.insert(canonical_key(alt)).second) {
              std::vector<Step> alt_path = path;
              alt_path.push_back(substitute_step(dt));
              next.push_back(Node{std::move(alt), std::move(alt_path)});
            }
          }
        }
        if (!seen.insert(canonical_key(child)).second) continue;
        next.push_back(Node{std::move(child), std::move(path)});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

SubsetCount count_unknotting_subsets(const PlanarDiagram& d, int k, const SearchConfig& cfg) {
  cfg.validate();
  const int n = d.size();
  if (k < 0 || k > n) throw SearchError("subset size " + std::to_string(k) + " out of range for " +
                                        std::to_string(n) + " crossings");
  SubsetCount out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    PlanarDiagram changed = d;
    for (int c : pick) changed = change_crossing(changed, CrossingRef{c});
    UnknotCertification cert = certify_unknot(changed, cfg.simplify_budget);
    if (cert.verdict == UnknotVerdict::Unknot) ++out.count;
    else if (!cert.knotted) out.flagged.push_back(pick);

    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<std::string> AdjacencyReport::names() const {
  std::vector<std::string> out;
  for (const auto& id : knots) out.push_back(id.name);
  return out;
}

AdjacencyReport adjacent_knots(const PlanarDiagram& d, const SearchConfig& cfg) {
  cfg.validate();
  const KnotTable& table = cfg.knot_table();
  AdjacencyReport out;
  std::map<std::string, Identification> distinct;
  for (int c = 0; c < d.size(); ++c) {
    PlanarDiagram child = change_crossing(d, CrossingRef{c});
    CrossingChangeResult r;
    r.crossing = c;
    UnknotCertification cert = certify_unknot(child, cfg.simplify_budget);
    if (cert.verdict == UnknotVerdict::Unknot) {
      r.unknot = true;
      out.unknot_crossings.push_back(c);
    } else {
      r.identification = identify(child, table);
      if (cert.knotted && r.identification.match) distinct.emplace(r.identification.match->name, *r.identification.match);
      else out.unidentified_crossings.push_back(c);
    }
    out.per_crossing.push_back(std::move(r));
  }
  for (auto& [name, id] : distinct) out.knots.push_back(std::move(id));
  return out;
}

PlanarDiagram random_diagram(const PlanarDiagram& d, int inflation, std::mt19937_64& rng) {
  if (inflation < 0) throw SearchError("inflation must not be negative");
  PlanarDiagram current = d;
  for (int step = 0; step < inflation; ++step) {
    std::vector<Move> sites[3] = {r1_plus_sites(current), r2_plus_sites(current), find_r3_moves(current)};
    std::vector<double> weights{1.0, 2.0, 2.0};
    for (int k = 0; k < 3; ++k)
      if (sites[k].empty()) weights[k] = 0.0;
    std::discrete_distribution<int> pick_kind(weights.begin(), weights.end());
    const auto& chosen = sites[pick_kind(rng)];
    std::uniform_int_distribution<std::size_t> pick_site(0, chosen.size() - 1);
    current = apply_move(current, chosen[pick_site(rng)]);
  }
  return current;
}

namespace {

std::string sum_label(const std::string& left, const std::string& right) { return "u(" + left + "#" + right + ")"; }

}  // namespace

std::vector<SearchOutcome> symbiont_search(const std::string& left, const std::string& right, int trials,
                                           const SymbiontConfig& cfg) {
  cfg.search.validate();
  const KnotTable& table = cfg.search.knot_table();
  const KnotTableEntry& l = table.at(left);
  const KnotTableEntry& r = table.at(right);
  if (!l.u) throw TableError("no unknotting data for " + l.name);
  if (!r.u) throw TableError("no unknotting data for " + r.name);
  const int additive = l.u->low + r.u->low;

  std::vector<SearchOutcome> accepted;
  if (trials <= 0) return accepted;
  ClaimedSum sum{l.name, r.name, cfg.mirror, std::nullopt, std::nullopt};
  const PlanarDiagram base = claimed_sum_diagram(sum, table);

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t seed = cfg.search.rng_seed + static_cast<std::uint64_t>(trial);
    std::mt19937_64 rng(seed);
    PlanarDiagram start;
    if (trial == 0 && cfg.injected) {
      start = *cfg.injected;
    } else {
      start = simplify(random_diagram(base, cfg.inflation, rng), cfg.search.simplify_budget).diagram;
    }
    const DtCode dt0 = code_of(start);
    const PlanarDiagram decoded = dt_to_diagram(dt0);

    SearchOutcome outcome;
    outcome.trial = trial;
    int unknown = 0;
    std::string note = "no acceptance";
    for (int c = 0; c < decoded.size() && !outcome.bound_found; ++c) {
      ++outcome.nodes_explored;
      PlanarDiagram child = change_crossing(decoded, CrossingRef{c});
      IdentifyResult id = identify(child, table);
      if (!id.match) {
        ++unknown;
        continue;
      }
      // with colliding fingerprints the largest tabulated value is the safe one
      std::optional<int> u_high;
      for (const auto& name : id.match->collision_list) {
        const KnotTableEntry& e = table.at(name);
        if (!e.u) {
          u_high.reset();
          break;
        }
        u_high = std::max(u_high.value_or(0), e.u->high);
      }
      if (!u_high || *u_high + 1 >= additive) continue;

      const KnotTableEntry& target = table.at(id.match->name);
      SearchConfig leg_cfg = cfg.search;
      leg_cfg.depth = *u_high;
      PlanarDiagram leg_start = id.match->chirality == Chirality::Mirrored ? mirror(target.diagram) : target.diagram;
      SearchOutcome leg = unknotting_upper_bound(leg_start, leg_cfg);
      outcome.nodes_explored += leg.nodes_explored;
      if (!leg.bound_found) {
        leg = unknotting_upper_bound(child, leg_cfg);
        outcome.nodes_explored += leg.nodes_explored;
      }
      if (!leg.bound_found) {
        note = "crossing " + std::to_string(c) + " gives " + id.label() + " but no unknotting leg was found";
        continue;
      }

      Certificate cert;
      cert.id = "S" + std::to_string(trial);
      cert.sum = sum;
      cert.claimed_bound = 1 + *leg.bound_found;
      cert.title = sum_label(l.name, r.name) + " <= " + std::to_string(cert.claimed_bound);
      cert.steps.push_back(start_step(dt0));
      Step change = change_step(c);
      change.expected_name = id.match->name;
      cert.steps.push_back(change);
      for (std::size_t i = 0; i < leg.witness->steps.size(); ++i) {
        Step s = leg.witness->steps[i];
        if (i == 0) s.kind = StepKind::Substitute;
        cert.steps.push_back(std::move(s));
      }
      VerificationReport check = verify_certificate(cert, table, cfg.search.simplify_budget);
      if (!check.passed) {
        note = "witness rejected: " + check.failure_detail;
        continue;
      }
      outcome.bound_found = cert.claimed_bound;
      outcome.witness = std::move(cert);
      note = "crossing " + std::to_string(c) + " gives " + id.label() + ", bound " +
             std::to_string(*outcome.bound_found) + " < " + std::to_string(additive);
    }
    std::ostringstream line;
    line << "trial " << trial << " seed " << seed << ": " << decoded.size() << " crossings, " << unknown
         << " unidentified changes, " << note;
    outcome.summary = line.str();
    if (cfg.log) *cfg.log << outcome.summary << "\n";
    if (outcome.bound_found) accepted.push_back(std::move(outcome));
  }
  return accepted;
}

}  // namespace gordian
