#include "gordian/moves.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace gordian {

namespace {

// Face (as corner list, in walk order) containing `corner`.
std::vector<Dart> face_from(const PlanarDiagram& d, Dart corner) {
  std::vector<Dart> face;
  Dart c = corner;
  do {
    face.push_back(c);
    c = next_corner(d, c);
  } while (c != corner && face.size() <= static_cast<std::size_t>(4 * d.size()));
  return face;
}

Dart corner_exit(Dart corner) { return make_dart(crossing_of(corner), (slot_of(corner) + 1) & 3); }

bool valid_corner(const PlanarDiagram& d, Dart corner) { return corner >= 0 && corner < 4 * d.size(); }

bool is_monogon(const PlanarDiagram& d, Dart corner) {
  return valid_corner(d, corner) && next_corner(d, corner) == corner;
}

bool is_reducible_bigon(const PlanarDiagram& d, Dart corner) {
  if (!valid_corner(d, corner)) return false;
  auto face = face_from(d, corner);
  if (face.size() != 2) return false;
  int c1 = crossing_of(face[0]), c2 = crossing_of(face[1]);
  if (c1 == c2) return false;
  return d.is_over(corner_exit(face[0])) == d.is_over(face[1]);
}

bool is_r3_triangle(const PlanarDiagram& d, Dart corner) {
  if (!valid_corner(d, corner)) return false;
  auto face = face_from(d, corner);
  if (face.size() != 3) return false;
  int c1 = crossing_of(face[0]), c2 = crossing_of(face[1]), c3 = crossing_of(face[2]);
  if (c1 == c2 || c2 == c3 || c1 == c3) return false;
  bool o1 = d.is_over(corner_exit(face[0]));
  bool o2 = d.is_over(corner_exit(face[1]));
  bool o3 = d.is_over(corner_exit(face[2]));
  return !(o1 == o2 && o2 == o3);
}

// Outgoing dart of each face-walk step in the face of `corner`, i.e. the
// edges on the boundary of that face.
bool on_common_face(const PlanarDiagram& d, Dart a, Dart b) {
  if (a < 0 || b < 0 || a >= 4 * d.size() || b >= 4 * d.size()) return false;
  Dart ca = make_dart(crossing_of(a), (slot_of(a) + 3) & 3);
  for (Dart c : face_from(d, ca))
    if (corner_exit(c) == b) return true;
  return false;
}

bool same_edge(const PlanarDiagram& d, Dart a, Dart b) { return a == b || d.adjacent(a) == b; }

struct Builder {
  std::vector<Crossing> xs;

  void link(Dart x, Dart y) {
    xs[crossing_of(x)].adj[slot_of(x)] = y;
    xs[crossing_of(y)].adj[slot_of(y)] = x;
  }
};

// Crossing whose raw counterclockwise slots carry strand A on (0,2) and
// strand B on (1,3).  Returns the actual slot of each raw slot.
std::array<int, 4> orient_crossing(Crossing& x, bool a_enters_at_0, bool b_enters_at_1, bool a_over) {
  int r = a_enters_at_0 ? 0 : 2;
  std::array<int, 4> actual{};
  for (int s = 0; s < 4; ++s) actual[s] = (s - r + 4) & 3;
  x.over02 = a_over;
  x.dir13 = actual[b_enters_at_1 ? 1 : 3] == 1;
  return actual;
}

PlanarDiagram remove_crossings(const PlanarDiagram& d, const std::vector<int>& doomed) {
  const int n = d.size();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int c : doomed) gone[c] = 1;
  std::vector<int> renumber(static_cast<std::size_t>(n), -1);
  int kept = 0;
  for (int c = 0; c < n; ++c)
    if (!gone[c]) renumber[c] = kept++;
  if (kept == 0) return {};

  auto pass_through = [&](Dart y) {
    // y is a dart on a removed crossing; follow the strand until it leaves
    while (gone[crossing_of(y)]) y = d.adjacent(opposite_slot(y));
    return y;
  };
  auto remap = [&](Dart x) { return make_dart(renumber[crossing_of(x)], slot_of(x)); };

  std::vector<Crossing> xs(static_cast<std::size_t>(kept));
  for (int c = 0; c < n; ++c) {
    if (gone[c]) continue;
    Crossing x = d.crossing(c);
    for (int s = 0; s < 4; ++s) x.adj[s] = remap(pass_through(x.adj[s]));
    xs[renumber[c]] = x;
  }
  Dart origin = d.origin();
  while (gone[crossing_of(origin)]) origin = d.next_passage(origin);
  return PlanarDiagram::from_crossings(std::move(xs), remap(origin));
}

PlanarDiagram apply_r3(const PlanarDiagram& d, Dart corner) {
  auto face = face_from(d, corner);
  // counterclockwise order of the triangle's corners is the reverse walk order
  const std::array<Dart, 3> X{face[0], face[2], face[1]};
  std::array<Dart, 6> E{};
  for (int i = 0; i < 3; ++i) {
    int c = crossing_of(X[i]), k = slot_of(X[i]);
    E[2 * i] = make_dart(c, (k + 2) & 3);
    E[2 * i + 1] = make_dart(c, (k + 3) & 3);
  }
  // strand through E[j] leaves through E[j+3]; the crossing of strands
  // {j, j+3} and {j+1, j+4} sits at corner X[j/2] for even j
  auto strand = [](int j) { return j % 3; };
  auto original_over = [&](int sa, int sb, bool& found) {
    for (int i = 0; i < 3; ++i) {
      int s0 = strand(2 * i), s1 = strand(2 * i + 1);
      if ((s0 == sa && s1 == sb) || (s0 == sb && s1 == sa)) {
        found = true;
        return std::pair<int, bool>{crossing_of(X[i]), d.is_over(s0 == sa ? E[2 * i] : E[2 * i + 1])};
      }
    }
    found = false;
    return std::pair<int, bool>{-1, false};
  };

  Builder b{d.crossings()};
  std::array<std::array<int, 4>, 3> actual{};
  std::array<int, 3> index{};
  for (int m = 0; m < 3; ++m) {
    int ja = (2 * m + 1) % 6, jb = (2 * m + 2) % 6;
    bool found = false;
    auto [c, a_over] = original_over(strand(ja), strand(jb), found);
    if (!found) throw std::logic_error("R3 strand bookkeeping failed");
    index[m] = c;
    Crossing x;
    actual[m] = orient_crossing(x, d.is_incoming(E[ja]), d.is_incoming(E[jb]), a_over);
    b.xs[c] = x;
  }
  auto new_dart = [&](int m, int raw) { return make_dart(index[m], actual[m][raw]); };
  // end E[j] attaches to crossing m at raw slot 0 (j = 2m+1) or 1 (j = 2m+2)
  auto end_dart = [&](int j) {
    int m = ((j + 5) % 6) / 2;
    int raw = (j % 2 == 1) ? 0 : 1;
    return new_dart(m, raw);
  };
  for (int m = 0; m < 3; ++m) b.link(new_dart(m, 2), new_dart((m + 1) % 3, 3));
  for (int j = 0; j < 6; ++j) {
    Dart far = d.adjacent(E[j]);
    auto it = std::find(E.begin(), E.end(), far);
    if (it != E.end()) {
      int i = static_cast<int>(it - E.begin());
      if (i > j) b.link(end_dart(j), end_dart(i));
    } else {
      b.link(end_dart(j), far);
    }
  }

  Dart origin = d.origin();
  int oc = crossing_of(origin);
  if (oc == index[0] || oc == index[1] || oc == index[2]) {
    for (int j = 0; j < 6; ++j)
      if (d.is_incoming(E[j])) {
        origin = end_dart(j);
        break;
      }
  }
  return PlanarDiagram::from_crossings(std::move(b.xs), origin);
}

PlanarDiagram apply_r1_plus(const PlanarDiagram& d, const Move& m) {
  const int n = d.size();
  Builder b{d.crossings()};
  b.xs.emplace_back();
  Crossing& k = b.xs.back();
  k.over02 = m.over;
  k.dir13 = m.side == 0;
  const Dart k0 = make_dart(n, 0), k1 = make_dart(n, 1), k2 = make_dart(n, 2), k3 = make_dart(n, 3);
  if (n == 0) {
    if (m.side == 0) {
      b.link(k2, k1);
      b.link(k3, k0);
    } else {
      b.link(k2, k3);
      b.link(k1, k0);
    }
    return PlanarDiagram::from_crossings(std::move(b.xs), k0);
  }
  Dart a = d.adjacent(m.a);
  b.link(m.a, k0);
  if (m.side == 0) {
    b.link(k2, k1);
    b.link(k3, a);
  } else {
    b.link(k2, k3);
    b.link(k1, a);
  }
  return PlanarDiagram::from_crossings(std::move(b.xs), d.origin());
}

PlanarDiagram apply_r2_plus(const PlanarDiagram& d, const Move& m) {
  // Edge a runs from d1 (east) to a1 (west) with the face above it; edge b
  // runs from d2 (west) to a2 (east) along the top of the face.  The finger
  // from b dips down through Q (west) and comes back up through P (east).
  const int n = d.size();
  const Dart d1 = m.a, a1 = d.adjacent(m.a), d2 = m.b, a2 = d.adjacent(m.b);
  const bool e1_westward = !d.is_incoming(d1);
  const bool finger_forward = !d.is_incoming(d2);  // from d2 down to Q, up through P to a2
  Builder b{d.crossings()};
  b.xs.emplace_back();
  b.xs.emplace_back();
  const int P = n, Q = n + 1;
  // raw slots E, N, W, S; strand A = horizontal (e1), strand B = vertical (finger)
  auto p = orient_crossing(b.xs[P], e1_westward, !finger_forward, !m.over);
  auto q = orient_crossing(b.xs[Q], e1_westward, finger_forward, !m.over);
  enum { E = 0, N = 1, W = 2, S = 3 };
  auto pd = [&](int raw) { return make_dart(P, p[raw]); };
  auto qd = [&](int raw) { return make_dart(Q, q[raw]); };
  b.link(pd(E), d1);
  b.link(pd(N), a2);
  b.link(pd(W), qd(E));
  b.link(pd(S), qd(S));
  b.link(qd(N), d2);
  b.link(qd(W), a1);
  return PlanarDiagram::from_crossings(std::move(b.xs), d.origin());
}

int min_crossing(const PlanarDiagram& d, const Move& m) {
  auto cs = move_crossings(d, m);
  return cs.empty() ? -1 : *std::min_element(cs.begin(), cs.end());
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Minus: return "R1-";
    case MoveKind::R1Plus: return "R1+";
    case MoveKind::R2Minus: return "R2-";
    case MoveKind::R2Plus: return "R2+";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::string describe(const Move& m) {
  std::string out(to_string(m.kind));
  out += " a=" + std::to_string(m.a);
  if (m.kind == MoveKind::R2Plus) out += " b=" + std::to_string(m.b);
  if (m.kind == MoveKind::R1Plus || m.kind == MoveKind::R2Plus) out += m.over ? " over" : " under";
  if (m.kind == MoveKind::R1Plus) out += " side=" + std::to_string(m.side);
  return out;
}

std::vector<int> move_crossings(const PlanarDiagram& d, const Move& m) {
  std::vector<int> out;
  switch (m.kind) {
    case MoveKind::R1Minus:
    case MoveKind::R2Minus:
    case MoveKind::R3:
      if (!valid_corner(d, m.a)) return out;
      for (Dart c : face_from(d, m.a)) out.push_back(crossing_of(c));
      break;
    default:
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Move> find_reductions(const PlanarDiagram& d) {
  std::vector<Move> out;
  for (const auto& face : d.faces()) {
    if (face.size() == 1) out.push_back({MoveKind::R1Minus, face[0]});
    else if (face.size() == 2 && is_reducible_bigon(d, face[0])) out.push_back({MoveKind::R2Minus, face[0]});
  }
  std::stable_sort(out.begin(), out.end(), [&](const Move& x, const Move& y) {
    return std::pair{min_crossing(d, x), x.kind} < std::pair{min_crossing(d, y), y.kind};
  });
  return out;
}

std::vector<Move> find_r3_moves(const PlanarDiagram& d) {
  std::vector<Move> out;
  for (const auto& face : d.faces())
    if (face.size() == 3 && is_r3_triangle(d, face[0])) out.push_back({MoveKind::R3, face[0]});
  std::stable_sort(out.begin(), out.end(),
                   [&](const Move& x, const Move& y) { return min_crossing(d, x) < min_crossing(d, y); });
  return out;
}

std::vector<Move> find_moves(const PlanarDiagram& d) {
  auto out = find_reductions(d);
  auto r3 = find_r3_moves(d);
  out.insert(out.end(), r3.begin(), r3.end());
  std::stable_sort(out.begin(), out.end(),
                   [&](const Move& x, const Move& y) { return min_crossing(d, x) < min_crossing(d, y); });
  return out;
}

std::vector<Move> r1_plus_sites(const PlanarDiagram& d) {
  std::vector<Move> out;
  if (d.empty()) {
    for (int side = 0; side < 2; ++side)
      for (bool over : {false, true}) out.push_back({MoveKind::R1Plus, -1, -1, over, side});
    return out;
  }
  for (Dart x = 0; x < 4 * d.size(); ++x) {
    if (d.is_incoming(x)) continue;
    for (int side = 0; side < 2; ++side)
      for (bool over : {false, true}) out.push_back({MoveKind::R1Plus, x, -1, over, side});
  }
  return out;
}

std::vector<Move> r2_plus_sites(const PlanarDiagram& d) {
  std::vector<Move> out;
  for (const auto& face : d.faces()) {
    for (Dart ca : face) {
      for (Dart cb : face) {
        Dart a = corner_exit(ca), b = corner_exit(cb);
        if (same_edge(d, a, b)) continue;
        for (bool over : {false, true}) out.push_back({MoveKind::R2Plus, a, b, over});
      }
    }
  }
  return out;
}

bool is_applicable(const PlanarDiagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::R1Minus: return is_monogon(d, m.a);
    case MoveKind::R2Minus: return is_reducible_bigon(d, m.a);
    case MoveKind::R3: return is_r3_triangle(d, m.a);
    case MoveKind::R1Plus:
      if (m.side != 0 && m.side != 1) return false;
      if (d.empty()) return m.a == -1;
      return m.a >= 0 && m.a < 4 * d.size() && !d.is_incoming(m.a);
    case MoveKind::R2Plus:
      if (!on_common_face(d, m.a, m.b) || same_edge(d, m.a, m.b)) return false;
      return true;
  }
  return false;
}

PlanarDiagram apply_move(const PlanarDiagram& d, const Move& m) {
  if (!is_applicable(d, m)) throw StaleMove("move " + describe(m) + " does not apply");
  switch (m.kind) {
    case MoveKind::R1Minus:
    case MoveKind::R2Minus: return remove_crossings(d, move_crossings(d, m));
    case MoveKind::R3: return apply_r3(d, m.a);
    case MoveKind::R1Plus: return apply_r1_plus(d, m);
    case MoveKind::R2Plus: return apply_r2_plus(d, m);
  }
  throw std::logic_error("unknown move kind");
}

namespace {

struct Descent {
  PlanarDiagram diagram;
  int moves = 0;
  bool out_of_budget = false;
};

Descent greedy_reduce(PlanarDiagram d, int budget) {
  Descent out;
  while (true) {
    auto moves = find_reductions(d);
    if (moves.empty()) break;
    if (out.moves >= budget) {
      out.out_of_budget = true;
      break;
    }
    d = apply_move(d, moves.front());
    ++out.moves;
  }
  out.diagram = std::move(d);
  return out;
}

}  // namespace

SimplifyResult simplify(const PlanarDiagram& input, int budget) {
  if (budget <= 0) throw std::invalid_argument("simplify budget must be positive");
  SimplifyResult result;
  result.report.initial_crossings = input.size();
  int used = 0;

  Descent first = greedy_reduce(input, budget);
  used += first.moves;
  PlanarDiagram best = std::move(first.diagram);
  bool exhausted = first.out_of_budget;

  while (!exhausted && best.size() > 0) {
    // best-first over (crossings, discovery order)
    using Entry = std::pair<std::pair<int, std::uint64_t>, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    std::vector<PlanarDiagram> nodes;
    std::set<std::vector<int>> seen;
    std::uint64_t serial = 0;
    const int limit = best.size() + kExcursionWidth;

    nodes.push_back(best);
    seen.insert(canonical_key(best));
    frontier.push({{best.size(), serial++}, 0});
    bool improved = false;

    while (!frontier.empty() && !improved && !exhausted) {
      std::size_t at = frontier.top().second;
      frontier.pop();
      PlanarDiagram node = nodes[at];
      std::vector<Move> moves = find_moves(node);
      if (node.size() + 2 <= limit) {
        auto fingers = r2_plus_sites(node);
        moves.insert(moves.end(), fingers.begin(), fingers.end());
      }
      for (const Move& m : moves) {
        if (used >= budget) {
          exhausted = true;
          break;
        }
        PlanarDiagram next = apply_move(node, m);
        ++used;
        if (next.size() < best.size()) {
          Descent down = greedy_reduce(next, budget - used);
          used += down.moves;
          best = std::move(down.diagram);
          exhausted = down.out_of_budget;
          improved = true;
          break;
        }
        if (next.size() > limit) continue;
        if (!seen.insert(canonical_key(next)).second) continue;
        nodes.push_back(std::move(next));
        frontier.push({{nodes.back().size(), serial++}, nodes.size() - 1});
      }
    }
    if (!improved) break;
  }

  result.report.final_crossings = best.size();
  result.report.moves_applied = used;
  result.report.budget_exhausted = exhausted;
  result.diagram = std::move(best);
  return result;
}

UnknotCertification certify_unknot(const PlanarDiagram& d, int budget) {
  UnknotCertification out;
  out.report.initial_crossings = out.report.final_crossings = d.size();
  if (d.empty()) {
    out.verdict = UnknotVerdict::Unknot;
    return out;
  }
  if (determinant(d) != 1 || (d.size() <= kDefaultCrossingCap && jones_quarter(d) != LaurentPolynomial(1))) {
    out.knotted = true;
    return out;
  }
  SimplifyResult s = simplify(d, budget);
  out.report = s.report;
  if (s.diagram.empty()) {
    out.verdict = UnknotVerdict::Unknot;
  } else if (d.size() > kDefaultCrossingCap && s.diagram.size() <= kDefaultCrossingCap &&
             jones_quarter(s.diagram) != LaurentPolynomial(1)) {
    out.knotted = true;
  }
  return out;
}

}  // namespace gordian
