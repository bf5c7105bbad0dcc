#include "gordian/diagram.hpp"

#include <algorithm>
#include <map>

namespace gordian {

namespace {

int count_faces(const std::vector<Crossing>& crossings) {
  const int darts = 4 * static_cast<int>(crossings.size());
  std::vector<char> seen(static_cast<std::size_t>(darts), 0);
  int faces = 0;
  for (Dart start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    ++faces;
    Dart corner = start;
    while (!seen[corner]) {
      seen[corner] = 1;
      int c = crossing_of(corner);
      Dart leave = make_dart(c, (slot_of(corner) + 1) & 3);
      corner = crossings[c].adj[slot_of(leave)];
    }
  }
  return faces;
}

}  // namespace

PlanarDiagram PlanarDiagram::from_crossings(std::vector<Crossing> crossings, Dart origin) {
  PlanarDiagram out;
  const int n = static_cast<int>(crossings.size());
  if (n == 0) return out;
  const int darts = 4 * n;
  if (origin < 0 || origin >= darts) throw DiagramError("origin dart out of range");
  if (!crossings[crossing_of(origin)].is_incoming(slot_of(origin)))
    throw DiagramError("origin dart must be incoming");

  for (Dart d = 0; d < darts; ++d) {
    Dart a = crossings[crossing_of(d)].adj[slot_of(d)];
    if (a < 0 || a >= darts) throw DiagramError("adjacency out of range");
    if (a == d) throw DiagramError("dart joined to itself");
    if (crossings[crossing_of(a)].adj[slot_of(a)] != d) throw DiagramError("adjacency not symmetric");
    bool in_d = crossings[crossing_of(d)].is_incoming(slot_of(d));
    bool in_a = crossings[crossing_of(a)].is_incoming(slot_of(a));
    if (in_d == in_a) throw DiagramError("edge orientation inconsistent");
  }

  // traversal order
  std::vector<Dart> order;
  Dart d = origin;
  do {
    order.push_back(d);
    if (static_cast<int>(order.size()) > 2 * n) break;
    Dart out_dart = opposite_slot(d);
    d = crossings[crossing_of(out_dart)].adj[slot_of(out_dart)];
  } while (d != origin);
  if (static_cast<int>(order.size()) != 2 * n) throw DiagramError("diagram has more than one component");

  std::vector<int> renumber(static_cast<std::size_t>(n), -1);
  for (int p = 0; p < 2 * n; p += 2) {
    int c = crossing_of(order[p]);
    if (renumber[c] != -1) throw DiagramError("crossing met twice at even passages");
    renumber[c] = p / 2;
  }

  if (count_faces(crossings) != n + 2) throw DiagramError("diagram is not planar");

  auto remap = [&](Dart x) { return make_dart(renumber[crossing_of(x)], slot_of(x)); };
  out.crossings_.resize(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    Crossing x = crossings[c];
    for (auto& a : x.adj) a = remap(a);
    out.crossings_[renumber[c]] = x;
  }
  out.origin_ = remap(origin);
  return out;
}

PlanarDiagram PlanarDiagram::from_pd(const std::vector<std::array<int, 4>>& pd) {
  if (pd.empty()) return {};
  std::map<int, std::vector<Dart>> ends;
  for (std::size_t c = 0; c < pd.size(); ++c)
    for (int s = 0; s < 4; ++s) ends[pd[c][s]].push_back(make_dart(static_cast<int>(c), s));
  for (const auto& [label, ds] : ends)
    if (ds.size() != 2) throw DiagramError("PD label " + std::to_string(label) + " does not appear twice");

  auto next_label = [&](int label) {
    auto it = ends.upper_bound(label);
    return it == ends.end() ? ends.begin()->first : it->first;
  };

  std::vector<Crossing> crossings(pd.size());
  for (std::size_t c = 0; c < pd.size(); ++c) {
    const auto& x = pd[c];
    Crossing& k = crossings[c];
    k.over02 = false;
    bool forward = next_label(x[1]) == x[3];
    bool backward = next_label(x[3]) == x[1];
    if (forward == backward) throw DiagramError("cannot orient over-strand of PD crossing");
    k.dir13 = forward;
  }
  for (const auto& [label, ds] : ends) {
    crossings[crossing_of(ds[0])].adj[slot_of(ds[0])] = ds[1];
    crossings[crossing_of(ds[1])].adj[slot_of(ds[1])] = ds[0];
  }
  const auto& first = ends.begin()->second;
  Dart origin = crossings[crossing_of(first[0])].is_incoming(slot_of(first[0])) ? first[0] : first[1];
  return from_crossings(std::move(crossings), origin);
}

std::vector<Dart> PlanarDiagram::passages() const {
  std::vector<Dart> order;
  if (empty()) return order;
  order.reserve(2 * crossings_.size());
  Dart d = origin_;
  do {
    order.push_back(d);
    d = next_passage(d);
  } while (d != origin_);
  return order;
}

Dart next_corner(const PlanarDiagram& d, Dart corner) {
  return d.adjacent(make_dart(crossing_of(corner), (slot_of(corner) + 1) & 3));
}

std::vector<std::vector<Dart>> PlanarDiagram::faces() const {
  std::vector<std::vector<Dart>> out;
  const int darts = 4 * size();
  std::vector<char> seen(static_cast<std::size_t>(darts), 0);
  for (Dart start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<Dart> face;
    for (Dart corner = start; !seen[corner]; corner = next_corner(*this, corner)) {
      seen[corner] = 1;
      face.push_back(corner);
    }
    out.push_back(std::move(face));
  }
  return out;
}

PlanarDiagram change_crossing(const PlanarDiagram& d, CrossingRef c) {
  if (c.index < 0 || c.index >= d.size())
    throw DiagramError("crossing index " + std::to_string(c.index) + " out of range for " +
                       std::to_string(d.size()) + " crossings");
  std::vector<Crossing> xs = d.crossings();
  xs[c.index].over02 = !xs[c.index].over02;
  return PlanarDiagram::from_crossings(std::move(xs), d.origin());
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  if (d.empty()) return d;
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs) x.over02 = !x.over02;
  return PlanarDiagram::from_crossings(std::move(xs), d.origin());
}

PlanarDiagram connected_sum(const PlanarDiagram& a, const PlanarDiagram& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int offset = 4 * a.size();
  std::vector<Crossing> xs = a.crossings();
  for (Crossing x : b.crossings()) {
    for (auto& t : x.adj) t += offset;
    xs.push_back(x);
  }
  auto pa = a.passages();
  auto pb = b.passages();
  Dart a_last_out = opposite_slot(pa.back());
  Dart a_first_in = pa.front();
  Dart b_first_out = opposite_slot(pb[0]) + offset;
  Dart b_second_in = pb[1] + offset;
  auto link = [&](Dart x, Dart y) {
    xs[crossing_of(x)].adj[slot_of(x)] = y;
    xs[crossing_of(y)].adj[slot_of(y)] = x;
  };
  link(a_last_out, b_second_in);
  link(b_first_out, a_first_in);
  return PlanarDiagram::from_crossings(std::move(xs), a.origin());
}

PlanarDiagram reverse_orientation(const PlanarDiagram& d) {
  if (d.empty()) return d;
  auto turn = [](Dart x) { return make_dart(crossing_of(x), (slot_of(x) + 2) & 3); };
  std::vector<Crossing> xs = d.crossings();
  for (auto& x : xs) {
    std::array<Dart, 4> adj{};
    for (int s = 0; s < 4; ++s) adj[(s + 2) & 3] = turn(x.adj[s]);
    x.adj = adj;
  }
  return PlanarDiagram::from_crossings(std::move(xs), turn(opposite_slot(d.origin())));
}

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) w += x.sign();
  return w;
}

std::vector<int> gauss_word(const PlanarDiagram& d, Dart start) {
  std::vector<int> word;
  if (d.empty()) return word;
  std::vector<int> visit(static_cast<std::size_t>(d.size()), -1);
  int next_id = 0;
  Dart p = start;
  do {
    int c = crossing_of(p);
    if (visit[c] < 0) visit[c] = next_id++;
    word.push_back(visit[c] * 4 + (d.is_over(p) ? 2 : 0) + (d.crossing(c).sign() > 0 ? 1 : 0));
    p = d.next_passage(p);
  } while (p != start);
  return word;
}

std::vector<int> canonical_key(const PlanarDiagram& d) {
  std::vector<int> best;
  for (Dart start : d.passages()) {
    auto w = gauss_word(d, start);
    if (best.empty() || w < best) best = std::move(w);
  }
  return best;
}

}  // namespace gordian
