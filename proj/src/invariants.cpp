#include "gordian/invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <map>
#include <sstream>

namespace gordian {

namespace mp = boost::multiprecision;

namespace {

void check_cap(const PlanarDiagram& d, int cap) {
  if (d.size() > cap)
    throw CapExceeded("diagram has " + std::to_string(d.size()) + " crossings, above the cap of " +
                      std::to_string(cap) + "; simplify it first");
}

// Slot paired with s by the smoothing that joins corners (1,3) or (0,2).
constexpr int pair_01(int s) { return s ^ 1; }
constexpr int pair_12(int s) { return 3 - s; }

}  // namespace

LaurentPolynomial kauffman_bracket(const PlanarDiagram& d, int cap) {
  check_cap(d, cap);
  const int n = d.size();
  if (n == 0) return LaurentPolynomial(1);

  // Crossings are absorbed one at a time.  A state records how the loose
  // ends on the boundary of the absorbed region are paired up by the arcs
  // of the partial smoothing; states with equal pairings are merged.
  const LaurentPolynomial loop_value = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  std::vector<LaurentPolynomial> loop_powers{LaurentPolynomial(1)};
  auto loop_power = [&](int k) -> const LaurentPolynomial& {
    while (static_cast<int>(loop_powers.size()) <= k) loop_powers.push_back(loop_powers.back() * loop_value);
    return loop_powers[k];
  };

  std::vector<char> absorbed(static_cast<std::size_t>(n), 0);
  std::vector<Dart> frontier;  // darts of absorbed crossings whose edge leaves the region
  std::map<std::vector<int>, LaurentPolynomial> states{{{}, LaurentPolynomial(1)}};

  for (int step = 0; step < n; ++step) {
    // next crossing: most edges into the absorbed region, lowest index on ties
    int c = -1, best = -1;
    for (int k = 0; k < n; ++k) {
      if (absorbed[k]) continue;
      int links = 0;
      for (int s = 0; s < 4; ++s) links += absorbed[crossing_of(d.adjacent(make_dart(k, s)))];
      if (links > best) {
        best = links;
        c = k;
      }
    }
    absorbed[c] = 1;

    // Nodes 0..f-1 are old frontier darts, f..f+3 the slots of c.
    const int f = static_cast<int>(frontier.size());
    std::vector<int> edge_mate(static_cast<std::size_t>(f) + 4, -1);  // connection along a diagram edge
    std::vector<Dart> next_frontier;
    std::vector<int> next_index(static_cast<std::size_t>(f) + 4, -1);
    for (int i = 0; i < f; ++i) {
      Dart y = d.adjacent(frontier[i]);
      if (crossing_of(y) == c) {
        edge_mate[i] = f + slot_of(y);
        edge_mate[f + slot_of(y)] = i;
      }
    }
    for (int s = 0; s < 4; ++s) {
      Dart y = d.adjacent(make_dart(c, s));
      if (crossing_of(y) == c) edge_mate[f + s] = f + slot_of(y);
    }
    for (int i = 0; i < f + 4; ++i) {
      bool open = i < f ? edge_mate[i] < 0 : (edge_mate[i] < 0 && !absorbed[crossing_of(d.adjacent(make_dart(c, i - f)))]);
      if (open) {
        next_index[i] = static_cast<int>(next_frontier.size());
        next_frontier.push_back(i < f ? frontier[i] : make_dart(c, i - f));
      }
    }
    const bool last = next_frontier.empty();

    std::map<std::vector<int>, LaurentPolynomial> next_states;
    std::vector<int> arc_mate(static_cast<std::size_t>(f) + 4);
    std::vector<char> seen(static_cast<std::size_t>(f) + 4);
    for (const auto& [mates, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {  // 0 = A, 1 = B
        for (int i = 0; i < f; ++i) arc_mate[i] = mates[i];
        bool use_12 = d.crossing(c).over02 != (smoothing == 1);
        for (int s = 0; s < 4; ++s) arc_mate[f + s] = f + (use_12 ? pair_12(s) : pair_01(s));

        std::vector<int> result(next_frontier.size(), -1);
        std::fill(seen.begin(), seen.end(), 0);
        // open paths: start at each open node, alternate arc / edge connections
        for (int i = 0; i < f + 4; ++i) {
          if (next_index[i] < 0 || seen[i]) continue;
          int x = i;
          while (true) {
            seen[x] = 1;
            int y = arc_mate[x];
            seen[y] = 1;
            if (next_index[y] >= 0) {
              result[next_index[i]] = next_index[y];
              result[next_index[y]] = next_index[i];
              break;
            }
            x = edge_mate[y];
          }
        }
        int loops = 0;
        for (int i = 0; i < f + 4; ++i) {
          if (seen[i]) continue;
          ++loops;
          int x = i;
          do {
            seen[x] = 1;
            int y = arc_mate[x];
            seen[y] = 1;
            x = edge_mate[y];
          } while (x != i);
        }
        if (last) loops -= 1;
        LaurentPolynomial term = poly * LaurentPolynomial::monomial(1, smoothing == 0 ? 1 : -1);
        if (loops > 0) term *= loop_power(loops);
        next_states[std::move(result)] += term;
      }
    }
    states = std::move(next_states);
    frontier = std::move(next_frontier);
  }
  return states.begin()->second;
}

LaurentPolynomial jones_quarter(const PlanarDiagram& d, int cap) {
  LaurentPolynomial bracket = kauffman_bracket(d, cap);
  int w = writhe(d);
  LaurentPolynomial in_a = LaurentPolynomial::monomial((w % 2 == 0) ? 1 : -1, -3 * w) * bracket;
  return in_a.rescale_exponents(-1);
}

LaurentPolynomial jones(const PlanarDiagram& d, int cap) { return jones_quarter(d, cap).divide_exponents(4); }

GoeritzData goeritz(const PlanarDiagram& d, bool shade_first) {
  GoeritzData out;
  const int n = d.size();
  if (n == 0) return out;

  auto faces = d.faces();
  std::vector<int> face_of(static_cast<std::size_t>(4 * n), -1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (Dart corner : faces[f]) face_of[corner] = static_cast<int>(f);

  // colour 1 = the region to the right of the first edge
  Dart first_out = opposite_slot(d.origin());
  Dart right_corner = make_dart(crossing_of(first_out), (slot_of(first_out) + 3) & 3);
  std::vector<int> colour(faces.size(), -1);
  std::deque<int> queue{face_of[right_corner]};
  colour[face_of[right_corner]] = 1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (Dart corner : faces[f]) {
      for (int step : {1, 3}) {
        int g = face_of[make_dart(crossing_of(corner), (slot_of(corner) + step) & 3)];
        if (colour[g] < 0) {
          colour[g] = 1 - colour[f];
          queue.push_back(g);
        } else if (colour[g] == colour[f]) {
          throw std::logic_error("regions do not admit a checkerboard colouring");
        }
      }
    }
  }

  const int white = shade_first ? 1 : 0;
  std::vector<int> index(faces.size(), -1);
  int regions = 0;
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (colour[f] == white) index[f] = regions++;
  out.matrix.assign(static_cast<std::size_t>(regions), std::vector<std::int64_t>(static_cast<std::size_t>(regions), 0));

  for (int c = 0; c < n; ++c) {
    const Crossing& x = d.crossing(c);
    int k = colour[face_of[make_dart(c, 0)]] == white ? 0 : 1;
    int eta = ((k == 0) != x.over02) ? 1 : -1;
    int i = index[face_of[make_dart(c, k)]];
    int j = index[face_of[make_dart(c, k + 2)]];
    if (i != j) {
      out.matrix[i][i] += eta;
      out.matrix[j][j] += eta;
      out.matrix[i][j] -= eta;
      out.matrix[j][i] -= eta;
    }
    if (x.is_incoming(k) != x.is_incoming(k + 1)) out.correction += eta;
  }
  return out;
}

std::int64_t integer_determinant(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mp::cpp_int>> a(n, std::vector<mp::cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  mp::cpp_int previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
    }
    previous = a[k][k];
  }
  mp::cpp_int result = a[n - 1][n - 1] * sign;
  return result.convert_to<std::int64_t>();
}

int symmetric_signature(const std::vector<std::vector<std::int64_t>>& m) {
  using Q = mp::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  int signature = 0;
  while (!a.empty()) {
    const std::size_t n = a.size();
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // no usable diagonal entry: add a row/column with a nonzero off-diagonal entry
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      pivot = pi;
    }
    Q p = a[pivot][pivot];
    signature += p > 0 ? 1 : -1;
    std::vector<std::vector<Q>> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      std::vector<Q> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == pivot) continue;
        row.push_back(a[i][j] - a[i][pivot] * a[pivot][j] / p);
      }
      rest.push_back(std::move(row));
    }
    a = std::move(rest);
  }
  return signature;
}

namespace {

std::vector<std::vector<std::int64_t>> reduced(const std::vector<std::vector<std::int64_t>>& m) {
  if (m.empty()) return {};
  std::vector<std::vector<std::int64_t>> r;
  for (std::size_t i = 1; i < m.size(); ++i) r.emplace_back(m[i].begin() + 1, m[i].end());
  return r;
}

struct DetSig {
  std::int64_t det;
  int sig;
};

DetSig det_sig(const PlanarDiagram& d, bool shade_first) {
  GoeritzData g = goeritz(d, shade_first);
  auto r = reduced(g.matrix);
  std::int64_t det = integer_determinant(r);
  return {det < 0 ? -det : det, symmetric_signature(r) - g.correction};
}

DetSig checked_det_sig(const PlanarDiagram& d) {
  if (d.empty()) return {1, 0};
  DetSig a = det_sig(d, false);
  DetSig b = det_sig(d, true);
  if (a.det != b.det || a.sig != b.sig)
    throw std::logic_error("Goeritz invariants disagree between the two colourings");
  return a;
}

}  // namespace

std::int64_t determinant(const PlanarDiagram& d) { return checked_det_sig(d).det; }

int signature(const PlanarDiagram& d) { return checked_det_sig(d).sig; }

int murasugi_lower_bound(int sig) {
  int m = sig < 0 ? -sig : sig;
  return (m + 1) / 2;
}

int murasugi_lower_bound(const PlanarDiagram& d) { return murasugi_lower_bound(signature(d)); }

Fingerprint Fingerprint::mirrored() const { return {determinant, -signature, jones.rescale_exponents(-1)}; }

std::string Fingerprint::jones_string() const { return jones.to_string_scaled(4, "t"); }

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "det=" << determinant << " sigma=" << signature << " jones=" << jones_string();
  return out.str();
}

Fingerprint fingerprint(const PlanarDiagram& d, int cap) {
  check_cap(d, cap);
  DetSig ds = checked_det_sig(d);
  return {ds.det, ds.sig, jones_quarter(d, cap)};
}

Fingerprint combine(const Fingerprint& a, const Fingerprint& b) {
  return {a.determinant * b.determinant, a.signature + b.signature, a.jones * b.jones};
}

}  // namespace gordian
