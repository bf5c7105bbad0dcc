#pragma once

// Slow, independent reference implementations used only by the tests.

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/laurent.hpp"
#include "gordian/notation.hpp"

#ifndef GORDIAN_TEST_DATA_DIR
#define GORDIAN_TEST_DATA_DIR "tests/data"
#endif

namespace oracle {

using gordian::DtCode;
using gordian::LaurentPolynomial;
using gordian::PlanarDiagram;

// Tries every crossing orientation (2^n rotation systems built straight from
// the code) and counts faces; realizable iff one of them is planar.
inline bool realizable(const DtCode& code) {
  const int n = static_cast<int>(code.entries.size());
  if (n == 0) return true;
  const int passages = 2 * n;
  std::vector<int> partner(passages);
  for (int i = 0; i < n; ++i) {
    int odd = 2 * i, even = std::abs(code.entries[i]) - 1;
    partner[odd] = even;
    partner[even] = odd;
  }
  // half-edge 2p: passage p arriving; 2p+1: passage p leaving
  auto twin = [&](int h) {
    int p = h / 2;
    return h % 2 == 1 ? 2 * ((p + 1) % passages) : 2 * ((p + passages - 1) % passages) + 1;
  };
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::vector<int> next_ccw(2 * passages);
    for (int i = 0; i < n; ++i) {
      int o = 2 * i, e = partner[o];
      bool flip = (mask >> i) & 1;
      int ring[4] = {2 * o, flip ? 2 * e + 1 : 2 * e, 2 * o + 1, flip ? 2 * e : 2 * e + 1};
      for (int k = 0; k < 4; ++k) next_ccw[ring[k]] = ring[(k + 1) % 4];
    }
    std::vector<bool> used(2 * passages, false);
    int faces = 0;
    for (int h = 0; h < 2 * passages; ++h) {
      if (used[h]) continue;
      ++faces;
      for (int x = h; !used[x]; x = next_ccw[twin(x)]) used[x] = true;
    }
    if (faces == n + 2) return true;
  }
  return false;
}

// Kauffman bracket in A by summing over all 2^n states.
inline LaurentPolynomial bracket(const PlanarDiagram& d) {
  const int n = d.size();
  if (n == 0) return LaurentPolynomial(1);
  const LaurentPolynomial loop = LaurentPolynomial::monomial(-1, 2) + LaurentPolynomial::monomial(-1, -2);
  LaurentPolynomial total;
  for (long state = 0; state < (1L << n); ++state) {
    std::vector<int> parent(4 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.crossing(c);
      for (int s = 0; s < 4; ++s) join(4 * c + s, x.adj[s]);
      bool a_smoothing = !((state >> c) & 1);
      a_count += a_smoothing;
      // rotating the over strand counterclockwise sweeps the A corners
      bool pair_12 = a_smoothing == x.over02;
      if (pair_12) {
        join(4 * c + 1, 4 * c + 2);
        join(4 * c + 3, 4 * c + 0);
      } else {
        join(4 * c + 0, 4 * c + 1);
        join(4 * c + 2, 4 * c + 3);
      }
    }
    int loops = 0;
    for (int x = 0; x < 4 * n; ++x) loops += find(x) == x;
    total += LaurentPolynomial::monomial(1, a_count - (n - a_count)) * loop.pow(static_cast<unsigned>(loops - 1));
  }
  return total;
}

// Jones polynomial in quarter-units of t: V(t) = (-A^3)^(-w) <D> at A = t^(-1/4).
inline LaurentPolynomial jones_quarter(const PlanarDiagram& d) {
  const int w = gordian::writhe(d);
  LaurentPolynomial factor = LaurentPolynomial::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
  return (factor * bracket(d)).rescale_exponents(-1);
}

struct ReferenceKnot {
  std::string name;
  std::string dt;
  std::string pd;
  long determinant = 0;
  int signature = 0;
  std::string jones;
};

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') quoted = !quoted;
    else if (ch == ',' && !quoted) {
      fields.push_back(cur);
      cur.clear();
    } else cur += ch;
  }
  fields.push_back(cur);
  return fields;
}

// KnotInfo values exported by tools/knotinfo_export.py.
inline std::vector<ReferenceKnot> knotinfo_reference() {
  std::ifstream in(std::string(GORDIAN_TEST_DATA_DIR) + "/knotinfo_reference.csv");
  if (!in) throw std::runtime_error("missing knotinfo_reference.csv");
  std::vector<ReferenceKnot> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 6) throw std::runtime_error("bad reference row: " + line);
    out.push_back({f[0], f[1], f[2], std::stol(f[3]), std::stoi(f[4]), f[5]});
  }
  return out;
}

inline std::vector<std::array<int, 4>> parse_pd(const std::string& text) {
  std::vector<std::array<int, 4>> out;
  std::vector<int> nums;
  std::string cur;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) cur += ch;
    else if (!cur.empty()) {
      nums.push_back(std::stoi(cur));
      cur.clear();
    }
  }
  for (std::size_t i = 0; i + 3 < nums.size(); i += 4) out.push_back({nums[i], nums[i + 1], nums[i + 2], nums[i + 3]});
  return out;
}

}  // namespace oracle
