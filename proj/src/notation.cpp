#include "gordian/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace gordian {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(NotationErrorKind kind, const std::string& detail) { throw NotationError(kind, detail); }

// Flip of the crossing met at label 1 in every realized diagram.
constexpr int kFirstFlip = 0;

// Backtracking search for the rotation at each crossing.  Flip 0 puts the
// incoming even strand at slot 1 (it crosses the odd strand from right to
// left); flip 1 puts it at slot 3.
class Realizer {
public:
  explicit Realizer(const DtCode& code) : n_(code.size()) {
    label_crossing_.assign(2 * n_ + 2, -1);
    second_visit_.assign(n_, 0);
    flip_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) {
      int odd = 2 * i + 1;
      int even = std::abs(code.entries[i]);
      label_crossing_[odd] = i;
      label_crossing_[even] = i;
      second_visit_[i] = std::max(odd, even);
    }
  }

  std::optional<std::vector<int>> solve() {
    if (search(1)) return flip_;
    return std::nullopt;
  }

private:
  bool search(int label) {
    if (label > 2 * n_) return planar(2 * n_, true);
    int c = label_crossing_[label];
    if (second_visit_[c] != label) return search(label + 1);
    for (int f = 0; f < 2; ++f) {
      if (c == 0 && f != kFirstFlip) continue;
      flip_[c] = f;
      if (planar(label, false) && search(label + 1)) return true;
    }
    flip_[c] = -1;
    return false;
  }

  int slot_of_half(int label, bool out) const {
    if (label % 2 == 1) return out ? 2 : 0;
    int f = flip_[label_crossing_[label]];
    bool in_at_one = f != 1;
    if (out) return in_at_one ? 3 : 1;
    return in_at_one ? 1 : 3;
  }

  // Euler characteristic of the partial curve through labels 1..last.
  bool planar(int last, bool closed) const {
    const int halves = 4 * n_;
    std::vector<int> at(static_cast<std::size_t>(halves), -1);  // crossing*4+slot -> half id
    std::vector<int> where(static_cast<std::size_t>(halves), -1);
    auto half_id = [](int label, bool out) { return 2 * (label - 1) + (out ? 1 : 0); };
    int edges = 0;
    std::vector<char> used_crossing(static_cast<std::size_t>(n_), 0);
    for (int p = 1; p <= last; ++p) {
      int c = label_crossing_[p];
      used_crossing[c] = 1;
      for (int o = 0; o < 2; ++o) {
        bool out = o == 1;
        bool present = out ? (p < last || closed) : (p > 1 || closed);
        if (!present) continue;
        int pos = 4 * c + slot_of_half(p, out);
        int h = half_id(p, out);
        at[pos] = h;
        where[h] = pos;
      }
      if (p < last || closed) ++edges;
    }
    int vertices = 0;
    for (char u : used_crossing) vertices += u;

    auto partner = [&](int h) {
      int label = h / 2 + 1;
      if (h % 2 == 1) return half_id(label == 2 * n_ ? 1 : label + 1, false);
      return half_id(label == 1 ? 2 * n_ : label - 1, true);
    };
    auto rotate = [&](int h) {
      int pos = where[h];
      int c = pos / 4;
      for (int k = 1; k <= 4; ++k) {
        int q = 4 * c + (pos % 4 + k) % 4;
        if (at[q] >= 0) return at[q];
      }
      return h;
    };

    std::vector<char> seen(static_cast<std::size_t>(halves), 0);
    int faces = 0;
    for (int h = 0; h < halves; ++h) {
      if (where[h] < 0 || seen[h]) continue;
      ++faces;
      for (int x = h; !seen[x]; x = rotate(partner(x))) seen[x] = 1;
    }
    if (edges == 0) return true;
    return vertices - edges + faces == 2;
  }

  int n_;
  std::vector<int> label_crossing_;
  std::vector<int> second_visit_;
  std::vector<int> flip_;
};

// Flip of the crossing at `start` as seen from that passage.
int flip_at_start(const PlanarDiagram& d, Dart start) {
  int c = crossing_of(start);
  int s = slot_of(start);
  const Crossing& x = d.crossing(c);
  int other = -1;
  for (int k = 0; k < 4; ++k)
    if (k != s && x.is_incoming(k)) other = k;
  return other == ((s + 1) & 3) ? 0 : 1;
}

}  // namespace

NotationError::NotationError(NotationErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

std::string_view to_string(NotationErrorKind kind) {
  switch (kind) {
    case NotationErrorKind::MalformedSyntax: return "MalformedSyntax";
    case NotationErrorKind::OddEntry: return "OddEntry";
    case NotationErrorKind::DuplicateMagnitude: return "DuplicateMagnitude";
    case NotationErrorKind::NonRealizable: return "NonRealizable";
    case NotationErrorKind::EmptyDiagram: return "EmptyDiagram";
  }
  return "?";
}

DtCode parse_dt(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 3 && std::toupper(static_cast<unsigned char>(s[0])) == 'D' &&
      std::toupper(static_cast<unsigned char>(s[1])) == 'T' && s[2] == ':')
    s = trim(s.substr(3));
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    fail(NotationErrorKind::MalformedSyntax, "expected a bracketed list, got '" + std::string(text) + "'");
  std::string_view body = trim(s.substr(1, s.size() - 2));

  DtCode code;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string_view tok = trim(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos));
      if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        fail(NotationErrorKind::MalformedSyntax, "bad entry '" + std::string(tok) + "'");
      code.entries.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }

  for (int e : code.entries)
    if (e % 2 != 0) fail(NotationErrorKind::OddEntry, "entry " + std::to_string(e) + " is odd");

  const int n = code.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int e : code.entries) {
    int m = std::abs(e) / 2;
    if (m < 1 || m > n)
      fail(NotationErrorKind::DuplicateMagnitude,
           "entry " + std::to_string(e) + " outside the range 2.." + std::to_string(2 * n));
    if (seen[m]) fail(NotationErrorKind::DuplicateMagnitude, "magnitude " + std::to_string(2 * m) + " repeated");
    seen[m] = 1;
  }
  return code;
}

std::string to_string(const DtCode& code) {
  std::string out = "[";
  for (std::size_t i = 0; i < code.entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(code.entries[i]);
  }
  out += ']';
  return out;
}

PlanarDiagram dt_to_diagram(const DtCode& code) {
  const int n = code.size();
  if (n == 0) return {};
  auto flips = Realizer(code).solve();
  if (!flips) fail(NotationErrorKind::NonRealizable, to_string(code) + " has no planar realization");

  std::vector<int> label_crossing(static_cast<std::size_t>(2 * n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    label_crossing[2 * i + 1] = i;
    label_crossing[std::abs(code.entries[i])] = i;
  }
  std::vector<Crossing> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[i].over02 = code.entries[i] > 0;
    xs[i].dir13 = (*flips)[i] == 0;
  }
  auto in_dart = [&](int label) {
    int c = label_crossing[label];
    if (label % 2 == 1) return make_dart(c, 0);
    return make_dart(c, xs[c].dir13 ? 1 : 3);
  };
  for (int label = 1; label <= 2 * n; ++label) {
    Dart out = opposite_slot(in_dart(label));
    Dart next = in_dart(label == 2 * n ? 1 : label + 1);
    xs[crossing_of(out)].adj[slot_of(out)] = next;
    xs[crossing_of(next)].adj[slot_of(next)] = out;
  }
  return PlanarDiagram::from_crossings(std::move(xs), make_dart(0, 0));
}

DtCode dt_from_start(const PlanarDiagram& d, Dart start) {
  const int n = d.size();
  std::vector<int> odd(static_cast<std::size_t>(n), 0), even(static_cast<std::size_t>(n), 0);
  std::vector<char> even_over(static_cast<std::size_t>(n), 0);
  Dart p = start;
  for (int label = 1; label <= 2 * n; ++label) {
    int c = crossing_of(p);
    if (label % 2 == 1) {
      if (odd[c]) throw DiagramError("crossing met at two odd labels");
      odd[c] = label;
    } else {
      if (even[c]) throw DiagramError("crossing met at two even labels");
      even[c] = label;
      even_over[c] = d.is_over(p);
    }
    p = d.next_passage(p);
  }
  DtCode code;
  code.entries.assign(static_cast<std::size_t>(n), 0);
  for (int c = 0; c < n; ++c) code.entries[(odd[c] - 1) / 2] = even_over[c] ? -even[c] : even[c];
  return code;
}

DtCode emit_dt(const PlanarDiagram& d) {
  if (d.empty()) fail(NotationErrorKind::EmptyDiagram, "a diagram without crossings has no DT code");
  std::optional<DtCode> fallback;
  for (const PlanarDiagram& oriented : {d, reverse_orientation(d)}) {
    for (Dart start : oriented.passages()) {
      if (flip_at_start(oriented, start) != kFirstFlip) continue;
      DtCode code = dt_from_start(oriented, start);
      if (!fallback) fallback = code;
      PlanarDiagram back = dt_to_diagram(code);
      if (gauss_word(back, back.origin()) == gauss_word(oriented, start)) return code;
    }
  }
  return *fallback;
}

PlanarDiagram diagram_from_text(std::string_view text) { return dt_to_diagram(parse_dt(text)); }

}  // namespace gordian
