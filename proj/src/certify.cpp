#include "gordian/certify.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gordian/bundled.hpp"

namespace gordian {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw CertificateFormatError("bad " + what + " '" + s + "'");
  return v;
}

// Splits "[..] key=value key=value" into the bracketed code and the options.
std::pair<std::string, std::vector<std::string>> code_and_options(std::string_view rest) {
  auto close = rest.find(']');
  if (rest.empty() || rest.front() != '[' || close == std::string_view::npos)
    throw CertificateFormatError("expected a bracketed DT code");
  return {std::string(rest.substr(0, close + 1)), split_words(rest.substr(close + 1))};
}

std::string option_value(const std::string& word, std::string_view key) {
  return word.substr(key.size() + 1);
}

bool has_key(const std::string& word, std::string_view key) {
  return word.size() > key.size() && word.compare(0, key.size(), key) == 0 && word[key.size()] == '=';
}

SumMirror parse_mirror(const std::string& v) {
  if (v == "none") return SumMirror::None;
  if (v == "left") return SumMirror::Left;
  if (v == "right") return SumMirror::Right;
  if (v == "both") return SumMirror::Both;
  throw CertificateFormatError("bad mirror value '" + v + "'");
}

}  // namespace

std::string_view to_string(SumMirror m) {
  switch (m) {
    case SumMirror::None: return "none";
    case SumMirror::Left: return "left";
    case SumMirror::Right: return "right";
    case SumMirror::Both: return "both";
  }
  return "?";
}

std::string_view to_string(FailureKind k) {
  switch (k) {
    case FailureKind::None: return "None";
    case FailureKind::StepMismatch: return "StepMismatch";
    case FailureKind::UnknotNotReached: return "UnknotNotReached";
    case FailureKind::TableMissingName: return "TableMissingName";
    case FailureKind::InvalidCertificate: return "InvalidCertificate";
  }
  return "?";
}

std::string_view to_string(AdditivityKind k) {
  switch (k) {
    case AdditivityKind::StrictFailureOfAdditivity: return "StrictFailureOfAdditivity";
    case AdditivityKind::ConditionalOnRange: return "ConditionalOnRange";
    case AdditivityKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Certificate parse_certificate(std::string_view text, const std::string& source) {
  Certificate c;
  bool have_header = false, have_bound = false, ended = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      if (ended) throw CertificateFormatError("text after 'end'");
      auto space = line.find_first_of(" \t");
      std::string keyword(line.substr(0, space));
      std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
      if (!have_header && keyword != "certificate") throw CertificateFormatError("expected 'certificate ID' first");

      if (keyword == "certificate") {
        if (have_header) throw CertificateFormatError("second 'certificate' line");
        auto words = split_words(rest);
        if (words.size() != 1) throw CertificateFormatError("expected 'certificate ID'");
        c.id = words[0];
        have_header = true;
      } else if (keyword == "title") {
        c.title = std::string(rest);
      } else if (keyword == "sum") {
        auto words = split_words(rest);
        if (words.size() < 2) throw CertificateFormatError("expected 'sum LEFT RIGHT [options]'");
        if (c.sum) throw CertificateFormatError("second 'sum' line");
        ClaimedSum sum;
        sum.left = words[0];
        sum.right = words[1];
        for (std::size_t i = 2; i < words.size(); ++i) {
          if (has_key(words[i], "mirror")) sum.mirror = parse_mirror(option_value(words[i], "mirror"));
          else if (has_key(words[i], "signature"))
            sum.signature = to_int(option_value(words[i], "signature"), "signature");
          else if (has_key(words[i], "abs-signature"))
            sum.abs_signature = to_int(option_value(words[i], "abs-signature"), "abs-signature");
          else throw CertificateFormatError("unknown sum option '" + words[i] + "'");
        }
        c.sum = std::move(sum);
      } else if (keyword == "bound") {
        auto words = split_words(rest);
        if (words.size() != 1) throw CertificateFormatError("expected 'bound N'");
        c.claimed_bound = to_int(words[0], "bound");
        if (c.claimed_bound < 0) throw CertificateFormatError("bound must not be negative");
        have_bound = true;
      } else if (keyword == "start" || keyword == "substitute") {
        auto [code, options] = code_and_options(rest);
        Step s;
        s.kind = keyword == "start" ? StepKind::Start : StepKind::Substitute;
        s.dt = parse_dt(code);
        for (const auto& w : options) {
          if (has_key(w, "tag")) s.annotation = option_value(w, "tag");
          else throw CertificateFormatError("unknown option '" + w + "'");
        }
        c.steps.push_back(std::move(s));
      } else if (keyword == "change") {
        auto words = split_words(rest);
        if (words.empty()) throw CertificateFormatError("expected 'change INDEX [options]'");
        Step s;
        s.kind = StepKind::Change;
        s.index = to_int(words[0], "crossing index");
        for (std::size_t i = 1; i < words.size(); ++i) {
          if (has_key(words[i], "expect")) s.expected_name = option_value(words[i], "expect");
          else if (has_key(words[i], "tag")) s.annotation = option_value(words[i], "tag");
          else throw CertificateFormatError("unknown option '" + words[i] + "'");
        }
        c.steps.push_back(std::move(s));
      } else if (keyword == "end") {
        ended = true;
      } else {
        throw CertificateFormatError("unknown keyword '" + keyword + "'");
      }
    } catch (const NotationError& e) {
      throw CertificateFormatError(source + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const CertificateFormatError& e) {
      throw CertificateFormatError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw CertificateFormatError(source + ": missing 'certificate' line");
  if (!have_bound) throw CertificateFormatError(source + ": missing 'bound' line");
  if (!ended) throw CertificateFormatError(source + ": missing 'end'");
  if (c.steps.empty() || c.steps.front().kind != StepKind::Start)
    throw CertificateFormatError(source + ": the first step must be 'start'");
  for (std::size_t i = 1; i < c.steps.size(); ++i)
    if (c.steps[i].kind == StepKind::Start) throw CertificateFormatError(source + ": only one 'start' step allowed");
  return c;
}

Certificate load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CertificateFormatError("cannot open certificate file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_certificate(buffer.str(), path.string());
}

std::string render_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "certificate " << c.id << "\n";
  if (!c.title.empty()) out << "title " << c.title << "\n";
  if (c.sum) {
    out << "sum " << c.sum->left << " " << c.sum->right << " mirror=" << to_string(c.sum->mirror);
    if (c.sum->signature) out << " signature=" << *c.sum->signature;
    if (c.sum->abs_signature) out << " abs-signature=" << *c.sum->abs_signature;
    out << "\n";
  }
  out << "bound " << c.claimed_bound << "\n";
  for (const Step& s : c.steps) {
    switch (s.kind) {
      case StepKind::Start: out << "start " << to_string(s.dt); break;
      case StepKind::Substitute: out << "substitute " << to_string(s.dt); break;
      case StepKind::Change:
        out << "change " << s.index;
        if (s.expected_name) out << " expect=" << *s.expected_name;
        break;
    }
    if (!s.annotation.empty()) out << " tag=" << s.annotation;
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

std::vector<Certificate> bundled_certificates() {
  std::vector<Certificate> out;
  for (const auto& [name, text] : bundled_certificate_texts()) out.push_back(parse_certificate(text, std::string(name)));
  return out;
}

Certificate bundled_certificate(std::string_view id) {
  for (auto& c : bundled_certificates())
    if (c.id == id) return c;
  throw CertificateFormatError("no bundled certificate '" + std::string(id) + "'");
}

PlanarDiagram claimed_sum_diagram(const ClaimedSum& sum, const KnotTable& table) {
  PlanarDiagram left = table.at(sum.left).diagram;
  PlanarDiagram right = table.at(sum.right).diagram;
  if (sum.mirror == SumMirror::Left || sum.mirror == SumMirror::Both) left = mirror(left);
  if (sum.mirror == SumMirror::Right || sum.mirror == SumMirror::Both) right = mirror(right);
  return connected_sum(left, right);
}

Fingerprint fingerprint_any_size(const PlanarDiagram& d) {
  if (d.size() <= kDefaultCrossingCap) return fingerprint(d);
  return fingerprint(simplify(d).diagram);
}

namespace {

std::string sum_text(const ClaimedSum& s) {
  auto name = [](const std::string& n, bool mirrored) { return mirrored ? "mirror(" + n + ")" : n; };
  bool l = s.mirror == SumMirror::Left || s.mirror == SumMirror::Both;
  bool r = s.mirror == SumMirror::Right || s.mirror == SumMirror::Both;
  return name(s.left, l) + "#" + name(s.right, r);
}

}  // namespace

std::string VerificationReport::verdict_line() const {
  std::string line = id + ": " + (title.empty() ? std::string("certificate") : title);
  line += " certified at invariant level, bound " + std::to_string(bound) + ": ";
  if (passed) return line + "PASS";
  return line + "FAIL (" + std::string(to_string(failure)) + ": " + failure_detail + ")";
}

std::string VerificationReport::details() const {
  std::ostringstream out;
  out << "certificate " << id << " (" << title << ")\n";
  if (has_sum)
    out << "  sum fingerprint " << sum_fingerprint.to_string()
        << (sum_matches_start ? " matches" : " does not match") << " the start diagram\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    out << "  step " << i << ": " << s.description;
    if (!s.annotation.empty()) out << " " << s.annotation;
    out << " | " << s.crossings << " crossings | " << s.identification << " | "
        << (s.passed ? "ok" : "FAILED");
    if (!s.note.empty()) out << " (" << s.note << ")";
    out << "\n    " << s.fingerprint.to_string() << "\n";
  }
  out << "  final simplification: " << final_simplification.initial_crossings << " -> "
      << final_simplification.final_crossings << " crossings in " << final_simplification.moves_applied
      << " moves\n";
  out << "  " << verdict_line() << "\n";
  return out.str();
}

VerificationReport verify_certificate(const Certificate& c, const KnotTable& table, int budget) {
  VerificationReport report;
  report.id = c.id;
  report.title = c.title;
  report.bound = c.claimed_bound;
  auto fail = [&](FailureKind kind, std::string detail) {
    report.passed = false;
    report.failure = kind;
    report.failure_detail = std::move(detail);
    return report;
  };

  int changes = 0;
  for (const Step& s : c.steps) changes += s.kind == StepKind::Change;
  if (c.steps.empty() || c.steps.front().kind != StepKind::Start)
    return fail(FailureKind::InvalidCertificate, "first step is not a start diagram");
  if (changes != c.claimed_bound)
    return fail(FailureKind::InvalidCertificate, std::to_string(changes) + " crossing changes but bound " +
                                                     std::to_string(c.claimed_bound));
  if (c.sum)
    for (const std::string& name : {c.sum->left, c.sum->right})
      if (!table.find(name)) return fail(FailureKind::TableMissingName, "summand '" + name + "' not in table");
  for (const Step& s : c.steps)
    if (s.expected_name && !table.find(*s.expected_name))
      return fail(FailureKind::TableMissingName, "expected knot '" + *s.expected_name + "' not in table");

  // the connected sum must match the start diagram
  PlanarDiagram current;
  try {
    current = dt_to_diagram(c.steps.front().dt);
  } catch (const NotationError& e) {
    return fail(FailureKind::InvalidCertificate, e.what());
  }
  report.has_sum = c.sum.has_value();
  if (c.sum) {
    const ClaimedSum& sum = *c.sum;
    report.sum_fingerprint = fingerprint_any_size(claimed_sum_diagram(sum, table));
    if (sum.signature && report.sum_fingerprint.signature != *sum.signature)
      return fail(FailureKind::StepMismatch, "sum " + sum_text(sum) + " has signature " +
                                                 std::to_string(report.sum_fingerprint.signature) + ", claimed " +
                                                 std::to_string(*sum.signature));
    if (sum.abs_signature && std::abs(report.sum_fingerprint.signature) != *sum.abs_signature)
      return fail(FailureKind::StepMismatch, "sum " + sum_text(sum) + " has signature " +
                                                 std::to_string(report.sum_fingerprint.signature) +
                                                 ", claimed |sigma| " + std::to_string(*sum.abs_signature));
  }

  Fingerprint previous;
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Step& s = c.steps[i];
    StepReport r;
    r.annotation = s.annotation;
    std::string where = "step " + std::to_string(i);
    try {
      switch (s.kind) {
        case StepKind::Start:
          r.description = "start " + to_string(s.dt);
          break;
        case StepKind::Substitute:
          r.description = "substitute " + to_string(s.dt);
          current = dt_to_diagram(s.dt);
          break;
        case StepKind::Change:
          r.description = "change crossing " + std::to_string(s.index);
          if (s.index < 0 || s.index >= current.size())
            return fail(FailureKind::InvalidCertificate, where + ": crossing index " + std::to_string(s.index) +
                                                             " out of range");
          current = change_crossing(current, CrossingRef{s.index});
          break;
      }
    } catch (const NotationError& e) {
      return fail(FailureKind::InvalidCertificate, where + ": " + e.what());
    }
    r.crossings = current.size();
    IdentifyResult id = identify(current, table);
    r.fingerprint = id.fingerprint;
    r.identification = id.label();

    if (s.kind == StepKind::Start && c.sum) {
      report.sum_matches_start = r.fingerprint == report.sum_fingerprint;
      if (!report.sum_matches_start) {
        r.passed = false;
        r.note = "differs from the fingerprint of " + sum_text(*c.sum);
      }
    } else if (s.kind == StepKind::Substitute) {
      if (!(r.fingerprint == previous)) {
        r.passed = false;
        r.note = "fingerprint differs from the previous diagram";
      } else {
        r.note = "same fingerprint as the previous diagram (invariant level)";
      }
    } else if (s.expected_name) {
      const auto& names = id.match ? id.match->collision_list : std::vector<std::string>{};
      const KnotTableEntry& expected = table.at(*s.expected_name);
      if (std::find(names.begin(), names.end(), expected.name) == names.end()) {
        r.passed = false;
        r.note = "expected " + *s.expected_name;
      }
    }
    report.steps.push_back(r);
    if (!r.passed) return fail(FailureKind::StepMismatch, where + ": " + r.note);
    previous = r.fingerprint;
  }

  UnknotCertification final_state = certify_unknot(current, budget);
  report.final_simplification = final_state.report;
  if (final_state.verdict != UnknotVerdict::Unknot)
    return fail(FailureKind::UnknotNotReached,
                final_state.knotted ? "final diagram is knotted" : "final diagram did not simplify to 0 crossings");
  report.passed = true;
  return report;
}

std::string AdditivityVerdict::to_string() const {
  std::ostringstream out;
  out << gordian::to_string(kind) << ": bound " << bound << " vs u(left)+u(right) in [" << sum_low << ","
      << sum_high << "]; signature floor " << murasugi_floor;
  return out.str();
}

AdditivityVerdict summarize_additivity(const Certificate& c, const KnotTable& table) {
  if (!c.sum) throw TableError("certificate " + c.id + " names no connected sum");
  const ClaimedSum& sum = *c.sum;
  const KnotTableEntry& left = table.at(sum.left);
  const KnotTableEntry& right = table.at(sum.right);
  if (!left.u) throw TableError("no unknotting data for " + left.name);
  if (!right.u) throw TableError("no unknotting data for " + right.name);
  AdditivityVerdict v;
  v.bound = c.claimed_bound;
  v.left = *left.u;
  v.right = *right.u;
  v.sum_low = v.left.low + v.right.low;
  v.sum_high = v.left.high + v.right.high;
  if (v.bound < v.sum_low) v.kind = AdditivityKind::StrictFailureOfAdditivity;
  else if (v.bound < v.sum_high) v.kind = AdditivityKind::ConditionalOnRange;
  else v.kind = AdditivityKind::Inconclusive;
  Fingerprint l = left.fingerprint, r = right.fingerprint;
  if (sum.mirror == SumMirror::Left || sum.mirror == SumMirror::Both) l = l.mirrored();
  if (sum.mirror == SumMirror::Right || sum.mirror == SumMirror::Both) r = r.mirrored();
  v.murasugi_floor = murasugi_lower_bound(combine(l, r).signature);
  return v;
}

}  // namespace gordian
