#include "gordian/atlas.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "gordian/bundled.hpp"
#include "gordian/moves.hpp"

namespace gordian {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string UnknottingRange::to_string() const {
  if (exact()) return std::to_string(low);
  return std::to_string(low) + ".." + std::to_string(high);
}

UnknottingRange UnknottingRange::parse(std::string_view text) {
  text = trim(text);
  auto dots = text.find("..");
  UnknottingRange r;
  if (dots == std::string_view::npos) {
    r.low = r.high = parse_int(text);
  } else {
    r.low = parse_int(trim(text.substr(0, dots)));
    r.high = parse_int(trim(text.substr(dots + 2)));
  }
  if (r.low < 0 || r.high < r.low) throw std::invalid_argument("bad unknotting range '" + std::string(text) + "'");
  return r;
}

std::string_view to_string(Chirality c) {
  switch (c) {
    case Chirality::AsTabulated: return "as-tabulated";
    case Chirality::Mirrored: return "mirrored";
    case Chirality::Amphichiral: return "amphichiral";
  }
  return "?";
}

std::string Identification::label() const {
  std::string out;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (i) out += '|';
    out += matches[i].name;
    if (matches[i].chirality == Chirality::Mirrored) out += " (mirror)";
  }
  return out;
}

std::string IdentifyResult::label() const { return match ? match->label() : "no match"; }

KnotTable KnotTable::parse(std::string_view text, const std::string& source) {
  KnotTable table;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto where = [&] { return source + ":" + std::to_string(line_no) + ": "; };
    try {
      auto open = line.find('[');
      auto close = line.find(']');
      if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw TableError("expected name,[dt],u");
      std::string_view head = trim(line.substr(0, open));
      if (head.empty() || head.back() != ',') throw TableError("expected ',' after the name");
      KnotTableEntry e;
      e.name = std::string(trim(head.substr(0, head.size() - 1)));
      if (e.name.empty() || e.name.find(',') != std::string::npos) throw TableError("bad name");
      e.dt = parse_dt(line.substr(open, close - open + 1));

      std::string_view rest = trim(line.substr(close + 1));
      if (!rest.empty()) {
        if (rest.front() != ',') throw TableError("expected ',' after the DT code");
        rest.remove_prefix(1);
        std::size_t pos = 0;
        bool first = true;
        while (pos <= rest.size()) {
          auto comma = rest.find(',', pos);
          std::string_view field = trim(rest.substr(pos, comma == std::string_view::npos ? rest.npos : comma - pos));
          if (field.rfind("alias=", 0) == 0) {
            std::string alias(trim(field.substr(6)));
            if (alias.empty()) throw TableError("empty alias");
            e.aliases.push_back(alias);
          } else if (first && !field.empty()) {
            e.u = UnknottingRange::parse(field);
          } else if (!field.empty()) {
            throw TableError("unexpected field '" + std::string(field) + "'");
          }
          first = false;
          if (comma == std::string_view::npos) break;
          pos = comma + 1;
        }
      }
      for (const std::string& n : [&] {
             std::vector<std::string> all{e.name};
             all.insert(all.end(), e.aliases.begin(), e.aliases.end());
             return all;
           }()) {
        if (!names.insert(n).second) throw TableError("duplicate name '" + n + "'");
      }
      e.diagram = dt_to_diagram(e.dt);
      e.fingerprint = fingerprint(e.diagram);
      table.entries_.push_back(std::move(e));
    } catch (const TableError& err) {
      throw TableError(where() + err.what());
    } catch (const std::exception& err) {
      throw TableError(where() + err.what());
    }
  }
  return table;
}

KnotTable KnotTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open table file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

const KnotTable& KnotTable::bundled() {
  static const KnotTable table = parse(bundled_table_text(), "<bundled table>");
  return table;
}

const KnotTableEntry* KnotTable::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
    for (const auto& a : e.aliases)
      if (a == name) return &e;
  }
  return nullptr;
}

const KnotTableEntry& KnotTable::at(std::string_view name) const {
  if (const auto* e = find(name)) return *e;
  throw TableError("knot '" + std::string(name) + "' is not in the table");
}

std::vector<Match> KnotTable::lookup(const Fingerprint& fp) const {
  std::vector<Match> out;
  const Fingerprint mirrored = fp.mirrored();
  for (const auto& e : entries_) {
    bool same = e.fingerprint == fp;
    bool mirror = e.fingerprint == mirrored;
    if (same && mirror) out.push_back({e.name, Chirality::Amphichiral});
    else if (same) out.push_back({e.name, Chirality::AsTabulated});
    else if (mirror) out.push_back({e.name, Chirality::Mirrored});
  }
  return out;
}

std::optional<std::filesystem::path> table_path_from_environment() {
  const char* p = std::getenv("GORDIAN_TABLE");
  if (p == nullptr || *p == '\0') return std::nullopt;
  return std::filesystem::path(p);
}

IdentifyResult identify_fingerprint(const Fingerprint& fp, const KnotTable& table) {
  IdentifyResult out;
  out.fingerprint = fp;
  auto matches = table.lookup(fp);
  if (!matches.empty()) {
    Identification id;
    id.name = matches.front().name;
    id.chirality = matches.front().chirality;
    for (const auto& m : matches) id.collision_list.push_back(m.name);
    id.matches = std::move(matches);
    out.match = std::move(id);
  }
  return out;
}

IdentifyResult identify(const PlanarDiagram& d, const KnotTable& table) {
  const PlanarDiagram* source = &d;
  PlanarDiagram simplified;
  if (d.size() > kDefaultCrossingCap) {
    simplified = simplify(d).diagram;
    source = &simplified;
  }
  IdentifyResult out = identify_fingerprint(fingerprint(*source), table);
  out.crossings_used = source->size();
  return out;
}

}  // namespace gordian
