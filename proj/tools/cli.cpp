#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "gordian/atlas.hpp"
#include "gordian/certify.hpp"
#include "gordian/invariants.hpp"
#include "gordian/moves.hpp"
#include "gordian/notation.hpp"
#include "gordian/search.hpp"

namespace gordian::cli {

namespace {

class Emitter {
public:
  Emitter(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  template <class T>
  void field(const std::string& key, const T& value) {
    std::ostringstream v;
    v << value;
    if (machine_) out_ << key << "=" << v.str() << "\n";
    else out_ << std::left << std::setw(16) << (key + ":") << (key.size() >= 15 ? " " : "") << v.str() << "\n";
  }
  void field(const std::string& key, bool value) { field(key, std::string(value ? "true" : "false")); }
  // text format only
  void text(const std::string& line) {
    if (!machine_) out_ << line << "\n";
  }
  bool machine() const { return machine_; }

private:
  std::ostream& out_;
  bool machine_;
};

std::string upper_prefix(std::string_view s) {
  std::string p(s.substr(0, 3));
  for (char& c : p) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return p;
}

PlanarDiagram diagram_from_pd_text(std::string_view body) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed PD code: ") + e.what());
  }
  std::vector<std::array<int, 4>> pd;
  if (!j.is_array()) throw std::runtime_error("PD code must be a list of 4-tuples");
  for (const auto& x : j) {
    if (!x.is_array() || x.size() != 4) throw std::runtime_error("PD code must be a list of 4-tuples");
    std::array<int, 4> t{};
    for (int i = 0; i < 4; ++i) {
      if (!x[i].is_number_integer()) throw std::runtime_error("PD labels must be integers");
      t[i] = x[i].get<int>();
    }
    pd.push_back(t);
  }
  return PlanarDiagram::from_pd(pd);
}

// A table name, "PD:[[..],..]", or a DT code.
PlanarDiagram resolve_diagram(const std::string& text, const KnotTable& table) {
  if (const auto* e = table.find(text)) return e->diagram;
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  if (upper_prefix(body) == "PD:") return diagram_from_pd_text(body.substr(3));
  return diagram_from_text(text);
}

std::string code_text(const PlanarDiagram& d) { return d.empty() ? "[]" : to_string(emit_dt(d)); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void emit_fingerprint(Emitter& e, const Fingerprint& fp) {
  e.field("determinant", fp.determinant);
  e.field("signature", fp.signature);
  e.field("jones", fp.jones_string());
}

void emit_identification(Emitter& e, const IdentifyResult& id) {
  e.field("identified", id.label());
  if (id.match) {
    e.field("chirality", to_string(id.match->chirality));
    e.field("collisions", join(id.match->collision_list, ","));
  }
}

struct Options {
  std::string table_path;
  std::uint64_t seed = 0;
  int depth = 1;
  int budget = kDefaultSimplifyBudget;
  std::string format = "text";
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot diagram toolkit: invariants, unknotting certificates and searches", "gordian"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options opt;
  app.add_option("--table", opt.table_path, "Knot table file (default: bundled, or $GORDIAN_TABLE)");
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--depth", opt.depth, "Maximum number of crossing changes")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", opt.budget, "Reidemeister moves per simplification")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  std::string diagram_text, left_text, right_text;
  std::vector<int> indices;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a DT code and print its normal form");
  parse_cmd->add_option("code", diagram_text, "DT code, PD code or table name")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "Determinant, signature and Jones polynomial");
  inv_cmd->add_option("code", diagram_text, "DT code, PD code or table name")->required();

  auto* simp_cmd = app.add_subcommand("simplify", "Reduce crossings with Reidemeister moves");
  simp_cmd->add_option("code", diagram_text, "DT code, PD code or table name")->required();

  auto* change_cmd = app.add_subcommand("change", "Change crossings (0-based indices) and identify the result");
  change_cmd->add_option("code", diagram_text, "DT code, PD code or table name")->required();
  change_cmd->add_option("crossings", indices, "Crossing indices")->required();

  bool mirror_left = false, mirror_right = false;
  auto* sum_cmd = app.add_subcommand("sum", "Connected sum of two diagrams");
  sum_cmd->add_option("left", left_text, "DT code or table name")->required();
  sum_cmd->add_option("right", right_text, "DT code or table name")->required();
  sum_cmd->add_flag("--mirror-left", mirror_left, "Mirror the left summand");
  sum_cmd->add_flag("--mirror-right", mirror_right, "Mirror the right summand");

  auto* id_cmd = app.add_subcommand("identify", "Match the fingerprint against the table");
  id_cmd->add_option("code", diagram_text, "DT code, PD code or table name")->required();

  std::vector<std::string> cert_files;
  bool all_bundled = false, details = false;
  auto* verify_cmd = app.add_subcommand("verify", "Replay unknotting certificates");
  verify_cmd->add_option("files", cert_files, "Certificate files");
  verify_cmd->add_flag("--all-bundled", all_bundled, "Verify the bundled certificates");
  verify_cmd->add_flag("--details", details, "Print every step");

  int max_nodes = 100000;
  std::string output_path;
  auto* su_cmd = app.add_subcommand("search-unknotting", "Breadth-first unknotting search");
  su_cmd->add_option("code", diagram_text, "DT code, PD code or table name")->required();
  su_cmd->add_option("--max-nodes", max_nodes, "Node cap")->check(CLI::PositiveNumber);
  su_cmd->add_option("--output", output_path, "Write the witness certificate here");

  int trials = 1, inflation = 4;
  std::string mirror_choice = "none", inject;
  auto* ss_cmd = app.add_subcommand("search-symbiont", "Randomized search for unknotting shortcuts of a sum");
  ss_cmd->add_option("left", left_text, "Table name")->required();
  ss_cmd->add_option("right", right_text, "Table name")->required();
  ss_cmd->add_option("--trials", trials, "Number of trials")->check(CLI::NonNegativeNumber);
  ss_cmd->add_option("--inflation", inflation, "Random moves per trial")->check(CLI::NonNegativeNumber);
  ss_cmd->add_option("--mirror", mirror_choice, "Summands to mirror")
      ->check(CLI::IsMember({"none", "left", "right", "both"}));
  ss_cmd->add_option("--inject", inject, "DT code used as the diagram of trial 0");
  ss_cmd->add_option("--output-dir", output_path, "Write accepted certificates here");

  int k = 1;
  bool show_flagged = false;
  auto* cs_cmd = app.add_subcommand("count-subsets", "Count k-subsets of crossings that unknot");
  cs_cmd->add_option("code", diagram_text, "DT code, PD code or table name")->required();
  cs_cmd->add_option("k", k, "Subset size")->required()->check(CLI::NonNegativeNumber);
  cs_cmd->add_flag("--show-flagged", show_flagged, "List subsets with a trivial fingerprint but no certificate");

  auto* adj_cmd = app.add_subcommand("adjacent", "Identify every single crossing change");
  adj_cmd->add_option("code", diagram_text, "DT code, PD code or table name")->required();


  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    std::optional<KnotTable> loaded;
    if (!opt.table_path.empty()) loaded = KnotTable::load(opt.table_path);
    else if (auto p = table_path_from_environment()) loaded = KnotTable::load(*p);
    const KnotTable& table = loaded ? *loaded : KnotTable::bundled();

    Emitter e(out, opt.format == "machine");
    SearchConfig cfg;
    cfg.depth = opt.depth;
    cfg.simplify_budget = opt.budget;
    cfg.rng_seed = opt.seed;
    cfg.table = &table;

    if (*parse_cmd) {
      PlanarDiagram d;
      std::string canonical;
      if (table.find(diagram_text) || upper_prefix(diagram_text) == "PD:") {
        d = resolve_diagram(diagram_text, table);
      } else {
        DtCode code = parse_dt(diagram_text);
        canonical = to_string(code);
        d = dt_to_diagram(code);
      }
      if (!canonical.empty()) e.field("input", canonical);
      e.field("crossings", d.size());
      e.field("dt", code_text(d));
      e.field("writhe", writhe(d));
      return kExitOk;
    }

    if (*inv_cmd) {
      PlanarDiagram d = resolve_diagram(diagram_text, table);
      Fingerprint fp = fingerprint(d);
      e.field("crossings", d.size());
      emit_fingerprint(e, fp);
      e.field("murasugi_bound", murasugi_lower_bound(fp.signature));
      return kExitOk;
    }

    if (*simp_cmd) {
      PlanarDiagram d = resolve_diagram(diagram_text, table);
      SimplifyResult r = simplify(d, opt.budget);
      e.field("initial", r.report.initial_crossings);
      e.field("final", r.report.final_crossings);
      e.field("moves", r.report.moves_applied);
      e.field("budget_exhausted", r.report.budget_exhausted);
      e.field("dt", code_text(r.diagram));
      return kExitOk;
    }

    if (*change_cmd) {
      PlanarDiagram d = resolve_diagram(diagram_text, table);
      for (int c : indices) {
        if (c < 0 || c >= d.size())
          throw std::runtime_error("crossing index " + std::to_string(c) + " out of range for " +
                                   std::to_string(d.size()) + " crossings");
        d = change_crossing(d, CrossingRef{c});
      }
      e.field("dt", code_text(d));
      IdentifyResult id = identify(d, table);
      emit_fingerprint(e, id.fingerprint);
      emit_identification(e, id);
      return kExitOk;
    }

    if (*sum_cmd) {
      PlanarDiagram a = resolve_diagram(left_text, table), b = resolve_diagram(right_text, table);
      if (mirror_left) a = mirror(a);
      if (mirror_right) b = mirror(b);
      PlanarDiagram s = connected_sum(a, b);
      e.field("crossings", s.size());
      e.field("dt", code_text(s));
      emit_fingerprint(e, fingerprint_any_size(s));
      return kExitOk;
    }

    if (*id_cmd) {
      PlanarDiagram d = resolve_diagram(diagram_text, table);
      IdentifyResult id = identify(d, table);
      emit_identification(e, id);
      emit_fingerprint(e, id.fingerprint);
      return kExitOk;
    }

    if (*verify_cmd) {
      std::vector<Certificate> certs;
      if (all_bundled) certs = bundled_certificates();
      for (const auto& f : cert_files) certs.push_back(load_certificate(f));
      if (certs.empty()) throw std::runtime_error("no certificates given (use FILE... or --all-bundled)");
      bool all_passed = true;
      for (const auto& c : certs) {
        VerificationReport r = verify_certificate(c, table, opt.budget);
        all_passed = all_passed && r.passed;
        if (e.machine()) {
          e.field(c.id + ".passed", r.passed);
          e.field(c.id + ".bound", r.bound);
          e.field(c.id + ".failure", to_string(r.failure));
          e.field(c.id + ".steps", r.steps.size());
          if (c.sum) {
            try {
              e.field(c.id + ".additivity", to_string(summarize_additivity(c, table).kind));
            } catch (const TableError&) {
            }
          }
        } else if (details) {
          out << r.details();
        } else {
          out << r.verdict_line() << "\n";
        }
      }
      return all_passed ? kExitOk : kExitVerificationFailed;
    }

    if (*su_cmd) {
      PlanarDiagram d = resolve_diagram(diagram_text, table);
      cfg.max_nodes = max_nodes;
      SearchOutcome o = unknotting_upper_bound(d, cfg);
      e.field("bound", o.bound_found ? std::to_string(*o.bound_found) : std::string("none"));
      e.field("nodes", o.nodes_explored);
      e.field("exhausted", o.exhausted);
      if (o.witness) {
        std::string text = render_certificate(*o.witness);
        if (!output_path.empty()) {
          std::ofstream f(output_path);
          if (!f) throw std::runtime_error("cannot write " + output_path);
          f << text;
          e.field("certificate", output_path);
        } else {
          e.text(text.substr(0, text.size() - 1));
        }
      }
      return kExitOk;
    }

    if (*ss_cmd) {
      SymbiontConfig sc;
      sc.search = cfg;
      sc.inflation = inflation;
      sc.mirror = mirror_choice == "left"    ? SumMirror::Left
                  : mirror_choice == "right" ? SumMirror::Right
                  : mirror_choice == "both"  ? SumMirror::Both
                                             : SumMirror::None;
      if (!inject.empty()) sc.injected = diagram_from_text(inject);
      sc.log = &err;
      auto accepted = symbiont_search(left_text, right_text, trials, sc);
      e.field("accepted", accepted.size());
      for (const auto& o : accepted) {
        e.field("trial", o.trial);
        e.field("bound", *o.bound_found);
        std::string text = render_certificate(*o.witness);
        if (!output_path.empty()) {
          std::filesystem::create_directories(output_path);
          auto path = std::filesystem::path(output_path) / (o.witness->id + ".cert");
          std::ofstream f(path);
          if (!f) throw std::runtime_error("cannot write " + path.string());
          f << text;
          e.field("certificate", path.string());
        } else {
          e.text(text.substr(0, text.size() - 1));
        }
      }
      return kExitOk;
    }

    if (*cs_cmd) {
      PlanarDiagram d = resolve_diagram(diagram_text, table);
      SubsetCount r = count_unknotting_subsets(d, k, cfg);
      e.field("count", r.count);
      e.field("flagged", r.flagged.size());
      if (show_flagged)
        for (const auto& s : r.flagged) {
          std::vector<std::string> items;
          for (int c : s) items.push_back(std::to_string(c));
          e.field("flagged_subset", join(items, ","));
        }
      return kExitOk;
    }

    if (*adj_cmd) {
      PlanarDiagram d = resolve_diagram(diagram_text, table);
      AdjacencyReport r = adjacent_knots(d, cfg);
      std::vector<std::string> labels;
      for (const auto& id : r.knots) labels.push_back(id.label());
      e.field("adjacent", labels.empty() ? std::string("none") : join(labels, ","));
      e.field("unknot_changes", r.unknot_crossings.size());
      e.field("unidentified_changes", r.unidentified_crossings.size());
      for (const auto& c : r.per_crossing)
        e.field("crossing." + std::to_string(c.crossing), c.unknot ? std::string("0_1") : c.identification.label());
      return kExitOk;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace gordian::cli
