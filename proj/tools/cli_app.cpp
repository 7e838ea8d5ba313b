#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cusptrees/counting.hpp"
#include "cusptrees/curve_bounds.hpp"
#include "cusptrees/treegen.hpp"

namespace cusptrees::cli {

namespace {

using nlohmann::ordered_json;

struct GuardRefusal {
  std::string message;
};

void emit_json(const ordered_json& doc, std::ostream& out) {
  out << doc.dump(2) << "\n";
}

const char* count_note(const std::string& kind) {
  if (kind == "rooted") {
    return "isomorphism classes of rooted series-reduced trees with n leaves";
  }
  if (kind == "vertex-pointed") {
    return "branch multisets at a vertex of degree >= 3, unrestricted branch "
           "sizes; upper-bound variant, may count a class more than once";
  }
  if (kind == "edge-pair") {
    return "unordered pairs of rooted trees with n leaves each (the 2n-tip "
           "edge-glued trees)";
  }
  return "homeomorphism classes of trees with n tips (leaf-centroid exact count)";
}

int cmd_count(const std::string& kind, int n, bool json, std::ostream& out) {
  BigInt value;
  if (kind == "rooted") {
    value = count_rooted(n);
  } else if (kind == "vertex-pointed") {
    value = count_vertex_pointed(n);
  } else if (kind == "edge-pair") {
    value = count_edge_pair(n);
  } else {
    value = count_unrooted_exact(n);
  }
  if (json) {
    ordered_json doc;
    doc["command"] = "count";
    doc["inputs"] = {{"kind", kind}, {"n", n}};
    doc["results"] = {{"count", value.str()}};
    doc["note"] = count_note(kind);
    emit_json(doc, out);
  } else {
    out << "command: count\n"
        << "kind: " << kind << "\n"
        << "n: " << n << "\n"
        << "count: " << value << "\n"
        << "note: " << count_note(kind) << "\n";
  }
  return kExitSuccess;
}

struct PaperRow {
  int n;
  BigInt rooted;
  BigInt vertex_pointed;
  std::optional<BigInt> edge_pair;  // tabulated for n <= max_tips / 2
  BigInt exact;
  BigInt overcount;
};

int cmd_paper(int max_tips, bool json, std::ostream& out) {
  TreeCounts& counts = shared_tree_counts();
  std::vector<PaperRow> rows;
  for (int n = 1; n <= max_tips; ++n) {
    PaperRow row{n, counts.rooted(n), counts.vertex_pointed(n), std::nullopt,
                 counts.unrooted_exact(n), 0};
    if (n <= max_tips / 2) row.edge_pair = counts.edge_pair(n);
    row.overcount = row.vertex_pointed - row.exact;
    if (n % 2 == 0) row.overcount += counts.edge_pair(n / 2);
    rows.push_back(std::move(row));
  }
  PaperTotals totals = counts.paper_total(max_tips);
  BigInt exact_total = counts.homeomorphism_classes_upto(max_tips);

  if (json) {
    ordered_json doc;
    doc["command"] = "paper";
    doc["inputs"] = {{"max_tips", max_tips}};
    ordered_json table = ordered_json::array();
    for (const PaperRow& row : rows) {
      ordered_json r;
      r["n"] = row.n;
      r["rooted"] = row.rooted.str();
      r["vertex_pointed"] = row.vertex_pointed.str();
      r["edge_pair"] = row.edge_pair ? ordered_json(row.edge_pair->str())
                                     : ordered_json(nullptr);
      r["exact"] = row.exact.str();
      r["overcount"] = row.overcount.str();
      table.push_back(std::move(r));
    }
    doc["results"] = {{"rows", std::move(table)},
                      {"s", totals.s.str()},
                      {"s1", totals.s1.str()},
                      {"exact_total", exact_total.str()},
                      {"overcount_total", (totals.s1 - exact_total).str()}};
    doc["note"] =
        "s1 sums the vertex-pointed and edge-pair counts and is an upper "
        "bound; exact_total counts each homeomorphism class once";
    emit_json(doc, out);
    return kExitSuccess;
  }

  auto width_of = [&](const std::string& header, auto&& cell) {
    std::size_t w = header.size();
    for (const PaperRow& row : rows) w = std::max(w, cell(row).size());
    return static_cast<int>(w);
  };
  auto str_or_dash = [](const std::optional<BigInt>& v) {
    return v ? v->str() : std::string("-");
  };
  const int wn = width_of("n", [](const PaperRow& r) { return std::to_string(r.n); });
  const int wt = width_of("T", [](const PaperRow& r) { return r.rooted.str(); });
  const int wp = width_of("P", [](const PaperRow& r) { return r.vertex_pointed.str(); });
  const int wq = width_of("Q", [&](const PaperRow& r) { return str_or_dash(r.edge_pair); });
  const int we = width_of("exact", [](const PaperRow& r) { return r.exact.str(); });
  const int wo = width_of("overcount", [](const PaperRow& r) { return r.overcount.str(); });

  out << "command: paper\n"
      << "max_tips: " << max_tips << "\n"
      << std::setw(wn) << "n" << "  " << std::setw(wt) << "T" << "  "
      << std::setw(wp) << "P" << "  " << std::setw(wq) << "Q" << "  "
      << std::setw(we) << "exact" << "  " << std::setw(wo) << "overcount" << "\n";
  for (const PaperRow& row : rows) {
    out << std::setw(wn) << row.n << "  " << std::setw(wt) << row.rooted.str()
        << "  " << std::setw(wp) << row.vertex_pointed.str() << "  "
        << std::setw(wq) << str_or_dash(row.edge_pair) << "  " << std::setw(we)
        << row.exact.str() << "  " << std::setw(wo) << row.overcount.str() << "\n";
  }
  out << "S (vertex-pointed totals)  = " << totals.s << "\n"
      << "S1 (S + edge-pair totals)  = " << totals.s1 << "\n"
      << "exact class total          = " << exact_total << "\n"
      << "S1 - exact                 = " << (totals.s1 - exact_total) << "\n";
  return kExitSuccess;
}

int resolve_guard(const std::optional<int>& flag_guard) {
  if (flag_guard) {
    if (*flag_guard < 1) throw std::domain_error("--guard must be >= 1");
    return *flag_guard;
  }
  if (const char* env = std::getenv(kGuardEnvVar)) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1) {
      throw std::domain_error(std::string("invalid ") + kGuardEnvVar + " value '" +
                              env + "': expected a positive integer");
    }
    return static_cast<int>(value);
  }
  return kDefaultEnumGuard;
}

int cmd_enumerate(int n, bool rooted, const std::string& format,
                  const std::optional<int>& flag_guard, std::ostream& out) {
  const int guard = resolve_guard(flag_guard);
  if (n > guard) {
    throw GuardRefusal{"enumeration guard: n = " + std::to_string(n) +
                       " exceeds the limit " + std::to_string(guard) +
                       " (class counts grow exponentially); raise it with "
                       "--guard or " +
                       kGuardEnvVar};
  }
  std::vector<std::string> codes;
  if (rooted) {
    for (const RootedTree& t : generate_rooted(n)) codes.push_back(t.code());
  } else {
    for (const UnrootedTree& t : generate_unrooted(n)) {
      codes.push_back(unrooted_canonical_code(t));
    }
  }
  if (format == "doc") {
    ordered_json doc;
    doc["command"] = "enumerate";
    doc["inputs"] = {{"n", n}, {"rooted", rooted}, {"format", format}};
    doc["results"] = {{"count", std::to_string(codes.size())}, {"codes", codes}};
    emit_json(doc, out);
  } else {
    for (const std::string& code : codes) out << code << "\n";
  }
  return kExitSuccess;
}

struct BoundsInputs {
  std::optional<long long> b1, b2, g;
  std::optional<std::vector<int>> branches;
  std::optional<long long> b0_aff, b1_aff, p;

  bool affine() const { return b0_aff || b1_aff || p; }
};

long long read_int_field(const ordered_json& doc, const char* name) {
  if (!doc.at(name).is_number_integer()) {
    throw std::invalid_argument(std::string("field '") + name +
                                "' must be an integer");
  }
  return doc.at(name).get<long long>();
}

BoundsInputs read_bounds_document(const std::string& path, std::istream& in_stream) {
  ordered_json doc;
  if (path == "-") {
    doc = ordered_json::parse(in_stream);
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
    doc = ordered_json::parse(file);
  }
  if (!doc.is_object()) throw std::invalid_argument("input document must be an object");
  static const char* known[] = {"b1", "b2", "g", "branches", "b0_aff", "b1_aff", "p"};
  for (const auto& [key, value] : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::invalid_argument("unknown field '" + key + "' in input document");
  }
  BoundsInputs inputs;
  if (doc.contains("b1")) inputs.b1 = read_int_field(doc, "b1");
  if (doc.contains("b2")) inputs.b2 = read_int_field(doc, "b2");
  if (doc.contains("g")) inputs.g = read_int_field(doc, "g");
  if (doc.contains("b0_aff")) inputs.b0_aff = read_int_field(doc, "b0_aff");
  if (doc.contains("b1_aff")) inputs.b1_aff = read_int_field(doc, "b1_aff");
  if (doc.contains("p")) inputs.p = read_int_field(doc, "p");
  if (doc.contains("branches")) {
    if (!doc.at("branches").is_array()) {
      throw std::invalid_argument("field 'branches' must be an array of integers");
    }
    inputs.branches = doc.at("branches").get<std::vector<int>>();
  }
  return inputs;
}

ordered_json bound_json(const RationalBound& b) {
  return {{"bound", b.str()}, {"floor", b.floor_value().str()}};
}

std::string bound_text(const RationalBound& b) {
  return b.str() + "  (floor " + b.floor_value().str() + ")";
}

int cmd_bounds(const BoundsInputs& inputs, bool json, std::ostream& out) {
  CurveTopology topology;
  topology.b2 = inputs.b2.value_or(1);
  topology.g = inputs.g.value_or(0);
  topology.branch_counts = inputs.branches;

  std::optional<AffineCurveTopology> affine;
  long long bridged = 0;
  if (inputs.affine()) {
    AffineCurveTopology a;
    a.b0_aff = inputs.b0_aff.value_or(1);
    a.b1_aff = inputs.b1_aff.value_or(0);
    a.p = inputs.p.value_or(1);
    bridged = bridged_b1(a.b0_aff, a.b1_aff, a.p, topology.b2);
    topology.b1 = inputs.b1.value_or(bridged);  // explicit b1 must match: validated below
    a.projective = topology;
    a.validate();
    affine = a;
  } else {
    topology.b1 = inputs.b1.value_or(0);
  }
  topology.validate();

  std::vector<std::string> warnings;
  if (topology.genus_exceeds_half_b1()) {
    warnings.push_back(
        "g > b1/2 contradicts b1 = 2g + b1(dual graph) for an irreducible "
        "curve; bounds are computed on the raw inputs");
  }

  const RationalBound cusps = cusp_bound_projective(topology);
  const RationalBound sings = sing_bound_projective(topology);
  std::optional<IrreducibleBounds> irreducible;
  if (topology.b2 == 1) irreducible = bounds_irreducible(topology.b1, topology.g);
  std::optional<AffineBounds> affine_bounds;
  if (affine) affine_bounds = bounds_affine(*affine);
  std::optional<IncidenceGraph> incidence;
  if (topology.has_singularities() && topology.b2 == 1) {
    // With one component every branch lies on it.
    std::vector<std::vector<int>> branch_matrix;
    for (int r : *topology.branch_counts) {
      branch_matrix.emplace_back(static_cast<std::size_t>(r), 0);
    }
    incidence = build_incidence_graph(1, branch_matrix);
  }

  if (json) {
    ordered_json doc;
    doc["command"] = "bounds";
    ordered_json in;
    in["b1"] = topology.b1;
    in["b2"] = topology.b2;
    in["g"] = topology.g;
    if (topology.branch_counts) in["branches"] = *topology.branch_counts;
    if (affine) {
      in["b0_aff"] = affine->b0_aff;
      in["b1_aff"] = affine->b1_aff;
      in["p"] = affine->p;
    }
    doc["inputs"] = std::move(in);
    ordered_json results;
    results["projective"] = {{"cusps", bound_json(cusps)},
                             {"singular_points", bound_json(sings)}};
    if (irreducible) {
      results["irreducible"] = {{"c_tight", bound_json(irreducible->c_tight)},
                                {"c_b1_only", bound_json(irreducible->c_b1_only)},
                                {"s_tight", bound_json(irreducible->s_tight)},
                                {"s_b1_only", bound_json(irreducible->s_b1_only)},
                                {"note", irreducible->note}};
    }
    if (topology.has_singularities()) {
      ordered_json sing;
      sing["s"] = topology.singular_points();
      sing["c"] = topology.cusp_count();
      sing["d"] = topology.extra_branches();
      if (incidence) {
        sing["incidence_graph"] = {
            {"vertices", incidence->vertex_count()},
            {"edges", incidence->edge_count()},
            {"euler", incidence->euler()},
            {"connected_components", incidence->connected_components()}};
      }
      results["singularities"] = std::move(sing);
    }
    if (affine_bounds) {
      ordered_json aff;
      aff["bridged_b1"] = bridged;
      aff["c_aff"] = bound_json(affine_bounds->c_aff);
      aff["s_aff"] = bound_json(affine_bounds->s_aff);
      if (affine_bounds->irreducible) {
        const auto& irr = *affine_bounds->irreducible;
        aff["irreducible"] = {{"c_with_p", bound_json(irr.c_with_p)},
                              {"c_p_free", bound_json(irr.c_p_free)},
                              {"s_with_p", bound_json(irr.s_with_p)},
                              {"s_p_free", bound_json(irr.s_p_free)}};
      }
      results["affine"] = std::move(aff);
    }
    doc["results"] = std::move(results);
    if (!warnings.empty()) doc["warnings"] = warnings;
    doc["caveat"] = kodaira_caveat();
    emit_json(doc, out);
    return kExitSuccess;
  }

  out << "command: bounds\n";
  out << "inputs: b1 = " << topology.b1 << ", b2 = " << topology.b2
      << ", g = " << topology.g;
  if (affine) {
    out << ", b0_aff = " << affine->b0_aff << ", b1_aff = " << affine->b1_aff
        << ", p = " << affine->p;
  }
  out << "\n";
  for (const std::string& warning : warnings) out << "warning: " << warning << "\n";
  out << "projective bounds:\n"
      << "  cusps:           c <= " << bound_text(cusps) << "\n"
      << "  singular points: s <= " << bound_text(sings) << "\n";
  if (irreducible) {
    out << "irreducible forms (b2 = 1):\n"
        << "  c <= " << bound_text(irreducible->c_tight) << "   [genus term]\n"
        << "  c <= " << bound_text(irreducible->c_b1_only) << "   [b1 only]\n"
        << "  s <= " << bound_text(irreducible->s_tight) << "   [genus term]\n"
        << "  s <= " << bound_text(irreducible->s_b1_only) << "   [b1 only]\n"
        << "  note: " << irreducible->note << "\n";
  }
  if (topology.has_singularities()) {
    out << "singularity data: s = " << topology.singular_points()
        << ", c = " << topology.cusp_count() << ", d = " << topology.extra_branches()
        << "\n";
    if (incidence) {
      out << "incidence graph: vertices = " << incidence->vertex_count()
          << ", edges = " << incidence->edge_count()
          << ", euler = " << incidence->euler()
          << ", connected components = " << incidence->connected_components() << "\n";
    }
  }
  if (affine_bounds) {
    out << "affine bounds (bridged b1 = " << bridged << "):\n"
        << "  c_aff <= " << bound_text(affine_bounds->c_aff) << "\n"
        << "  s_aff <= " << bound_text(affine_bounds->s_aff) << "\n";
    if (affine_bounds->irreducible) {
      const auto& irr = *affine_bounds->irreducible;
      out << "affine irreducible forms (b2 = 1, b0_aff = 1):\n"
          << "  c_aff <= " << bound_text(irr.c_with_p) << "   [with p]\n"
          << "  c_aff <= " << bound_text(irr.c_p_free) << "   [p-free]\n"
          << "  s_aff <= " << bound_text(irr.s_with_p) << "   [with p]\n"
          << "  s_aff <= " << bound_text(irr.s_p_free) << "   [p-free]\n";
    }
  }
  out << "caveat: " << kodaira_caveat() << "\n";
  return kExitSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Series-reduced tree counting and plane-curve singularity bounds"};
  app.require_subcommand(1);

  // count
  auto* count_cmd = app.add_subcommand(
      "count", "Count series-reduced trees by number of tips");
  std::string count_kind;
  int count_n = 0;
  bool count_json = false;
  count_cmd
      ->add_option("kind", count_kind,
                   "one of: rooted, vertex-pointed, edge-pair, unrooted-exact")
      ->required()
      ->check(CLI::IsMember({"rooted", "vertex-pointed", "edge-pair", "unrooted-exact"}));
  count_cmd->add_option("n", count_n, "number of tips (>= 1)")->required();
  count_cmd->add_flag("--json", count_json, "machine-readable output");

  // paper
  auto* paper_cmd = app.add_subcommand(
      "paper", "Tabulate the T/P/Q counts with totals S and S1 next to the "
               "exact homeomorphism-class count");
  int paper_max_tips = 17;
  bool paper_json = false;
  paper_cmd->add_option("--max-tips", paper_max_tips, "largest tip count (default 17)");
  paper_cmd->add_flag("--json", paper_json, "machine-readable output");

  // enumerate
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "List canonical codes, one representative per class");
  int enum_n = 0;
  bool enum_rooted = false;
  std::string enum_format = "lines";
  std::optional<int> enum_guard;
  enum_cmd->add_option("n", enum_n, "number of tips (>= 1)")->required();
  enum_cmd->add_flag("--rooted", enum_rooted, "rooted classes instead of unrooted");
  enum_cmd->add_option("--format", enum_format, "lines (default) or doc")
      ->check(CLI::IsMember({"lines", "doc"}));
  enum_cmd->add_option("--guard", enum_guard,
                       "enumeration size guard (default " +
                           std::to_string(kDefaultEnumGuard) + ", env " +
                           kGuardEnvVar + ")");

  // bounds
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Upper bounds on cusps and singular points from curve topology");
  BoundsInputs flags;
  std::string bounds_input_path;
  bool bounds_json = false;
  long long opt_b1 = 0, opt_b2 = 0, opt_g = 0, opt_b0a = 0, opt_b1a = 0, opt_p = 0;
  std::vector<int> opt_branches;
  auto* o_b1 = bounds_cmd->add_option("--b1", opt_b1, "first Betti number of the projective curve");
  auto* o_b2 = bounds_cmd->add_option("--b2", opt_b2, "number of irreducible components (default 1)");
  auto* o_g = bounds_cmd->add_option("--g", opt_g, "total genus (default 0)");
  auto* o_branches = bounds_cmd->add_option(
      "--branches", opt_branches, "branch count r_i per singular point (comma separated)")
      ->delimiter(',');
  auto* o_b0a = bounds_cmd->add_option("--b0-aff", opt_b0a, "b0 of the affine part");
  auto* o_b1a = bounds_cmd->add_option("--b1-aff", opt_b1a, "b1 of the affine part");
  auto* o_p = bounds_cmd->add_option("--p", opt_p, "points at infinity");
  bounds_cmd->add_option("--input", bounds_input_path,
                         "curve-topology document (JSON file, '-' for stdin) with "
                         "fields b1, b2, g, branches, b0_aff, b1_aff, p");
  bounds_cmd->add_flag("--json", bounds_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);  // prints help, returns 0
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(count_kind, count_n, count_json, out);
    if (paper_cmd->parsed()) return cmd_paper(paper_max_tips, paper_json, out);
    if (enum_cmd->parsed()) {
      return cmd_enumerate(enum_n, enum_rooted, enum_format, enum_guard, out);
    }
    if (bounds_cmd->parsed()) {
      BoundsInputs inputs;
      if (!bounds_input_path.empty()) {
        inputs = read_bounds_document(bounds_input_path, std::cin);
      }
      if (o_b1->count() > 0) inputs.b1 = opt_b1;
      if (o_b2->count() > 0) inputs.b2 = opt_b2;
      if (o_g->count() > 0) inputs.g = opt_g;
      if (o_branches->count() > 0) inputs.branches = opt_branches;
      if (o_b0a->count() > 0) inputs.b0_aff = opt_b0a;
      if (o_b1a->count() > 0) inputs.b1_aff = opt_b1a;
      if (o_p->count() > 0) inputs.p = opt_p;
      return cmd_bounds(inputs, bounds_json, out);
    }
  } catch (const GuardRefusal& refusal) {
    err << refusal.message << "\n";
    return kExitGuard;
  } catch (const ValidityError& e) {
    err << "validity error: " << e.what() << "\n";
    return kExitValidity;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace cusptrees::cli
