#include "sgcf_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgcf/sgcf.hpp"
#include "sgcf_cli/graph_file.hpp"

namespace sgcf::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json to_json(const Configuration& c) {
  json a = json::array();
  for (const auto& v : c) a.push_back(to_json(v));
  return a;
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json sorted_configurations(std::vector<Configuration> list) {
  std::sort(list.begin(), list.end());
  json a = json::array();
  for (const auto& c : list) a.push_back(to_json(c));
  return a;
}

json edges_json(const SignedGraph& g) {
  json a = json::array();
  for (const auto& e : g.edges())
    a.push_back(json::array({g.names()[e.u], g.names()[e.v], std::string(1, sign_char(e.sign))}));
  return a;
}

Configuration parse_config(const std::string& text) {
  IntVector values;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    BigInt v;
    const auto begin = item.find_first_not_of(" \t");
    const auto end = item.find_last_not_of(" \t");
    if (begin == std::string::npos || v.set_str(item.substr(begin, end - begin + 1), 10) != 0)
      throw UsageError("--config: '" + item + "' is not an integer");
    values.push_back(v);
  }
  if (values.empty()) throw UsageError("--config: empty configuration");
  return Configuration(std::move(values));
}

std::vector<Sign> parse_signs(const std::string& text) {
  std::vector<Sign> signs;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item == "+") signs.push_back(Sign::positive);
    else if (item == "-") signs.push_back(Sign::negative);
    else throw UsageError("--signs: '" + item + "' is not + or -");
  }
  return signs;
}

// Text rendering: configuration lists become aligned column blocks.
bool is_integer_row(const json& v) {
  return v.is_array() &&
         std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number_integer() || x.is_string(); });
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_columns(const json& list, std::ostream& out) {
  std::size_t rows = 0, width = 1;
  for (const auto& col : list) {
    rows = std::max(rows, col.size());
    for (const auto& x : col) width = std::max(width, scalar_text(x).size());
  }
  for (std::size_t r = 0; r < rows; ++r) {
    out << ' ';
    for (const auto& col : list) {
      const std::string cell = r < col.size() ? scalar_text(col[r]) : "";
      out << ' ' << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
}

void render_text(const json& doc, std::ostream& out) {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value.front().is_array()) {
      const bool numeric = std::all_of(value.begin(), value.end(), [](const json& col) {
        return std::all_of(col.begin(), col.end(), [](const json& x) { return x.is_number_integer(); });
      });
      out << key << " (" << value.size() << "):\n";
      if (numeric) {
        render_columns(value, out);
      } else {
        for (const auto& row : value) {
          out << ' ';
          for (const auto& x : row) out << ' ' << scalar_text(x);
          out << '\n';
        }
      }
    } else if (is_integer_row(value)) {
      out << key << ':';
      for (const auto& x : value) out << ' ' << scalar_text(x);
      out << '\n';
    } else if (value.is_object()) {
      out << key << ":\n";
      for (const auto& [k, v] : value.items()) out << "  " << k << ": " << scalar_text(v) << '\n';
    } else {
      out << key << ": " << scalar_text(value) << '\n';
    }
  }
}

struct Settings {
  std::string command;
  std::string graph_path;
  std::string format = "json";
  std::string config;
  std::string vertex;
  std::string kind;
  std::size_t n = 0;
  std::string variant = "all_positive";
  std::string signs;
  bool verify = false;
  EngineOptions engine;
  std::string strategy = "descent";
  long long bound = 1024;
};

json execute(const Settings& s) {
  if (s.command == "family") {
    const auto kind = parse_family_kind(s.kind);
    if (!kind) throw UsageError("--kind must be one of cycle, wheel, fan, complete");
    const auto variant = parse_variant(s.variant);
    if (!variant)
      throw UsageError(
          "--variant must be one of all_positive, all_negative, explicit, balanced_class, "
          "unbalanced_class");
    FamilySpec spec{*kind, s.n, *variant, {}};
    if (*variant == Variant::explicit_signs) spec.signs = parse_signs(s.signs);
    const auto predicted = predicted_group(spec);
    json doc;
    doc["predicted"] = to_json(predicted.invariant_factors);
    doc["source"] = predicted.source;
    const SignedGraph g = build(spec);
    doc["edges"] = edges_json(g);
    if (s.verify) {
      const auto group = critical_group(make_pair(g));
      doc["invariant_factors"] = to_json(group.invariant_factors);
      doc["order"] = to_json(group.order);
      doc["matches"] = group.invariant_factors == predicted.invariant_factors;
    }
    return doc;
  }

  const SignedGraph g = load_graph(s.graph_path);
  json doc;
  if (s.command == "switch") {
    if (s.vertex.empty()) throw UsageError("switch requires --vertex");
    if (!g.index_of(s.vertex))
      throw Error(ErrorCode::unknown_vertex, "no vertex named '" + s.vertex + "'");
    doc["edges"] = edges_json(switch_vertex(g, s.vertex));
    return doc;
  }
  if (s.command == "canonical") {
    const SignedGraph c = canonical_switch_rep(g);
    doc["canonical_edges"] = edges_json(c);
    doc["balanced"] = is_balanced(g);
    return doc;
  }
  if (s.command == "balanced") {
    doc["balanced"] = is_balanced(g);
    return doc;
  }
  if (s.command == "tu-count") {
    const auto count = tu_subgraph_sum(g);
    doc["tu_total"] = to_json(count.total);
    json by = json::object();
    for (const auto& [cycles, n] : count.by_cycle_count) by[std::to_string(cycles)] = to_json(n);
    doc["tu_by_cycles"] = by;
    return doc;
  }

  const ChipFiringPair p = make_pair(g);
  const EngineOptions& opts = s.engine;
  auto config = [&] {
    if (s.config.empty()) throw UsageError(s.command + " requires --config");
    Configuration c = parse_config(s.config);
    if (c.size() != p.dimension())
      throw UsageError("--config has " + std::to_string(c.size()) + " entries, graph has " +
                       std::to_string(p.dimension()) + " nonsink vertices");
    return c;
  };

  if (s.command == "group") {
    const auto group = critical_group(p);
    doc["order"] = to_json(group.order);
    doc["invariant_factors"] = to_json(group.invariant_factors);
  } else if (s.command == "criticals") {
    doc["criticals"] = sorted_configurations(enumerate_criticals(p, opts));
  } else if (s.command == "superstables") {
    doc["superstables"] = sorted_configurations(enumerate_superstables(p, opts));
  } else if (s.command == "identity") {
    doc["identity"] = to_json(identity(p, opts));
  } else if (s.command == "stabilize") {
    const auto result = stabilize(p, config(), opts);
    doc["stable"] = to_json(result.stable);
    doc["firing_vector"] = to_json(result.firing_vector);
  } else if (s.command == "check-critical") {
    const Configuration c = config();
    const bool valid = is_valid(p, c);
    doc["valid"] = valid;
    doc["critical"] = valid && is_critical(p, c, opts);
  } else if (s.command == "check-superstable") {
    const Configuration c = config();
    const bool valid = is_valid(p, c);
    doc["valid"] = valid;
    doc["superstable"] = valid && is_z_superstable(p, c, opts);
  } else if (s.command == "valid") {
    const Configuration c = config();
    doc["valid"] = is_valid(p, c);
    json point = json::array();
    for (const auto& x : to_R(p, c).entries) point.push_back(x.str());
    doc["r_point"] = point;
  } else {
    throw UsageError("unknown command '" + s.command + "'");
  }
  return doc;
}

void emit_error(const Settings& s, ErrorCode code, const std::string& message, std::ostream& out,
                std::ostream& err) {
  if (s.format == "text") {
    err << "error[" << to_string(code) << "]: " << message << '\n';
    return;
  }
  json doc;
  doc["error"] = {{"code", std::string(to_string(code))}, {"message", message}};
  out << doc.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Chip-firing on signed graphs", "sgcf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--bound", s.bound, "Largest box bound for the box superstable search")
      ->check(CLI::PositiveNumber);
  app.add_option("--chi-cap", s.engine.chi_cap, "Largest dimension for subset tests");
  app.add_option("--jobs", s.engine.jobs, "Worker threads for enumerations")
      ->check(CLI::PositiveNumber);
  app.add_option("--strategy", s.strategy, "Superstable search: descent or box")
      ->check(CLI::IsMember({"descent", "box"}));

  struct Command {
    const char* name;
    const char* help;
    bool needs_config;
  };
  const Command graph_commands[] = {
      {"group", "Critical group invariant factors and order", false},
      {"criticals", "All critical configurations", false},
      {"superstables", "All z-superstable configurations", false},
      {"identity", "Identity of the critical group", false},
      {"stabilize", "Stabilize --config", true},
      {"check-critical", "Test --config for criticality", true},
      {"check-superstable", "Test --config for z-superstability", true},
      {"valid", "Test --config for validity", true},
      {"switch", "Switch the signs at --vertex", false},
      {"canonical", "Canonical switching representative", false},
      {"balanced", "Balance test", false},
      {"tu-count", "Weighted count of spanning TU-subgraphs (negative graphs)", false},
  };
  for (const auto& c : graph_commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("graph", s.graph_path, "Graph file")->required();
    if (c.needs_config)
      sub->add_option("--config", s.config, "Comma-separated chips in nonsink order")->required();
    if (std::string_view(c.name) == "switch")
      sub->add_option("--vertex", s.vertex, "Vertex to switch")->required();
    sub->callback([&s, name = std::string(c.name)] { s.command = name; });
  }
  auto* family = app.add_subcommand("family", "Build a family member and its predicted group");
  family->add_option("--kind", s.kind, "cycle, wheel, fan or complete")->required();
  family->add_option("--n", s.n, "Size parameter")->required();
  family->add_option("--variant", s.variant, "Sign variant");
  family->add_option("--signs", s.signs, "Comma-separated + and - for --variant explicit");
  family->add_flag("--verify", s.verify, "Compute the group and compare");
  family->callback([&s] { s.command = "family"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run 'sgcf --help' for usage\n";
    return usage_error;
  }

  s.engine.box_cap = BigInt(static_cast<long>(s.bound));
  s.engine.superstable_search = s.strategy == "box" ? SuperstableSearch::box : SuperstableSearch::descent;

  try {
    const json doc = execute(s);
    if (s.format == "text") render_text(doc, out);
    else out << doc.dump(2) << '\n';
    return success;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    emit_error(s, e.code(), e.what(), out, err);
    return domain_error;
  } catch (const std::exception& e) {
    emit_error(s, ErrorCode::internal, e.what(), out, err);
    return domain_error;
  }
}

}  // namespace sgcf::cli
