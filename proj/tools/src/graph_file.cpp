#include "sgcf_cli/graph_file.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace sgcf::cli {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line.substr(0, line.find('#')));
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

}  // namespace

SignedGraph parse_graph(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t, std::less<>> index;
  std::optional<std::size_t> sink;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;

  auto vertex = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];
    if (directive == "sink") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'sink <name>'");
      if (sink) throw ParseError(line_no, "second sink directive");
      sink = vertex(tokens[1]);
    } else if (directive == "vertex") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertex <name>'");
      vertex(tokens[1]);
    } else if (directive == "edge") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'edge <u> <v> <+|->'");
      Sign sign;
      if (tokens[3] == "+") sign = Sign::positive;
      else if (tokens[3] == "-") sign = Sign::negative;
      else throw ParseError(line_no, "unknown sign token '" + tokens[3] + "'");
      if (tokens[1] == tokens[2]) throw ParseError(line_no, "loop at vertex '" + tokens[1] + "'");
      std::size_t u = vertex(tokens[1]), v = vertex(tokens[2]);
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second)
        throw ParseError(line_no, "duplicate edge " + tokens[1] + " " + tokens[2]);
      edges.push_back(Edge{u, v, sign});
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }
  if (!sink) throw ParseError(line_no + 1, "missing sink directive");
  return SignedGraph(std::move(names), *sink, std::move(edges));
}

SignedGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

SignedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse, "cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string serialize_graph(const SignedGraph& g) {
  std::ostringstream out;
  for (const auto& name : g.names()) out << "vertex " << name << '\n';
  out << "sink " << g.names()[g.sink()] << '\n';
  for (const auto& e : g.edges())
    out << "edge " << g.names()[e.u] << ' ' << g.names()[e.v] << ' ' << sign_char(e.sign) << '\n';
  return out.str();
}

}  // namespace sgcf::cli
