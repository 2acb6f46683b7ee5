#pragma once

#include <cstddef>
#include <istream>
#include <string>

#include "sgcf/signed_graph.hpp"

namespace sgcf::cli {

/// Parse failure with the 1-based line it was detected on (0 when it refers
/// to the input as a whole).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Graph file format, one directive per line, '#' starts a comment:
///   sink <name>            exactly once
///   vertex <name>          optional; fixes declaration order
///   edge <u> <v> <+|->
/// Vertex order is order of first appearance.
SignedGraph parse_graph(std::istream& in);
SignedGraph parse_graph_string(const std::string& text);
SignedGraph load_graph(const std::string& path);

/// Inverse of parse_graph: vertex lines in index order, the sink, then edges.
std::string serialize_graph(const SignedGraph& g);

}  // namespace sgcf::cli
