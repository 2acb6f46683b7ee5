#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgcf/matrix.hpp"

namespace sgcf {

enum class Sign : std::int8_t { positive = 1, negative = -1 };

inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::positive : Sign::negative; }
inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

/// Undirected signed edge between vertex indices u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A simple signed graph with a designated sink. Vertex indices follow
/// declaration order; edges are stored sorted by (u, v).
class SignedGraph {
 public:
  SignedGraph(std::vector<std::string> names, std::size_t sink, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t sink() const noexcept { return sink_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Nonsink vertex indices in declaration order; position k is site k of
  /// every configuration.
  const std::vector<std::size_t>& nonsink() const noexcept { return nonsink_; }

  /// Site position of a nonsink vertex.
  std::size_t site_of(std::size_t vertex) const;

  const std::vector<std::pair<std::size_t, Sign>>& neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  std::optional<Sign> sign_between(std::size_t a, std::size_t b) const;

  bool is_connected() const;
  /// Connectivity of the graph with the sink removed (vacuous for one vertex).
  bool is_connected_without_sink() const;

  /// True when every edge not touching the sink is negative.
  bool is_negative() const;

  /// Same underlying graph, every edge positive.
  SignedGraph underlying() const;

  /// Same vertex names, sink and unsigned edge set.
  bool same_underlying(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.names_ == b.names_ && a.sink_ == b.sink_ && a.edges_ == b.edges_;
  }

 private:
  bool connected_avoiding(std::optional<std::size_t> removed) const;

  std::vector<std::string> names_;
  std::size_t sink_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, Sign>>> adjacency_;
  std::vector<std::size_t> nonsink_;
  std::vector<std::size_t> site_;
};

struct Laplacians {
  IntMatrix signed_laplacian;    // L
  IntMatrix unsigned_laplacian;  // M
};

/// Reduced signed and unsigned Laplacians, rows in nonsink declaration order.
Laplacians reduced_laplacians(const SignedGraph& g);

SignedGraph switch_vertex(const SignedGraph& g, std::size_t v);
SignedGraph switch_vertex(const SignedGraph& g, std::string_view name);

/// Switching-class representative that is positive on the BFS tree rooted
/// at the sink (neighbors visited in index order).
SignedGraph canonical_switch_rep(const SignedGraph& g);

bool is_balanced(const SignedGraph& g);
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

/// Spanning TU-subgraphs of a negative graph, tallied by how many unicyclic
/// components they have; total = sum of count * 4^cycles.
struct TUCount {
  BigInt total;
  std::map<std::size_t, BigInt> by_cycle_count;
};

TUCount tu_subgraph_sum(const SignedGraph& g, std::size_t max_edges = 25);

/// Number of spanning trees of the underlying graph.
BigInt spanning_tree_count(const SignedGraph& g);

}  // namespace sgcf
