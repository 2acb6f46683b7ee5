#include "sgcf/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace sgcf {

SignedGraph::SignedGraph(std::vector<std::string> names, std::size_t sink, std::vector<Edge> edges)
    : names_(std::move(names)), sink_(sink), edges_(std::move(edges)) {
  const std::size_t n = names_.size();
  if (sink_ >= n) throw Error(ErrorCode::unknown_vertex, "sink index out of range");
  {
    std::set<std::string_view> seen;
    for (const auto& name : names_) {
      if (!seen.insert(name).second)
        throw Error(ErrorCode::precondition, "duplicate vertex name '" + name + "'");
    }
  }
  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::unknown_vertex, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::precondition, "loop at vertex '" + names_[e.u] + "'");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw Error(ErrorCode::precondition, "parallel edge between '" + names_[edges_[i].u] +
                                               "' and '" + names_[edges_[i].v] + "'");
    }
  }

  adjacency_.resize(n);
  for (const auto& e : edges_) {
    adjacency_[e.u].emplace_back(e.v, e.sign);
    adjacency_[e.v].emplace_back(e.u, e.sign);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  site_.assign(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (v == sink_) continue;
    site_[v] = nonsink_.size();
    nonsink_.push_back(v);
  }
}

std::optional<std::size_t> SignedGraph::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t SignedGraph::site_of(std::size_t vertex) const {
  if (vertex >= names_.size() || vertex == sink_)
    throw Error(ErrorCode::unknown_vertex, "not a nonsink vertex");
  return site_[vertex];
}

std::optional<Sign> SignedGraph::sign_between(std::size_t a, std::size_t b) const {
  for (const auto& [w, s] : adjacency_.at(a))
    if (w == b) return s;
  return std::nullopt;
}

bool SignedGraph::connected_avoiding(std::optional<std::size_t> removed) const {
  const std::size_t n = names_.size();
  std::size_t start = 0;
  while (start < n && removed && start == *removed) ++start;
  if (start == n) return true;

  std::vector<bool> seen(n, false);
  std::queue<std::size_t> todo;
  seen[start] = true;
  todo.push(start);
  std::size_t reached = 1;
  while (!todo.empty()) {
    const std::size_t v = todo.front();
    todo.pop();
    for (const auto& [w, s] : adjacency_[v]) {
      if (seen[w] || (removed && w == *removed)) continue;
      seen[w] = true;
      ++reached;
      todo.push(w);
    }
  }
  return reached == n - (removed ? 1 : 0);
}

bool SignedGraph::is_connected() const { return connected_avoiding(std::nullopt); }

bool SignedGraph::is_connected_without_sink() const { return connected_avoiding(sink_); }

bool SignedGraph::is_negative() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.u == sink_ || e.v == sink_ || e.sign == Sign::negative;
  });
}

SignedGraph SignedGraph::underlying() const {
  std::vector<Edge> positive = edges_;
  for (auto& e : positive) e.sign = Sign::positive;
  return SignedGraph(names_, sink_, std::move(positive));
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (names_ != other.names_ || sink_ != other.sink_ || edges_.size() != other.edges_.size())
    return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return true;
}

Laplacians reduced_laplacians(const SignedGraph& g) {
  if (g.vertex_count() < 2)
    throw Error(ErrorCode::dimension, "reduced Laplacian needs at least two vertices");
  const std::size_t n = g.nonsink().size();
  Laplacians out{IntMatrix(n, n), IntMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t v = g.nonsink()[i];
    out.signed_laplacian(i, i) = static_cast<long>(g.degree(v));
    out.unsigned_laplacian(i, i) = static_cast<long>(g.degree(v));
  }
  for (const auto& e : g.edges()) {
    if (e.u == g.sink() || e.v == g.sink()) continue;
    const std::size_t a = g.site_of(e.u);
    const std::size_t b = g.site_of(e.v);
    const long entry = e.sign == Sign::positive ? -1 : 1;
    out.signed_laplacian(a, b) = entry;
    out.signed_laplacian(b, a) = entry;
    out.unsigned_laplacian(a, b) = -1;
    out.unsigned_laplacian(b, a) = -1;
  }
  return out;
}

SignedGraph switch_vertex(const SignedGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::unknown_vertex, "vertex index out of range");
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges)
    if (e.u == v || e.v == v) e.sign = flip(e.sign);
  return SignedGraph(g.names(), g.sink(), std::move(edges));
}

SignedGraph switch_vertex(const SignedGraph& g, std::string_view name) {
  const auto v = g.index_of(name);
  if (!v) throw Error(ErrorCode::unknown_vertex, "unknown vertex '" + std::string(name) + "'");
  return switch_vertex(g, *v);
}

SignedGraph canonical_switch_rep(const SignedGraph& g) {
  if (!g.is_connected())
    throw Error(ErrorCode::disconnected, "canonical switching needs a connected graph");

  // sigma[v] is the switching applied at v; tree edges become positive.
  std::vector<Sign> sigma(g.vertex_count(), Sign::positive);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<std::size_t> todo;
  seen[g.sink()] = true;
  todo.push(g.sink());
  while (!todo.empty()) {
    const std::size_t v = todo.front();
    todo.pop();
    for (const auto& [w, s] : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      sigma[w] = sigma[v] * s;
      todo.push(w);
    }
  }

  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.sign = sigma[e.u] * e.sign * sigma[e.v];
  return SignedGraph(g.names(), g.sink(), std::move(edges));
}

bool is_balanced(const SignedGraph& g) {
  const SignedGraph c = canonical_switch_rep(g);
  return std::all_of(c.edges().begin(), c.edges().end(),
                     [](const Edge& e) { return e.sign == Sign::positive; });
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!a.same_underlying(b))
    throw Error(ErrorCode::precondition, "switching equivalence needs the same underlying graph");
  return canonical_switch_rep(a) == canonical_switch_rep(b);
}

BigInt spanning_tree_count(const SignedGraph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::disconnected, "graph is disconnected");
  return det(reduced_laplacians(g).unsigned_laplacian);
}

}  // namespace sgcf
