#include <numeric>
#include <queue>

#include "sgcf/signed_graph.hpp"

namespace sgcf {
namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Returns the number of unicyclic components if the chosen edges form a
// spanning TU-subgraph whose single tree component holds the sink.
std::optional<std::size_t> classify(const SignedGraph& g, const std::vector<std::size_t>& chosen) {
  const std::size_t n = g.vertex_count();
  DisjointSets sets(n);
  for (std::size_t idx : chosen) sets.unite(g.edges()[idx].u, g.edges()[idx].v);

  std::vector<std::size_t> vertices(n, 0), edges(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++vertices[sets.find(v)];
  for (std::size_t idx : chosen) ++edges[sets.find(g.edges()[idx].u)];

  const std::size_t sink_root = sets.find(g.sink());
  if (edges[sink_root] + 1 != vertices[sink_root]) return std::nullopt;

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t idx : chosen) {
    adj[g.edges()[idx].u].push_back(g.edges()[idx].v);
    adj[g.edges()[idx].v].push_back(g.edges()[idx].u);
  }

  std::size_t cycles = 0;
  std::vector<int> colour(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (sets.find(root) != root || root == sink_root) continue;
    if (edges[root] != vertices[root]) return std::nullopt;
    // Unicyclic: the component must not be bipartite (its cycle is odd).
    bool odd = false;
    std::queue<std::size_t> todo;
    colour[root] = 0;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t v = todo.front();
      todo.pop();
      for (std::size_t w : adj[v]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          todo.push(w);
        } else if (colour[w] == colour[v]) {
          odd = true;
        }
      }
    }
    if (!odd) return std::nullopt;
    ++cycles;
  }
  return cycles;
}

}  // namespace

TUCount tu_subgraph_sum(const SignedGraph& g, std::size_t max_edges) {
  if (!g.is_negative())
    throw Error(ErrorCode::precondition,
                "TU-subgraph count applies to negative graphs only (all nonsink edges negative)");
  const std::size_t m = g.edges().size();
  if (m > max_edges) {
    throw Error(ErrorCode::resource_limit, "TU enumeration over " + std::to_string(m) +
                                               " edges exceeds the limit of " +
                                               std::to_string(max_edges));
  }
  const std::size_t k = g.vertex_count() - 1;

  TUCount out;
  out.total = 0;
  if (k > m) return out;

  std::vector<std::size_t> chosen(k);
  std::iota(chosen.begin(), chosen.end(), 0);
  while (true) {
    if (const auto cycles = classify(g, chosen)) {
      out.by_cycle_count[*cycles] += 1;
      BigInt weight;
      mpz_ui_pow_ui(weight.get_mpz_t(), 4, *cycles);
      out.total += weight;
    }
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && chosen[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++chosen[i - 1];
    for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
  }
  return out;
}

}  // namespace sgcf
