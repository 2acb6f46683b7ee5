#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgcf/sgcf.hpp"

namespace sgcf {

inline void PrintTo(const Configuration& c, std::ostream* os) { *os << to_string(c); }

inline void PrintTo(const ClassLabel& l, std::ostream* os) { *os << to_string(Configuration(l.residues)); }

inline void PrintTo(const SignedGraph& g, std::ostream* os) {
  *os << "sink " << g.names()[g.sink()] << ";";
  for (const auto& e : g.edges()) *os << ' ' << g.names()[e.u] << '-' << g.names()[e.v] << sign_char(e.sign);
}

}  // namespace sgcf

namespace fixtures {

struct NamedEdge {
  std::string u, v;
  char sign;
};

/// Builds a SignedGraph with vertices in the given order.
inline sgcf::SignedGraph graph(const std::vector<std::string>& order, const std::string& sink,
                               const std::vector<NamedEdge>& edges) {
  auto index = [&](const std::string& name) {
    for (std::size_t i = 0; i < order.size(); ++i)
      if (order[i] == name) return i;
    throw std::logic_error("fixture vertex " + name);
  };
  std::vector<sgcf::Edge> out;
  for (const auto& e : edges)
    out.push_back({index(e.u), index(e.v), e.sign == '+' ? sgcf::Sign::positive : sgcf::Sign::negative});
  return sgcf::SignedGraph(order, index(sink), out);
}

/// Four-cycle q v1 v2 v3 with chord q-v2 and one negative edge v1-v2.
inline sgcf::SignedGraph g_phi() {
  return graph({"v1", "v2", "v3", "q"}, "q",
               {{"q", "v1", '+'}, {"v1", "v2", '-'}, {"v2", "v3", '+'}, {"v3", "q", '+'}, {"q", "v2", '+'}});
}

/// Four-cycle v1 v2 v3 q with chord v1-v3 and one negative edge v1-v2.
inline sgcf::SignedGraph h_phi() {
  return graph({"v1", "v2", "v3", "q"}, "q",
               {{"v1", "v2", '-'}, {"v1", "v3", '+'}, {"v1", "q", '+'}, {"v2", "v3", '+'}, {"v3", "q", '+'}});
}

inline sgcf::SignedGraph to_signed_graph(const oracle::Graph& g) {
  std::vector<std::string> names;
  for (int v = 0; v < g.vertices; ++v) names.push_back("x" + std::to_string(v));
  std::vector<sgcf::Edge> edges;
  for (const auto& e : g.edges)
    edges.push_back({static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v),
                     e.sign > 0 ? sgcf::Sign::positive : sgcf::Sign::negative});
  return sgcf::SignedGraph(names, static_cast<std::size_t>(g.sink), edges);
}

inline sgcf::IntMatrix to_int_matrix(const oracle::Mat& a) {
  sgcf::IntMatrix out(a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out(i, j) = static_cast<long>(a[i][j]);
  return out;
}

inline sgcf::Configuration config(const oracle::Vec& v) {
  sgcf::IntVector out;
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return sgcf::Configuration(out);
}

inline std::vector<sgcf::Configuration> configs(std::initializer_list<std::initializer_list<long>> list) {
  std::vector<sgcf::Configuration> out;
  for (const auto& c : list) out.emplace_back(c);
  return out;
}

inline const std::vector<sgcf::Configuration>& g_phi_criticals() {
  static const auto v = configs(
      {{4, 5, 0}, {3, 3, 1}, {4, 5, 1}, {4, 4, 1}, {2, 3, 0}, {3, 4, 1}, {3, 4, 0}, {5, 6, 0}});
  return v;
}
inline const std::vector<sgcf::Configuration>& g_phi_superstables() {
  static const auto v = configs(
      {{1, 1, 1}, {0, 0, 0}, {3, 3, 0}, {1, 1, 0}, {2, 3, 0}, {2, 2, 0}, {3, 4, 0}, {2, 2, 1}});
  return v;
}
inline const std::vector<sgcf::Configuration>& h_phi_criticals() {
  static const auto v = configs({{7, 6, 2}, {8, 6, 2}, {8, 6, 1}, {6, 5, 2}, {7, 5, 1}, {9, 7, 0},
                                 {6, 4, 2}, {7, 5, 2}, {9, 7, 2}, {9, 7, 1}, {8, 6, 0}, {6, 4, 1}});
  return v;
}
inline const std::vector<sgcf::Configuration>& h_phi_superstables() {
  static const auto v = configs({{7, 5, 0}, {2, 2, 0}, {5, 4, 0}, {6, 4, 0}, {4, 3, 0}, {5, 4, 2},
                                 {0, 0, 0}, {1, 1, 0}, {3, 3, 0}, {6, 5, 0}, {4, 3, 2}, {3, 2, 0}});
  return v;
}

/// R+ images of h_phi_superstables(), as (numerator, denominator) pairs.
inline std::vector<std::vector<sgcf::BigRational>> h_phi_superstable_points() {
  using R = sgcf::BigRational;
  auto q = [](long a, long b) { return R(sgcf::BigInt(a), sgcf::BigInt(b)); };
  return {{q(8, 3), q(5, 6), 0}, {0, 1, 0},       {q(4, 3), q(7, 6), 0}, {q(8, 3), q(1, 3), 0},
          {q(4, 3), q(2, 3), 0}, {q(2, 3), q(5, 6), 2}, {0, 0, 0},        {0, q(1, 2), 0},
          {0, q(3, 2), 0},       {q(4, 3), q(5, 3), 0}, {q(2, 3), q(1, 3), 2}, {q(4, 3), q(1, 6), 0}};
}

}  // namespace fixtures
