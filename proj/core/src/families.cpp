#include "sgcf/families.hpp"

#include <string>
#include <utility>

#include "sgcf/configurations.hpp"
#include "sgcf/critical_group.hpp"

namespace sgcf {

namespace {

using VertexPair = std::pair<std::size_t, std::size_t>;

std::size_t minimum_size(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::cycle:
    case FamilyKind::wheel: return 3;
    case FamilyKind::fan: return 1;
    case FamilyKind::complete: return 2;
  }
  return 0;
}

std::size_t nonsink_count(FamilyKind kind, std::size_t n) {
  return kind == FamilyKind::cycle || kind == FamilyKind::complete ? n - 1 : n;
}

// Vertex indices: v1..vk are 0..k-1, sink q is k.
std::vector<VertexPair> family_edges(FamilyKind kind, std::size_t n) {
  const std::size_t k = nonsink_count(kind, n);
  const std::size_t q = k;
  std::vector<VertexPair> edges;
  switch (kind) {
    case FamilyKind::cycle:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(q, 0);
      break;
    case FamilyKind::wheel:
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(q, i);
      break;
    case FamilyKind::fan:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      for (std::size_t i = 0; i < n; ++i) edges.emplace_back(q, i);
      break;
    case FamilyKind::complete:
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
      break;
  }
  return edges;
}

void check_size(const FamilySpec& spec) {
  if (spec.n < minimum_size(spec.kind))
    throw Error(ErrorCode::precondition, std::string(to_string(spec.kind)) + " needs n >= " +
                                             std::to_string(minimum_size(spec.kind)));
}

IntVector nontrivial(IntVector factors) {
  IntVector out;
  for (auto& f : factors)
    if (f > 1) out.push_back(std::move(f));
  return out;
}

}  // namespace

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::fan: return "fan";
    case FamilyKind::complete: return "complete";
  }
  return "?";
}

std::string_view to_string(Variant variant) noexcept {
  switch (variant) {
    case Variant::all_positive: return "all_positive";
    case Variant::all_negative: return "all_negative";
    case Variant::explicit_signs: return "explicit";
    case Variant::balanced_class: return "balanced_class";
    case Variant::unbalanced_class: return "unbalanced_class";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (auto k : {FamilyKind::cycle, FamilyKind::wheel, FamilyKind::fan, FamilyKind::complete})
    if (text == to_string(k)) return k;
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view text) {
  for (auto v : {Variant::all_positive, Variant::all_negative, Variant::explicit_signs,
                 Variant::balanced_class, Variant::unbalanced_class})
    if (text == to_string(v)) return v;
  return std::nullopt;
}

std::size_t edge_count(FamilyKind kind, std::size_t n) {
  if (n < minimum_size(kind)) return 0;
  return family_edges(kind, n).size();
}

SignedGraph build(const FamilySpec& spec) {
  check_size(spec);
  const std::size_t k = nonsink_count(spec.kind, spec.n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("v" + std::to_string(i + 1));
  names.emplace_back("q");

  const auto pairs = family_edges(spec.kind, spec.n);
  std::vector<Sign> signs(pairs.size(), Sign::positive);
  switch (spec.variant) {
    case Variant::all_positive:
    case Variant::balanced_class: break;
    case Variant::all_negative:
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (pairs[e].first != k && pairs[e].second != k) signs[e] = Sign::negative;
      break;
    case Variant::explicit_signs:
      if (spec.signs.size() != pairs.size())
        throw Error(ErrorCode::precondition,
                    "expected " + std::to_string(pairs.size()) + " signs, got " +
                        std::to_string(spec.signs.size()));
      signs = spec.signs;
      break;
    case Variant::unbalanced_class:
      if (spec.kind == FamilyKind::complete) {
        for (std::size_t e = 0; e < pairs.size(); ++e)
          if (pairs[e].first != k && pairs[e].second != k) signs[e] = Sign::negative;
      } else if (spec.kind == FamilyKind::fan && spec.n < 2) {
        throw Error(ErrorCode::precondition, "fan with n = 1 is a tree and has no unbalanced class");
      } else {
        signs[0] = Sign::negative;  // (v1, v2)
      }
      break;
  }

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t e = 0; e < pairs.size(); ++e)
    edges.push_back(Edge{pairs[e].first, pairs[e].second, signs[e]});
  return SignedGraph(std::move(names), k, std::move(edges));
}

BigInt fibonacci(std::size_t n) {
  BigInt out;
  mpz_fib_ui(out.get_mpz_t(), n);
  return out;
}

BigInt lucas(std::size_t n) {
  BigInt out;
  mpz_lucnum_ui(out.get_mpz_t(), n);
  return out;
}

PredictedGroup predicted_group(const FamilySpec& spec) {
  const SignedGraph g = build(spec);
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case FamilyKind::cycle: return {nontrivial({BigInt(n)}), "signed-cycle"};
    case FamilyKind::fan: return {nontrivial({fibonacci(2 * n)}), "signed-fan"};
    case FamilyKind::wheel: {
      // The group depends only on the sign of the rim cycle; a negative rim
      // behaves like the single-negative-rim-edge wheel, a positive one like
      // the unsigned wheel.
      bool negative_rim = false;
      for (const auto& e : g.edges())
        if (e.u != g.sink() && e.v != g.sink() && e.sign == Sign::negative) negative_rim = !negative_rim;
      const bool odd = n % 2 == 1;
      const BigInt f = fibonacci(n), l = lucas(n);
      if (odd == negative_rim)
        return {nontrivial({f, BigInt(5 * f)}), odd ? "wheel-odd-negative-rim" : "wheel-even-positive-rim"};
      return {nontrivial({l, l}), odd ? "wheel-odd-positive-rim" : "wheel-even-negative-rim"};
    }
    case FamilyKind::complete: {
      if (is_balanced(g)) {
        IntVector f(n >= 2 ? n - 2 : 0, BigInt(n));
        return {nontrivial(std::move(f)), "complete-balanced"};
      }
      const SignedGraph negative = build({FamilyKind::complete, n, Variant::all_negative, {}});
      if (switching_equivalent(g, negative)) {
        IntVector f(n - 3, BigInt(n - 2));
        f.push_back(BigInt((n - 2) * (2 * n - 3)));
        return {nontrivial(std::move(f)), "complete-negative"};
      }
      throw Error(ErrorCode::unsupported,
                  "no closed form for this signed complete graph's switching class");
    }
  }
  throw Error(ErrorCode::internal, "unknown family");
}

BigInt cycle_statistic(const Configuration& c, std::size_t m) {
  if (c.size() != 2 * m)
    throw Error(ErrorCode::dimension, "cycle statistic expects " + std::to_string(2 * m) +
                                          " entries, got " + std::to_string(c.size()));
  BigInt total = 0;
  for (std::size_t j = 1; j <= 2 * m; ++j) {
    const BigInt term = BigInt(static_cast<unsigned long>(j)) * c[j - 1];
    if (j % 2 == 1) total += term;
    else total -= term;
  }
  return floor_mod(total, BigInt(static_cast<unsigned long>(2 * m + 1)));
}

bool is_palindromic(const Configuration& c) {
  for (std::size_t i = 0, j = c.size(); i < j--; ++i)
    if (c[i] != c[j]) return false;
  return true;
}

Configuration duality_map(const ChipFiringPair& p, const Configuration& c,
                          const EngineOptions& opts) {
  const std::size_t n = p.dimension();
  bool odd_negative_cycle = n >= 2 && n % 2 == 0;
  for (std::size_t i = 0; i < n && odd_negative_cycle; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long expected = i == j ? 2 : (i + 1 == j || j + 1 == i ? 1 : 0);
      if (p.L()(i, j) != expected) {
        odd_negative_cycle = false;
        break;
      }
    }
  if (!odd_negative_cycle)
    throw Error(ErrorCode::precondition, "duality map is defined for odd negative cycles only");
  if (!is_z_superstable(p, c, opts))
    throw Error(ErrorCode::precondition, to_string(c) + " is not z-superstable");
  return identity(p, opts) + c;
}

}  // namespace sgcf
