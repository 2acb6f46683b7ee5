#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgcf/chip_firing.hpp"
#include "sgcf/signed_graph.hpp"

namespace sgcf {

enum class FamilyKind { cycle, wheel, fan, complete };

enum class Variant { all_positive, all_negative, explicit_signs, balanced_class, unbalanced_class };

std::string_view to_string(FamilyKind kind) noexcept;
std::string_view to_string(Variant variant) noexcept;
std::optional<FamilyKind> parse_family_kind(std::string_view text);
std::optional<Variant> parse_variant(std::string_view text);

/// Vertices are v1..vk followed by the sink q. Edge (construction) order:
///   cycle    (v1,v2), ..., (v_{n-1},q), (q,v1)          n >= 3
///   wheel    rim (v_i, v_{i+1 mod n}), then spokes (q,v_i)  n >= 3
///   fan      path (v_i, v_{i+1}), then spokes (q,v_i)       n >= 1
///   complete pairs of (v1, ..., v_{n-1}, q) in lexicographic order  n >= 2
/// Explicit sign lists follow this order.
struct FamilySpec {
  FamilyKind kind = FamilyKind::cycle;
  std::size_t n = 3;
  Variant variant = Variant::all_positive;
  std::vector<Sign> signs;
};

std::size_t edge_count(FamilyKind kind, std::size_t n);

SignedGraph build(const FamilySpec& spec);

BigInt fibonacci(std::size_t n);
BigInt lucas(std::size_t n);

struct PredictedGroup {
  /// Nontrivial invariant factors, each dividing the next.
  IntVector invariant_factors;
  /// Short name of the closed form used, e.g. "signed-cycle".
  std::string source;
};

/// Closed-form critical group of the family member; throws unsupported for
/// signed complete graphs outside the balanced and all-negative classes.
/// Wheels are split by parity of n and by the sign of the rim cycle, which
/// for balanced wheels and single-negative-rim-edge wheels is the usual
/// balanced/unbalanced split.
PredictedGroup predicted_group(const FamilySpec& spec);

/// sum_j (-1)^{j+1} j c_j mod (2m+1), in [0, 2m+1), for c of length 2m.
BigInt cycle_statistic(const Configuration& c, std::size_t m);

bool is_palindromic(const Configuration& c);

/// identity + c for a z-superstable c of the odd negative cycle's pair.
Configuration duality_map(const ChipFiringPair& p, const Configuration& c,
                          const EngineOptions& opts = {});

}  // namespace sgcf
