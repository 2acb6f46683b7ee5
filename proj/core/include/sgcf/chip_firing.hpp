#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgcf/configuration.hpp"
#include "sgcf/matrix.hpp"
#include "sgcf/signed_graph.hpp"

namespace sgcf {

enum class SuperstableSearch {
  /// Start from the class's critical configuration and apply legal set
  /// firings until none remains.
  descent,
  /// Scan a growing box of configurations for the valid superstable one.
  box,
};

/// Tunable limits shared by the engine operations.
struct EngineOptions {
  /// Largest dimension for which subset (chi) tests are attempted.
  std::size_t chi_cap = 20;
  /// Hard cap on the box bound used by SuperstableSearch::box.
  BigInt box_cap = 1024;
  /// Largest critical-group order that enumerations will walk.
  BigInt enumeration_cap = 200000;
  /// Cap on batched firing steps within a single stabilization.
  std::uint64_t firing_cap = 50'000'000;
  /// Worker threads for enumerations; results are independent of this.
  unsigned jobs = 1;
  SuperstableSearch superstable_search = SuperstableSearch::descent;
};

/// The chip-firing pair (L, M) of a signed graph: L is the reduced signed
/// Laplacian, M the reduced Laplacian of the underlying graph. Immutable.
class ChipFiringPair {
 public:
  explicit ChipFiringPair(SignedGraph graph);

  const SignedGraph& graph() const noexcept { return graph_; }
  std::size_t dimension() const noexcept { return degrees_.size(); }

  const IntMatrix& L() const noexcept { return l_; }
  const IntMatrix& M() const noexcept { return m_; }
  const RatMatrix& L_inv() const noexcept { return l_inv_; }
  const RatMatrix& M_inv() const noexcept { return m_inv_; }
  const RatMatrix& LM_inv() const noexcept { return lm_inv_; }
  const RatMatrix& ML_inv() const noexcept { return ml_inv_; }
  const BigInt& det_L() const noexcept { return det_l_; }

  /// Sink-adjacency indicator.
  const Configuration& s() const noexcept { return s_; }
  const std::vector<long>& degrees() const noexcept { return degrees_; }
  /// Per site: negative edges to other nonsink vertices.
  const std::vector<long>& negative_degrees() const noexcept { return negative_degrees_; }

  bool nonsink_connected() const noexcept { return nonsink_connected_; }
  bool universal_sink() const noexcept { return universal_sink_; }

  /// Smith normal form of L together with the inverse of its left transform.
  const SNFDecomposition& snf() const noexcept { return snf_; }
  const IntMatrix& snf_u_inverse() const noexcept { return u_inv_; }

  /// R-space in scaled integer coordinates: r_scale() * ML^{-1} c ==
  /// ml_scaled() * c, with ml_scaled() integral.
  const IntMatrix& ml_scaled() const noexcept { return ml_scaled_; }
  const BigInt& r_scale() const noexcept { return r_scale_; }

 private:
  SignedGraph graph_;
  IntMatrix l_, m_;
  RatMatrix l_inv_, m_inv_, lm_inv_, ml_inv_;
  BigInt det_l_;
  Configuration s_;
  std::vector<long> degrees_;
  std::vector<long> negative_degrees_;
  bool nonsink_connected_ = false;
  bool universal_sink_ = false;
  SNFDecomposition snf_;
  IntMatrix u_inv_;
  IntMatrix ml_scaled_;
  BigInt r_scale_;
};

/// Builds the pair; the graph must be connected with at least two vertices.
ChipFiringPair make_pair(const SignedGraph& g);

bool is_valid(const ChipFiringPair& p, const Configuration& c);

RPoint to_R(const ChipFiringPair& p, const Configuration& c);
/// Inverse of to_R; throws integrality when LM^{-1} x is not integral.
Configuration from_R(const ChipFiringPair& p, const RPoint& x);

bool ready_to_fire(const ChipFiringPair& p, const Configuration& c, std::size_t site);
bool is_stable(const ChipFiringPair& p, const Configuration& c);

/// c - L e_site, without legality checks.
Configuration fire(const ChipFiringPair& p, const Configuration& c, std::size_t site);
/// c - L z, without legality checks.
Configuration fire_multiset(const ChipFiringPair& p, const Configuration& c, const IntVector& z);

/// x - M e_site.
RPoint fire_R(const ChipFiringPair& p, const RPoint& x, std::size_t site);
/// No site of x can fire in R+ (x is assumed to lie in R+).
bool is_stable_R(const ChipFiringPair& p, const RPoint& x);

struct Stabilization {
  Configuration stable;
  IntVector firing_vector;
};

/// Fires the lowest-index ready site until the configuration is stable.
Stabilization stabilize(const ChipFiringPair& p, const Configuration& c,
                        const EngineOptions& opts = {});

}  // namespace sgcf
