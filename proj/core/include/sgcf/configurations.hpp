#pragma once

#include <optional>
#include <vector>

#include "sgcf/chip_firing.hpp"

namespace sgcf {

/// z-superstability via the subset test: no nonzero 0/1 firing vector keeps
/// the configuration valid. Requires a valid c and dimension <= chi_cap.
bool is_z_superstable(const ChipFiringPair& p, const Configuration& c,
                      const EngineOptions& opts = {});

/// N0 for the sink-firing criticality test, or nullopt when the sink vector
/// is not valid.
std::optional<BigInt> sink_firing_constant(const ChipFiringPair& p);

/// Dispatches to the sink-firing test when N0 exists, otherwise compares
/// against the class's critical representative.
bool is_critical(const ChipFiringPair& p, const Configuration& c, const EngineOptions& opts = {});
bool is_critical_by_sink_firing(const ChipFiringPair& p, const Configuration& c, const BigInt& n0,
                                const EngineOptions& opts = {});
bool is_critical_by_representative(const ChipFiringPair& p, const Configuration& c,
                                   const EngineOptions& opts = {});

/// The unique critical configuration equivalent to c (c may be any integer
/// vector).
Configuration critical_rep(const ChipFiringPair& p, const Configuration& c,
                           const EngineOptions& opts = {});

/// The unique z-superstable configuration equivalent to c.
Configuration superstable_rep(const ChipFiringPair& p, const Configuration& c,
                              const EngineOptions& opts = {});

/// Applies legal set firings to a valid c until it is z-superstable.
Configuration superstabilize(const ChipFiringPair& p, const Configuration& c,
                             const EngineOptions& opts = {});

/// One configuration per class, ordered by class label.
std::vector<Configuration> enumerate_criticals(const ChipFiringPair& p,
                                               const EngineOptions& opts = {});
std::vector<Configuration> enumerate_superstables(const ChipFiringPair& p,
                                                  const EngineOptions& opts = {});

/// Sufficient test for z-superstability: ML^{-1} c lies below a superstable
/// configuration of the underlying graph.
bool superstable_certificate(const ChipFiringPair& p, const Configuration& c,
                             const EngineOptions& opts = {});

/// m'(1,...,1) with m' = m(2 m_- + 1) - 1 for signed-regular graphs with a
/// universal sink; nullopt otherwise.
std::optional<Configuration> max_critical(const ChipFiringPair& p);

}  // namespace sgcf
