#pragma once

#include <compare>
#include <vector>

#include "sgcf/chip_firing.hpp"

namespace sgcf {

/// Coordinates of a class in Z_{d_1} + ... + Z_{d_n}, read through the left
/// SNF transform. Coordinates with d_i = 1 are always 0.
struct ClassLabel {
  IntVector residues;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b);
};

struct CriticalGroup {
  /// Nontrivial invariant factors (> 1), each dividing the next.
  IntVector invariant_factors;
  BigInt order;
};

ClassLabel class_label(const ChipFiringPair& p, const Configuration& c);
bool same_class(const ChipFiringPair& p, const Configuration& c, const Configuration& d);

/// Componentwise sum of labels.
ClassLabel add_labels(const ChipFiringPair& p, const ClassLabel& a, const ClassLabel& b);

/// Some integer configuration carrying the given label.
Configuration class_representative(const ChipFiringPair& p, const ClassLabel& label);

/// Every label, in lexicographic order; throws resource_limit past the cap.
std::vector<ClassLabel> all_labels(const ChipFiringPair& p, const EngineOptions& opts = {});

CriticalGroup critical_group(const ChipFiringPair& p);

/// Identity of the critical group, as LM^{-1} e_G for the identity e_G of
/// the underlying graph.
Configuration identity(const ChipFiringPair& p, const EngineOptions& opts = {});

/// stab(c1 + c2) for critical c1, c2.
Configuration group_add(const ChipFiringPair& p, const Configuration& c1, const Configuration& c2,
                        const EngineOptions& opts = {});

}  // namespace sgcf
