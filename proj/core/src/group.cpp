#include "engine_internal.hpp"
#include "sgcf/configurations.hpp"
#include "sgcf/critical_group.hpp"

namespace sgcf {

std::strong_ordering operator<=>(const ClassLabel& a, const ClassLabel& b) {
  const std::size_t n = std::min(a.residues.size(), b.residues.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(a.residues[i], b.residues[i]);
    if (c != 0) return c;
  }
  return a.residues.size() <=> b.residues.size();
}

ClassLabel class_label(const ChipFiringPair& p, const Configuration& c) {
  detail::require_dimension(p, c);
  IntVector r = mat_vec(p.snf().u, c.span());
  const auto& d = p.snf().d;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = d[i] == 1 ? BigInt(0) : floor_mod(r[i], d[i]);
  return ClassLabel{std::move(r)};
}

bool same_class(const ChipFiringPair& p, const Configuration& c, const Configuration& d) {
  return class_label(p, c) == class_label(p, d);
}

ClassLabel add_labels(const ChipFiringPair& p, const ClassLabel& a, const ClassLabel& b) {
  const auto& d = p.snf().d;
  if (a.residues.size() != d.size() || b.residues.size() != d.size())
    throw Error(ErrorCode::dimension, "label length mismatch");
  ClassLabel out{IntVector(d.size())};
  for (std::size_t i = 0; i < d.size(); ++i)
    out.residues[i] = d[i] == 1 ? BigInt(0) : floor_mod(a.residues[i] + b.residues[i], d[i]);
  return out;
}

Configuration class_representative(const ChipFiringPair& p, const ClassLabel& label) {
  if (label.residues.size() != p.dimension())
    throw Error(ErrorCode::dimension, "label length mismatch");
  return Configuration(mat_vec(p.snf_u_inverse(), label.residues));
}

std::vector<ClassLabel> all_labels(const ChipFiringPair& p, const EngineOptions& opts) {
  const auto& d = p.snf().d;
  const BigInt order = abs(p.det_L());
  if (order > opts.enumeration_cap)
    throw Error(ErrorCode::resource_limit, "group order " + order.get_str() +
                                               " exceeds the enumeration cap " +
                                               opts.enumeration_cap.get_str());
  std::vector<ClassLabel> out;
  out.reserve(order.get_ui());
  ClassLabel current{IntVector(d.size())};
  for (;;) {
    out.push_back(current);
    std::size_t i = d.size();
    bool carried_out = true;
    while (i > 0) {
      --i;
      if (current.residues[i] + 1 < d[i]) {
        current.residues[i] += 1;
        carried_out = false;
        break;
      }
      current.residues[i] = 0;
    }
    if (carried_out) break;
  }
  return out;
}

CriticalGroup critical_group(const ChipFiringPair& p) {
  CriticalGroup g;
  for (const auto& v : p.snf().d)
    if (v > 1) g.invariant_factors.push_back(v);
  g.order = abs(p.det_L());
  return g;
}

Configuration identity(const ChipFiringPair& p, const EngineOptions& opts) {
  const ChipFiringPair classical(p.graph().underlying());
  const Configuration e = critical_rep(classical, Configuration(p.dimension()), opts);
  RatVector image = mat_vec(p.LM_inv(), e.span());
  IntVector out;
  out.reserve(image.size());
  for (const auto& v : image) {
    if (!v.is_integer()) throw Error(ErrorCode::integrality, "LM^-1 e_G is not integral");
    out.push_back(v.numerator());
  }
  return Configuration(std::move(out));
}

Configuration group_add(const ChipFiringPair& p, const Configuration& c1, const Configuration& c2,
                        const EngineOptions& opts) {
  if (!is_critical(p, c1, opts))
    throw Error(ErrorCode::precondition, "group_add: " + to_string(c1) + " is not critical");
  if (!is_critical(p, c2, opts))
    throw Error(ErrorCode::precondition, "group_add: " + to_string(c2) + " is not critical");
  return stabilize(p, c1 + c2, opts).stable;
}

}  // namespace sgcf
