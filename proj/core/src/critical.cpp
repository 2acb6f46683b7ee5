#include <algorithm>

#include "engine_internal.hpp"
#include "sgcf/configurations.hpp"
#include "sgcf/critical_group.hpp"

namespace sgcf {

namespace {

void require_nonsink_connected(const ChipFiringPair& p) {
  if (!p.nonsink_connected())
    throw Error(ErrorCode::disconnected, "graph minus the sink is not connected");
}

bool all_equal(const std::vector<long>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

bool signed_regular_universal(const ChipFiringPair& p) {
  return p.universal_sink() && all_equal(p.degrees()) && all_equal(p.negative_degrees());
}

}  // namespace

Configuration critical_rep(const ChipFiringPair& p, const Configuration& c,
                           const EngineOptions& opts) {
  detail::require_dimension(p, c);
  require_nonsink_connected(p);
  const std::size_t n = p.dimension();

  // z = ceil(M^{-1}(2 deg - x)) gives x + M z > deg: writing z = M^{-1}t + f
  // with f in [0,1)^n, (M f)_i > -deg_i.
  RatVector x = mat_vec(p.ML_inv(), c.span());
  RatVector target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = BigRational(2 * p.degrees()[i]) - x[i];
  RatVector lifted = mat_vec(p.M_inv(), std::span<const BigRational>(target));
  IntVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = lifted[i].ceil();

  IntVector mz = mat_vec(p.M(), z);
  IntVector scaled = detail::scaled_R(p, c);
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] += p.r_scale() * mz[i];
    if (scaled[i] < p.r_scale() * p.degrees()[i])
      throw Error(ErrorCode::internal, "large configuration cannot fire every site");
  }

  IntVector fired(n);
  detail::stabilize_scaled(p, scaled, fired, opts);
  for (std::size_t i = 0; i < n; ++i) z[i] -= fired[i];
  // c + L z - L f
  IntVector lz = mat_vec(p.L(), z);
  Configuration out = c;
  for (std::size_t i = 0; i < n; ++i) out[i] += lz[i];
  return out;
}

std::optional<BigInt> sink_firing_constant(const ChipFiringPair& p) {
  if (signed_regular_universal(p)) return BigInt(2 * p.negative_degrees().front() + 1);
  if (!is_valid(p, p.s())) return std::nullopt;
  RatVector y = mat_vec(p.L_inv(), p.s().span());
  BigInt n0 = 1;
  for (const auto& v : y) {
    if (v.sign() < 0) return std::nullopt;
    n0 = lcm(n0, v.denominator());
  }
  return n0;
}

bool is_critical_by_sink_firing(const ChipFiringPair& p, const Configuration& c, const BigInt& n0,
                                const EngineOptions& opts) {
  detail::require_valid(p, c, "is_critical");
  require_nonsink_connected(p);
  return stabilize(p, c + n0 * p.s(), opts).stable == c;
}

bool is_critical_by_representative(const ChipFiringPair& p, const Configuration& c,
                                   const EngineOptions& opts) {
  detail::require_valid(p, c, "is_critical");
  require_nonsink_connected(p);
  return is_stable(p, c) && critical_rep(p, c, opts) == c;
}

bool is_critical(const ChipFiringPair& p, const Configuration& c, const EngineOptions& opts) {
  detail::require_valid(p, c, "is_critical");
  require_nonsink_connected(p);
  if (auto n0 = sink_firing_constant(p)) return is_critical_by_sink_firing(p, c, *n0, opts);
  return is_critical_by_representative(p, c, opts);
}

std::vector<Configuration> enumerate_criticals(const ChipFiringPair& p, const EngineOptions& opts) {
  require_nonsink_connected(p);
  const auto labels = all_labels(p, opts);
  std::vector<Configuration> out(labels.size());
  detail::parallel_for(labels.size(), opts.jobs, [&](std::size_t i) {
    out[i] = critical_rep(p, class_representative(p, labels[i]), opts);
  });
  return out;
}

bool superstable_certificate(const ChipFiringPair& p, const Configuration& c,
                             const EngineOptions& opts) {
  detail::require_valid(p, c, "superstable_certificate");
  RatVector x = mat_vec(p.ML_inv(), c.span());
  IntVector w(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = x[i].ceil();
  // Classical superstables are closed downward, so x lies below one exactly
  // when its ceiling is superstable for the underlying graph.
  return detail::maximal_legal_set(w, p.M(), opts) == 0;
}

std::optional<Configuration> max_critical(const ChipFiringPair& p) {
  if (!signed_regular_universal(p)) return std::nullopt;
  const long m = p.degrees().front();
  const long m_neg = p.negative_degrees().front();
  return Configuration::filled(p.dimension(), BigInt(m * (2 * m_neg + 1) - 1));
}

}  // namespace sgcf
