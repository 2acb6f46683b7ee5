#include <string>

#include "engine_internal.hpp"
#include "sgcf/chip_firing.hpp"

namespace sgcf {

namespace detail {

void require_dimension(const ChipFiringPair& p, const Configuration& c) {
  if (c.size() != p.dimension())
    throw Error(ErrorCode::dimension, "configuration has " + std::to_string(c.size()) +
                                          " entries, expected " + std::to_string(p.dimension()));
}

void require_valid(const ChipFiringPair& p, const Configuration& c, const char* op) {
  if (!is_valid(p, c))
    throw Error(ErrorCode::invalid_configuration,
                std::string(op) + ": configuration " + to_string(c) + " is not valid");
}

IntVector scaled_R(const ChipFiringPair& p, const Configuration& c) {
  require_dimension(p, c);
  return mat_vec(p.ml_scaled(), c.span());
}

void stabilize_scaled(const ChipFiringPair& p, IntVector& x, IntVector& fired,
                      const EngineOptions& opts) {
  const std::size_t n = p.dimension();
  const BigInt& scale = p.r_scale();
  std::vector<BigInt> threshold(n);
  std::vector<std::vector<std::size_t>> adjacent(n);
  for (std::size_t i = 0; i < n; ++i) {
    threshold[i] = scale * p.degrees()[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && p.M()(j, i) != 0) adjacent[i].push_back(j);
  }

  std::uint64_t steps = 0;
  BigInt k, gain;
  for (;;) {
    std::size_t i = 0;
    while (i < n && x[i] < threshold[i]) ++i;
    if (i == n) return;
    if (++steps > opts.firing_cap)
      throw Error(ErrorCode::resource_limit,
                  "stabilization exceeded " + std::to_string(opts.firing_cap) + " firing steps");
    mpz_tdiv_q(k.get_mpz_t(), x[i].get_mpz_t(), threshold[i].get_mpz_t());
    x[i] -= k * threshold[i];
    gain = k * scale;
    for (std::size_t j : adjacent[i]) x[j] += gain;
    fired[i] += k;
  }
}

}  // namespace detail

bool is_valid(const ChipFiringPair& p, const Configuration& c) {
  for (const auto& v : detail::scaled_R(p, c))
    if (sgn(v) < 0) return false;
  return true;
}

RPoint to_R(const ChipFiringPair& p, const Configuration& c) {
  detail::require_dimension(p, c);
  return RPoint{mat_vec(p.ML_inv(), c.span())};
}

Configuration from_R(const ChipFiringPair& p, const RPoint& x) {
  if (x.size() != p.dimension()) throw Error(ErrorCode::dimension, "point has wrong length");
  RatVector image = mat_vec(p.LM_inv(), std::span<const BigRational>(x.entries));
  IntVector out;
  out.reserve(image.size());
  for (const auto& v : image) {
    if (!v.is_integer())
      throw Error(ErrorCode::integrality, "LM^-1 x has non-integral entry " + v.str());
    out.push_back(v.numerator());
  }
  return Configuration(std::move(out));
}

bool ready_to_fire(const ChipFiringPair& p, const Configuration& c, std::size_t site) {
  if (site >= p.dimension()) throw Error(ErrorCode::dimension, "site index out of range");
  IntVector x = detail::scaled_R(p, c);
  for (const auto& v : x)
    if (sgn(v) < 0)
      throw Error(ErrorCode::invalid_configuration,
                  "ready_to_fire: configuration " + to_string(c) + " is not valid");
  for (std::size_t j = 0; j < p.dimension(); ++j)
    if (x[j] - p.r_scale() * p.M()(j, site) < 0) return false;
  return true;
}

bool is_stable(const ChipFiringPair& p, const Configuration& c) {
  detail::require_valid(p, c, "is_stable");
  IntVector x = detail::scaled_R(p, c);
  for (std::size_t i = 0; i < p.dimension(); ++i)
    if (x[i] >= p.r_scale() * p.degrees()[i]) return false;
  return true;
}

Configuration fire(const ChipFiringPair& p, const Configuration& c, std::size_t site) {
  detail::require_dimension(p, c);
  if (site >= p.dimension()) throw Error(ErrorCode::dimension, "site index out of range");
  Configuration out = c;
  for (std::size_t i = 0; i < p.dimension(); ++i) out[i] -= p.L()(i, site);
  return out;
}

Configuration fire_multiset(const ChipFiringPair& p, const Configuration& c, const IntVector& z) {
  detail::require_dimension(p, c);
  if (z.size() != p.dimension()) throw Error(ErrorCode::dimension, "firing vector has wrong length");
  IntVector lz = mat_vec(p.L(), z);
  Configuration out = c;
  for (std::size_t i = 0; i < p.dimension(); ++i) out[i] -= lz[i];
  return out;
}

RPoint fire_R(const ChipFiringPair& p, const RPoint& x, std::size_t site) {
  if (x.size() != p.dimension()) throw Error(ErrorCode::dimension, "point has wrong length");
  if (site >= p.dimension()) throw Error(ErrorCode::dimension, "site index out of range");
  RPoint out = x;
  for (std::size_t i = 0; i < p.dimension(); ++i) out.entries[i] -= BigRational(p.M()(i, site));
  return out;
}

bool is_stable_R(const ChipFiringPair& p, const RPoint& x) {
  if (x.size() != p.dimension()) throw Error(ErrorCode::dimension, "point has wrong length");
  for (std::size_t i = 0; i < p.dimension(); ++i)
    if (x[i] >= BigRational(p.degrees()[i])) return false;
  return true;
}

Stabilization stabilize(const ChipFiringPair& p, const Configuration& c, const EngineOptions& opts) {
  IntVector x = detail::scaled_R(p, c);
  for (const auto& v : x)
    if (sgn(v) < 0)
      throw Error(ErrorCode::invalid_configuration,
                  "stabilize: configuration " + to_string(c) + " is not valid");
  IntVector fired(p.dimension());
  detail::stabilize_scaled(p, x, fired, opts);
  return {fire_multiset(p, c, fired), std::move(fired)};
}

}  // namespace sgcf
