#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "engine_internal.hpp"
#include "sgcf/configurations.hpp"
#include "sgcf/critical_group.hpp"

namespace sgcf {

namespace {

// Gray-code walk over all nonzero chi; v tracks K chi incrementally.
template <class T>
std::uint64_t legal_union(const std::vector<T>& x, const std::vector<T>& columns, std::size_t n) {
  std::vector<T> v(n, T(0));
  std::uint64_t chi = 0, result = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t g = 1; g < end; ++g) {
    const int b = std::countr_zero(g);
    chi ^= std::uint64_t{1} << b;
    const T* col = columns.data() + static_cast<std::size_t>(b) * n;
    if (chi >> b & 1) {
      for (std::size_t i = 0; i < n; ++i) v[i] += col[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) v[i] -= col[i];
    }
    bool legal = true;
    for (std::size_t i = 0; i < n && legal; ++i) legal = !(x[i] < v[i]);
    if (legal) result |= chi;
  }
  return result;
}

bool fits_machine_words(const IntVector& x, const IntMatrix& k) {
  const BigInt limit = BigInt(1) << 60;
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    BigInt row = abs(x[i]);
    for (std::size_t j = 0; j < n; ++j) row += abs(k(i, j));
    if (row >= limit) return false;
  }
  return true;
}

BigInt superstable_box_start(const ChipFiringPair& p) {
  long max_deg = 0, max_neg = 0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    max_deg = std::max(max_deg, p.degrees()[i]);
    max_neg = std::max(max_neg, p.negative_degrees()[i]);
  }
  return BigInt(max_deg * (2 * max_neg + 1));
}

// Visits every configuration in [0, bound]^n in lexicographic order until fn
// returns true.
template <class Fn>
bool scan_box(std::size_t n, const BigInt& bound, Fn&& fn) {
  Configuration c(n);
  for (;;) {
    if (fn(c)) return true;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (c[i] < bound) {
        c[i] += 1;
        break;
      }
      c[i] = 0;
      if (i == 0) return false;
    }
    if (n == 0) return false;
  }
}

bool is_z_superstable_scaled(const ChipFiringPair& p, const IntVector& x, const EngineOptions& opts) {
  IntMatrix k = p.M();
  for (std::size_t i = 0; i < p.dimension(); ++i)
    for (std::size_t j = 0; j < p.dimension(); ++j) k(i, j) *= p.r_scale();
  return detail::maximal_legal_set(x, k, opts) == 0;
}

Configuration superstable_rep_box(const ChipFiringPair& p, const Configuration& c,
                                  const EngineOptions& opts) {
  const ClassLabel target = class_label(p, c);
  BigInt bound = superstable_box_start(p);
  if (bound > opts.box_cap) bound = opts.box_cap;
  std::optional<Configuration> found;
  for (;;) {
    scan_box(p.dimension(), bound, [&](const Configuration& d) {
      if (class_label(p, d) != target) return false;
      IntVector x = detail::scaled_R(p, d);
      for (const auto& v : x)
        if (sgn(v) < 0) return false;
      if (!is_z_superstable_scaled(p, x, opts)) return false;
      found = d;
      return true;
    });
    if (found) return *found;
    if (bound >= opts.box_cap)
      throw Error(ErrorCode::search_exhausted,
                  "no z-superstable configuration in class found with entries <= " + bound.get_str());
    bound *= 2;
    if (bound > opts.box_cap) bound = opts.box_cap;
  }
}

std::vector<Configuration> enumerate_superstables_box(const ChipFiringPair& p,
                                                      const EngineOptions& opts) {
  const auto labels = all_labels(p, opts);
  std::map<ClassLabel, std::size_t> slot;
  for (std::size_t i = 0; i < labels.size(); ++i) slot.emplace(labels[i], i);

  std::vector<std::optional<Configuration>> found(labels.size());
  std::size_t filled = 0;
  BigInt bound = superstable_box_start(p);
  if (bound > opts.box_cap) bound = opts.box_cap;
  for (;;) {
    scan_box(p.dimension(), bound, [&](const Configuration& d) {
      IntVector x = detail::scaled_R(p, d);
      for (const auto& v : x)
        if (sgn(v) < 0) return false;
      if (!is_z_superstable_scaled(p, x, opts)) return false;
      auto& entry = found[slot.at(class_label(p, d))];
      if (!entry) {
        entry = d;
        ++filled;
      } else if (*entry != d) {
        throw Error(ErrorCode::internal, "two z-superstable configurations share a class: " +
                                             to_string(*entry) + " and " + to_string(d));
      }
      return false;
    });
    if (filled == labels.size()) break;
    if (bound >= opts.box_cap)
      throw Error(ErrorCode::search_exhausted,
                  "box search with entries <= " + bound.get_str() + " filled only " +
                      std::to_string(filled) + " of " + std::to_string(labels.size()) + " classes");
    bound *= 2;
    if (bound > opts.box_cap) bound = opts.box_cap;
  }
  std::vector<Configuration> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(*f));
  return out;
}

}  // namespace

std::uint64_t detail::maximal_legal_set(const IntVector& x, const IntMatrix& k,
                                        const EngineOptions& opts) {
  const std::size_t n = x.size();
  if (n > opts.chi_cap || n > 62)
    throw Error(ErrorCode::resource_limit,
                "subset test over 2^" + std::to_string(n) + " vectors exceeds the cap of 2^" +
                    std::to_string(std::min<std::size_t>(opts.chi_cap, 62)));
  if (fits_machine_words(x, k)) {
    std::vector<std::int64_t> xs(n), cols(n * n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = x[i].get_si();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) cols[j * n + i] = k(i, j).get_si();
    return legal_union(xs, cols, n);
  }
  std::vector<BigInt> cols(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j * n + i] = k(i, j);
  return legal_union(x, cols, n);
}

bool is_z_superstable(const ChipFiringPair& p, const Configuration& c, const EngineOptions& opts) {
  IntVector x = detail::scaled_R(p, c);
  for (const auto& v : x)
    if (sgn(v) < 0)
      throw Error(ErrorCode::invalid_configuration,
                  "is_z_superstable: configuration " + to_string(c) + " is not valid");
  return is_z_superstable_scaled(p, x, opts);
}

Configuration superstabilize(const ChipFiringPair& p, const Configuration& c,
                             const EngineOptions& opts) {
  detail::require_valid(p, c, "superstabilize");
  const std::size_t n = p.dimension();
  IntMatrix k = p.M();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) *= p.r_scale();

  IntVector x = detail::scaled_R(p, c);
  IntVector fired(n);
  std::uint64_t steps = 0;
  for (;;) {
    const std::uint64_t chi = detail::maximal_legal_set(x, k, opts);
    if (chi == 0) break;
    if (++steps > opts.firing_cap)
      throw Error(ErrorCode::resource_limit, "set firing exceeded the step cap");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(chi >> j & 1)) continue;
      fired[j] += 1;
      for (std::size_t i = 0; i < n; ++i) x[i] -= k(i, j);
    }
  }
  return fire_multiset(p, c, fired);
}

Configuration superstable_rep(const ChipFiringPair& p, const Configuration& c,
                              const EngineOptions& opts) {
  detail::require_dimension(p, c);
  if (!p.nonsink_connected())
    throw Error(ErrorCode::disconnected, "graph minus the sink is not connected");
  if (opts.superstable_search == SuperstableSearch::box) return superstable_rep_box(p, c, opts);
  return superstabilize(p, critical_rep(p, c, opts), opts);
}

std::vector<Configuration> enumerate_superstables(const ChipFiringPair& p,
                                                  const EngineOptions& opts) {
  if (!p.nonsink_connected())
    throw Error(ErrorCode::disconnected, "graph minus the sink is not connected");
  if (opts.superstable_search == SuperstableSearch::box) return enumerate_superstables_box(p, opts);
  const auto labels = all_labels(p, opts);
  std::vector<Configuration> out(labels.size());
  detail::parallel_for(labels.size(), opts.jobs, [&](std::size_t i) {
    out[i] = superstable_rep(p, class_representative(p, labels[i]), opts);
  });
  return out;
}

}  // namespace sgcf
