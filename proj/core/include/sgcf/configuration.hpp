#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sgcf/matrix.hpp"

namespace sgcf {

/// Chip configuration: one integer per nonsink vertex, in nonsink
/// declaration order.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t n) : entries_(n) {}
  explicit Configuration(IntVector entries) : entries_(std::move(entries)) {}
  Configuration(std::initializer_list<long> values);

  static Configuration filled(std::size_t n, const BigInt& value) {
    return Configuration(IntVector(n, value));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  BigInt& operator[](std::size_t i) { return entries_[i]; }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  const IntVector& entries() const noexcept { return entries_; }
  std::span<const BigInt> span() const noexcept { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Configuration& operator+=(const Configuration& rhs);
  Configuration& operator-=(const Configuration& rhs);
  friend Configuration operator+(Configuration a, const Configuration& b) { return a += b; }
  friend Configuration operator-(Configuration a, const Configuration& b) { return a -= b; }
  friend Configuration operator*(const BigInt& k, Configuration a);

  bool nonnegative() const;
  /// Componentwise a <= b.
  bool dominated_by(const Configuration& other) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.entries_ == b.entries_;
  }
  /// Lexicographic order.
  friend std::strong_ordering operator<=>(const Configuration& a, const Configuration& b);

 private:
  IntVector entries_;
};

/// "(a,b,c)"
std::string to_string(const Configuration& c);

/// A point of the rational cone R+ (or any rational vector in that space).
struct RPoint {
  RatVector entries;

  std::size_t size() const noexcept { return entries.size(); }
  const BigRational& operator[](std::size_t i) const { return entries[i]; }
  friend bool operator==(const RPoint&, const RPoint&) = default;
};

}  // namespace sgcf
