#include <algorithm>
#include <sstream>

#include "engine_internal.hpp"
#include "sgcf/chip_firing.hpp"

namespace sgcf {

Configuration::Configuration(std::initializer_list<long> values) {
  entries_.reserve(values.size());
  for (long v : values) entries_.emplace_back(v);
}

Configuration& Configuration::operator+=(const Configuration& rhs) {
  if (rhs.size() != size()) throw Error(ErrorCode::dimension, "configuration length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Configuration& Configuration::operator-=(const Configuration& rhs) {
  if (rhs.size() != size()) throw Error(ErrorCode::dimension, "configuration length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Configuration operator*(const BigInt& k, Configuration a) {
  for (auto& v : a.entries_) v *= k;
  return a;
}

bool Configuration::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& v) { return sgn(v) >= 0; });
}

bool Configuration::dominated_by(const Configuration& other) const {
  if (other.size() != size()) throw Error(ErrorCode::dimension, "configuration length mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

std::strong_ordering operator<=>(const Configuration& a, const Configuration& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::string to_string(const Configuration& c) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i].get_str();
  out << ')';
  return out.str();
}

ChipFiringPair::ChipFiringPair(SignedGraph graph) : graph_(std::move(graph)) {
  if (graph_.vertex_count() < 2)
    throw Error(ErrorCode::dimension, "a chip-firing pair needs at least two vertices");
  if (!graph_.is_connected()) throw Error(ErrorCode::disconnected, "graph is not connected");

  auto laps = reduced_laplacians(graph_);
  l_ = std::move(laps.signed_laplacian);
  m_ = std::move(laps.unsigned_laplacian);
  det_l_ = det(l_);
  if (det_l_ == 0) throw Error(ErrorCode::singular, "signed Laplacian is singular");

  l_inv_ = invert(l_);
  m_inv_ = invert(m_);
  lm_inv_ = multiply(to_rational(l_), m_inv_);
  ml_inv_ = multiply(to_rational(m_), l_inv_);

  const auto& sites = graph_.nonsink();
  const std::size_t n = sites.size();
  s_ = Configuration(n);
  degrees_.resize(n);
  negative_degrees_.assign(n, 0);
  universal_sink_ = true;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t v = sites[k];
    degrees_[k] = static_cast<long>(graph_.degree(v));
    bool touches_sink = false;
    for (const auto& [w, sign] : graph_.neighbors(v)) {
      if (w == graph_.sink()) touches_sink = true;
      else if (sign == Sign::negative) ++negative_degrees_[k];
    }
    s_[k] = touches_sink ? 1 : 0;
    universal_sink_ = universal_sink_ && touches_sink;
  }
  nonsink_connected_ = graph_.is_connected_without_sink();

  snf_ = smith_normal_form(l_);
  u_inv_ = to_integer(invert(snf_.u));

  r_scale_ = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r_scale_ = lcm(r_scale_, ml_inv_(i, j).denominator());
  ml_scaled_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ml_scaled_(i, j) = (ml_inv_(i, j) * BigRational(r_scale_)).numerator();
}

ChipFiringPair make_pair(const SignedGraph& g) { return ChipFiringPair(g); }

}  // namespace sgcf
