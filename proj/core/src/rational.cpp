#include "sgcf/rational.hpp"

namespace sgcf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension: return "dimension";
    case ErrorCode::singular: return "singular";
    case ErrorCode::disconnected: return "disconnected";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::resource_limit: return "resource_limit";
    case ErrorCode::integrality: return "integrality";
    case ErrorCode::unknown_vertex: return "unknown_vertex";
    case ErrorCode::invalid_configuration: return "invalid_configuration";
    case ErrorCode::search_exhausted: return "search_exhausted";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::parse: return "parse";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorCode::singular, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.value_ == 0) throw Error(ErrorCode::singular, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigInt BigRational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt BigRational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string BigRational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace sgcf
