#pragma once

// Coefficient fields for exact linear algebra.
//
// PrimeField carries its modulus at runtime so that one binary can work over
// GF(2) for exhaustive enumeration and GF(101) for everything else.
// RationalField wraps boost's arbitrary precision rationals.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lambdak {

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t kDefaultCharacteristic = 101;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p)) {
      throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const;

  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  // Representative in [0, p).
  long long to_int(value_type a) const { return a; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("RationalField: inverse of zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  value_type from_int(long long v) const { return v; }

  bool operator==(const RationalField&) const { return true; }
  bool operator!=(const RationalField&) const { return false; }
};

}  // namespace lambdak
