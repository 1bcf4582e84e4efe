#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace swan {

/// Arbitrary-precision nonnegative integer.
///
/// Thin value type over a GMP integer that never goes negative: subtraction
/// that would underflow throws DomainError. Conversion to and from decimal
/// strings is exact.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  /// Parses a decimal string of digits only; throws DomainError otherwise.
  static Natural from_string(std::string_view decimal);
  /// Wraps an mpz value; throws DomainError if negative.
  static Natural from_mpz(mpz_class v);

  std::string to_string() const { return value_.get_str(10); }
  const mpz_class& mpz() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_even() const noexcept { return mpz_even_p(value_.get_mpz_t()) != 0; }
  bool fits_u64() const noexcept;
  /// Throws DomainError when the value does not fit.
  std::uint64_t to_u64() const;
  std::size_t bit_length() const noexcept;
  bool test_bit(std::size_t i) const noexcept {
    return mpz_tstbit(value_.get_mpz_t(), i) != 0;
  }

  Natural& operator+=(const Natural& o);
  Natural& operator-=(const Natural& o);
  Natural& operator*=(const Natural& o);
  Natural& operator/=(const Natural& o);
  Natural& operator%=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  /// True iff d divides *this (d = 0 divides only 0).
  bool divisible_by(const Natural& d) const;

  friend bool operator==(const Natural& a, const Natural& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.to_string();
  }

 private:
  explicit Natural(mpz_class v) : value_(std::move(v)) {}
  mpz_class value_{0};
};

Natural pow(const Natural& base, std::uint64_t exp);
Natural lcm(const Natural& a, const Natural& b);

/// One (prime, exponent) pair of a factorization.
struct PrimePower {
  Natural prime;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of a positive integer.
///
/// Pairs are kept sorted by strictly increasing prime; `value()` is always
/// the product of prime^exponent. Primality of the entries is the
/// responsibility of whoever produced them (see factor()).
class Factorization {
 public:
  Factorization() = default;  // the empty product, value 1
  /// Builds from arbitrary pairs: merges duplicates, drops zero exponents.
  static Factorization from_pairs(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const noexcept { return pairs_; }
  const Natural& value() const noexcept { return value_; }
  bool empty() const noexcept { return pairs_.empty(); }

  void multiply(const Natural& prime, std::uint32_t exponent = 1);
  void merge(const Factorization& other);

  std::string to_string() const;  // "2^3 * 3", or "1" when empty

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::vector<PrimePower> pairs_;
  Natural value_{1};
};

}  // namespace swan

template <>
struct std::hash<swan::Natural> {
  std::size_t operator()(const swan::Natural& n) const noexcept {
    return std::hash<std::string>{}(n.to_string());
  }
};
