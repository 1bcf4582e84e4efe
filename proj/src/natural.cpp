#include "swan/natural.hpp"

#include <algorithm>
#include <sstream>

#include "swan/errors.hpp"

namespace swan {

Natural::Natural(std::uint64_t v) {
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
}

Natural Natural::from_string(std::string_view decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not a decimal natural number: '" + std::string(decimal) + "'");
  }
  return Natural(mpz_class(std::string(decimal), 10));
}

Natural Natural::from_mpz(mpz_class v) {
  if (sgn(v) < 0) throw DomainError("negative value cannot be a Natural");
  return Natural(std::move(v));
}

bool Natural::fits_u64() const noexcept {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw DomainError(to_string() + " does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, value_.get_mpz_t());
  return out;
}

std::size_t Natural::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

Natural& Natural::operator+=(const Natural& o) {
  value_ += o.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& o) {
  if (value_ < o.value_) {
    throw DomainError("Natural subtraction underflow: " + to_string() + " - " +
                      o.to_string());
  }
  value_ -= o.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& o) {
  value_ *= o.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& o) {
  if (o.is_zero()) throw DivisionByZeroError("Natural division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& o) {
  if (o.is_zero()) throw DivisionByZeroError("Natural modulo by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

bool Natural::divisible_by(const Natural& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(value_.get_mpz_t(), d.value_.get_mpz_t()) != 0;
}

Natural pow(const Natural& base, std::uint64_t exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exp);
  return Natural::from_mpz(std::move(r));
}

Natural lcm(const Natural& a, const Natural& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural::from_mpz(std::move(r));
}

Factorization Factorization::from_pairs(std::vector<PrimePower> pairs) {
  Factorization f;
  for (auto& pp : pairs) f.multiply(pp.prime, pp.exponent);
  return f;
}

void Factorization::multiply(const Natural& prime, std::uint32_t exponent) {
  if (exponent == 0) return;
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), prime,
      [](const PrimePower& pp, const Natural& q) { return pp.prime < q; });
  if (it != pairs_.end() && it->prime == prime) {
    it->exponent += exponent;
  } else {
    pairs_.insert(it, PrimePower{prime, exponent});
  }
  value_ *= pow(prime, exponent);
}

void Factorization::merge(const Factorization& other) {
  for (const auto& pp : other.pairs_) multiply(pp.prime, pp.exponent);
}

std::string Factorization::to_string() const {
  if (pairs_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) os << " * ";
    os << pairs_[i].prime;
    if (pairs_[i].exponent > 1) os << '^' << pairs_[i].exponent;
  }
  return os.str();
}

}  // namespace swan
