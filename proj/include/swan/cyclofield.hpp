#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swan/bigarith.hpp"
#include "swan/kernels.hpp"
#include "swan/natural.hpp"

namespace swan {

/// Polynomial over Z, ascending coefficients, no trailing zero coefficient
/// (the zero polynomial has no coefficients).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  mpz_class evaluate(const mpz_class& x) const;
  /// Coefficients reduced into [0, p).
  std::vector<std::uint32_t> reduce_mod(std::uint32_t p) const;
  /// "z^6 + z^3 + 1" style rendering, highest degree first.
  std::string to_string(char var = 'z') const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

/// The m-th cyclotomic polynomial, by exact division of z^m - 1 by Phi_d for
/// every proper divisor d. Results are memoized process-wide.
const IntPoly& cyclotomic_poly(std::uint64_t m);

/// Element of F_p[z]/(Phi_m(z)): `degree` coefficients in [0, p), ascending.
/// Carries the (m, p) of its field so mixing fields is caught.
class FieldElem {
 public:
  FieldElem() = default;

  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t p() const noexcept { return p_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;

 private:
  friend class FieldSpec;
  FieldElem(std::uint64_t m, std::uint64_t p, std::vector<std::uint32_t> c)
      : m_(m), p_(p), coeffs_(std::move(c)) {}

  std::uint64_t m_ = 0;
  std::uint64_t p_ = 0;
  std::vector<std::uint32_t> coeffs_;
};

/// The finite field F_p[z]/(Phi_m(z)) of order p^phi(m), for p inert in
/// Q(zeta_m). Immutable once built; share freely across threads.
class FieldSpec {
 public:
  /// Largest supported characteristic: keeps the unreduced uint64
  /// accumulators of the multiplication kernels from overflowing.
  static constexpr std::uint64_t kMaxCharacteristic = (1u << 24) - 1;

  /// Builds the field. Throws DomainError for bad (m, p), InertnessError if
  /// p has residue degree f < phi(m). If the group order cannot be fully
  /// factored within the budget the field is still built, with
  /// factorization_complete() == false.
  static FieldSpec make(std::uint64_t m, std::uint64_t p, const FactorOptions& opts = {},
                        std::optional<kernels::Isa> isa = std::nullopt);

  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t p() const noexcept { return p_; }
  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  /// Phi_m mod p, ascending and monic (length degree + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  /// N = p^degree - 1, the order of the multiplicative group.
  const Natural& group_order() const noexcept { return group_order_; }
  /// Factored part of N (all of N when complete).
  const Factorization& group_order_factorization() const noexcept { return factorization_; }
  bool factorization_complete() const noexcept { return unfactored_.is_one(); }
  /// N / factored part; 1 when complete.
  const Natural& unfactored_cofactor() const noexcept { return unfactored_; }
  kernels::Isa isa() const noexcept { return isa_; }

  // Constructors of elements.
  FieldElem zero() const;
  FieldElem one() const;
  FieldElem scalar(std::uint64_t a) const;
  /// The class of z, a primitive m-th root of unity.
  FieldElem generator() const;
  /// z^k for any k (reduced mod m first).
  FieldElem z_pow(std::uint64_t k) const;
  /// From coefficients; throws DomainError on wrong length or entries >= p.
  FieldElem from_coeffs(std::vector<std::uint32_t> coeffs) const;

  FieldElem add(const FieldElem& x, const FieldElem& y) const;
  FieldElem sub(const FieldElem& x, const FieldElem& y) const;
  FieldElem neg(const FieldElem& x) const;
  FieldElem mul(const FieldElem& x, const FieldElem& y) const;
  /// Extended Euclid over F_p[z]; throws DivisionByZeroError for 0.
  FieldElem inv(const FieldElem& x) const;
  /// Square-and-multiply; pow(x, 0) = 1 including x = 0.
  FieldElem pow(const FieldElem& x, const Natural& e) const;

  /// Least o >= 1 with x^o = 1. Throws OrderUnavailableError if the group
  /// order is not fully factored, DomainError for x = 0.
  Natural element_order(const FieldElem& x) const;
  /// Order of x^C where C is the unfactored cofactor of N: a divisor of
  /// element_order(x) computable from the factored part alone.
  Natural element_order_lower_bound(const FieldElem& x) const;

  std::string format(const FieldElem& x) const;

 private:
  FieldSpec() = default;
  void check(const FieldElem& x) const;
  Natural order_within(const FieldElem& x, const Natural& start) const;

  std::uint64_t m_ = 0;
  std::uint64_t p_ = 0;
  std::vector<std::uint32_t> modulus_;
  Natural group_order_;
  Factorization factorization_;
  Natural unfactored_{1};
  kernels::Isa isa_ = kernels::Isa::kScalar;
  kernels::MulAccFn mul_acc_ = nullptr;
};

}  // namespace swan
