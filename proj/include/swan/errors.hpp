#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swan {

// Precondition violated by the caller (bad modulus, non-coprime input, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// m admits no primitive root (m is not 4, q^n or 2q^n).
class NoPrimitiveRootError : public DomainError {
 public:
  using DomainError::DomainError;
};

// p is not inert in Q(zeta_m): it splits into `split_count` primes of
// residue degree `residue_degree`.
class InertnessError : public DomainError {
 public:
  InertnessError(std::uint64_t m, std::uint64_t p, std::uint64_t residue_degree,
                 std::uint64_t split_count);

  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t residue_degree() const noexcept { return f_; }
  std::uint64_t split_count() const noexcept { return r_; }

 private:
  std::uint64_t m_, p_, f_, r_;
};

class DivisionByZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Element order needs the full factorization of the group order.
class OrderUnavailableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force oracle asked to enumerate a group above its ceiling.
class CeilingExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Full and reduced generator sets produced different subgroup orders.
class MethodDisagreementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swan
