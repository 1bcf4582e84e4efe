#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swan/natural.hpp"

namespace swan {

class FactorCache;

Natural gcd(const Natural& a, const Natural& b);

/// base^exp mod modulus by square-and-multiply. modulus < 2 is a DomainError.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus);

/// Deterministic Miller-Rabin below 2^64 (first twelve prime witnesses);
/// above that, 64 pseudo-random witnesses drawn from `seed`.
bool is_prime(const Natural& n, std::uint64_t seed = 0);

struct FactorOptions {
  /// Wall-clock budget for the whole call; nullopt means unbounded.
  std::optional<std::chrono::duration<double>> time_budget;
  /// Seeds Miller-Rabin witnesses and the Pollard rho polynomials.
  std::uint64_t seed = 0;
  /// Consulted before factoring and updated after complete factorizations.
  FactorCache* cache = nullptr;
};

/// Raised when the time budget expires before a factorization completes.
///
/// `factored()` holds the primes found so far and `cofactor()` the product
/// of everything left over, so factored().value() * cofactor() is the input.
class FactorBudgetExceeded : public std::runtime_error {
 public:
  FactorBudgetExceeded(Factorization factored, Natural cofactor,
                       std::vector<std::string> failed_pieces);

  const Factorization& factored() const noexcept { return factored_; }
  const Natural& cofactor() const noexcept { return cofactor_; }
  /// Names of the algebraic pieces that did not finish, e.g. "Phi_36(5)".
  const std::vector<std::string>& failed_pieces() const noexcept { return pieces_; }

 private:
  Factorization factored_;
  Natural cofactor_;
  std::vector<std::string> pieces_;
};

/// Complete factorization: trial division to 10^6, then Brent's variant of
/// Pollard rho on the remaining composites. factor(0) is a DomainError.
Factorization factor(const Natural& n, const FactorOptions& opts = {});

/// Factorization of p^k - 1 assembled from the factorizations of Phi_d(p)
/// over the divisors d of k.
Factorization pk_minus_one_factor(const Natural& p, std::uint64_t k,
                                  const FactorOptions& opts = {});

Natural euler_phi(const Natural& n);

/// Least f >= 1 with a^f = 1 (mod n). `group_order` must factor a multiple
/// of that order, typically factor(euler_phi(n)).
Natural multiplicative_order(const Natural& a, const Natural& n,
                             const Factorization& group_order);

/// Divisors of n in ascending order (n must fit a machine word).
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace swan
