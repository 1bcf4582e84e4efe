#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace swan {

/// How an inert prime was obtained.
enum class InertMethod { kProgression, kDirect, kTwoMReduction };

std::string_view to_string(InertMethod method);

/// One row of an inert-prime table: m, its least primitive root and an
/// inert prime p > 2 for Q(zeta_m).
struct InertRecord {
  std::uint64_t m = 0;
  std::uint64_t least_primitive_root = 0;
  std::uint64_t inert_prime = 0;
  InertMethod method = InertMethod::kDirect;

  friend bool operator==(const InertRecord&, const InertRecord&) = default;
};

/// m = 4, q^n or 2q^n for an odd prime q. m < 3 is a DomainError.
bool inert_prime_exists(std::uint64_t m);

/// Order of r mod m equals phi(m). Non-units give false.
bool is_primitive_root(std::uint64_t r, std::uint64_t m);

/// Least r >= 2 primitive mod m; NoPrimitiveRootError if none exists.
std::uint64_t least_primitive_root(std::uint64_t m);

/// r itself when r > 2 is prime, else the first prime among r + m, r + 2m, ...
/// Throws std::runtime_error after 10^6 steps.
std::uint64_t progression_prime(std::uint64_t m, std::uint64_t r);

/// Least odd prime p, p not dividing m, that is a primitive root mod m.
std::uint64_t least_inert_prime_direct(std::uint64_t m);

/// least_primitive_root(2m) for an odd prime power m: the least primitive
/// root of m exceeding 2.
std::uint64_t two_m_reduction(std::uint64_t m);

enum class TableMode {
  kTable22,  // every admissible m, least primitive root and progression prime
  kTable24,  // m not 2 mod 4, least inert prime by direct scan
};

/// Rows for admissible m in [m_min, m_max], ascending.
std::vector<InertRecord> generate_table(std::uint64_t m_min, std::uint64_t m_max, TableMode mode);

}  // namespace swan
