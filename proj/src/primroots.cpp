#include "swan/primroots.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "swan/bigarith.hpp"
#include "swan/errors.hpp"

namespace swan {
namespace {

using u64 = std::uint64_t;

void require_admissible(u64 m) {
  if (!inert_prime_exists(m)) {
    throw NoPrimitiveRootError("no primitive root mod " + std::to_string(m) +
                               ": m must be 4, q^n or 2q^n for an odd prime q");
  }
}

}  // namespace

std::string_view to_string(InertMethod method) {
  switch (method) {
    case InertMethod::kProgression:
      return "progression";
    case InertMethod::kDirect:
      return "direct";
    case InertMethod::kTwoMReduction:
      return "two_m_reduction";
  }
  return "unknown";
}

bool inert_prime_exists(std::uint64_t m) {
  if (m < 3) throw DomainError("inert_prime_exists: m must be >= 3");
  if (m == 4) return true;
  u64 odd = m % 2 == 0 ? m / 2 : m;
  if (odd % 2 == 0 || odd == 1) return false;
  const auto f = factor(Natural(odd));
  return f.pairs().size() == 1;
}

bool is_primitive_root(std::uint64_t r, std::uint64_t m) {
  if (m < 3) throw DomainError("is_primitive_root: m must be >= 3");
  if (std::gcd(r, m) != 1) return false;
  const Natural phi = euler_phi(Natural(m));
  return multiplicative_order(Natural(r % m), Natural(m), factor(phi)) == phi;
}

std::uint64_t least_primitive_root(std::uint64_t m) {
  require_admissible(m);
  for (u64 r = 2; r < m; ++r) {
    if (std::gcd(r, m) == 1 && is_primitive_root(r, m)) return r;
  }
  throw NoPrimitiveRootError("no primitive root found mod " + std::to_string(m));
}

std::uint64_t progression_prime(std::uint64_t m, std::uint64_t r) {
  if (r > 2 && is_prime(Natural(r))) return r;
  u64 candidate = r;
  for (int step = 0; step < 1'000'000; ++step) {
    candidate += m;
    if (candidate > 2 && is_prime(Natural(candidate))) return candidate;
  }
  throw std::runtime_error("progression_prime: no prime within 10^6 steps of " +
                           std::to_string(r) + " mod " + std::to_string(m));
}

std::uint64_t least_inert_prime_direct(std::uint64_t m) {
  require_admissible(m);
  for (u64 p = 3;; p += 2) {
    if (m % p == 0 || !is_prime(Natural(p))) continue;
    if (is_primitive_root(p, m)) return p;
  }
}

std::uint64_t two_m_reduction(std::uint64_t m) {
  if (m < 3 || m % 2 == 0 || factor(Natural(m)).pairs().size() != 1) {
    throw DomainError("two_m_reduction: m = " + std::to_string(m) +
                      " is not an odd prime power");
  }
  const u64 r = least_primitive_root(2 * m);
  if (r % 2 == 0) {
    throw std::logic_error("two_m_reduction: even primitive root mod 2m");
  }
  return r;
}

std::vector<InertRecord> generate_table(std::uint64_t m_min, std::uint64_t m_max,
                                        TableMode mode) {
  std::vector<InertRecord> rows;
  for (u64 m = std::max<u64>(m_min, 3); m <= m_max; ++m) {
    if (!inert_prime_exists(m)) continue;
    if (mode == TableMode::kTable24 && m % 4 == 2) continue;
    InertRecord rec;
    rec.m = m;
    rec.least_primitive_root = least_primitive_root(m);
    if (mode == TableMode::kTable22) {
      rec.inert_prime = progression_prime(m, rec.least_primitive_root);
      rec.method = InertMethod::kProgression;
    } else {
      rec.inert_prime = least_inert_prime_direct(m);
      rec.method = InertMethod::kDirect;
    }
    rows.push_back(rec);
  }
  return rows;
}

}  // namespace swan
