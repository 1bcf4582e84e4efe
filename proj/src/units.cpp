#include "swan/units.hpp"

#include <algorithm>
#include <numeric>

#include "swan/errors.hpp"
#include "swan/primroots.hpp"

namespace swan {
namespace {

using u64 = std::uint64_t;

u64 inv_mod(u64 a, u64 n) {
  // Extended Euclid on (a, n); gcd(a, n) = 1 assumed.
  long long r0 = static_cast<long long>(n), r1 = static_cast<long long>(a % n);
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::pair(s1, s0 - q * s1);
  }
  const long long nn = static_cast<long long>(n);
  return static_cast<u64>(((s0 % nn) + nn) % nn);
}

// Exponent of z in the image of zeta_d^k.
u64 image_exponent(u64 d, u64 k, const FieldSpec& spec) {
  const u64 mp = spec.m() * spec.p();
  const unsigned __int128 e = static_cast<unsigned __int128>(mp / d) * k;
  return static_cast<u64>(e % spec.m());
}

FieldElem one_minus_z_pow(u64 e, const FieldSpec& spec) {
  return spec.sub(spec.one(), spec.z_pow(e));
}

void require_coprime_prime(u64 m, u64 p) {
  if (m == 0 || p < 2 || !is_prime(Natural(p))) {
    throw DomainError("unit generators need m >= 1 and p prime");
  }
  if (std::gcd(m, p) != 1) {
    throw DomainError("unit generators need gcd(m, p) = 1; got m = " + std::to_string(m) +
                      ", p = " + std::to_string(p));
  }
}

}  // namespace

std::string UnitGen::to_string() const {
  const auto s = [](u64 v) { return std::to_string(v); };
  switch (kind) {
    case Kind::kFrac:
      if (b == 1) return "frac(d=" + s(d) + ", a=" + s(a) + ")";
      return "frac(d=" + s(d) + ", a=" + s(a) + ", b=" + s(b) + ")";
    case Kind::kFlat:
      return "flat(d=" + s(d) + ", a=" + s(a) + ")";
    case Kind::kRootOfUnity:
      if (d == 2) return "root(-1)";
      return "root(zeta_" + s(d) + "^" + s(a) + ")";
    case Kind::kFracFamily:
      return "frac-family(d=" + s(d) + ")";
  }
  return "?";
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    return n == 1;
  }
  return true;
}

std::vector<UnitGen> enumerate_generators(std::uint64_t m, std::uint64_t p) {
  require_coprime_prime(m, p);
  const u64 n = m * p;
  std::vector<UnitGen> out;
  for (u64 d : divisors(n)) {
    if (d == 1) continue;
    const bool pp = is_prime_power(d);
    for (u64 a = 1; a < d; ++a) {
      if (std::gcd(a, d) != 1) continue;
      if (pp) {
        if (a != 1) out.push_back(UnitGen::frac(d, a));
      } else {
        out.push_back(UnitGen::flat(d, a));
      }
    }
  }
  out.push_back(UnitGen::minus_one());
  out.push_back(UnitGen::zeta(n));
  std::stable_sort(out.begin(), out.end(),
                   [](const UnitGen& x, const UnitGen& y) { return x.kind < y.kind; });
  return out;
}

FieldElem image_frac_p(std::uint64_t a, const FieldSpec& spec) {
  if (a % spec.p() == 0) throw DomainError("image_frac_p: a must be a unit mod p");
  return spec.scalar(a);
}

FieldElem image_of_generator(const UnitGen& g, const FieldSpec& spec) {
  const u64 mp = spec.m() * spec.p();
  const u64 p = spec.p();
  switch (g.kind) {
    case UnitGen::Kind::kFlat: {
      if (g.d == 0 || mp % g.d != 0) throw DomainError(g.to_string() + " is not a unit of Z[zeta_mp]");
      const u64 e = image_exponent(g.d, g.a, spec);
      if (e == 0) throw DomainError(g.to_string() + " reduces to 1 - 1 = 0");
      return one_minus_z_pow(e, spec);
    }
    case UnitGen::Kind::kFrac: {
      if (g.d == 0 || mp % g.d != 0) throw DomainError(g.to_string() + " is not a unit of Z[zeta_mp]");
      if (image_exponent(g.d, 1, spec) == 0) {
        // zeta_d -> 1: each of numerator and denominator is a geometric sum
        // 1 + x + ... + x^(k-1) at x = 1, so the quotient is a / b in F_p.
        if (g.a % p == 0 || g.b % p == 0) throw DomainError(g.to_string() + " has a zero image");
        return spec.scalar((g.a % p) * inv_mod(g.b % p, p) % p);
      }
      const FieldElem num = one_minus_z_pow(image_exponent(g.d, g.a, spec), spec);
      const FieldElem den = one_minus_z_pow(image_exponent(g.d, g.b, spec), spec);
      if (den.is_zero()) throw DomainError(g.to_string() + ": denominator reduces to 0");
      return spec.mul(num, spec.inv(den));
    }
    case UnitGen::Kind::kRootOfUnity:
      if (g.d == 2) return spec.scalar(p - 1);
      if (g.d == 0 || mp % g.d != 0) throw DomainError(g.to_string() + " is not in Q(zeta_mp)");
      return spec.z_pow(image_exponent(g.d, g.a, spec));
    case UnitGen::Kind::kFracFamily:
      return spec.scalar(least_primitive_root(p));
  }
  throw DomainError("unknown generator kind");
}

std::vector<UnitGen> reduced_generator_set(std::uint64_t m, std::uint64_t p) {
  require_coprime_prime(m, p);
  if (!(m == 4 || (m >= 3 && m % 2 == 1 && is_prime_power(m)))) {
    throw DomainError("reduced_generator_set: m = " + std::to_string(m) +
                      " is neither 4 nor an odd prime power");
  }
  const u64 n = m * p;
  std::vector<UnitGen> out;
  for (u64 d : divisors(n)) {
    if (d == 1 || d == p) continue;
    if (!is_prime_power(d)) {
      // The G_p-orbit of 1 - zeta_d covers every image at this level and
      // conjugates share an order, so one representative suffices.
      out.push_back(UnitGen::flat(d, 1));
      continue;
    }
    // Frac(q^j, a): no two are G_p-conjugate, keep them all.
    for (u64 a = 2; a < d; ++a) {
      if (std::gcd(a, d) == 1) out.push_back(UnitGen::frac(d, a));
    }
  }
  out.push_back(UnitGen::minus_one());
  out.push_back(UnitGen::zeta(n));
  out.push_back(UnitGen::frac_family(p));
  std::stable_sort(out.begin(), out.end(),
                   [](const UnitGen& x, const UnitGen& y) { return x.kind < y.kind; });
  return out;
}

UnitGen galois_conjugate(const UnitGen& g, std::uint64_t t, std::uint64_t m, std::uint64_t p) {
  if (m == 0 || std::gcd(t, m) != 1) {
    throw DomainError("galois_conjugate: t = " + std::to_string(t) + " is not a unit mod " +
                      std::to_string(m));
  }
  const u64 mp = m * p;
  // CRT: t' = 1 (mod p), t' = t (mod m).
  const u64 k = ((t % m) + m - 1 % m) % m * inv_mod(p % m, m) % m;
  const u64 tp = (1 + p * k) % mp;
  UnitGen out = g;
  switch (g.kind) {
    case UnitGen::Kind::kFrac:
      if (g.d != 0 && mp % g.d == 0 && (mp / g.d) % m != 0) {
        out.a = g.a * tp % g.d;
        out.b = g.b * tp % g.d;
      }
      break;
    case UnitGen::Kind::kFlat:
      out.a = g.a * tp % g.d;
      break;
    case UnitGen::Kind::kRootOfUnity:
      if (g.d != 2) out.a = g.a * tp % g.d;
      break;
    case UnitGen::Kind::kFracFamily:
      break;
  }
  return out;
}

Natural subgroup_order_of_images(const std::vector<UnitGen>& gens, const FieldSpec& spec) {
  Natural order(1);
  for (const auto& g : gens) order = lcm(order, spec.element_order(image_of_generator(g, spec)));
  return order;
}

Natural subgroup_order_lower_bound(const std::vector<UnitGen>& gens, const FieldSpec& spec) {
  Natural order(1);
  for (const auto& g : gens) {
    order = lcm(order, spec.element_order_lower_bound(image_of_generator(g, spec)));
  }
  return order;
}

}  // namespace swan
