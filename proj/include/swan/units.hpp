#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swan/cyclofield.hpp"
#include "swan/natural.hpp"

namespace swan {

/// A cyclotomic unit of Z[zeta_n], n = m*p, kept symbolically.
///
///   kFrac        (1 - zeta_d^a) / (1 - zeta_d^b), d a prime-power divisor
///                of n. The standard generators have b = 1; b != 1 only appears
///                after a Galois conjugation.
///   kFlat        1 - zeta_d^a, d a non-prime-power divisor of n.
///   kRootOfUnity zeta_d^a with d = 2 (the unit -1) or d = n.
///   kFracFamily  stands for the whole family Frac(p, a), a in (Z/pZ)*,
///                whose images generate F_p^*; only in reduced sets.
struct UnitGen {
  enum class Kind { kFrac, kFlat, kRootOfUnity, kFracFamily };

  Kind kind = Kind::kFlat;
  std::uint64_t d = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 1;

  static UnitGen frac(std::uint64_t d, std::uint64_t a) { return {Kind::kFrac, d, a, 1}; }
  static UnitGen flat(std::uint64_t d, std::uint64_t a) { return {Kind::kFlat, d, a, 1}; }
  static UnitGen minus_one() { return {Kind::kRootOfUnity, 2, 1, 1}; }
  static UnitGen zeta(std::uint64_t n, std::uint64_t a = 1) {
    return {Kind::kRootOfUnity, n, a, 1};
  }
  static UnitGen frac_family(std::uint64_t p) { return {Kind::kFracFamily, p, 0, 1}; }

  bool is_torsion() const noexcept { return kind == Kind::kRootOfUnity; }
  std::string to_string() const;

  friend bool operator==(const UnitGen&, const UnitGen&) = default;
  friend auto operator<=>(const UnitGen&, const UnitGen&) = default;
};

bool is_prime_power(std::uint64_t n);

/// The standard generating set for the cyclotomic units of Z[zeta_{mp}], plus -1
/// and zeta_{mp}. Ordered by kind, then d, then a.
std::vector<UnitGen> enumerate_generators(std::uint64_t m, std::uint64_t p);

/// Image under the reduction zeta_{mp} -> z, zeta_p -> 1 into spec's field.
FieldElem image_of_generator(const UnitGen& g, const FieldSpec& spec);

/// The scalar a: image of (1 - zeta_p^a)/(1 - zeta_p).
FieldElem image_frac_p(std::uint64_t a, const FieldSpec& spec);

/// Shortened generating list with the same subgroup order: one Flat
/// representative 1 - zeta_d per non-prime-power d, the Frac(p, .) family as
/// a single marker, every Frac(q^j, a), and both roots of unity.
/// m must be 4 or an odd prime power.
std::vector<UnitGen> reduced_generator_set(std::uint64_t m, std::uint64_t p);

/// Apply the automorphism zeta -> zeta^t' of Q(zeta_{mp}) fixing zeta_p,
/// where t' = 1 (mod p) and t' = t (mod m). gcd(t, m) must be 1.
UnitGen galois_conjugate(const UnitGen& g, std::uint64_t t, std::uint64_t m, std::uint64_t p);

/// Order of the subgroup of the cyclic group F^* generated by the images:
/// the lcm of their element orders.
Natural subgroup_order_of_images(const std::vector<UnitGen>& gens, const FieldSpec& spec);

/// As above but from element_order_lower_bound: a divisor of the true
/// subgroup order, usable when N is only partially factored.
Natural subgroup_order_lower_bound(const std::vector<UnitGen>& gens, const FieldSpec& spec);

}  // namespace swan
