#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swan/bigarith.hpp"
#include "swan/cyclofield.hpp"
#include "swan/tables.hpp"
#include "swan/units.hpp"

namespace swan {

enum class Exactness { kExact, kUpperBound };
enum class Method { kFull, kReduced, kBoth };

std::string_view to_string(Exactness e);
std::string_view to_string(Method m);
/// "full" | "reduced" | "both"; DomainError otherwise.
Method parse_method(std::string_view s);

/// |T(Lambda_{m,p})| computed as |cok(h)| = N / |h(units)|.
struct SwanResult {
  std::uint64_t m = 0;
  std::uint64_t p = 0;
  Natural group_order;      // N = p^phi(m) - 1
  Natural subgroup_order;   // |h(generators)|; a divisor of it if !complete
  Natural cokernel_order;   // N / subgroup_order
  Exactness exactness = Exactness::kExact;
  Method method = Method::kFull;
  Natural coprimality_gcd;  // gcd(cokernel_order, (p-1)/2)
  /// Dropping -1 and zeta_{mp} from the generators changes the subgroup order.
  bool torsion_sensitive = false;
  /// N fully factored. When false, subgroup_order is a certified divisor of
  /// the true image order and cokernel_order a multiple of the true value.
  bool complete = true;
  Natural unfactored_cofactor{1};
  Factorization group_order_factorization;  // factored part of N
  std::optional<Natural> full_subgroup_order;
  std::optional<Natural> reduced_subgroup_order;
};

/// Exact iff phi(m p) <= 72, where h^+_{mp} = 1 is known and the cyclotomic
/// units are all of the units.
Exactness exactness(std::uint64_t m, std::uint64_t p);

struct SwanOptions {
  FactorOptions factor;
  std::optional<kernels::Isa> isa;
};

/// Throws DomainError for bad (m, p), InertnessError if p is not inert in
/// Q(zeta_m), MethodDisagreementError if Method::kBoth sees a mismatch.
SwanResult swan_order(std::uint64_t m, std::uint64_t p, Method method,
                      const SwanOptions& opts = {});

/// Size of the multiplicative closure of the generator images, by
/// breadth-first enumeration. CeilingExceededError if N > ceiling.
Natural brute_force_subgroup_order(const std::vector<UnitGen>& gens, const FieldSpec& spec,
                                   std::uint64_t ceiling = 1'000'000);

enum class RowStatus { kPass, kFail, kSkipped, kIncomplete };
std::string_view to_string(RowStatus s);

struct RowReport {
  std::string table;  // "2.2", "2.4", "4.8"
  std::uint64_t m = 0;
  std::string expected;
  std::string computed;
  RowStatus status = RowStatus::kPass;
  std::string note;
  std::optional<Natural> coprimality_gcd;  // Table 4.8 rows only
};

struct VerifyReport {
  std::vector<RowReport> rows;
  bool all_passed() const;
  std::size_t count(RowStatus s) const;
};

struct VerifyOptions {
  /// Swan-order rows with m above this are skipped with a notice; the
  /// inert-prime tables are cheap and always checked in full.
  std::uint64_t max_m = 37;
  SwanOptions swan;
};

/// Recomputes every row of the three tables and compares.
VerifyReport verify_reference_tables(const ReferenceTables& tables, const VerifyOptions& opts = {});

}  // namespace swan
