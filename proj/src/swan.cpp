#include "swan/swan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "swan/errors.hpp"
#include "swan/primroots.hpp"

namespace swan {
namespace {

using u64 = std::uint64_t;

std::vector<UnitGen> without_torsion(std::vector<UnitGen> gens) {
  std::erase_if(gens, [](const UnitGen& g) { return g.is_torsion(); });
  return gens;
}

Natural subgroup_order(const std::vector<UnitGen>& gens, const FieldSpec& spec) {
  return spec.factorization_complete() ? subgroup_order_of_images(gens, spec)
                                       : subgroup_order_lower_bound(gens, spec);
}

void check_inert(u64 m, u64 p) {
  if (m < 3) return;  // Q(zeta_1) = Q(zeta_2) = Q: every prime is inert
  if (is_primitive_root(p, m)) return;
  const u64 phi = euler_phi(Natural(m)).to_u64();
  const u64 f = multiplicative_order(Natural(p), Natural(m), factor(Natural(phi))).to_u64();
  throw InertnessError(m, p, f, phi / f);
}

}  // namespace

std::string_view to_string(Exactness e) {
  return e == Exactness::kExact ? "Exact" : "UpperBound";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kFull:
      return "full";
    case Method::kReduced:
      return "reduced";
    case Method::kBoth:
      return "both";
  }
  return "unknown";
}

Method parse_method(std::string_view s) {
  if (s == "full") return Method::kFull;
  if (s == "reduced") return Method::kReduced;
  if (s == "both") return Method::kBoth;
  throw DomainError("unknown method '" + std::string(s) + "' (want full, reduced or both)");
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kPass:
      return "PASS";
    case RowStatus::kFail:
      return "FAIL";
    case RowStatus::kSkipped:
      return "SKIP";
    case RowStatus::kIncomplete:
      return "INCOMPLETE";
  }
  return "?";
}

Exactness exactness(std::uint64_t m, std::uint64_t p) {
  return euler_phi(Natural(m) * Natural(p)) <= Natural(72) ? Exactness::kExact
                                                           : Exactness::kUpperBound;
}

SwanResult swan_order(std::uint64_t m, std::uint64_t p, Method method, const SwanOptions& opts) {
  if (m == 0) throw DomainError("swan_order: m must be >= 1");
  if (p < 3 || !is_prime(Natural(p))) {
    throw DomainError("swan_order: p = " + std::to_string(p) + " must be an odd prime");
  }
  if (std::gcd(m, p) != 1) {
    throw DomainError("swan_order: p = " + std::to_string(p) + " divides m = " + std::to_string(m));
  }
  check_inert(m, p);

  const FieldSpec spec = FieldSpec::make(m, p, opts.factor, opts.isa);
  SwanResult res;
  res.m = m;
  res.p = p;
  res.method = method;
  res.group_order = spec.group_order();
  res.complete = spec.factorization_complete();
  res.unfactored_cofactor = spec.unfactored_cofactor();
  res.group_order_factorization = spec.group_order_factorization();
  res.exactness = exactness(m, p);

  std::vector<UnitGen> primary;
  if (method != Method::kReduced) {
    primary = enumerate_generators(m, p);
    res.full_subgroup_order = subgroup_order(primary, spec);
  }
  if (method != Method::kFull) {
    auto reduced = reduced_generator_set(m, p);
    res.reduced_subgroup_order = subgroup_order(reduced, spec);
    if (primary.empty()) primary = std::move(reduced);
  }
  if (method == Method::kBoth && *res.full_subgroup_order != *res.reduced_subgroup_order) {
    throw MethodDisagreementError("full generator set gives subgroup order " +
                                  res.full_subgroup_order->to_string() + ", reduced gives " +
                                  res.reduced_subgroup_order->to_string());
  }
  res.subgroup_order = res.full_subgroup_order ? *res.full_subgroup_order
                                               : *res.reduced_subgroup_order;
  res.cokernel_order = res.group_order / res.subgroup_order;
  res.coprimality_gcd = gcd(res.cokernel_order, Natural((p - 1) / 2));
  res.torsion_sensitive = subgroup_order(without_torsion(primary), spec) != res.subgroup_order;
  return res;
}

Natural brute_force_subgroup_order(const std::vector<UnitGen>& gens, const FieldSpec& spec,
                                   std::uint64_t ceiling) {
  if (spec.group_order() > Natural(ceiling)) {
    throw CeilingExceededError("brute force refused: N = " + spec.group_order().to_string() +
                               " exceeds ceiling " + std::to_string(ceiling));
  }
  std::set<FieldElem> images;
  for (const auto& g : gens) images.insert(image_of_generator(g, spec));

  // Elements keyed by their base-p digits; N <= ceiling keeps this in range.
  const auto key = [&](const FieldElem& x) {
    u64 k = 0;
    for (auto it = x.coeffs().rbegin(); it != x.coeffs().rend(); ++it) k = k * spec.p() + *it;
    return k;
  };
  std::unordered_set<u64> seen{key(spec.one())};
  std::deque<FieldElem> frontier{spec.one()};
  while (!frontier.empty()) {
    const FieldElem x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : images) {
      FieldElem y = spec.mul(x, g);
      if (seen.insert(key(y)).second) frontier.push_back(std::move(y));
    }
  }
  return Natural(seen.size());
}

bool VerifyReport::all_passed() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const RowReport& r) { return r.status == RowStatus::kFail; });
}

std::size_t VerifyReport::count(RowStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [s](const RowReport& r) { return r.status == s; }));
}

VerifyReport verify_reference_tables(const ReferenceTables& tables, const VerifyOptions& opts) {
  VerifyReport report;
  const auto skipped = [&](const std::string& table, u64 m, std::string expected) {
    report.rows.push_back({table, m, std::move(expected), "", RowStatus::kSkipped,
                           "m above --max-m " + std::to_string(opts.max_m), std::nullopt});
  };

  // Row sets: the tables must list every admissible m in range, no more.
  const auto check_row_set = [&](const std::string& table, std::vector<u64> listed,
                                 TableMode mode) {
    const u64 hi = 99;
    std::erase_if(listed, [&](u64 m) { return m > hi; });
    std::vector<u64> want;
    for (const auto& rec : generate_table(3, hi, mode)) want.push_back(rec.m);
    const auto join = [](const std::vector<u64>& v) {
      std::string s;
      for (u64 m : v) s += (s.empty() ? "" : ",") + std::to_string(m);
      return s;
    };
    report.rows.push_back({table, 0, std::to_string(listed.size()) + " rows",
                           std::to_string(want.size()) + " rows",
                           listed == want ? RowStatus::kPass : RowStatus::kFail,
                           listed == want ? "row set matches admissible m <= " + std::to_string(hi)
                                          : "listed m {" + join(listed) + "} vs admissible {" +
                                                join(want) + "}",
                           std::nullopt});
  };

  {
    std::vector<u64> ms;
    for (const auto& row : tables.table_2_2) ms.push_back(row.m);
    check_row_set("2.2", ms, TableMode::kTable22);
  }
  for (const auto& row : tables.table_2_2) {
    const std::string expected = "r=" + std::to_string(row.r) + " p=" + std::to_string(row.p);
    RowReport rr{"2.2", row.m, expected, "", RowStatus::kFail, "", std::nullopt};
    try {
      const u64 r = least_primitive_root(row.m);
      const u64 p = progression_prime(row.m, r);
      rr.computed = "r=" + std::to_string(r) + " p=" + std::to_string(p);
      if (r == row.r && p == row.p) rr.status = RowStatus::kPass;
    } catch (const std::exception& e) {
      rr.note = e.what();
    }
    report.rows.push_back(std::move(rr));
  }

  {
    std::vector<u64> ms;
    for (const auto& row : tables.table_2_4) ms.push_back(row.m);
    check_row_set("2.4", ms, TableMode::kTable24);
  }
  for (const auto& row : tables.table_2_4) {
    const std::string expected = "p=" + std::to_string(row.p);
    RowReport rr{"2.4", row.m, expected, "", RowStatus::kFail, "", std::nullopt};
    try {
      const u64 p = least_inert_prime_direct(row.m);
      rr.computed = "p=" + std::to_string(p);
      if (p == row.p) rr.status = RowStatus::kPass;
    } catch (const std::exception& e) {
      rr.note = e.what();
    }
    report.rows.push_back(std::move(rr));
  }

  for (const auto& row : tables.table_4_8) {
    const std::string expected = (row.exact ? "=" : "<=") + row.value;
    if (row.m > opts.max_m) {
      skipped("4.8", row.m, expected);
      continue;
    }
    RowReport rr{"4.8", row.m, expected, "", RowStatus::kFail, "", std::nullopt};
    try {
      const Method method = row.m <= 37 ? Method::kBoth : Method::kReduced;
      const SwanResult res = swan_order(row.m, row.p, method, opts.swan);
      const bool exact = res.exactness == Exactness::kExact;
      rr.computed = (exact ? "=" : "<=") + res.cokernel_order.to_string();
      rr.coprimality_gcd = res.coprimality_gcd;
      if (!res.complete) {
        rr.status = RowStatus::kIncomplete;
        rr.note = "time budget exhausted; unfactored cofactor " +
                  res.unfactored_cofactor.to_string() + ", computed value is a multiple";
      } else if (exact == row.exact && res.cokernel_order == Natural::from_string(row.value)) {
        rr.status = RowStatus::kPass;
      }
      if (!res.coprimality_gcd.is_one()) {
        if (!rr.note.empty()) rr.note += "; ";
        rr.note += "gcd(|T|, (p-1)/2) = " + res.coprimality_gcd.to_string() +
                   ": not coprime to (p-1)/2";
      }
    } catch (const std::exception& e) {
      rr.note = e.what();
    }
    report.rows.push_back(std::move(rr));
  }
  return report;
}

}  // namespace swan
