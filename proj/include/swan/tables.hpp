#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace swan {

// Published inert-prime and Swan-order tables, shipped as
// data/reference_tables.json and compiled into the library.
struct ReferenceTables {
  struct LeastRootRow {  // Table 2.2
    std::uint64_t m, r, p;
  };
  struct InertPrimeRow {  // Table 2.4
    std::uint64_t m, p;
  };
  struct SwanRow {  // Table 4.8
    std::uint64_t m, p;
    std::string value;  // decimal; exceeds 64 bits in the large rows
    bool exact;         // "=" rows; otherwise the value is an upper bound
  };

  std::vector<LeastRootRow> table_2_2;
  std::vector<InertPrimeRow> table_2_4;
  std::vector<SwanRow> table_4_8;

  static ReferenceTables embedded();
  /// Throws DomainError on malformed input.
  static ReferenceTables from_json(std::string_view text);
  static ReferenceTables from_file(const std::filesystem::path& path);
};

/// Raw JSON text of the embedded tables.
std::string_view embedded_tables_json();

}  // namespace swan
