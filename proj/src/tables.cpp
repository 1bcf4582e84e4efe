#include "swan/tables.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "reference_tables_data.hpp"
#include "swan/errors.hpp"

namespace swan {

std::string_view embedded_tables_json() { return kReferenceTablesJson; }

ReferenceTables ReferenceTables::embedded() { return from_json(embedded_tables_json()); }

ReferenceTables ReferenceTables::from_json(std::string_view text) {
  ReferenceTables t;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& r : doc.at("table_2_2")) {
      t.table_2_2.push_back({r.at("m").get<std::uint64_t>(), r.at("r").get<std::uint64_t>(),
                             r.at("p").get<std::uint64_t>()});
    }
    for (const auto& r : doc.at("table_2_4")) {
      t.table_2_4.push_back({r.at("m").get<std::uint64_t>(), r.at("p").get<std::uint64_t>()});
    }
    for (const auto& r : doc.at("table_4_8")) {
      t.table_4_8.push_back({r.at("m").get<std::uint64_t>(), r.at("p").get<std::uint64_t>(),
                             r.at("value").get<std::string>(), r.at("exact").get<bool>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed reference tables: ") + e.what());
  }
  return t;
}

ReferenceTables ReferenceTables::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read reference tables from " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace swan
