#include "swan/factor_cache.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "swan/bigarith.hpp"

namespace swan {
namespace {

std::optional<Factorization> parse_entry(const std::string& key, const nlohmann::json& pairs) {
  Natural n;
  try {
    n = Natural::from_string(key);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!pairs.is_array()) return std::nullopt;
  std::vector<PrimePower> pp;
  for (const auto& item : pairs) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
        !item[1].is_number_unsigned()) {
      return std::nullopt;
    }
    try {
      pp.push_back({Natural::from_string(item[0].get<std::string>()), item[1].get<std::uint32_t>()});
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  auto f = Factorization::from_pairs(std::move(pp));
  if (f.value() != n) return std::nullopt;
  for (const auto& [q, e] : f.pairs()) {
    if (!is_prime(q)) return std::nullopt;
  }
  return f;
}

}  // namespace

FactorCache::FactorCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

void FactorCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "warning: factor cache " << path_ << " is not valid JSON, ignoring it ("
              << e.what() << ")\n";
    return;
  }
  if (!doc.is_object()) {
    std::cerr << "warning: factor cache " << path_ << " is not a JSON object, ignoring it\n";
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (auto f = parse_entry(key, value)) {
      entries_.emplace(key, std::move(*f));
    } else {
      ++rejected_;
      std::cerr << "warning: ignoring corrupt factor cache entry '" << key << "'\n";
    }
  }
}

std::optional<Factorization> FactorCache::lookup(const Natural& n) const {
  std::lock_guard lock(mu_);
  if (auto it = entries_.find(n.to_string()); it != entries_.end()) return it->second;
  return std::nullopt;
}

void FactorCache::store(const Natural& n, const Factorization& f) {
  std::lock_guard lock(mu_);
  entries_.insert_or_assign(n.to_string(), f);
  if (!path_.empty()) save_locked();
}

std::size_t FactorCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

void FactorCache::save_locked() const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [key, f] : entries_) {
    auto arr = nlohmann::json::array();
    for (const auto& [q, e] : f.pairs()) arr.push_back({q.to_string(), e});
    doc[key] = std::move(arr);
  }
  const auto tmp = std::filesystem::path(path_.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      std::cerr << "warning: cannot write factor cache " << path_ << '\n';
      return;
    }
    out << doc.dump(1) << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) std::cerr << "warning: cannot replace factor cache " << path_ << ": " << ec.message() << '\n';
}

}  // namespace swan
