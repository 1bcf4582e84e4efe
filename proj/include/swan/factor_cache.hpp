#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "swan/natural.hpp"

namespace swan {

/// On-disk memo of completed factorizations.
///
/// File format: one JSON object mapping decimal integer strings to arrays of
/// [prime-string, exponent] pairs, e.g. {"24": [["2", 3], ["3", 1]]}.
/// Entries whose product or primality does not check out are dropped with a
/// warning on stderr. Every successful store rewrites the file.
class FactorCache {
 public:
  /// Empty in-memory cache with no backing file.
  FactorCache() = default;
  /// Loads `path` if it exists; later stores are written back to it.
  explicit FactorCache(std::filesystem::path path);

  std::optional<Factorization> lookup(const Natural& n) const;
  void store(const Natural& n, const Factorization& f);

  std::size_t size() const;
  std::size_t rejected_entries() const noexcept { return rejected_; }

 private:
  void load();
  void save_locked() const;

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<std::string, Factorization> entries_;
  std::size_t rejected_ = 0;
};

}  // namespace swan
