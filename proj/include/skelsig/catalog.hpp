#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "skelsig/groups.hpp"

namespace skelsig {

struct CatalogEntry {
  std::int64_t order;
  std::string spec;
  std::string label;
  bool complete;
  GroupTable group;
};

/// Groups bundled for exhaustive searches. An order counts as complete only
/// when it has entries and every entry at that order carries complete=true,
/// i.e. the entries are asserted to cover all isomorphism classes.
class CatalogManifest {
public:
  CatalogManifest() = default;
  explicit CatalogManifest(std::vector<CatalogEntry> entries);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<const CatalogEntry*> of_order(std::int64_t order) const;
  bool complete_at(std::int64_t order) const;
  /// Largest m with every order in [1, m] complete; 0 if order 1 is not.
  std::int64_t complete_through() const;
  bool empty() const { return entries_.empty(); }

private:
  std::vector<CatalogEntry> entries_;
};

/// Reads <dir>/manifest.json: a JSON list of {order, spec, label, complete}.
/// Every spec is resolved (file: paths relative to dir) and its order checked.
CatalogManifest load_catalog(const std::filesystem::path& dir);

}  // namespace skelsig
