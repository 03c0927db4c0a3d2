#include "skelsig/catalog.hpp"

#include <fstream>
#include <map>

#include "json.hpp"

namespace skelsig {

CatalogManifest::CatalogManifest(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}

std::vector<const CatalogEntry*> CatalogManifest::of_order(std::int64_t order) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (e.order == order) out.push_back(&e);
  }
  return out;
}

bool CatalogManifest::complete_at(std::int64_t order) const {
  const auto group = of_order(order);
  if (group.empty()) return false;
  for (const auto* e : group) {
    if (!e->complete) return false;
  }
  return true;
}

std::int64_t CatalogManifest::complete_through() const {
  std::int64_t m = 0;
  while (complete_at(m + 1)) ++m;
  return m;
}

CatalogManifest load_catalog(const std::filesystem::path& dir) {
  const auto path = dir / "manifest.json";
  std::ifstream in(path);
  if (!in) throw GroupError(GroupErrorKind::bad_format, "cannot open catalog manifest " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw GroupError(GroupErrorKind::bad_format, "catalog manifest is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array()) throw GroupError(GroupErrorKind::bad_format, "catalog manifest must be a JSON list");

  std::vector<CatalogEntry> entries;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("order") || !item.contains("spec") || !item["order"].is_number_integer() ||
        !item["spec"].is_string()) {
      throw GroupError(GroupErrorKind::bad_format, "catalog entry needs integer 'order' and string 'spec'");
    }
    const auto order = item["order"].get<std::int64_t>();
    const auto spec = item["spec"].get<std::string>();
    const auto label = item.value("label", spec);
    const bool complete = item.value("complete", false);
    GroupTable group = resolve_group_spec(spec, dir);
    if (static_cast<std::int64_t>(group.order()) != order) {
      throw GroupError(GroupErrorKind::bad_format, "catalog entry '" + label + "' declares order " +
                                                       std::to_string(order) + " but has " +
                                                       std::to_string(group.order()) + " elements");
    }
    entries.push_back({order, spec, label, complete, std::move(group)});
  }
  return CatalogManifest(std::move(entries));
}

}  // namespace skelsig
