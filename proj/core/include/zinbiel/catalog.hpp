#pragma once

#include <map>
#include <string>
#include <vector>

#include "zinbiel/identity.hpp"

namespace zinbiel {

struct CatalogEntry {
  std::string name;
  /// Source text the identity was built from (identity DSL or tensor-map form).
  std::string source;
  std::string description;
  Identity identity;
};

/// Built-in laws in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

/// Built-in laws by name.
const std::map<std::string, Identity>& catalog();

/// Throws InputError for unknown names.
const Identity& catalog_identity(const std::string& name);

}  // namespace zinbiel
