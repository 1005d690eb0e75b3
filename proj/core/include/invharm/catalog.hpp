#pragma once

#include <optional>
#include <string>
#include <vector>

namespace invharm {

/// Built-in structure, shipped in-binary. `pinned` holds the frozen harmonic
/// dimension summary reproduced by every build (empty for families).
struct CatalogEntry {
  std::string id;
  std::string description;
  std::string text;            // spec document
  std::string pinned;          // "key=value;..." regression pin, may be empty
  bool parametrized = false;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& id);

}  // namespace invharm
