#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khopos/diagram.hpp"

namespace khopos {

struct CatalogEntry {
  std::string name;
  std::optional<BraidWord> braid;  // braid presentation, when there is one
  std::string pd;                  // PD text otherwise
  int writhe = 0;
  std::string note;

  LinkDiagram diagram() const;
  std::string presentation() const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws PreconditionError listing the known names.
const CatalogEntry& catalog_lookup(const std::string& name);

}  // namespace khopos
