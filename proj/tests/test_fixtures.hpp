#pragma once

#include <memory>
#include <string>

#include "tauexc/builtins.hpp"
#include "tauexc/inventory.hpp"

namespace tauexc::testing {

inline std::shared_ptr<const Algebra> builtin(const std::string& name) {
  auto text = builtin_algebra_text(name);
  REQUIRE(text.has_value());
  return load_algebra(*text);
}

inline InventoryPtr builtin_inventory(const std::string& name, int max_dim = 12) {
  return Inventory::build(builtin(name), max_dim);
}

}  // namespace tauexc::testing
