#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tauexc/algebra.hpp"

namespace tauexc {

struct BuiltinAlgebra {
  std::string name;
  std::string text;
};

const std::vector<BuiltinAlgebra>& builtin_algebras();
// nullopt when the name is not registered
std::optional<std::string> builtin_algebra_text(const std::string& name);

// Parse an algebra file, optionally overriding the declared field characteristic.
std::shared_ptr<const Algebra> load_algebra(const std::string& text, std::optional<uint32_t> char_override = {});

}  // namespace tauexc
