#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tauexc/inventory.hpp"

namespace tauexc {

class AmbientContext;
using Ctx = std::shared_ptr<const AmbientContext>;

// A formal direct sum M + P[1] (plus polarity) or M + I[-1] (minus polarity).
// Module and shifted summands are member ids, kept sorted and distinct.
struct StableObject {
  std::vector<int> mods;
  std::vector<int> shifted;
  bool minus = false;

  static StableObject module(int id) { return StableObject{{id}, {}, false}; }
  static StableObject shift(int id, bool minus_pol = false) { return StableObject{{}, {id}, minus_pol}; }

  int rank() const { return int(mods.size() + shifted.size()); }
  bool empty() const { return mods.empty() && shifted.empty(); }
  bool is_module() const { return shifted.empty(); }
  bool single_module() const { return mods.size() == 1 && shifted.empty(); }
  bool single_shift() const { return mods.empty() && shifted.size() == 1; }
  void normalize();
  bool operator==(const StableObject& o) const {
    return mods == o.mods && shifted == o.shifted && minus == o.minus;
  }
  bool operator<(const StableObject& o) const;
  std::string key() const;
};

StableObject object_union(const StableObject& a, const StableObject& b);
// a with the summands of b removed
StableObject object_minus(const StableObject& a, const StableObject& b);
std::string object_name(const Inventory& inv, const StableObject& u);

// A full additive subcategory of the module category, presented by the subset
// of inventory members it contains. The whole category and iterated
// tau-perpendicular subcategories are both represented this way.
class AmbientContext {
 public:
  static Ctx whole(InventoryPtr inv, std::string label = "mod");
  // same universe, members restricted to dim <= dim_bound (for evidence runs)
  static Ctx restricted(const Ctx& ctx, int dim_bound);
  static Ctx derived(const Ctx& parent, std::vector<int> members, StableObject defining, int rank,
                     std::string label);

  InventoryPtr inv;
  std::vector<int> members;  // sorted member ids
  std::string label;
  bool exact = false;   // member list is provably complete
  bool whole_cat = false;
  int rank = 0;
  Ctx parent;            // null for the whole category
  std::optional<StableObject> defining;  // J(defining) = this, inside parent

  bool contains(int member) const;
  bool contains_all(const std::vector<int>& ids) const;
  const Module& mod(int member) const { return (*inv)[member]; }

  // caches, filled lazily by the torsion/perpcat layers (single-threaded)
  mutable std::map<std::string, Ctx> j_cache;
  mutable std::map<int, std::vector<int>> perp_tau_cache;
  mutable std::map<int, std::vector<int>> coperp_cache;
  mutable std::map<int, bool> rigid_cache, corigid_cache;
  mutable std::optional<std::vector<int>> rel_proj, rel_inj, rel_simp;
  mutable std::map<int, int> rel_nu_cache, rel_nu_inv_cache;
  mutable std::map<int, int> rel_tau_cache, rel_tau_inv_cache;
  mutable std::shared_ptr<void> transport, op_transport;

 private:
  AmbientContext() = default;
};

}  // namespace tauexc
