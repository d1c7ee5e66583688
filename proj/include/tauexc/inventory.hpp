#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tauexc/module.hpp"
#include "tauexc/strings.hpp"

namespace tauexc {

// Raised when a computation needs a module outside the enumerated bound.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TauInfo {
  Module value;
  int member = -1;  // member id when the value is in the inventory
};

// The indecomposable modules the higher layers work over. For special
// biserial algebras this is the string-module enumeration up to max_dim.
class Inventory {
 public:
  static std::shared_ptr<const Inventory> build(std::shared_ptr<const Algebra> alg, int max_dim,
                                                const std::vector<Module>& extra = {});

  const Algebra& alg() const { return *alg_; }
  std::shared_ptr<const Algebra> alg_ptr() const { return alg_; }
  int size() const { return int(members_.size()); }
  const Module& operator[](int i) const { return members_[i]; }
  const std::vector<Module>& members() const { return members_; }
  bool complete() const { return complete_; }
  int max_dim() const { return max_dim_; }
  bool bands_present() const { return bands_present_; }

  int find(const Module& m) const;  // -1 when absent
  int require(const Module& m, const std::string& what) const;
  int by_name(const std::string& name) const;  // -1 when unknown
  const std::string& name(int i) const { return members_[i].name; }

  int simple_member(int vertex) const { return simples_[vertex]; }
  int projective_member(int vertex) const { return projectives_[vertex]; }
  int injective_member(int vertex) const { return injectives_[vertex]; }

  // memoized whole-category data
  int hom(int i, int j) const;
  int ext(int i, int j) const;
  const TauInfo& tau_of(int i) const;
  const TauInfo& tau_inv_of(int i) const;
  bool tau_rigid(int i) const;  // Hom(M, tau M) = 0
  bool is_brick_member(int i) const;
  bool gen_pair(int i, int j) const;    // member j in Gen(member i)
  bool cogen_pair(int i, int j) const;  // member j in Cogen(member i)

  std::string names_joined(const std::vector<int>& ids, const std::string& sep) const;

 private:
  Inventory() = default;
  void assign_names();

  std::shared_ptr<const Algebra> alg_;
  std::vector<Module> members_;
  bool complete_ = false;
  int max_dim_ = 0;
  bool bands_present_ = false;
  std::vector<int> simples_, projectives_, injectives_;
  std::map<std::string, int> by_name_;

  mutable std::map<std::pair<int, int>, int> hom_cache_, ext_cache_;
  mutable std::map<std::pair<int, int>, bool> gen_cache_, cogen_cache_;
  mutable std::map<int, TauInfo> tau_cache_, tau_inv_cache_;
  mutable std::map<int, bool> rigid_cache_, brick_cache_;
};

using InventoryPtr = std::shared_ptr<const Inventory>;

}  // namespace tauexc
