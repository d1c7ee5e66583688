#pragma once

#include <string>
#include <vector>

#include "tauexc/algebra.hpp"
#include "tauexc/matrix.hpp"

namespace tauexc {

// A finite-dimensional representation: one space per vertex, one matrix per
// arrow (tgt-dim x src-dim, acting on column vectors at the source).
struct Module {
  const Algebra* alg = nullptr;
  std::vector<int> dims;
  std::vector<Matrix> arrow_maps;
  std::string name;

  static Module zero(const Algebra& a);

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  bool relations_hold() const;
  uint64_t hash() const;
  std::string dim_string() const;
};

struct ModuleMap {
  Module source, target;
  std::vector<Matrix> vertex_maps;  // target.dims[v] x source.dims[v]

  bool commutes() const;
  bool is_zero() const;
  bool is_iso() const;
  int rank() const;
};

enum class StandardKind { Projective, Injective, Simple };

Module standard_module(const Algebra& alg, StandardKind kind, int vertex);

// Matrix of the action of a path: M.dims[tgt] x M.dims[src].
Matrix path_action(const Module& m, const Path& path);

struct Summand {
  Module mod;
  int mult;
};

struct DirectSum {
  Module mod;
  // offsets[k][v]: where summand k starts inside vertex space v
  std::vector<std::vector<int>> offsets;
  std::vector<Module> parts;  // flattened, one entry per copy
};

DirectSum direct_sum(const Algebra& alg, const std::vector<Summand>& parts);

ModuleMap identity_map(const Module& m);
ModuleMap zero_map(const Module& src, const Module& tgt);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap map_add(const ModuleMap& a, const ModuleMap& b);
ModuleMap map_scale(const ModuleMap& a, uint32_t c);

// Submodule spanned by the given per-vertex subspaces (must be arrow-stable;
// use submodule_closure to saturate first). Returns the module and inclusion.
struct SubQuotient {
  Module mod;
  ModuleMap map;  // inclusion into resp. projection from the ambient module
};

std::vector<Matrix> submodule_closure(const Module& m, std::vector<Matrix> spans);
SubQuotient submodule(const Module& m, const std::vector<Matrix>& spans);
SubQuotient quotient(const Module& m, const std::vector<Matrix>& spans);

std::vector<Matrix> kernel_subspaces(const ModuleMap& f);
std::vector<Matrix> image_subspaces(const ModuleMap& f);

// Duality with the opposite algebra: dualize(m) is a module over m.alg->op().
Module dualize(const Module& m);
ModuleMap dualize(const ModuleMap& f);  // contravariant

std::vector<Matrix> radical_subspaces(const Module& m);
std::vector<Matrix> socle_subspaces(const Module& m);
SubQuotient top_of(const Module& m);

}  // namespace tauexc
