#pragma once

#include "tauexc/context.hpp"

namespace tauexc {

// Torsion(-free) classes are member-set computations inside a context; no
// infinite object is ever represented.
struct TorsionData {
  std::vector<int> members;     // sorted member ids
  bool torsion_free = false;
  std::vector<int> generators;  // the set it was generated from
  bool exact = false;
  int bound = 0;
};

bool is_tau_rigid(const Ctx& ctx, int member);
bool is_tau_inv_rigid(const Ctx& ctx, int member);
// all single members rigid and all pairs compatible
bool is_tau_rigid_set(const Ctx& ctx, const std::vector<int>& mods);

// {X in ctx : Hom(X, tau_ctx m) = 0}, a torsion class
std::vector<int> perp_tau(const Ctx& ctx, int m);
std::vector<int> perp_tau_set(const Ctx& ctx, const std::vector<int>& mods);
// {X in ctx : Hom(tau_ctx^{-1} n, X) = 0}, a torsion-free class
std::vector<int> coperp_tau_inv(const Ctx& ctx, int n);
std::vector<int> coperp_tau_inv_set(const Ctx& ctx, const std::vector<int>& mods);

bool in_gen(const Ctx& ctx, const std::vector<int>& gens, int x);
bool in_cogen(const Ctx& ctx, const std::vector<int>& gens, int x);
std::vector<int> gen_class(const Ctx& ctx, const std::vector<int>& gens);
std::vector<int> cogen_class(const Ctx& ctx, const std::vector<int>& gens);

TorsionData filt_gen(const Ctx& ctx, const std::vector<int>& gens);
TorsionData filt_cogen(const Ctx& ctx, const std::vector<int>& gens);

std::vector<int> ext_projectives(const Ctx& ctx, const std::vector<int>& cls);
std::vector<int> ext_injectives(const Ctx& ctx, const std::vector<int>& cls);

struct SplitParts {
  std::vector<int> split, non_split;
};
SplitParts split_ext_projectives(const Ctx& ctx, const std::vector<int>& cls);
SplitParts split_ext_injectives(const Ctx& ctx, const std::vector<int>& cls);

std::vector<int> bongartz(const Ctx& ctx, const std::vector<int>& mods);
std::vector<int> cobongartz(const Ctx& ctx, const std::vector<int>& mods);

struct FFStatus {
  enum Kind { FunctoriallyFinite, NotFFEvidence, Unknown } kind = Unknown;
  std::vector<int> witness;
  int bound = 0;
};
FFStatus ff_status(const Ctx& ctx, const TorsionData& t);

// rank-two only: the indecomposable generator-cogenerator of Filt(S_v)
Module serre_generator(const Ctx& ctx, int vertex);

// support tau-rigid objects
bool is_support_rigid(const Ctx& ctx, const StableObject& u);
std::vector<StableObject> sttilt_all(const Ctx& ctx);

struct SttiltGraph {
  std::vector<StableObject> vertices;
  struct Edge {
    int src, tgt;
    int brick;  // member id of the labelling brick
  };
  std::vector<Edge> edges;
  bool exact = false;
  int bound = 0;
};
SttiltGraph sttilt_hasse(const Ctx& ctx);

// tau-perpendicular subcategories inside a context
Ctx j_of(const Ctx& ctx, const StableObject& u);
Ctx jd_of(const Ctx& ctx, const StableObject& v);

// the context's own projectives/injectives/simples as member sets
const std::vector<int>& rel_projectives(const Ctx& ctx);
const std::vector<int>& rel_injectives(const Ctx& ctx);

int weak_components(int nverts, const std::vector<std::pair<int, int>>& edges);

}  // namespace tauexc
