#pragma once

#include <vector>

#include "tauexc/module.hpp"

namespace tauexc {

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);
int ext1_dim(const Module& m, const Module& n);
// dim Hom(N, tau M) via the presentation cokernel (AR pairing)
int hom_tau_pairing(const Module& m, const Module& n);

// Minimal projective presentation P1 -> P0 -> M -> 0.
struct Presentation {
  Module p1, p0;
  std::vector<int> p1_verts, p0_verts;  // projective summands, with multiplicity
  ModuleMap d;                          // P1 -> P0
  ModuleMap cover;                      // P0 -> M
};

Presentation min_presentation(const Module& m);

// Projective cover of M (the P0 part of the presentation).
struct Cover {
  Module p;
  std::vector<int> verts;
  ModuleMap map;
};
Cover projective_cover(const Module& m);

// AR translate and its inverse. Projective (resp. injective) summands are
// dropped; the result is returned as a plain module (not decomposed).
Module tau(const Module& m);
Module tau_inv(const Module& m);

// Nakayama on objects: nu(P_v) = I_v.
Module nu_projective(const Algebra& alg, int vertex);

// Trace of add(gens) in x, as arrow-stable subspaces.
std::vector<Matrix> trace_subspaces(const std::vector<Module>& gens, const Module& x);
// Torsion-free part f_gens(x) = x / trace.
Module tf_part(const std::vector<Module>& gens, const Module& x);
// Reject: t_gens(x) = intersection of kernels of all maps x -> gens.
SubQuotient reject(const std::vector<Module>& gens, const Module& x);

bool gen_contains(const std::vector<Module>& gens, const Module& x);    // x in Gen(+gens)
bool cogen_contains(const std::vector<Module>& gens, const Module& x);  // x in Cogen(+gens)

}  // namespace tauexc
