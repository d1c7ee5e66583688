#pragma once

#include <vector>

#include "tauexc/matrix.hpp"

namespace tauexc {

// Morphism spaces between "slotted representations": vector spaces indexed by
// slots with generator-labelled linear maps between them. Quiver modules and
// modules over the transport algebra both lower to this shape.
struct SlotGenPair {
  int from = 0, to = 0;
  Matrix a;  // action on the source representation
  Matrix b;  // action on the target representation
};

// Basis of { F : F_to * a = b * F_from for every generator }.
// Each solution is one matrix per slot (dimsB[s] x dimsA[s]).
std::vector<std::vector<Matrix>> rep_hom_basis(const std::vector<int>& dims_a, const std::vector<int>& dims_b,
                                               const std::vector<SlotGenPair>& gens, uint32_t p);

int rep_hom_dim(const std::vector<int>& dims_a, const std::vector<int>& dims_b,
                const std::vector<SlotGenPair>& gens, uint32_t p);

}  // namespace tauexc
