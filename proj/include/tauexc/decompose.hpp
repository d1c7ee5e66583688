#pragma once

#include <vector>

#include "tauexc/module.hpp"

namespace tauexc {

// Krull-Schmidt decomposition via Fitting splittings of sampled endomorphisms.
// Deterministic for a fixed seed; parts are sorted by (dim, dims, hash).
std::vector<Summand> decompose(const Module& m, uint64_t seed = 0);

bool is_indecomposable(const Module& m, uint64_t seed = 0);

bool is_isomorphic(const Module& m, const Module& n, uint64_t seed = 0);

// Brick quotient beta(M) = M / sum of images of non-invertible endomorphisms.
Module beta(const Module& m, uint64_t seed = 0);

bool is_brick(const Module& m);

}  // namespace tauexc
