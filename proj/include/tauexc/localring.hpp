#pragma once

#include <cstdint>
#include <vector>

#include "tauexc/matrix.hpp"
#include "tauexc/module.hpp"

namespace tauexc {

// Dense univariate polynomials over F_p, lowest degree first.
namespace poly {

using Poly = std::vector<uint32_t>;

Poly trim(Poly f);
int deg(const Poly& f);  // -1 for zero
Poly add(const Poly& f, const Poly& g, uint32_t p);
Poly sub(const Poly& f, const Poly& g, uint32_t p);
Poly mul(const Poly& f, const Poly& g, uint32_t p);
Poly monic(const Poly& f, uint32_t p);
// division with remainder: f = q*g + r
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, uint32_t p);
Poly gcd(Poly f, Poly g, uint32_t p);
Poly deriv(const Poly& f, uint32_t p);
// product of the distinct irreducible factors
Poly radical(const Poly& f, uint32_t p);
bool is_irreducible(const Poly& f, uint32_t p);
Poly mod(const Poly& f, const Poly& g, uint32_t p);
// inverse of f modulo g (requires gcd(f,g) = 1)
Poly inv_mod(const Poly& f, const Poly& g, uint32_t p);
// all roots of f in F_p (each once), deterministic for a fixed seed
std::vector<uint32_t> roots(const Poly& f, uint32_t p, uint64_t seed);

}  // namespace poly

poly::Poly min_poly(const Matrix& a);
Matrix eval_poly(const poly::Poly& f, const Matrix& a);

// Jordan-Chevalley: the semisimple part s of a with a - s nilpotent,
// computed by Newton iteration inside F_p[a].
Matrix semisimple_part(const Matrix& a);

// Basis (as matrices on the total space) of the radical of the local algebra
// spanned by `basis`, which must act on a common space and contain the
// identity in its span. Valid whenever the spanned algebra is local.
std::vector<Matrix> local_radical(const std::vector<Matrix>& basis);

// Radical of End(m) for m indecomposable, as module endomorphisms.
std::vector<ModuleMap> rad_end_basis(const Module& m);

// Block-diagonal matrix of a module endomorphism.
Matrix flatten_endo(const ModuleMap& f);
ModuleMap unflatten_endo(const Module& m, const Matrix& big);

}  // namespace tauexc
