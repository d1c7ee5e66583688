#include "tauexc/decompose.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tauexc/homology.hpp"
#include "tauexc/localring.hpp"

namespace tauexc {

namespace {

constexpr int kEndoSamples = 32;
constexpr int kIsoSamples = 64;

ModuleMap random_combo(const std::vector<ModuleMap>& basis, std::mt19937_64& rng, uint32_t p) {
  ModuleMap f = map_scale(basis[0], 0);
  std::uniform_int_distribution<uint32_t> dist(0, p - 1);
  for (const ModuleMap& b : basis) f = map_add(f, map_scale(b, dist(rng)));
  return f;
}

uint64_t pow2_at_least(uint64_t n) {
  uint64_t e = 1;
  while (e < n) e <<= 1;
  return e;
}

void decompose_rec(const Module& m, std::mt19937_64& rng, std::vector<Module>& out) {
  if (m.is_zero()) return;
  std::vector<ModuleMap> endos = hom_basis(m, m);
  if (endos.size() == 1) {
    out.push_back(m);
    return;
  }
  uint32_t p = m.alg->p();
  int dim = m.total_dim();
  uint64_t nil_pow = pow2_at_least(uint64_t(dim));
  for (int trial = 0; trial < kEndoSamples; ++trial) {
    ModuleMap e = random_combo(endos, rng, p);
    Matrix flat = flatten_endo(e);
    // Fitting split along each F_p-eigenvalue of the sampled endomorphism
    poly::Poly rad = poly::radical(min_poly(flat), p);
    for (uint32_t lam : poly::roots(rad, p, rng())) {
      Matrix shifted = flat - Matrix::identity(dim, p).scaled(lam);
      Matrix big = shifted.pow(nil_pow);
      int r = big.rank();
      if (r == 0 || r == dim) continue;
      ModuleMap stab = unflatten_endo(m, big);
      SubQuotient ker = submodule(m, kernel_subspaces(stab));
      SubQuotient img = submodule(m, image_subspaces(stab));
      decompose_rec(ker.mod, rng, out);
      decompose_rec(img.mod, rng, out);
      return;
    }
  }
  out.push_back(m);  // every sample was scalar + nilpotent
}

}  // namespace

std::vector<Summand> decompose(const Module& m, uint64_t seed) {
  std::mt19937_64 rng(m.hash() ^ (seed * 0x9e3779b97f4a7c15ull) ^ 0x5bf03635ull);
  std::vector<Module> parts;
  decompose_rec(m, rng, parts);
  std::sort(parts.begin(), parts.end(), [](const Module& a, const Module& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    if (a.dims != b.dims) return a.dims < b.dims;
    return a.hash() < b.hash();
  });
  std::vector<Summand> grouped;
  for (const Module& part : parts) {
    bool merged = false;
    for (Summand& s : grouped)
      if (is_isomorphic(s.mod, part, seed)) {
        ++s.mult;
        merged = true;
        break;
      }
    if (!merged) grouped.push_back({part, 1});
  }
  return grouped;
}

bool is_indecomposable(const Module& m, uint64_t seed) {
  if (m.is_zero()) return false;
  std::vector<Summand> parts = decompose(m, seed);
  return parts.size() == 1 && parts[0].mult == 1;
}

bool is_isomorphic(const Module& m, const Module& n, uint64_t seed) {
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  int hmn = hom_dim(m, n);
  if (hmn == 0) return false;
  if (hmn != hom_dim(n, m) || hmn != hom_dim(m, m)) return false;
  std::vector<ModuleMap> basis = hom_basis(m, n);
  for (const ModuleMap& f : basis)
    if (f.is_iso()) return true;
  std::mt19937_64 rng(m.hash() ^ (n.hash() << 1) ^ (seed * 0x9e3779b97f4a7c15ull));
  for (int trial = 0; trial < kIsoSamples; ++trial)
    if (random_combo(basis, rng, m.alg->p()).is_iso()) return true;
  return false;
}

Module beta(const Module& m, uint64_t seed) {
  if (!is_indecomposable(m, seed)) throw std::invalid_argument("beta: module must be indecomposable");
  const Algebra& a = *m.alg;
  std::vector<Matrix> span(a.n());
  for (int v = 0; v < a.n(); ++v) span[v] = Matrix(m.dims[v], 0, a.p());
  for (const ModuleMap& f : rad_end_basis(m))
    for (int v = 0; v < a.n(); ++v) span[v] = span_sum(span[v], col_basis(f.vertex_maps[v]));
  return quotient(m, span).mod;
}

bool is_brick(const Module& m) { return !m.is_zero() && hom_dim(m, m) == 1; }

}  // namespace tauexc
