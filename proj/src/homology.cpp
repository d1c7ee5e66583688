#include "tauexc/homology.hpp"

#include <unordered_map>

#include "tauexc/rephom.hpp"

namespace tauexc {

namespace {

std::vector<SlotGenPair> arrow_gens(const Module& m, const Module& n) {
  std::vector<SlotGenPair> gens;
  const Algebra& a = *m.alg;
  for (int k = 0; k < int(a.quiver().arrows.size()); ++k) {
    const Arrow& ar = a.quiver().arrows[k];
    gens.push_back({ar.src, ar.tgt, m.arrow_maps[k], n.arrow_maps[k]});
  }
  return gens;
}

Matrix vec_of(const ModuleMap& f) {
  int total = 0;
  for (const Matrix& m : f.vertex_maps) total += m.rows() * m.cols();
  Matrix v(total, 1, f.source.alg->p());
  int at = 0;
  for (const Matrix& m : f.vertex_maps)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.set(at++, 0, m.at(i, j));
  return v;
}

}  // namespace

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
  auto sols = rep_hom_basis(m.dims, n.dims, arrow_gens(m, n), m.alg->p());
  std::vector<ModuleMap> out;
  for (auto& s : sols) out.push_back(ModuleMap{m, n, std::move(s)});
  return out;
}

int hom_dim(const Module& m, const Module& n) {
  return rep_hom_dim(m.dims, n.dims, arrow_gens(m, n), m.alg->p());
}

Cover projective_cover(const Module& m) {
  const Algebra& a = *m.alg;
  std::vector<Matrix> rad = radical_subspaces(m);
  std::vector<Summand> parts;
  std::vector<int> verts;
  std::vector<Matrix> gen_vectors;  // one column per generator, at verts[k]
  for (int v = 0; v < a.n(); ++v) {
    Matrix comp = complement_basis(rad[v], m.dims[v]);
    for (int j = 0; j < comp.cols(); ++j) {
      parts.push_back({standard_module(a, StandardKind::Projective, v), 1});
      verts.push_back(v);
      gen_vectors.push_back(comp.col(j));
    }
  }
  DirectSum ds = direct_sum(a, parts);
  ModuleMap cov = zero_map(ds.mod, m);
  for (size_t k = 0; k < verts.size(); ++k) {
    int v = verts[k];
    // component P_v -> m: path q from v to u goes to (action of q)(gen vector)
    std::vector<int> count(a.n(), 0);
    for (int pi : a.paths_from(v)) {
      const Path& q = a.paths()[pi];
      Matrix img = path_action(m, q) * gen_vectors[k];
      int col = ds.offsets[k][q.tgt] + count[q.tgt]++;
      for (int r = 0; r < m.dims[q.tgt]; ++r) cov.vertex_maps[q.tgt].set(r, col, img.at(r, 0));
    }
  }
  return {ds.mod, verts, cov};
}

Presentation min_presentation(const Module& m) {
  Cover c0 = projective_cover(m);
  SubQuotient ker = submodule(c0.p, kernel_subspaces(c0.map));
  Cover c1 = projective_cover(ker.mod);
  Presentation pres;
  pres.p0 = c0.p;
  pres.p0_verts = c0.verts;
  pres.p1 = c1.p;
  pres.p1_verts = c1.verts;
  pres.d = compose(ker.map, c1.map);
  pres.cover = c0.map;
  return pres;
}

int ext1_dim(const Module& m, const Module& n) {
  // from 0 -> K -> P0 -> M -> 0: Ext^1(M,N) = coker(Hom(P0,N) -> Hom(K,N))
  if (m.is_zero() || n.is_zero()) return 0;
  Cover c = projective_cover(m);
  SubQuotient k = submodule(c.p, kernel_subspaces(c.map));
  if (k.mod.is_zero()) return 0;
  int hk = hom_dim(k.mod, n);
  std::vector<ModuleMap> h0 = hom_basis(c.p, n);
  if (h0.empty()) return hk;
  Matrix cols(vec_of(compose(h0[0], k.map)).rows(), int(h0.size()), m.alg->p());
  for (size_t j = 0; j < h0.size(); ++j) {
    Matrix v = vec_of(compose(h0[j], k.map));
    for (int i = 0; i < v.rows(); ++i) cols.set(i, int(j), v.at(i, 0));
  }
  return hk - cols.rank();
}

int hom_tau_pairing(const Module& m, const Module& n) {
  // dim Hom(N, tau M) computed from a minimal presentation of M alone
  if (m.is_zero() || n.is_zero()) return 0;
  Presentation pres = min_presentation(m);
  if (pres.p1.is_zero()) return 0;
  int h1 = hom_dim(pres.p1, n);
  std::vector<ModuleMap> h0 = hom_basis(pres.p0, n);
  if (h0.empty()) return h1;
  Matrix cols(vec_of(compose(h0[0], pres.d)).rows(), int(h0.size()), m.alg->p());
  for (size_t j = 0; j < h0.size(); ++j) {
    Matrix v = vec_of(compose(h0[j], pres.d));
    for (int i = 0; i < v.rows(); ++i) cols.set(i, int(j), v.at(i, 0));
  }
  return h1 - cols.rank();
}

Module nu_projective(const Algebra& alg, int vertex) { return standard_module(alg, StandardKind::Injective, vertex); }

namespace {

// Injective I_v realized as the dual of the opposite projective at v, with a
// lookup from original path ids (paths u -> v) to basis positions.
struct InjBasis {
  Module mod;
  std::vector<std::unordered_map<int, int>> pos;  // per vertex u: path id -> row
};

InjBasis injective_with_basis(const Algebra& alg, int v) {
  InjBasis ib;
  ib.mod = standard_module(alg, StandardKind::Injective, v);
  ib.pos.assign(alg.n(), {});
  const Algebra& op = alg.op();
  std::vector<int> count(alg.n(), 0);
  for (int opi : op.paths_from(v)) {
    const Path& q = op.paths()[opi];
    int u = q.tgt;  // original source
    int orig;
    if (q.arrows.empty()) {
      orig = alg.trivial_path(v);
    } else {
      std::vector<int> rev(q.arrows.rbegin(), q.arrows.rend());
      orig = alg.path_index(rev);
    }
    ib.pos[u][orig] = count[u]++;
  }
  return ib;
}

}  // namespace

Module tau(const Module& m) {
  const Algebra& a = *m.alg;
  if (m.is_zero()) return Module::zero(a);
  Presentation pres = min_presentation(m);
  if (pres.p1.is_zero()) return Module::zero(a);  // m projective

  // components d_{gh}: coefficients over paths v_g -> w_h, read off the image
  // of the h-th canonical generator
  int n0 = int(pres.p0_verts.size()), n1 = int(pres.p1_verts.size());
  DirectSum ds0 = direct_sum(a, [&] {
    std::vector<Summand> s;
    for (int v : pres.p0_verts) s.push_back({standard_module(a, StandardKind::Projective, v), 1});
    return s;
  }());
  DirectSum ds1 = direct_sum(a, [&] {
    std::vector<Summand> s;
    for (int v : pres.p1_verts) s.push_back({standard_module(a, StandardKind::Projective, v), 1});
    return s;
  }());

  // coeff[g][h]: map path id (v_g -> w_h) -> coefficient
  std::vector<std::vector<std::unordered_map<int, uint32_t>>> coeff(
      n0, std::vector<std::unordered_map<int, uint32_t>>(n1));
  for (int h = 0; h < n1; ++h) {
    int w = pres.p1_verts[h];
    int gen_col = ds1.offsets[h][w];  // trivial path is first in the block
    const Matrix& dw = pres.d.vertex_maps[w];
    for (int g = 0; g < n0; ++g) {
      int vg = pres.p0_verts[g];
      const std::vector<int>& qs = a.paths_between(vg, w);
      for (size_t qi = 0; qi < qs.size(); ++qi) {
        uint32_t c = dw.at(ds0.offsets[g][w] + int(qi), gen_col);
        if (c) coeff[g][h][qs[qi]] = c;
      }
    }
  }

  std::vector<InjBasis> inj0, inj1;
  for (int v : pres.p0_verts) inj0.push_back(injective_with_basis(a, v));
  for (int w : pres.p1_verts) inj1.push_back(injective_with_basis(a, w));
  std::vector<Summand> s0, s1;
  for (auto& ib : inj0) s0.push_back({ib.mod, 1});
  for (auto& ib : inj1) s1.push_back({ib.mod, 1});
  DirectSum nu0 = direct_sum(a, s0);
  DirectSum nu1 = direct_sum(a, s1);

  // nu(d): nu(P1) -> nu(P0); block (g,h) at vertex u has entry
  // [r: u->v_g][s: u->w_h] = sum_q coeff_q [r.q == s]
  ModuleMap nud = zero_map(nu1.mod, nu0.mod);
  for (int u = 0; u < a.n(); ++u) {
    Matrix& mat = nud.vertex_maps[u];
    for (int g = 0; g < n0; ++g) {
      int vg = pres.p0_verts[g];
      for (int h = 0; h < n1; ++h) {
        for (const auto& [qid, c] : coeff[g][h]) {
          const Path& q = a.paths()[qid];
          for (int rid : a.paths_between(u, vg)) {
            std::vector<int> rq = a.paths()[rid].arrows;
            rq.insert(rq.end(), q.arrows.begin(), q.arrows.end());
            int sid = rq.empty() ? a.trivial_path(u) : a.path_index(rq);
            if (sid < 0) continue;
            int row = nu0.offsets[g][u] + inj0[g].pos[u].at(rid);
            int col = nu1.offsets[h][u] + inj1[h].pos[u].at(sid);
            mat.add_at(row, col, c);
          }
        }
      }
    }
  }
  // tau(m) = ker(nu d), a submodule of nu(P1)
  return submodule(nu1.mod, kernel_subspaces(nud)).mod;
}

Module tau_inv(const Module& m) {
  Module d = dualize(m);
  Module t = tau(d);
  Module back = dualize(t);
  // dualize lands over op(op(alg)) which is the original algebra object
  return back;
}

std::vector<Matrix> trace_subspaces(const std::vector<Module>& gens, const Module& x) {
  const Algebra& a = *x.alg;
  std::vector<Matrix> tr(a.n());
  for (int v = 0; v < a.n(); ++v) tr[v] = Matrix(x.dims[v], 0, a.p());
  for (const Module& g : gens) {
    if (g.is_zero()) continue;
    for (const ModuleMap& f : hom_basis(g, x))
      for (int v = 0; v < a.n(); ++v) tr[v] = span_sum(tr[v], col_basis(f.vertex_maps[v]));
  }
  return tr;
}

Module tf_part(const std::vector<Module>& gens, const Module& x) { return quotient(x, trace_subspaces(gens, x)).mod; }

SubQuotient reject(const std::vector<Module>& gens, const Module& x) {
  const Algebra& a = *x.alg;
  std::vector<Matrix> stacked(a.n());
  for (int v = 0; v < a.n(); ++v) stacked[v] = Matrix(0, x.dims[v], a.p());
  for (const Module& g : gens) {
    if (g.is_zero()) continue;
    for (const ModuleMap& f : hom_basis(x, g))
      for (int v = 0; v < a.n(); ++v) stacked[v] = Matrix::vcat(stacked[v], f.vertex_maps[v]);
  }
  std::vector<Matrix> ker(a.n());
  for (int v = 0; v < a.n(); ++v) ker[v] = stacked[v].kernel();
  return submodule(x, ker);
}

bool gen_contains(const std::vector<Module>& gens, const Module& x) {
  if (x.is_zero()) return true;
  std::vector<Matrix> tr = trace_subspaces(gens, x);
  for (int v = 0; v < x.alg->n(); ++v)
    if (tr[v].cols() != x.dims[v]) return false;
  return true;
}

bool cogen_contains(const std::vector<Module>& gens, const Module& x) {
  if (x.is_zero()) return true;
  return reject(gens, x).mod.is_zero();
}

}  // namespace tauexc
