#include "tauexc/module.hpp"

#include <sstream>
#include <stdexcept>

namespace tauexc {

Module Module::zero(const Algebra& a) {
  Module m;
  m.alg = &a;
  m.dims.assign(a.n(), 0);
  for (size_t k = 0; k < a.quiver().arrows.size(); ++k) m.arrow_maps.push_back(Matrix(0, 0, a.p()));
  m.name = "0";
  return m;
}

int Module::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

bool Module::relations_hold() const {
  for (const auto& rel : alg->relations()) {
    Path p;
    p.src = alg->quiver().arrows[rel.front()].src;
    p.tgt = alg->quiver().arrows[rel.back()].tgt;
    p.arrows = rel;
    if (!path_action(*this, p).is_zero()) return false;
  }
  return true;
}

uint64_t Module::hash() const {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(alg->hash());
  for (int d : dims) mix(uint64_t(d));
  for (const Matrix& m : arrow_maps) mix(m.hash());
  return h;
}

std::string Module::dim_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out << ",";
    out << dims[i];
  }
  out << ")";
  return out.str();
}

bool ModuleMap::commutes() const {
  const Algebra& a = *source.alg;
  for (int k = 0; k < int(a.quiver().arrows.size()); ++k) {
    const Arrow& ar = a.quiver().arrows[k];
    Matrix lhs = vertex_maps[ar.tgt] * source.arrow_maps[k];
    Matrix rhs = target.arrow_maps[k] * vertex_maps[ar.src];
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool ModuleMap::is_zero() const {
  for (const Matrix& m : vertex_maps)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMap::is_iso() const {
  for (size_t v = 0; v < vertex_maps.size(); ++v) {
    if (vertex_maps[v].rows() != vertex_maps[v].cols()) return false;
    if (vertex_maps[v].rank() != vertex_maps[v].rows()) return false;
  }
  return true;
}

int ModuleMap::rank() const {
  int r = 0;
  for (const Matrix& m : vertex_maps) r += m.rank();
  return r;
}

Matrix path_action(const Module& m, const Path& path) {
  const Algebra& a = *m.alg;
  Matrix cur = Matrix::identity(m.dims[path.src], a.p());
  for (int ai : path.arrows) cur = m.arrow_maps[ai] * cur;
  return cur;
}

Module standard_module(const Algebra& alg, StandardKind kind, int vertex) {
  if (vertex < 0 || vertex >= alg.n()) throw AlgebraError("standard_module: bad vertex");
  if (kind == StandardKind::Simple) {
    Module m = Module::zero(alg);
    m.dims[vertex] = 1;
    for (int k = 0; k < int(alg.quiver().arrows.size()); ++k) {
      const Arrow& ar = alg.quiver().arrows[k];
      m.arrow_maps[k] = Matrix(m.dims[ar.tgt], m.dims[ar.src], alg.p());
    }
    m.name = "";
    return m;
  }
  if (kind == StandardKind::Injective) {
    Module pv = standard_module(alg.op(), StandardKind::Projective, vertex);
    return dualize(pv);
  }
  // projective at `vertex`: basis = relation-free paths starting there
  Module m;
  m.alg = &alg;
  m.dims.assign(alg.n(), 0);
  const std::vector<int>& basis = alg.paths_from(vertex);
  std::vector<int> pos_in_vertex(alg.paths().size(), -1);
  for (int pi : basis) {
    pos_in_vertex[pi] = m.dims[alg.paths()[pi].tgt]++;
  }
  for (int k = 0; k < int(alg.quiver().arrows.size()); ++k) {
    const Arrow& ar = alg.quiver().arrows[k];
    Matrix mat(m.dims[ar.tgt], m.dims[ar.src], alg.p());
    for (int pi : basis) {
      const Path& p = alg.paths()[pi];
      if (p.tgt != ar.src) continue;
      std::vector<int> ext = p.arrows;
      ext.push_back(k);
      int qi = alg.path_index(ext);
      if (qi >= 0) mat.set(pos_in_vertex[qi], pos_in_vertex[pi], 1);
    }
    m.arrow_maps.push_back(mat);
  }
  return m;
}

DirectSum direct_sum(const Algebra& alg, const std::vector<Summand>& parts) {
  DirectSum out;
  Module m;
  m.alg = &alg;
  m.dims.assign(alg.n(), 0);
  for (const Summand& s : parts)
    for (int c = 0; c < s.mult; ++c) {
      out.offsets.push_back(std::vector<int>(alg.n()));
      for (int v = 0; v < alg.n(); ++v) {
        out.offsets.back()[v] = m.dims[v];
        m.dims[v] += s.mod.dims[v];
      }
      out.parts.push_back(s.mod);
    }
  for (int k = 0; k < int(alg.quiver().arrows.size()); ++k) {
    const Arrow& ar = alg.quiver().arrows[k];
    Matrix mat(m.dims[ar.tgt], m.dims[ar.src], alg.p());
    for (size_t i = 0; i < out.parts.size(); ++i)
      mat.set_block(out.offsets[i][ar.tgt], out.offsets[i][ar.src], out.parts[i].arrow_maps[k]);
    m.arrow_maps.push_back(mat);
  }
  out.mod = m;
  return out;
}

ModuleMap identity_map(const Module& m) {
  ModuleMap f{m, m, {}};
  for (int v = 0; v < m.alg->n(); ++v) f.vertex_maps.push_back(Matrix::identity(m.dims[v], m.alg->p()));
  return f;
}

ModuleMap zero_map(const Module& src, const Module& tgt) {
  ModuleMap f{src, tgt, {}};
  for (int v = 0; v < src.alg->n(); ++v) f.vertex_maps.push_back(Matrix(tgt.dims[v], src.dims[v], src.alg->p()));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h{f.source, g.target, {}};
  for (size_t v = 0; v < f.vertex_maps.size(); ++v) h.vertex_maps.push_back(g.vertex_maps[v] * f.vertex_maps[v]);
  return h;
}

ModuleMap map_add(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap h{a.source, a.target, {}};
  for (size_t v = 0; v < a.vertex_maps.size(); ++v) h.vertex_maps.push_back(a.vertex_maps[v] + b.vertex_maps[v]);
  return h;
}

ModuleMap map_scale(const ModuleMap& a, uint32_t c) {
  ModuleMap h{a.source, a.target, {}};
  for (const Matrix& m : a.vertex_maps) h.vertex_maps.push_back(m.scaled(c));
  return h;
}

std::vector<Matrix> submodule_closure(const Module& m, std::vector<Matrix> spans) {
  const Algebra& a = *m.alg;
  for (int v = 0; v < a.n(); ++v) spans[v] = col_basis(spans[v]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < int(a.quiver().arrows.size()); ++k) {
      const Arrow& ar = a.quiver().arrows[k];
      if (spans[ar.src].cols() == 0) continue;
      Matrix img = m.arrow_maps[k] * spans[ar.src];
      Matrix grown = span_sum(spans[ar.tgt], img);
      if (grown.cols() != spans[ar.tgt].cols()) {
        spans[ar.tgt] = grown;
        changed = true;
      }
    }
  }
  return spans;
}

SubQuotient submodule(const Module& m, const std::vector<Matrix>& spans) {
  const Algebra& a = *m.alg;
  std::vector<Matrix> basis(a.n());
  for (int v = 0; v < a.n(); ++v) basis[v] = col_basis(spans[v]);
  Module s;
  s.alg = &a;
  s.dims.resize(a.n());
  for (int v = 0; v < a.n(); ++v) s.dims[v] = basis[v].cols();
  for (int k = 0; k < int(a.quiver().arrows.size()); ++k) {
    const Arrow& ar = a.quiver().arrows[k];
    Matrix img = m.arrow_maps[k] * basis[ar.src];
    auto coords = basis[ar.tgt].solve(img);
    if (!coords) throw std::logic_error("submodule: spans not arrow-stable");
    s.arrow_maps.push_back(*coords);
  }
  ModuleMap incl{s, m, {}};
  for (int v = 0; v < a.n(); ++v) incl.vertex_maps.push_back(basis[v]);
  return {s, incl};
}

SubQuotient quotient(const Module& m, const std::vector<Matrix>& spans) {
  const Algebra& a = *m.alg;
  Module q;
  q.alg = &a;
  q.dims.resize(a.n());
  std::vector<Matrix> proj(a.n());
  for (int v = 0; v < a.n(); ++v) {
    Matrix basis = col_basis(spans[v]);
    // rows of the cokernel: kernel of basis^T x = 0 gives functionals vanishing
    // on the subspace; their matrix is the projection.
    Matrix funcs = basis.transpose().kernel();  // dims[v] x codim
    proj[v] = funcs.transpose();                // codim x dims[v]
    q.dims[v] = proj[v].rows();
  }
  // section: choose right inverse of proj to transport arrow maps
  std::vector<Matrix> sect(a.n());
  for (int v = 0; v < a.n(); ++v) {
    auto s = proj[v].solve(Matrix::identity(q.dims[v], a.p()));
    if (!s) throw std::logic_error("quotient: projection not surjective");
    sect[v] = *s;
  }
  for (int k = 0; k < int(a.quiver().arrows.size()); ++k) {
    const Arrow& ar = a.quiver().arrows[k];
    q.arrow_maps.push_back(proj[ar.tgt] * m.arrow_maps[k] * sect[ar.src]);
  }
  ModuleMap pr{m, q, proj};
  return {q, pr};
}

std::vector<Matrix> kernel_subspaces(const ModuleMap& f) {
  std::vector<Matrix> out;
  for (const Matrix& m : f.vertex_maps) out.push_back(m.kernel());
  return out;
}

std::vector<Matrix> image_subspaces(const ModuleMap& f) {
  std::vector<Matrix> out;
  for (const Matrix& m : f.vertex_maps) out.push_back(col_basis(m));
  return out;
}

Module dualize(const Module& m) {
  const Algebra& opa = m.alg->op();
  Module d;
  d.alg = &opa;
  d.dims = m.dims;
  for (const Matrix& mat : m.arrow_maps) d.arrow_maps.push_back(mat.transpose());
  return d;
}

ModuleMap dualize(const ModuleMap& f) {
  ModuleMap d{dualize(f.target), dualize(f.source), {}};
  for (const Matrix& m : f.vertex_maps) d.vertex_maps.push_back(m.transpose());
  return d;
}

std::vector<Matrix> radical_subspaces(const Module& m) {
  const Algebra& a = *m.alg;
  std::vector<Matrix> rad(a.n());
  for (int v = 0; v < a.n(); ++v) rad[v] = Matrix(m.dims[v], 0, a.p());
  for (int k = 0; k < int(a.quiver().arrows.size()); ++k) {
    const Arrow& ar = a.quiver().arrows[k];
    rad[ar.tgt] = span_sum(rad[ar.tgt], col_basis(m.arrow_maps[k]));
  }
  return rad;
}

std::vector<Matrix> socle_subspaces(const Module& m) {
  const Algebra& a = *m.alg;
  std::vector<Matrix> soc(a.n());
  for (int v = 0; v < a.n(); ++v) {
    Matrix stacked(0, m.dims[v], a.p());
    for (int k = 0; k < int(a.quiver().arrows.size()); ++k)
      if (a.quiver().arrows[k].src == v) stacked = Matrix::vcat(stacked, m.arrow_maps[k]);
    soc[v] = stacked.kernel();
  }
  return soc;
}

SubQuotient top_of(const Module& m) { return quotient(m, radical_subspaces(m)); }

}  // namespace tauexc
