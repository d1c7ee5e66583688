#include "tauexc/torsion.hpp"

#include <algorithm>
#include <stdexcept>

#include "tauexc/decompose.hpp"
#include "tauexc/homology.hpp"

namespace tauexc {

namespace {

int hom_members(const Inventory& inv, int i, const Module& target, int target_member) {
  if (target_member >= 0) return inv.hom(i, target_member);
  if (target.is_zero()) return 0;
  return hom_dim(inv[i], target);
}

std::vector<Module> modules_of(const Ctx& ctx, const std::vector<int>& ids) {
  std::vector<Module> ms;
  for (int i : ids) ms.push_back(ctx->mod(i));
  return ms;
}

}  // namespace

bool is_tau_rigid(const Ctx& ctx, int member) {
  auto it = ctx->rigid_cache.find(member);
  if (it != ctx->rigid_cache.end()) return it->second;
  bool r;
  if (ctx->whole_cat) {
    r = ctx->inv->tau_rigid(member);
  } else {
    r = true;
    for (int j : ctx->members)
      if (ctx->inv->gen_pair(member, j) && ctx->inv->ext(member, j) != 0) {
        r = false;
        break;
      }
  }
  ctx->rigid_cache[member] = r;
  return r;
}

bool is_tau_inv_rigid(const Ctx& ctx, int member) {
  auto it = ctx->corigid_cache.find(member);
  if (it != ctx->corigid_cache.end()) return it->second;
  bool r;
  if (ctx->whole_cat) {
    const TauInfo& ti = ctx->inv->tau_inv_of(member);
    r = ti.value.is_zero() || hom_dim(ti.value, (*ctx->inv)[member]) == 0;
  } else {
    r = true;
    for (int j : ctx->members)
      if (ctx->inv->cogen_pair(member, j) && ctx->inv->ext(j, member) != 0) {
        r = false;
        break;
      }
  }
  ctx->corigid_cache[member] = r;
  return r;
}

std::vector<int> perp_tau(const Ctx& ctx, int m) {
  auto it = ctx->perp_tau_cache.find(m);
  if (it != ctx->perp_tau_cache.end()) return it->second;
  std::vector<int> out;
  if (ctx->whole_cat) {
    const TauInfo& ti = ctx->inv->tau_of(m);
    for (int x : ctx->members)
      if (ti.value.is_zero() || hom_members(*ctx->inv, x, ti.value, ti.member) == 0) out.push_back(x);
  } else {
    for (int x : ctx->members) {
      bool ok = true;
      for (int j : ctx->members)
        if (ctx->inv->gen_pair(x, j) && ctx->inv->ext(m, j) != 0) {
          ok = false;
          break;
        }
      if (ok) out.push_back(x);
    }
  }
  ctx->perp_tau_cache[m] = out;
  return out;
}

std::vector<int> perp_tau_set(const Ctx& ctx, const std::vector<int>& mods) {
  std::vector<int> out = ctx->members;
  for (int m : mods) {
    std::vector<int> p = perp_tau(ctx, m), merged;
    std::set_intersection(out.begin(), out.end(), p.begin(), p.end(), std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

std::vector<int> coperp_tau_inv(const Ctx& ctx, int n) {
  auto it = ctx->coperp_cache.find(n);
  if (it != ctx->coperp_cache.end()) return it->second;
  std::vector<int> out;
  if (ctx->whole_cat) {
    const TauInfo& ti = ctx->inv->tau_inv_of(n);
    for (int x : ctx->members) {
      int h;
      if (ti.value.is_zero())
        h = 0;
      else if (ti.member >= 0)
        h = ctx->inv->hom(ti.member, x);
      else
        h = hom_dim(ti.value, (*ctx->inv)[x]);
      if (h == 0) out.push_back(x);
    }
  } else {
    for (int x : ctx->members) {
      bool ok = true;
      for (int j : ctx->members)
        if (ctx->inv->cogen_pair(x, j) && ctx->inv->ext(j, n) != 0) {
          ok = false;
          break;
        }
      if (ok) out.push_back(x);
    }
  }
  ctx->coperp_cache[n] = out;
  return out;
}

std::vector<int> coperp_tau_inv_set(const Ctx& ctx, const std::vector<int>& mods) {
  std::vector<int> out = ctx->members;
  for (int m : mods) {
    std::vector<int> p = coperp_tau_inv(ctx, m), merged;
    std::set_intersection(out.begin(), out.end(), p.begin(), p.end(), std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

bool is_tau_rigid_set(const Ctx& ctx, const std::vector<int>& mods) {
  for (int m : mods)
    if (!is_tau_rigid(ctx, m)) return false;
  for (size_t a = 0; a < mods.size(); ++a)
    for (size_t b = a + 1; b < mods.size(); ++b) {
      std::vector<int> pa = perp_tau(ctx, mods[a]);
      std::vector<int> pb = perp_tau(ctx, mods[b]);
      if (!std::binary_search(pa.begin(), pa.end(), mods[b])) return false;
      if (!std::binary_search(pb.begin(), pb.end(), mods[a])) return false;
    }
  return true;
}

bool in_gen(const Ctx& ctx, const std::vector<int>& gens, int x) {
  if (gens.size() == 1) return ctx->inv->gen_pair(gens[0], x);
  return gen_contains(modules_of(ctx, gens), ctx->mod(x));
}

bool in_cogen(const Ctx& ctx, const std::vector<int>& gens, int x) {
  if (gens.size() == 1) return ctx->inv->cogen_pair(gens[0], x);
  return cogen_contains(modules_of(ctx, gens), ctx->mod(x));
}

std::vector<int> gen_class(const Ctx& ctx, const std::vector<int>& gens) {
  std::vector<int> out;
  for (int x : ctx->members)
    if (in_gen(ctx, gens, x)) out.push_back(x);
  return out;
}

std::vector<int> cogen_class(const Ctx& ctx, const std::vector<int>& gens) {
  std::vector<int> out;
  for (int x : ctx->members)
    if (in_cogen(ctx, gens, x)) out.push_back(x);
  return out;
}

TorsionData filt_gen(const Ctx& ctx, const std::vector<int>& gens) {
  // smallest torsion class containing gens, as perp(gens-perp) over members
  std::vector<int> right;
  for (int y : ctx->members) {
    bool ok = true;
    for (int g : gens)
      if (ctx->inv->hom(g, y) != 0) {
        ok = false;
        break;
      }
    if (ok) right.push_back(y);
  }
  TorsionData t;
  t.generators = gens;
  t.exact = ctx->exact;
  t.bound = ctx->inv->max_dim();
  for (int x : ctx->members) {
    bool ok = true;
    for (int y : right)
      if (ctx->inv->hom(x, y) != 0) {
        ok = false;
        break;
      }
    if (ok) t.members.push_back(x);
  }
  return t;
}

TorsionData filt_cogen(const Ctx& ctx, const std::vector<int>& gens) {
  std::vector<int> left;
  for (int y : ctx->members) {
    bool ok = true;
    for (int g : gens)
      if (ctx->inv->hom(y, g) != 0) {
        ok = false;
        break;
      }
    if (ok) left.push_back(y);
  }
  TorsionData t;
  t.torsion_free = true;
  t.generators = gens;
  t.exact = ctx->exact;
  t.bound = ctx->inv->max_dim();
  for (int x : ctx->members) {
    bool ok = true;
    for (int y : left)
      if (ctx->inv->hom(y, x) != 0) {
        ok = false;
        break;
      }
    if (ok) t.members.push_back(x);
  }
  return t;
}

std::vector<int> ext_projectives(const Ctx& ctx, const std::vector<int>& cls) {
  std::vector<int> out;
  for (int x : cls) {
    bool ok = true;
    for (int z : cls)
      if (ctx->inv->ext(x, z) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<int> ext_injectives(const Ctx& ctx, const std::vector<int>& cls) {
  std::vector<int> out;
  for (int x : cls) {
    bool ok = true;
    for (int z : cls)
      if (ctx->inv->ext(z, x) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

SplitParts split_ext_projectives(const Ctx& ctx, const std::vector<int>& cls) {
  std::vector<int> p = ext_projectives(ctx, cls);
  SplitParts sp;
  for (int x : p) {
    std::vector<int> others;
    for (int y : p)
      if (y != x) others.push_back(y);
    bool generated = !others.empty() && in_gen(ctx, others, x);
    (generated ? sp.non_split : sp.split).push_back(x);
  }
  return sp;
}

SplitParts split_ext_injectives(const Ctx& ctx, const std::vector<int>& cls) {
  std::vector<int> p = ext_injectives(ctx, cls);
  SplitParts sp;
  for (int x : p) {
    std::vector<int> others;
    for (int y : p)
      if (y != x) others.push_back(y);
    bool cogenerated = !others.empty() && in_cogen(ctx, others, x);
    (cogenerated ? sp.non_split : sp.split).push_back(x);
  }
  return sp;
}

std::vector<int> bongartz(const Ctx& ctx, const std::vector<int>& mods) {
  if (!is_tau_rigid_set(ctx, mods)) throw std::invalid_argument("bongartz: module is not tau-rigid in context");
  std::vector<int> p = ext_projectives(ctx, perp_tau_set(ctx, mods));
  std::vector<int> out;
  for (int x : p)
    if (std::find(mods.begin(), mods.end(), x) == mods.end()) out.push_back(x);
  return out;
}

std::vector<int> cobongartz(const Ctx& ctx, const std::vector<int>& mods) {
  if (!is_tau_rigid_set(ctx, mods)) throw std::invalid_argument("cobongartz: module is not tau-rigid in context");
  std::vector<int> p = ext_projectives(ctx, gen_class(ctx, mods));
  std::vector<int> out;
  for (int x : p)
    if (std::find(mods.begin(), mods.end(), x) == mods.end()) out.push_back(x);
  return out;
}

FFStatus ff_status(const Ctx& ctx, const TorsionData& t) {
  FFStatus st;
  st.bound = ctx->inv->max_dim();
  std::vector<int> p = t.torsion_free ? ext_injectives(ctx, t.members) : ext_projectives(ctx, t.members);
  if (ctx->exact) {
    st.kind = FFStatus::FunctoriallyFinite;
    st.witness = p;
    return st;
  }
  auto covered = [&](const std::vector<int>& witness, const std::vector<int>& cls) {
    for (int x : cls) {
      bool ok = t.torsion_free ? in_cogen(ctx, witness, x) : in_gen(ctx, witness, x);
      if (!ok) return false;
    }
    return true;
  };
  if (p.empty() ? t.members.empty() : covered(p, t.members)) {
    st.kind = FFStatus::FunctoriallyFinite;
    st.witness = p;
    return st;
  }
  // evidence: candidates stable across two consecutive bounds while part of
  // the class stays outside their Gen (resp. Cogen)
  int d = ctx->inv->max_dim();
  Ctx smaller = AmbientContext::restricted(ctx, d - 1);
  bool gens_fit = true;
  for (int g : t.generators)
    if (!smaller->contains(g)) gens_fit = false;
  if (gens_fit) {
    TorsionData ts = t.torsion_free ? filt_cogen(smaller, t.generators) : filt_gen(smaller, t.generators);
    std::vector<int> ps = t.torsion_free ? ext_injectives(smaller, ts.members) : ext_projectives(smaller, ts.members);
    if (ps == p) {
      st.kind = FFStatus::NotFFEvidence;
      st.witness = p;
      return st;
    }
  }
  st.kind = FFStatus::Unknown;
  return st;
}

Module serre_generator(const Ctx& ctx, int vertex) {
  if (!ctx->whole_cat || ctx->rank != 2)
    throw std::invalid_argument("serre_generator: requires a rank-two whole-category context");
  const Algebra& a = ctx->inv->alg();
  Module p = standard_module(a, StandardKind::Projective, vertex);
  std::vector<Matrix> span(a.n());
  for (int u = 0; u < a.n(); ++u) {
    if (u == vertex)
      span[u] = Matrix(p.dims[u], 0, a.p());
    else
      span[u] = Matrix::identity(p.dims[u], a.p());
  }
  return quotient(p, submodule_closure(p, span)).mod;
}

const std::vector<int>& rel_projectives(const Ctx& ctx) {
  if (ctx->rel_proj) return *ctx->rel_proj;
  std::vector<int> out;
  if (ctx->whole_cat) {
    const Algebra& a = ctx->inv->alg();
    for (int v = 0; v < a.n(); ++v) {
      int m = ctx->inv->projective_member(v);
      if (m < 0)
        throw BoundError("inventory too small: projective at vertex " +
                         std::to_string(a.quiver().vertex_ids[v]) + " exceeds the bound");
      out.push_back(m);
    }
    std::sort(out.begin(), out.end());
  } else if (ctx->defining && !ctx->defining->minus && ctx->parent) {
    // images of the Ext-projectives of P-perp cap perp(tau M) under f_M
    const Ctx& par = ctx->parent;
    std::vector<int> cls;
    for (int x : perp_tau_set(par, ctx->defining->mods)) {
      bool ok = true;
      for (int q : ctx->defining->shifted)
        if (ctx->inv->hom(q, x) != 0) {
          ok = false;
          break;
        }
      if (ok) cls.push_back(x);
    }
    std::vector<int> p = ext_projectives(par, cls);
    std::vector<Module> mlist = modules_of(ctx, ctx->defining->mods);
    for (int x : p) {
      if (std::find(ctx->defining->mods.begin(), ctx->defining->mods.end(), x) != ctx->defining->mods.end())
        continue;
      Module img = tf_part(mlist, ctx->mod(x));
      int id = ctx->inv->require(img, "relative projective f_M(" + ctx->inv->name(x) + ")");
      out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  } else {
    // generic wide subcategory: Ext-projectives of the member set
    for (int x : ctx->members) {
      bool ok = true;
      for (int z : ctx->members)
        if (ctx->inv->ext(x, z) != 0) {
          ok = false;
          break;
        }
      if (ok) out.push_back(x);
    }
  }
  ctx->rel_proj = out;
  return *ctx->rel_proj;
}

const std::vector<int>& rel_injectives(const Ctx& ctx) {
  if (ctx->rel_inj) return *ctx->rel_inj;
  std::vector<int> out;
  if (ctx->whole_cat) {
    const Algebra& a = ctx->inv->alg();
    for (int v = 0; v < a.n(); ++v) {
      int m = ctx->inv->injective_member(v);
      if (m < 0)
        throw BoundError("inventory too small: injective at vertex " +
                         std::to_string(a.quiver().vertex_ids[v]) + " exceeds the bound");
      out.push_back(m);
    }
    std::sort(out.begin(), out.end());
  } else if (ctx->defining && ctx->defining->minus && ctx->parent) {
    const Ctx& par = ctx->parent;
    std::vector<int> cls;
    for (int x : coperp_tau_inv_set(par, ctx->defining->mods)) {
      bool ok = true;
      for (int q : ctx->defining->shifted)
        if (ctx->inv->hom(x, q) != 0) {
          ok = false;
          break;
        }
      if (ok) cls.push_back(x);
    }
    std::vector<int> p = ext_injectives(par, cls);
    std::vector<Module> nlist = modules_of(ctx, ctx->defining->mods);
    for (int x : p) {
      if (std::find(ctx->defining->mods.begin(), ctx->defining->mods.end(), x) != ctx->defining->mods.end())
        continue;
      Module img = reject(nlist, ctx->mod(x)).mod;
      int id = ctx->inv->require(img, "relative injective t_N(" + ctx->inv->name(x) + ")");
      out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  } else {
    for (int x : ctx->members) {
      bool ok = true;
      for (int z : ctx->members)
        if (ctx->inv->ext(z, x) != 0) {
          ok = false;
          break;
        }
      if (ok) out.push_back(x);
    }
  }
  ctx->rel_inj = out;
  return *ctx->rel_inj;
}

bool is_support_rigid(const Ctx& ctx, const StableObject& u) {
  if (!ctx->contains_all(u.mods)) return false;
  if (!u.minus) {
    if (!is_tau_rigid_set(ctx, u.mods)) return false;
    const std::vector<int>& rp = rel_projectives(ctx);
    for (int q : u.shifted) {
      if (!std::binary_search(rp.begin(), rp.end(), q)) return false;
      for (int m : u.mods)
        if (ctx->inv->hom(q, m) != 0) return false;
    }
    return true;
  }
  for (int m : u.mods)
    if (!is_tau_inv_rigid(ctx, m)) return false;
  for (size_t a = 0; a < u.mods.size(); ++a)
    for (size_t b = 0; b < u.mods.size(); ++b) {
      if (a == b) continue;
      std::vector<int> c = coperp_tau_inv(ctx, u.mods[a]);
      if (!std::binary_search(c.begin(), c.end(), u.mods[b])) return false;
    }
  const std::vector<int>& ri = rel_injectives(ctx);
  for (int q : u.shifted) {
    if (!std::binary_search(ri.begin(), ri.end(), q)) return false;
    for (int m : u.mods)
      if (ctx->inv->hom(m, q) != 0) return false;
  }
  return true;
}

std::vector<StableObject> sttilt_all(const Ctx& ctx) {
  struct Cand {
    int id;
    bool shift;
  };
  std::vector<Cand> cands;
  for (int m : ctx->members)
    if (is_tau_rigid(ctx, m)) cands.push_back({m, false});
  for (int q : rel_projectives(ctx)) cands.push_back({q, true});

  auto compatible = [&](const Cand& a, const Cand& b) {
    if (a.shift && b.shift) return a.id != b.id;
    if (a.shift || b.shift) {
      int q = a.shift ? a.id : b.id;
      int m = a.shift ? b.id : a.id;
      return ctx->inv->hom(q, m) == 0;
    }
    if (a.id == b.id) return false;
    std::vector<int> pa = perp_tau(ctx, a.id), pb = perp_tau(ctx, b.id);
    return std::binary_search(pa.begin(), pa.end(), b.id) && std::binary_search(pb.begin(), pb.end(), a.id);
  };

  std::vector<StableObject> out;
  std::vector<int> chosen;
  std::function<void(size_t)> dfs = [&](size_t start) {
    if (int(chosen.size()) == ctx->rank) {
      StableObject u;
      for (int c : chosen) {
        if (cands[c].shift)
          u.shifted.push_back(cands[c].id);
        else
          u.mods.push_back(cands[c].id);
      }
      u.normalize();
      out.push_back(u);
      return;
    }
    for (size_t k = start; k < cands.size(); ++k) {
      bool ok = true;
      for (int c : chosen)
        if (!compatible(cands[c], cands[k])) {
          ok = false;
          break;
        }
      if (ok) {
        chosen.push_back(int(k));
        dfs(k + 1);
        chosen.pop_back();
      }
    }
  };
  dfs(0);
  std::sort(out.begin(), out.end());
  return out;
}

SttiltGraph sttilt_hasse(const Ctx& ctx) {
  SttiltGraph g;
  g.vertices = sttilt_all(ctx);
  g.exact = ctx->exact;
  g.bound = ctx->inv->max_dim();
  auto sym_diff_one = [](const StableObject& a, const StableObject& b, StableObject& removed) {
    StableObject am = object_minus(a, b), bm = object_minus(b, a);
    if (am.rank() != 1 || bm.rank() != 1) return false;
    removed = am;
    return true;
  };
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t j = 0; j < g.vertices.size(); ++j) {
      if (i == j) continue;
      const StableObject& n = g.vertices[i];
      const StableObject& m = g.vertices[j];
      StableObject removed;
      if (!sym_diff_one(n, m, removed)) continue;
      // left mutation: the target's module part is generated by the source's
      bool left = true;
      for (int x : m.mods)
        if (n.mods.empty() || !in_gen(ctx, n.mods, x)) {
          left = false;
          break;
        }
      if (m.mods.empty()) left = true;  // Gen(0) subset of everything
      if (!left) continue;
      if (removed.mods.empty()) continue;  // replacing a shift grows Gen: not a left mutation
      int x = removed.mods[0];
      Module f = m.mods.empty() ? ctx->mod(x) : tf_part(modules_of(ctx, m.mods), ctx->mod(x));
      auto parts = decompose(f);
      if (parts.size() != 1 || parts[0].mult != 1)
        throw std::logic_error("sttilt_hasse: brick label is not indecomposable");
      Module b = beta(parts[0].mod);
      int brick = ctx->inv->require(b, "brick label");
      g.edges.push_back({int(i), int(j), brick});
    }
  return g;
}

Ctx j_of(const Ctx& ctx, const StableObject& u) {
  auto it = ctx->j_cache.find(u.key());
  if (it != ctx->j_cache.end()) return it->second;
  if (u.minus) throw std::invalid_argument("j_of: expects a plus-shift object");
  if (!is_support_rigid(ctx, u)) throw std::invalid_argument("j_of: object is not support tau-rigid in context");
  std::vector<int> members;
  std::vector<int> pt = perp_tau_set(ctx, u.mods);
  for (int x : pt) {
    bool ok = true;
    for (int m : u.mods)
      if (ctx->inv->hom(m, x) != 0) {
        ok = false;
        break;
      }
    for (int q : u.shifted) {
      if (!ok) break;
      if (ctx->inv->hom(q, x) != 0) ok = false;
    }
    if (ok) members.push_back(x);
  }
  std::string label = "J(" + object_name(*ctx->inv, u) + (ctx->whole_cat ? ")" : ") in " + ctx->label);
  Ctx child = AmbientContext::derived(ctx, std::move(members), u, ctx->rank - u.rank(), label);
  ctx->j_cache[u.key()] = child;
  return child;
}

Ctx jd_of(const Ctx& ctx, const StableObject& v) {
  std::string key = "d" + v.key();
  auto it = ctx->j_cache.find(key);
  if (it != ctx->j_cache.end()) return it->second;
  if (!v.minus) throw std::invalid_argument("jd_of: expects a minus-shift object");
  if (!is_support_rigid(ctx, v)) throw std::invalid_argument("jd_of: object is not support tau^{-1}-rigid in context");
  std::vector<int> members;
  std::vector<int> ct = coperp_tau_inv_set(ctx, v.mods);
  for (int x : ct) {
    bool ok = true;
    for (int m : v.mods)
      if (ctx->inv->hom(x, m) != 0) {
        ok = false;
        break;
      }
    for (int q : v.shifted) {
      if (!ok) break;
      if (ctx->inv->hom(x, q) != 0) ok = false;
    }
    if (ok) members.push_back(x);
  }
  std::string label = "Jd(" + object_name(*ctx->inv, v) + (ctx->whole_cat ? ")" : ") in " + ctx->label);
  Ctx child = AmbientContext::derived(ctx, std::move(members), v, ctx->rank - v.rank(), label);
  ctx->j_cache[key] = child;
  return child;
}

int weak_components(int nverts, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> par(nverts);
  for (int i = 0; i < nverts; ++i) par[i] = i;
  std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
  for (auto [a, b] : edges) par[find(a)] = find(b);
  int comps = 0;
  for (int i = 0; i < nverts; ++i)
    if (find(i) == i) ++comps;
  return comps;
}

}  // namespace tauexc
