#include "tauexc/inventory.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "tauexc/decompose.hpp"
#include "tauexc/homology.hpp"

namespace tauexc {

namespace {

// deterministic surjection search used for quotient-style names
std::optional<ModuleMap> find_surjection(const Module& p, const Module& m) {
  if (p.total_dim() <= m.total_dim()) return std::nullopt;
  std::vector<ModuleMap> basis = hom_basis(p, m);
  if (basis.empty()) return std::nullopt;
  auto surjective = [&](const ModuleMap& f) {
    for (size_t v = 0; v < f.vertex_maps.size(); ++v)
      if (f.vertex_maps[v].rank() != m.dims[v]) return false;
    return true;
  };
  for (const ModuleMap& f : basis)
    if (surjective(f)) return f;
  std::mt19937_64 rng(p.hash() ^ m.hash());
  std::uniform_int_distribution<uint32_t> dist(0, p.alg->p() - 1);
  for (int trial = 0; trial < 64; ++trial) {
    ModuleMap f = map_scale(basis[0], 0);
    for (const ModuleMap& b : basis) f = map_add(f, map_scale(b, dist(rng)));
    if (surjective(f)) return f;
  }
  return std::nullopt;
}

}  // namespace

std::shared_ptr<const Inventory> Inventory::build(std::shared_ptr<const Algebra> alg, int max_dim,
                                                  const std::vector<Module>& extra) {
  auto inv = std::shared_ptr<Inventory>(new Inventory());
  inv->alg_ = alg;
  inv->max_dim_ = max_dim;
  const Algebra& a = *alg;

  bool sb = a.biserial_class() != BiserialClass::Other;
  if (!sb && extra.empty())
    throw AlgebraError("algebra is not special biserial; an explicit module list is required");

  std::vector<Module> raw;
  bool exhausted = true;
  if (sb) {
    std::vector<StringWord> words = enumerate_strings(a, max_dim);
    for (const StringWord& w : words) {
      if (w.length() + 1 > max_dim) {
        exhausted = false;
        continue;
      }
      raw.push_back(string_to_module(a, w));
    }
    inv->bands_present_ = !detect_bands(a, max_dim).empty();
  }
  for (const Module& e : extra)
    for (const Summand& s : decompose(e))
      if (s.mod.total_dim() <= max_dim) raw.push_back(s.mod);

  // dedup by isomorphism within equal dimension vectors
  std::vector<Module> members;
  for (const Module& m : raw) {
    bool dup = false;
    for (const Module& have : members)
      if (have.dims == m.dims && is_isomorphic(have, m)) {
        dup = true;
        break;
      }
    if (!dup) members.push_back(m);
  }
  std::stable_sort(members.begin(), members.end(), [](const Module& x, const Module& y) {
    if (x.total_dim() != y.total_dim()) return x.total_dim() < y.total_dim();
    return x.dims < y.dims;
  });
  inv->members_ = std::move(members);
  inv->complete_ = sb && !inv->bands_present_ && exhausted;
  inv->assign_names();
  return inv;
}

void Inventory::assign_names() {
  const Algebra& a = *alg_;
  int n = a.n();
  simples_.assign(n, -1);
  projectives_.assign(n, -1);
  injectives_.assign(n, -1);

  std::vector<Module> proj, inj, simp;
  for (int v = 0; v < n; ++v) {
    proj.push_back(standard_module(a, StandardKind::Projective, v));
    inj.push_back(standard_module(a, StandardKind::Injective, v));
    simp.push_back(standard_module(a, StandardKind::Simple, v));
  }
  for (int i = 0; i < size(); ++i) {
    Module& m = members_[i];
    for (int v = 0; v < n && m.name.empty(); ++v)
      if (m.dims == proj[v].dims && is_isomorphic(m, proj[v])) {
        m.name = "P" + std::to_string(a.quiver().vertex_ids[v]);
        projectives_[v] = i;
      }
    for (int v = 0; v < n; ++v)
      if (m.dims == simp[v].dims && m.dims[v] == 1) {
        if (m.name.empty()) m.name = "S" + std::to_string(a.quiver().vertex_ids[v]);
        simples_[v] = i;
      }
    for (int v = 0; v < n; ++v)
      if (injectives_[v] < 0 && m.dims == inj[v].dims && is_isomorphic(m, inj[v])) {
        if (m.name.empty()) m.name = "I" + std::to_string(a.quiver().vertex_ids[v]);
        injectives_[v] = i;
      }
  }
  // quotient-of-projective names, e.g. P1/P3 or P2/S1
  for (int i = 0; i < size(); ++i) {
    Module& m = members_[i];
    if (!m.name.empty()) continue;
    for (int v = 0; v < n && m.name.empty(); ++v) {
      auto f = find_surjection(proj[v], m);
      if (!f) continue;
      Module k = submodule(proj[v], kernel_subspaces(*f)).mod;
      if (!is_indecomposable(k)) continue;
      std::string kname;
      for (int u = 0; u < n && kname.empty(); ++u)
        if (k.dims == proj[u].dims && is_isomorphic(k, proj[u]))
          kname = "P" + std::to_string(a.quiver().vertex_ids[u]);
      for (int u = 0; u < n && kname.empty(); ++u)
        if (k.dims == simp[u].dims && k.dims[u] == 1) kname = "S" + std::to_string(a.quiver().vertex_ids[u]);
      if (!kname.empty()) m.name = "P" + std::to_string(a.quiver().vertex_ids[v]) + "/" + kname;
    }
  }
  // fallback names M(d1,...,dn)#k
  std::map<std::string, int> counters;
  for (int i = 0; i < size(); ++i) {
    Module& m = members_[i];
    if (!m.name.empty()) continue;
    std::string base = "M" + m.dim_string();
    m.name = base + "#" + std::to_string(counters[base]++);
  }
  // final order: (dim, dims, name); names are unique so this is total
  std::stable_sort(members_.begin(), members_.end(), [](const Module& x, const Module& y) {
    if (x.total_dim() != y.total_dim()) return x.total_dim() < y.total_dim();
    if (x.dims != y.dims) return x.dims < y.dims;
    return x.name < y.name;
  });
  by_name_.clear();
  simples_.assign(n, -1);
  projectives_.assign(n, -1);
  injectives_.assign(n, -1);
  for (int i = 0; i < size(); ++i) {
    by_name_[members_[i].name] = i;
    for (int v = 0; v < n; ++v) {
      if (members_[i].dims == proj[v].dims && is_isomorphic(members_[i], proj[v])) projectives_[v] = i;
      if (members_[i].dims == inj[v].dims && is_isomorphic(members_[i], inj[v])) injectives_[v] = i;
      if (members_[i].dims == simp[v].dims && members_[i].dims[v] == 1) simples_[v] = i;
    }
  }
}

int Inventory::find(const Module& m) const {
  if (m.is_zero()) return -1;
  for (int i = 0; i < size(); ++i)
    if (members_[i].dims == m.dims && is_isomorphic(members_[i], m)) return i;
  return -1;
}

int Inventory::require(const Module& m, const std::string& what) const {
  int i = find(m);
  if (i < 0)
    throw BoundError("inventory too small: " + what + " has no member with dimension vector " + m.dim_string() +
                     " (relative to bound " + std::to_string(max_dim_) + ")");
  return i;
}

int Inventory::by_name(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int Inventory::hom(int i, int j) const {
  auto key = std::make_pair(i, j);
  auto it = hom_cache_.find(key);
  if (it != hom_cache_.end()) return it->second;
  int d = hom_dim(members_[i], members_[j]);
  hom_cache_[key] = d;
  return d;
}

int Inventory::ext(int i, int j) const {
  auto key = std::make_pair(i, j);
  auto it = ext_cache_.find(key);
  if (it != ext_cache_.end()) return it->second;
  int d = ext1_dim(members_[i], members_[j]);
  ext_cache_[key] = d;
  return d;
}

const TauInfo& Inventory::tau_of(int i) const {
  auto it = tau_cache_.find(i);
  if (it != tau_cache_.end()) return it->second;
  TauInfo info;
  info.value = tau(members_[i]);
  info.member = info.value.is_zero() ? -1 : find(info.value);
  return tau_cache_.emplace(i, std::move(info)).first->second;
}

const TauInfo& Inventory::tau_inv_of(int i) const {
  auto it = tau_inv_cache_.find(i);
  if (it != tau_inv_cache_.end()) return it->second;
  TauInfo info;
  info.value = tau_inv(members_[i]);
  info.member = info.value.is_zero() ? -1 : find(info.value);
  return tau_inv_cache_.emplace(i, std::move(info)).first->second;
}

bool Inventory::tau_rigid(int i) const {
  auto it = rigid_cache_.find(i);
  if (it != rigid_cache_.end()) return it->second;
  bool r = hom_dim(members_[i], tau_of(i).value) == 0;
  rigid_cache_[i] = r;
  return r;
}

bool Inventory::gen_pair(int i, int j) const {
  auto key = std::make_pair(i, j);
  auto it = gen_cache_.find(key);
  if (it != gen_cache_.end()) return it->second;
  bool r = gen_contains({members_[i]}, members_[j]);
  gen_cache_[key] = r;
  return r;
}

bool Inventory::cogen_pair(int i, int j) const {
  auto key = std::make_pair(i, j);
  auto it = cogen_cache_.find(key);
  if (it != cogen_cache_.end()) return it->second;
  bool r = cogen_contains({members_[i]}, members_[j]);
  cogen_cache_[key] = r;
  return r;
}

bool Inventory::is_brick_member(int i) const {
  auto it = brick_cache_.find(i);
  if (it != brick_cache_.end()) return it->second;
  bool b = is_brick(members_[i]);
  brick_cache_[i] = b;
  return b;
}

std::string Inventory::names_joined(const std::vector<int>& ids, const std::string& sep) const {
  std::ostringstream out;
  for (size_t k = 0; k < ids.size(); ++k) {
    if (k) out << sep;
    out << members_[ids[k]].name;
  }
  return out.str();
}

}  // namespace tauexc
