#include "tauexc/context.hpp"

#include <algorithm>
#include <sstream>

namespace tauexc {

void StableObject::normalize() {
  std::sort(mods.begin(), mods.end());
  mods.erase(std::unique(mods.begin(), mods.end()), mods.end());
  std::sort(shifted.begin(), shifted.end());
  shifted.erase(std::unique(shifted.begin(), shifted.end()), shifted.end());
}

bool StableObject::operator<(const StableObject& o) const {
  if (mods != o.mods) return mods < o.mods;
  if (shifted != o.shifted) return shifted < o.shifted;
  return minus < o.minus;
}

std::string StableObject::key() const {
  std::ostringstream out;
  out << (minus ? "-" : "+");
  for (int m : mods) out << "m" << m;
  for (int s : shifted) out << "s" << s;
  return out.str();
}

StableObject object_union(const StableObject& a, const StableObject& b) {
  StableObject u = a;
  u.mods.insert(u.mods.end(), b.mods.begin(), b.mods.end());
  u.shifted.insert(u.shifted.end(), b.shifted.begin(), b.shifted.end());
  u.minus = a.minus || b.minus;
  u.normalize();
  return u;
}

StableObject object_minus(const StableObject& a, const StableObject& b) {
  StableObject r;
  r.minus = a.minus;
  for (int m : a.mods)
    if (std::find(b.mods.begin(), b.mods.end(), m) == b.mods.end()) r.mods.push_back(m);
  for (int s : a.shifted)
    if (std::find(b.shifted.begin(), b.shifted.end(), s) == b.shifted.end()) r.shifted.push_back(s);
  return r;
}

std::string object_name(const Inventory& inv, const StableObject& u) {
  if (u.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int m : u.mods) {
    if (!first) out << "+";
    out << inv.name(m);
    first = false;
  }
  for (int s : u.shifted) {
    if (!first) out << "+";
    out << inv.name(s) << (u.minus ? "[-1]" : "[1]");
    first = false;
  }
  return out.str();
}

Ctx AmbientContext::whole(InventoryPtr inv, std::string label) {
  auto ctx = std::shared_ptr<AmbientContext>(new AmbientContext());
  ctx->inv = inv;
  ctx->members.resize(inv->size());
  for (int i = 0; i < inv->size(); ++i) ctx->members[i] = i;
  ctx->label = std::move(label);
  ctx->exact = inv->complete();
  ctx->whole_cat = true;
  ctx->rank = inv->alg().n();
  return ctx;
}

Ctx AmbientContext::restricted(const Ctx& base, int dim_bound) {
  auto ctx = std::shared_ptr<AmbientContext>(new AmbientContext());
  ctx->inv = base->inv;
  for (int m : base->members)
    if ((*base->inv)[m].total_dim() <= dim_bound) ctx->members.push_back(m);
  ctx->label = base->label + "|dim<=" + std::to_string(dim_bound);
  ctx->exact = false;
  ctx->whole_cat = base->whole_cat;
  ctx->rank = base->rank;
  ctx->parent = base->parent;
  ctx->defining = base->defining;
  return ctx;
}

Ctx AmbientContext::derived(const Ctx& parent, std::vector<int> members, StableObject defining, int rank,
                            std::string label) {
  auto ctx = std::shared_ptr<AmbientContext>(new AmbientContext());
  ctx->inv = parent->inv;
  std::sort(members.begin(), members.end());
  ctx->members = std::move(members);
  ctx->label = std::move(label);
  ctx->exact = parent->exact;
  ctx->whole_cat = false;
  ctx->rank = rank;
  ctx->parent = parent;
  ctx->defining = std::move(defining);
  return ctx;
}

bool AmbientContext::contains(int member) const {
  return std::binary_search(members.begin(), members.end(), member);
}

bool AmbientContext::contains_all(const std::vector<int>& ids) const {
  for (int i : ids)
    if (!contains(i)) return false;
  return true;
}

}  // namespace tauexc
