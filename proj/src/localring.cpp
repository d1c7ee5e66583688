#include "tauexc/localring.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tauexc/homology.hpp"

namespace tauexc {

namespace poly {

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int deg(const Poly& f) { return int(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t a = i < f.size() ? f[i] : 0, b = i < g.size() ? g[i] : 0;
    r[i] = fp::add(a, b, p);
  }
  return trim(r);
}

Poly sub(const Poly& f, const Poly& g, uint32_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint32_t a = i < f.size() ? f[i] : 0, b = i < g.size() ? g[i] : 0;
    r[i] = fp::sub(a, b, p);
  }
  return trim(r);
}

Poly mul(const Poly& f, const Poly& g, uint32_t p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) r[i + j] = fp::add(r[i + j], fp::mul(f[i], g[j], p), p);
  return trim(r);
}

Poly monic(const Poly& f, uint32_t p) {
  Poly r = trim(f);
  if (r.empty()) return r;
  uint32_t c = fp::inv(r.back(), p);
  for (uint32_t& v : r) v = fp::mul(v, c, p);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, uint32_t p) {
  Poly r = trim(f), gg = trim(g);
  if (gg.empty()) throw std::domain_error("poly division by zero");
  Poly q(r.size() > gg.size() ? r.size() - gg.size() + 1 : 1, 0);
  uint32_t lead_inv = fp::inv(gg.back(), p);
  while (r.size() >= gg.size() && !r.empty()) {
    uint32_t c = fp::mul(r.back(), lead_inv, p);
    size_t shift = r.size() - gg.size();
    q[shift] = c;
    for (size_t i = 0; i < gg.size(); ++i) r[shift + i] = fp::sub(r[shift + i], fp::mul(c, gg[i], p), p);
    r = trim(r);
  }
  return {trim(q), r};
}

Poly mod(const Poly& f, const Poly& g, uint32_t p) { return divmod(f, g, p).second; }

Poly gcd(Poly f, Poly g, uint32_t p) {
  f = trim(f);
  g = trim(g);
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = g;
    g = r;
  }
  return monic(f, p);
}

Poly deriv(const Poly& f, uint32_t p) {
  Poly r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(fp::mul(f[i], uint32_t(i % p), p));
  return trim(r);
}

Poly radical(const Poly& f, uint32_t p) {
  Poly g = monic(f, p);
  if (deg(g) <= 0) return g;
  Poly d = deriv(g, p);
  if (d.empty()) {
    // g = h(t^p) = h(t)^p over F_p; drop to the p-th root
    Poly h;
    for (size_t i = 0; i < g.size(); i += p) h.push_back(g[i]);
    return radical(h, p);
  }
  Poly gg = gcd(g, d, p);
  if (deg(gg) == 0) return g;
  Poly w = divmod(g, gg, p).first;
  Poly rg = radical(gg, p);
  Poly extra = divmod(rg, gcd(rg, w, p), p).first;
  return monic(mul(w, extra, p), p);
}

bool is_irreducible(const Poly& f, uint32_t p) {
  Poly g = monic(f, p);
  int n = deg(g);
  if (n <= 0) return false;
  if (n == 1) return true;
  auto frob = [&](const Poly& base) {
    Poly r = {1};
    Poly b = base;
    uint64_t e = p;
    while (e) {
      if (e & 1) r = mod(mul(r, b, p), g, p);
      b = mod(mul(b, b, p), g, p);
      e >>= 1;
    }
    return r;
  };
  Poly x = {0, 1};
  Poly cur = frob(x);
  for (int i = 1; i <= n / 2; ++i) {
    if (deg(gcd(sub(cur, x, p), g, p)) > 0) return false;
    if (i < n / 2) cur = frob(cur);
  }
  return true;
}

Poly inv_mod(const Poly& f, const Poly& g, uint32_t p) {
  Poly r0 = monic(g, p), r1 = mod(f, g, p);
  Poly s0 = {}, s1 = {1};
  while (!r1.empty()) {
    auto [q, r2] = divmod(r0, r1, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (deg(r0) != 0) throw std::domain_error("inv_mod: not invertible");
  uint32_t c = fp::inv(r0[0], p);
  Poly out;
  for (uint32_t v : s0) out.push_back(fp::mul(v, c, p));
  return trim(out);
}

namespace {

Poly pow_mod(Poly base, uint64_t e, const Poly& g, uint32_t p) {
  Poly r = {1};
  base = mod(base, g, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), g, p);
    base = mod(mul(base, base, p), g, p);
    e >>= 1;
  }
  return r;
}

void collect_roots(const Poly& g, uint32_t p, std::mt19937_64& rng, std::vector<uint32_t>& out) {
  // g is a product of distinct linear factors
  if (deg(g) <= 0) return;
  if (deg(g) == 1) {
    // t + c has root -c (after making monic)
    Poly m = monic(g, p);
    out.push_back(fp::neg(m[0], p));
    return;
  }
  // Cantor-Zassenhaus split with random shifts
  for (int tries = 0; tries < 200; ++tries) {
    uint32_t a = uint32_t(rng() % p);
    Poly shifted = {a, 1};
    Poly h = pow_mod(shifted, (uint64_t(p) - 1) / 2, g, p);
    h = sub(h, {1}, p);
    Poly d = gcd(h, g, p);
    if (deg(d) > 0 && deg(d) < deg(g)) {
      collect_roots(d, p, rng, out);
      collect_roots(divmod(g, d, p).first, p, rng, out);
      return;
    }
  }
  throw std::logic_error("poly::roots: splitting failed");
}

}  // namespace

std::vector<uint32_t> roots(const Poly& f, uint32_t p, uint64_t seed) {
  std::vector<uint32_t> out;
  Poly g = monic(f, p);
  if (deg(g) <= 0) return out;
  if (p <= 4096) {
    for (uint32_t c = 0; c < p; ++c) {
      uint32_t val = 0, pw = 1;
      for (uint32_t coefv : g) {
        val = fp::add(val, fp::mul(coefv, pw, p), p);
        pw = fp::mul(pw, c, p);
      }
      if (val == 0) out.push_back(c);
    }
    return out;
  }
  // product of the linear factors: gcd(t^p - t, g)
  Poly tp = pow_mod({0, 1}, p, g, p);
  Poly lin = gcd(sub(tp, {0, 1}, p), g, p);
  if (deg(lin) <= 0) return out;
  std::mt19937_64 rng(seed ^ 0x8f3ad1f4c05e9b21ull);
  collect_roots(lin, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace poly

poly::Poly min_poly(const Matrix& a) {
  using poly::Poly;
  uint32_t p = a.p();
  int n = a.rows();
  if (n == 0) return {1};
  Poly m = {1};
  for (int start = 0; start < n; ++start) {
    Matrix v(n, 1, p);
    v.set(start, 0, 1);
    Matrix krylov(n, 0, p);
    Matrix cur = v;
    Poly local;
    while (true) {
      auto coords = krylov.solve(cur);
      if (coords) {
        Poly f(krylov.cols() + 1, 0);
        for (int j = 0; j < krylov.cols(); ++j) f[j] = fp::neg(coords->at(j, 0), p);
        f[krylov.cols()] = 1;
        local = f;
        break;
      }
      krylov = Matrix::hcat(krylov, cur);
      cur = a * cur;
    }
    Poly g = poly::gcd(m, local, p);
    m = poly::monic(poly::divmod(poly::mul(m, local, p), g, p).first, p);
    if (eval_poly(m, a).is_zero()) break;
  }
  return m;
}

Matrix eval_poly(const poly::Poly& f, const Matrix& a) {
  int n = a.rows();
  Matrix r(n, n, a.p());
  Matrix pw = Matrix::identity(n, a.p());
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i]) r = r + pw.scaled(f[i]);
    pw = pw * a;
  }
  return r;
}

Matrix semisimple_part(const Matrix& a) {
  using poly::Poly;
  uint32_t p = a.p();
  Poly mu = min_poly(a);
  Poly q = poly::radical(mu, p);
  if (poly::deg(q) <= 0) return Matrix(a.rows(), a.rows(), p);
  // Newton iteration in F_p[t]/(mu): s <- s - q(s)/q'(s), starting at s = t.
  // q is separable, so q'(s) stays invertible mod mu.
  Poly s = {0, 1};
  Poly qd = poly::deriv(q, p);
  auto eval_at = [&](const Poly& f, const Poly& x) {
    Poly r = {};
    for (size_t i = f.size(); i-- > 0;) {
      r = poly::mod(poly::mul(r, x, p), mu, p);
      r = poly::add(r, {f[i]}, p);
    }
    return r;
  };
  for (int it = 0; it < 64; ++it) {
    Poly qs = eval_at(q, s);
    if (qs.empty()) break;
    Poly inv = poly::inv_mod(eval_at(qd, s), mu, p);
    s = poly::sub(s, poly::mod(poly::mul(qs, inv, p), mu, p), p);
  }
  if (!eval_at(q, s).empty()) throw std::logic_error("semisimple_part: Newton failed");
  return eval_poly(s, a);
}

std::vector<Matrix> local_radical(const std::vector<Matrix>& basis) {
  std::vector<Matrix> rad;
  if (basis.empty()) return rad;
  int n = basis[0].rows();
  uint32_t p = basis[0].p();
  Matrix span(n * n, 0, p);
  auto vec = [&](const Matrix& m) {
    Matrix v(n * n, 1, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v.set(i * n + j, 0, m.at(i, j));
    return v;
  };
  for (const Matrix& f : basis) {
    Matrix nil = f - semisimple_part(f);
    if (nil.is_zero()) continue;
    Matrix v = vec(nil);
    if (!in_col_span(col_basis(span), v)) {
      span = Matrix::hcat(span, v);
      rad.push_back(nil);
    }
  }
  return rad;
}

Matrix flatten_endo(const ModuleMap& f) {
  int total = f.source.total_dim();
  Matrix big(total, total, f.source.alg->p());
  int off = 0;
  for (size_t v = 0; v < f.vertex_maps.size(); ++v) {
    big.set_block(off, off, f.vertex_maps[v]);
    off += f.source.dims[v];
  }
  return big;
}

ModuleMap unflatten_endo(const Module& m, const Matrix& big) {
  ModuleMap f = zero_map(m, m);
  int off = 0;
  for (int v = 0; v < m.alg->n(); ++v) {
    f.vertex_maps[v] = big.block(off, off, m.dims[v], m.dims[v]);
    off += m.dims[v];
  }
  return f;
}

std::vector<ModuleMap> rad_end_basis(const Module& m) {
  std::vector<ModuleMap> endos = hom_basis(m, m);
  std::vector<Matrix> flat;
  for (const ModuleMap& f : endos) flat.push_back(flatten_endo(f));
  std::vector<ModuleMap> out;
  for (const Matrix& r : local_radical(flat)) out.push_back(unflatten_endo(m, r));
  return out;
}

}  // namespace tauexc
