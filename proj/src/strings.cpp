#include "tauexc/strings.hpp"

#include <algorithm>
#include <set>

namespace tauexc {

int letter_source(const Algebra& alg, const StringLetter& l) {
  const Arrow& a = alg.quiver().arrows[l.arrow];
  return l.inverse ? a.tgt : a.src;
}

int letter_target(const Algebra& alg, const StringLetter& l) {
  const Arrow& a = alg.quiver().arrows[l.arrow];
  return l.inverse ? a.src : a.tgt;
}

std::vector<int> walk_vertices(const Algebra& alg, const StringWord& w) {
  std::vector<int> vs{w.base_vertex};
  for (const StringLetter& l : w.letters) vs.push_back(letter_target(alg, l));
  return vs;
}

StringWord inverse_word(const Algebra& alg, const StringWord& w) {
  StringWord r;
  if (w.trivial()) {
    r.base_vertex = w.base_vertex;
    return r;
  }
  r.base_vertex = letter_target(alg, w.letters.back());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->arrow, !it->inverse});
  return r;
}

bool word_leq(const StringWord& a, const StringWord& b) {
  if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
  if (a.letters < b.letters) return true;
  if (b.letters < a.letters) return false;
  return a.base_vertex <= b.base_vertex;
}

StringWord canonical_word(const Algebra& alg, const StringWord& w) {
  StringWord inv = inverse_word(alg, w);
  return word_leq(w, inv) ? w : inv;
}

bool is_canonical(const Algebra& alg, const StringWord& w) { return word_leq(w, inverse_word(alg, w)); }

namespace {

// relation occurring as a contiguous subsequence
bool contains_relation(const Algebra& alg, const std::vector<int>& arrows) {
  for (const auto& rel : alg.relations()) {
    if (rel.size() > arrows.size()) continue;
    for (size_t off = 0; off + rel.size() <= arrows.size(); ++off) {
      bool match = true;
      for (size_t k = 0; k < rel.size(); ++k)
        if (arrows[off + k] != rel[k]) {
          match = false;
          break;
        }
      if (match) return true;
    }
  }
  return false;
}

bool can_append(const Algebra& alg, const StringWord& w, const StringLetter& l) {
  if (w.trivial()) return letter_source(alg, l) == w.base_vertex || w.letters.empty();
  const StringLetter& last = w.letters.back();
  if (letter_target(alg, last) != letter_source(alg, l)) return false;
  if (last.arrow == l.arrow && last.inverse != l.inverse) return false;  // reduced
  if (!last.inverse && !l.inverse) {
    // trailing direct run + l must not end with a relation
    std::vector<int> run;
    for (auto it = w.letters.rbegin(); it != w.letters.rend() && !it->inverse; ++it) run.push_back(it->arrow);
    std::reverse(run.begin(), run.end());
    run.push_back(l.arrow);
    for (const auto& rel : alg.relations()) {
      if (rel.size() > run.size()) continue;
      bool match = true;
      for (size_t k = 0; k < rel.size(); ++k)
        if (run[run.size() - rel.size() + k] != rel[k]) {
          match = false;
          break;
        }
      if (match) return false;
    }
  } else if (last.inverse && l.inverse) {
    // trailing inverse run read backwards is a path; the new letter prepends
    std::vector<int> run{l.arrow};
    for (auto it = w.letters.rbegin(); it != w.letters.rend() && it->inverse; ++it) run.push_back(it->arrow);
    for (const auto& rel : alg.relations()) {
      if (rel.size() > run.size()) continue;
      bool match = true;
      for (size_t k = 0; k < rel.size(); ++k)
        if (run[k] != rel[k]) {
          match = false;
          break;
        }
      if (match) return false;
    }
  }
  return true;
}

}  // namespace

bool is_valid_string(const Algebra& alg, const StringWord& w) {
  if (w.trivial()) return w.base_vertex >= 0 && w.base_vertex < alg.n();
  StringWord cur;
  cur.base_vertex = w.base_vertex;
  if (letter_source(alg, w.letters.front()) != w.base_vertex) return false;
  for (const StringLetter& l : w.letters) {
    if (!can_append(alg, cur, l)) return false;
    cur.letters.push_back(l);
  }
  return true;
}

std::vector<StringWord> enumerate_strings(const Algebra& alg, int max_len) {
  std::vector<StringWord> out;
  for (int v = 0; v < alg.n(); ++v) out.push_back(StringWord{v, {}});
  std::vector<StringWord> stack;
  int na = int(alg.quiver().arrows.size());
  auto push_extensions = [&](const StringWord& w) {
    if (w.length() >= max_len) return;
    for (int a = 0; a < na; ++a)
      for (bool inv : {false, true}) {
        StringLetter l{a, inv};
        if (w.trivial() && letter_source(alg, l) != w.base_vertex) continue;
        if (!w.trivial() && !can_append(alg, w, l)) continue;
        StringWord ext = w;
        ext.letters.push_back(l);
        stack.push_back(ext);
      }
  };
  for (int v = 0; v < alg.n(); ++v) push_extensions(StringWord{v, {}});
  while (!stack.empty()) {
    StringWord w = stack.back();
    stack.pop_back();
    if (is_canonical(alg, w)) out.push_back(w);
    push_extensions(w);
  }
  std::sort(out.begin(), out.end(), [](const StringWord& a, const StringWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.base_vertex != b.base_vertex) return a.base_vertex < b.base_vertex;
    return a.letters < b.letters;
  });
  return out;
}

Module string_to_module(const Algebra& alg, const StringWord& w) {
  std::vector<int> vs = walk_vertices(alg, w);
  Module m = Module::zero(alg);
  std::vector<int> pos(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) pos[i] = m.dims[vs[i]]++;
  for (int k = 0; k < int(alg.quiver().arrows.size()); ++k) {
    const Arrow& ar = alg.quiver().arrows[k];
    m.arrow_maps[k] = Matrix(m.dims[ar.tgt], m.dims[ar.src], alg.p());
  }
  for (size_t i = 0; i < w.letters.size(); ++i) {
    const StringLetter& l = w.letters[i];
    if (!l.inverse)
      m.arrow_maps[l.arrow].set(pos[i + 1], pos[i], 1);
    else
      m.arrow_maps[l.arrow].set(pos[i], pos[i + 1], 1);
  }
  m.name.clear();
  return m;
}

namespace {

std::vector<StringLetter> rotate(const std::vector<StringLetter>& ls, int k) {
  std::vector<StringLetter> r;
  int n = int(ls.size());
  for (int i = 0; i < n; ++i) r.push_back(ls[(i + k) % n]);
  return r;
}

}  // namespace

std::vector<StringWord> detect_bands(const Algebra& alg, int max_len) {
  std::vector<StringWord> bands;
  std::set<std::vector<StringLetter>> seen;
  size_t max_rel = 2;
  for (const auto& rel : alg.relations()) max_rel = std::max(max_rel, rel.size());

  std::vector<StringWord> stack;
  for (int v = 0; v < alg.n(); ++v) {
    StringWord w{v, {}};
    stack.push_back(w);
  }
  while (!stack.empty()) {
    StringWord w = stack.back();
    stack.pop_back();
    if (w.length() >= 2 && letter_target(alg, w.letters.back()) == w.base_vertex) {
      bool has_dir = false, has_inv = false;
      for (const StringLetter& l : w.letters) (l.inverse ? has_inv : has_dir) = true;
      if (has_dir && has_inv) {
        int n = w.length();
        // primitive: no proper period
        bool primitive = true;
        for (int d = 1; d < n && primitive; ++d)
          if (n % d == 0 && rotate(w.letters, d) == w.letters) primitive = false;
        if (primitive) {
          // all rotations of a sufficiently high power must be strings
          int power = std::max(2, int((2 * max_rel) / n) + 2);
          std::vector<StringLetter> rep;
          for (int k = 0; k < power; ++k) rep.insert(rep.end(), w.letters.begin(), w.letters.end());
          bool ok = true;
          for (int k = 0; k < n && ok; ++k) {
            StringWord rot;
            rot.letters = rotate(rep, k);
            rot.base_vertex = letter_source(alg, rot.letters.front());
            ok = is_valid_string(alg, rot);
          }
          if (ok) {
            // canonical cyclic representative over rotations and inversion
            std::vector<StringLetter> best = w.letters;
            StringWord inv = inverse_word(alg, w);
            for (int k = 0; k < n; ++k) {
              best = std::min(best, rotate(w.letters, k));
              best = std::min(best, rotate(inv.letters, k));
            }
            if (!seen.count(best)) {
              seen.insert(best);
              StringWord band;
              band.letters = best;
              band.base_vertex = letter_source(alg, best.front());
              bands.push_back(band);
            }
          }
        }
      }
    }
    if (w.length() < max_len) {
      int na = int(alg.quiver().arrows.size());
      for (int a = 0; a < na; ++a)
        for (bool inv : {false, true}) {
          StringLetter l{a, inv};
          if (w.trivial() && letter_source(alg, l) != w.base_vertex) continue;
          if (!w.trivial() && !can_append(alg, w, l)) continue;
          StringWord ext = w;
          ext.letters.push_back(l);
          stack.push_back(ext);
        }
    }
  }
  return bands;
}

namespace {

struct Segment {
  int i, j;  // vertex positions, inclusive
};

bool is_sub_segment(const StringWord& w, int i, int j) {
  int m = w.length();
  bool lok = (i == 0) || !w.letters[i - 1].inverse;
  bool rok = (j == m) || w.letters[j].inverse;
  return lok && rok;
}

bool is_quot_segment(const StringWord& w, int i, int j) {
  int m = w.length();
  bool lok = (i == 0) || w.letters[i - 1].inverse;
  bool rok = (j == m) || !w.letters[j].inverse;
  return lok && rok;
}

}  // namespace

int string_hom_dim(const Algebra& alg, const StringWord& w, const StringWord& v) {
  std::vector<int> wv = walk_vertices(alg, w), vv = walk_vertices(alg, v);
  int count = 0;
  for (int i = 0; i <= w.length(); ++i)
    for (int j = i; j <= w.length(); ++j) {
      if (!is_quot_segment(w, i, j)) continue;
      StringWord d;
      d.base_vertex = wv[i];
      d.letters.assign(w.letters.begin() + i, w.letters.begin() + j);
      StringWord dinv = inverse_word(alg, d);
      for (int k = 0; k <= v.length(); ++k)
        for (int l = k; l <= v.length(); ++l) {
          if (l - k != j - i) continue;
          if (!is_sub_segment(v, k, l)) continue;
          StringWord e;
          e.base_vertex = vv[k];
          e.letters.assign(v.letters.begin() + k, v.letters.begin() + l);
          bool eq = (e.base_vertex == d.base_vertex && e.letters == d.letters);
          bool eqinv = !d.trivial() && (e.base_vertex == dinv.base_vertex && e.letters == dinv.letters);
          if (eq) ++count;
          if (eqinv) ++count;
        }
    }
  return count;
}

}  // namespace tauexc
