#include "tauexc/algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tauexc/fp.hpp"

namespace tauexc {

int Quiver::vertex_index(int id) const {
  for (int i = 0; i < n(); ++i)
    if (vertex_ids[i] == id) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < int(arrows.size()); ++i)
    if (arrows[i].name == name) return i;
  return -1;
}

namespace {

struct Tokenizer {
  std::string line;
  int lineno;
  size_t pos = 0;

  void skip_ws() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
  std::string next() {
    skip_ws();
    size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    return line.substr(start, pos - start);
  }
  int col() {
    skip_ws();
    return int(pos) + 1;
  }
};

int parse_int(const std::string& tok, int lineno, int col) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected integer, got '" + tok + "'", lineno, col);
  }
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::parse(const std::string& text, int path_budget) {
  Quiver q;
  std::vector<std::vector<std::string>> rel_names;
  std::vector<int> rel_lines;
  uint32_t p = 101;
  bool p_seen = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    Tokenizer tk{raw, lineno};
    if (tk.done()) continue;
    int col0 = tk.col();
    std::string head = tk.next();
    if (head == "p") {
      std::string eq = tk.next();
      if (eq != "=") throw ParseError("expected '=' after p", lineno, tk.col());
      int v = parse_int(tk.next(), lineno, tk.col());
      if (v < 2 || !fp::is_prime(uint64_t(v))) throw ParseError("field_char must be prime >= 2", lineno, col0);
      if (p_seen) throw ParseError("duplicate p declaration", lineno, col0);
      p = uint32_t(v);
      p_seen = true;
    } else if (head == "vertex") {
      int id = parse_int(tk.next(), lineno, tk.col());
      if (q.vertex_index(id) >= 0) throw ParseError("duplicate vertex id", lineno, col0);
      q.vertex_ids.push_back(id);
    } else if (head == "vertices") {
      std::string eq = tk.next();
      if (eq != "=") throw ParseError("expected '=' after vertices", lineno, tk.col());
      while (!tk.done()) {
        int id = parse_int(tk.next(), lineno, tk.col());
        if (q.vertex_index(id) >= 0) throw ParseError("duplicate vertex id", lineno, col0);
        q.vertex_ids.push_back(id);
      }
    } else if (head == "arrow") {
      int c = tk.col();
      std::string name = tk.next();
      if (name.empty()) throw ParseError("arrow needs a name", lineno, c);
      if (q.arrow_index(name) >= 0) throw ParseError("duplicate arrow name '" + name + "'", lineno, c);
      int sc = tk.col();
      int src = parse_int(tk.next(), lineno, sc);
      int tc = tk.col();
      int tgt = parse_int(tk.next(), lineno, tc);
      int si = q.vertex_index(src), ti = q.vertex_index(tgt);
      if (si < 0) throw ParseError("unknown vertex " + std::to_string(src), lineno, sc);
      if (ti < 0) throw ParseError("unknown vertex " + std::to_string(tgt), lineno, tc);
      q.arrows.push_back({name, si, ti});
    } else if (head == "rel") {
      int c = tk.col();
      std::string spec = tk.next();
      std::vector<std::string> names;
      size_t start = 0;
      while (start <= spec.size()) {
        size_t dot = spec.find('.', start);
        if (dot == std::string::npos) {
          names.push_back(spec.substr(start));
          break;
        }
        names.push_back(spec.substr(start, dot - start));
        start = dot + 1;
      }
      if (names.size() < 2) throw ParseError("relation must have length >= 2", lineno, c);
      rel_names.push_back(names);
      rel_lines.push_back(lineno);
    } else {
      throw ParseError("unknown directive '" + head + "'", lineno, col0);
    }
  }
  if (q.vertex_ids.empty()) throw ParseError("no vertices declared", lineno ? lineno : 1, 1);

  std::vector<std::vector<int>> rels;
  for (size_t r = 0; r < rel_names.size(); ++r) {
    std::vector<int> rel;
    int prev_tgt = -1;
    for (const std::string& nm : rel_names[r]) {
      int ai = q.arrow_index(nm);
      if (ai < 0) throw ParseError("unknown arrow '" + nm + "'", rel_lines[r], 1);
      if (prev_tgt >= 0 && q.arrows[ai].src != prev_tgt)
        throw ParseError("relation path not composable at '" + nm + "'", rel_lines[r], 1);
      prev_tgt = q.arrows[ai].tgt;
      rel.push_back(ai);
    }
    rels.push_back(rel);
  }
  return make(std::move(q), std::move(rels), p, path_budget);
}

std::shared_ptr<const Algebra> Algebra::make(Quiver q, std::vector<std::vector<int>> relations, uint32_t p,
                                             int path_budget) {
  if (!fp::is_prime(p)) throw AlgebraError("field_char must be prime");
  for (const auto& rel : relations)
    if (rel.size() < 2) throw AlgebraError("relation must have length >= 2");
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->quiver_ = std::move(q);
  alg->relations_ = std::move(relations);
  alg->p_ = p;
  alg->build_paths(path_budget);
  return alg;
}

bool Algebra::path_alive(const std::vector<int>& arrows) const {
  for (const auto& rel : relations_) {
    if (rel.size() > arrows.size()) continue;
    for (size_t off = 0; off + rel.size() <= arrows.size(); ++off) {
      bool match = true;
      for (size_t k = 0; k < rel.size(); ++k)
        if (arrows[off + k] != rel[k]) {
          match = false;
          break;
        }
      if (match) return false;
    }
  }
  return true;
}

void Algebra::build_paths(int budget) {
  int n = quiver_.n();
  paths_.clear();
  trivial_.assign(n, -1);
  // breadth-first by length, deterministic order
  std::deque<Path> queue;
  for (int v = 0; v < n; ++v) {
    Path t{v, v, {}};
    trivial_[v] = int(paths_.size());
    path_idx_[t.arrows] = -1;  // placeholder; trivial paths keyed separately below
    paths_.push_back(t);
    queue.push_back(t);
  }
  // the arrow-sequence key is ambiguous for trivial paths (all empty); handle
  // nontrivial paths in path_idx_ only.
  path_idx_.clear();
  while (!queue.empty()) {
    Path cur = queue.front();
    queue.pop_front();
    for (int a = 0; a < int(quiver_.arrows.size()); ++a) {
      if (quiver_.arrows[a].src != cur.tgt) continue;
      Path ext = cur;
      ext.arrows.push_back(a);
      ext.tgt = quiver_.arrows[a].tgt;
      // only the suffix can newly contain a relation
      bool alive = true;
      for (const auto& rel : relations_) {
        if (rel.size() > ext.arrows.size()) continue;
        size_t off = ext.arrows.size() - rel.size();
        bool match = true;
        for (size_t k = 0; k < rel.size(); ++k)
          if (ext.arrows[off + k] != rel[k]) {
            match = false;
            break;
          }
        if (match) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      if (int(paths_.size()) >= budget)
        throw AlgebraError("infinite-dimensional or budget exceeded (path budget " + std::to_string(budget) + ")");
      path_idx_[ext.arrows] = int(paths_.size());
      paths_.push_back(ext);
      queue.push_back(ext);
    }
  }
  paths_from_.assign(n, {});
  paths_into_.assign(n, {});
  paths_between_.assign(n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < int(paths_.size()); ++i) {
    paths_from_[paths_[i].src].push_back(i);
    paths_into_[paths_[i].tgt].push_back(i);
    paths_between_[paths_[i].src][paths_[i].tgt].push_back(i);
  }
}

int Algebra::path_index(const std::vector<int>& arrows) const {
  if (arrows.empty()) throw AlgebraError("path_index of trivial path needs a vertex");
  auto it = path_idx_.find(arrows);
  return it == path_idx_.end() ? -1 : it->second;
}

BiserialClass Algebra::biserial_class() const {
  const auto& arrows = quiver_.arrows;
  int n = quiver_.n();
  std::vector<int> in_deg(n, 0), out_deg(n, 0);
  for (const Arrow& a : arrows) {
    ++out_deg[a.src];
    ++in_deg[a.tgt];
  }
  for (int v = 0; v < n; ++v)
    if (in_deg[v] > 2 || out_deg[v] > 2) return BiserialClass::Other;

  auto is_rel2 = [&](int a, int b) {
    for (const auto& rel : relations_)
      if (rel.size() == 2 && rel[0] == a && rel[1] == b) return true;
    return false;
  };
  bool sb = true;
  for (int a = 0; a < int(arrows.size()); ++a) {
    int succ = 0, pred = 0;
    for (int b = 0; b < int(arrows.size()); ++b) {
      if (arrows[b].src == arrows[a].tgt && !is_rel2(a, b)) ++succ;
      if (arrows[b].tgt == arrows[a].src && !is_rel2(b, a)) ++pred;
    }
    if (succ > 1 || pred > 1) {
      sb = false;
      break;
    }
  }
  if (!sb) return BiserialClass::Other;

  bool gentle = !relations_.empty();
  for (const auto& rel : relations_)
    if (rel.size() != 2) gentle = false;
  if (gentle) {
    // at most one relation partner on each side of each arrow
    for (int a = 0; a < int(arrows.size()) && gentle; ++a) {
      int succ_dead = 0, pred_dead = 0;
      for (int b = 0; b < int(arrows.size()); ++b) {
        if (arrows[b].src == arrows[a].tgt && is_rel2(a, b)) ++succ_dead;
        if (arrows[b].tgt == arrows[a].src && is_rel2(b, a)) ++pred_dead;
      }
      if (succ_dead > 1 || pred_dead > 1) gentle = false;
    }
  }
  return gentle ? BiserialClass::Gentle : BiserialClass::SpecialBiserial;
}

std::string Algebra::serialize() const {
  std::ostringstream out;
  out << "p = " << p_ << "\n";
  out << "vertices =";
  for (int id : quiver_.vertex_ids) out << " " << id;
  out << "\n";
  for (const Arrow& a : quiver_.arrows)
    out << "arrow " << a.name << " " << quiver_.vertex_ids[a.src] << " " << quiver_.vertex_ids[a.tgt] << "\n";
  for (const auto& rel : relations_) {
    out << "rel ";
    for (size_t k = 0; k < rel.size(); ++k) {
      if (k) out << ".";
      out << quiver_.arrows[rel[k]].name;
    }
    out << "\n";
  }
  return out.str();
}

const Algebra& Algebra::op() const {
  if (op_raw_) return *op_raw_;
  if (!op_) {
    Quiver q;
    q.vertex_ids = quiver_.vertex_ids;
    for (const Arrow& a : quiver_.arrows) q.arrows.push_back({a.name, a.tgt, a.src});
    std::vector<std::vector<int>> rels;
    for (const auto& rel : relations_) {
      std::vector<int> rev(rel.rbegin(), rel.rend());
      rels.push_back(rev);
    }
    op_ = make(std::move(q), std::move(rels), p_, kDefaultPathBudget);
    const_cast<Algebra*>(op_.get())->op_raw_ = this;
  }
  return *op_;
}

uint64_t Algebra::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(p_);
  mix(quiver_.n());
  for (const Arrow& a : quiver_.arrows) {
    mix(a.src);
    mix(a.tgt);
  }
  for (const auto& rel : relations_) {
    mix(rel.size());
    for (int a : rel) mix(a);
  }
  return h;
}

FiniteDiagnostics validate_finite(const Algebra& alg, int path_budget) {
  if (alg.dim() > path_budget)
    throw AlgebraError("infinite-dimensional or budget exceeded (path budget " + std::to_string(path_budget) + ")");
  FiniteDiagnostics d;
  d.total_dim = alg.dim();
  int n = alg.n();
  d.dim_table.assign(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) d.dim_table[u][v] = int(alg.paths_between(u, v).size());
  return d;
}

}  // namespace tauexc
