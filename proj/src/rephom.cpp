#include "tauexc/rephom.hpp"

namespace tauexc {

namespace {

// unknowns: entries of F_s (dims_b[s] x dims_a[s]), row-major, slot by slot
struct Layout {
  std::vector<int> offset;
  int total = 0;
  Layout(const std::vector<int>& da, const std::vector<int>& db) {
    offset.resize(da.size());
    for (size_t s = 0; s < da.size(); ++s) {
      offset[s] = total;
      total += da[s] * db[s];
    }
  }
  int idx(int slot, int row, int col, const std::vector<int>& da) const { return offset[slot] + row * da[slot] + col; }
};

}  // namespace

std::vector<std::vector<Matrix>> rep_hom_basis(const std::vector<int>& dims_a, const std::vector<int>& dims_b,
                                               const std::vector<SlotGenPair>& gens, uint32_t p) {
  Layout lay(dims_a, dims_b);
  int rows = 0;
  for (const SlotGenPair& g : gens) rows += dims_b[g.to] * dims_a[g.from];
  Matrix sys(rows, lay.total, p);
  int r0 = 0;
  for (const SlotGenPair& g : gens) {
    // (F_to * a - b * F_from)[r, c] = 0 for r < dims_b[to], c < dims_a[from]
    for (int r = 0; r < dims_b[g.to]; ++r)
      for (int c = 0; c < dims_a[g.from]; ++c) {
        int row = r0 + r * dims_a[g.from] + c;
        for (int k = 0; k < dims_a[g.to]; ++k)
          sys.add_at(row, lay.idx(g.to, r, k, dims_a), g.a.at(k, c));
        for (int k = 0; k < dims_b[g.from]; ++k)
          sys.add_at(row, lay.idx(g.from, k, c, dims_a), fp::neg(g.b.at(r, k), p));
      }
    r0 += dims_b[g.to] * dims_a[g.from];
  }
  Matrix ker = sys.kernel();
  std::vector<std::vector<Matrix>> basis;
  for (int j = 0; j < ker.cols(); ++j) {
    std::vector<Matrix> f;
    for (size_t s = 0; s < dims_a.size(); ++s) {
      Matrix m(dims_b[s], dims_a[s], p);
      for (int r = 0; r < dims_b[s]; ++r)
        for (int c = 0; c < dims_a[s]; ++c) m.set(r, c, ker.at(lay.idx(int(s), r, c, dims_a), j));
      f.push_back(m);
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

int rep_hom_dim(const std::vector<int>& dims_a, const std::vector<int>& dims_b,
                const std::vector<SlotGenPair>& gens, uint32_t p) {
  Layout lay(dims_a, dims_b);
  int rows = 0;
  for (const SlotGenPair& g : gens) rows += dims_b[g.to] * dims_a[g.from];
  Matrix sys(rows, lay.total, p);
  int r0 = 0;
  for (const SlotGenPair& g : gens) {
    for (int r = 0; r < dims_b[g.to]; ++r)
      for (int c = 0; c < dims_a[g.from]; ++c) {
        int row = r0 + r * dims_a[g.from] + c;
        for (int k = 0; k < dims_a[g.to]; ++k)
          sys.add_at(row, lay.idx(g.to, r, k, dims_a), g.a.at(k, c));
        for (int k = 0; k < dims_b[g.from]; ++k)
          sys.add_at(row, lay.idx(g.from, k, c, dims_a), fp::neg(g.b.at(r, k), p));
      }
    r0 += dims_b[g.to] * dims_a[g.from];
  }
  return lay.total - sys.rank();
}

}  // namespace tauexc
