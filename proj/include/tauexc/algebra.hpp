#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tauexc {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line, col;
};

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int src = 0, tgt = 0;  // internal vertex indices
};

struct Quiver {
  std::vector<int> vertex_ids;  // declared ids, in declaration order
  std::vector<Arrow> arrows;

  int n() const { return int(vertex_ids.size()); }
  int vertex_index(int id) const;
  int arrow_index(const std::string& name) const;
};

// A path is a composable arrow sequence, "a.b" meaning traverse a, then b.
// The empty sequence is the trivial path at a vertex.
struct Path {
  int src = 0, tgt = 0;
  std::vector<int> arrows;
  int length() const { return int(arrows.size()); }
};

enum class BiserialClass { Gentle, SpecialBiserial, Other };

// A finite-dimensional monomial quiver algebra over F_p together with its
// basis of relation-free paths.
class Algebra {
 public:
  static constexpr int kDefaultPathBudget = 100000;

  // Parses the line-oriented algebra file format.
  static std::shared_ptr<const Algebra> parse(const std::string& text, int path_budget = kDefaultPathBudget);
  static std::shared_ptr<const Algebra> make(Quiver q, std::vector<std::vector<int>> relations, uint32_t p,
                                             int path_budget = kDefaultPathBudget);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }
  uint32_t p() const { return p_; }
  int n() const { return quiver_.n(); }

  int dim() const { return int(paths_.size()); }
  const std::vector<Path>& paths() const { return paths_; }
  const std::vector<int>& paths_from(int v) const { return paths_from_[v]; }
  const std::vector<int>& paths_into(int v) const { return paths_into_[v]; }
  const std::vector<int>& paths_between(int u, int v) const { return paths_between_[u][v]; }
  int trivial_path(int v) const { return trivial_[v]; }
  // Index of a path given by its arrow sequence, -1 when dead or unknown.
  int path_index(const std::vector<int>& arrows) const;
  bool path_alive(const std::vector<int>& arrows) const;

  bool is_hereditary() const { return relations_.empty(); }
  BiserialClass biserial_class() const;

  std::string serialize() const;

  // The opposite algebra; arrow k of *this corresponds to arrow k of op().
  const Algebra& op() const;

  uint64_t hash() const;

 private:
  Algebra() = default;
  void build_paths(int budget);

  Quiver quiver_;
  std::vector<std::vector<int>> relations_;
  uint32_t p_ = 101;

  std::vector<Path> paths_;
  std::vector<int> trivial_;
  std::vector<std::vector<int>> paths_from_, paths_into_;
  std::vector<std::vector<std::vector<int>>> paths_between_;
  std::map<std::vector<int>, int> path_idx_;

  mutable std::shared_ptr<const Algebra> op_;
  mutable const Algebra* op_raw_ = nullptr;  // set on the op algebra, points back
};

struct FiniteDiagnostics {
  int total_dim = 0;
  std::vector<std::vector<int>> dim_table;  // per ordered vertex pair
};

// Succeeds iff relation-free path enumeration stays within path_budget.
FiniteDiagnostics validate_finite(const Algebra& alg, int path_budget);

}  // namespace tauexc
