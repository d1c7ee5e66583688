#include <set>

#include "doctest.h"
#include "tauexc/algebra.hpp"
#include "tauexc/builtins.hpp"
#include "test_fixtures.hpp"

using namespace tauexc;

namespace {

// independent path-count oracle: depth-first enumeration of relation-free
// paths, with an explicit cap so cycles terminate the test rather than hang
int count_paths_oracle(const Quiver& q, const std::vector<std::vector<int>>& rels, int cap) {
  int count = 0;
  std::vector<std::vector<int>> stack;
  for (int v = 0; v < q.n(); ++v) {
    ++count;  // trivial path
    for (int a = 0; a < int(q.arrows.size()); ++a)
      if (q.arrows[a].src == v) stack.push_back({a});
  }
  auto alive = [&](const std::vector<int>& path) {
    for (const auto& rel : rels) {
      if (rel.size() > path.size()) continue;
      for (size_t off = 0; off + rel.size() <= path.size(); ++off) {
        bool m = true;
        for (size_t k = 0; k < rel.size(); ++k)
          if (path[off + k] != rel[k]) {
            m = false;
            break;
          }
        if (m) return false;
      }
    }
    return true;
  };
  while (!stack.empty()) {
    std::vector<int> p = stack.back();
    stack.pop_back();
    if (!alive(p)) continue;
    ++count;
    REQUIRE(count <= cap);
    int end = q.arrows[p.back()].tgt;
    for (int a = 0; a < int(q.arrows.size()); ++a)
      if (q.arrows[a].src == end) {
        std::vector<int> ext = p;
        ext.push_back(a);
        stack.push_back(ext);
      }
  }
  return count;
}

}  // namespace

TEST_CASE("parse A2 and its path basis") {
  auto alg = Algebra::parse("vertices = 1 2\narrow a 1 2\n");
  CHECK(alg->p() == 101);
  CHECK(alg->n() == 2);
  CHECK(alg->dim() == 3);
  CHECK(alg->paths_between(0, 0).size() == 1);
  CHECK(alg->paths_between(0, 1).size() == 1);
  CHECK(alg->paths_between(1, 1).size() == 1);
  CHECK(alg->paths_between(1, 0).size() == 0);
}

TEST_CASE("parse ex-9.3: relation kills the long path") {
  auto alg = testing::builtin("ex-9.3");
  // e1,e2,e3,a,b survive; ab is dead
  CHECK(alg->dim() == 5);
  CHECK(alg->dim() == count_paths_oracle(alg->quiver(), alg->relations(), 100));
  CHECK(alg->path_index({0, 1}) == -1);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Algebra::parse("vertices = 1 2\narrow a 1 2\nrel a.c\n"), ParseError);
  CHECK_THROWS_AS(Algebra::parse("vertices = 1 1\n"), ParseError);
  CHECK_THROWS_AS(Algebra::parse("p = 6\nvertices = 1\n"), ParseError);
  CHECK_THROWS_AS(Algebra::parse("vertices = 1 2\narrow a 1 2\nrel a\n"), ParseError);
  CHECK_THROWS_AS(Algebra::parse("vertices = 1 2\narrow a 1 2\narrow b 2 1\nrel a.a\n"), ParseError);
}

TEST_CASE("validate_finite") {
  auto ex91 = testing::builtin("ex-9.1");
  FiniteDiagnostics d = validate_finite(*ex91, 1000);
  CHECK(d.total_dim == 6);  // 2 trivial paths + 4 arrows, all length-2 paths dead
  CHECK(d.total_dim == count_paths_oracle(ex91->quiver(), ex91->relations(), 100));

  auto a3 = testing::builtin("a3");
  CHECK(validate_finite(*a3, 1000).total_dim == 6);

  // a free loop is infinite-dimensional
  CHECK_THROWS_AS(Algebra::parse("vertices = 1\narrow a 1 1\n", 64), AlgebraError);
  CHECK_THROWS_AS(validate_finite(*a3, 2), AlgebraError);
}

TEST_CASE("classify_biserial") {
  CHECK(testing::builtin("ex-9.3")->biserial_class() == BiserialClass::Gentle);
  CHECK(testing::builtin("ex-9.2")->biserial_class() == BiserialClass::Gentle);
  CHECK(testing::builtin("ex-9.1")->biserial_class() == BiserialClass::SpecialBiserial);
  CHECK(testing::builtin("ex-9.4")->biserial_class() == BiserialClass::Gentle);
  CHECK(testing::builtin("kronecker")->biserial_class() == BiserialClass::SpecialBiserial);
  // three arrows into one vertex
  auto star = Algebra::parse("vertices = 1 2 3 4\narrow a 1 4\narrow b 2 4\narrow c 3 4\n");
  CHECK(star->biserial_class() == BiserialClass::Other);
}

TEST_CASE("serialize round-trip is the identity") {
  for (const BuiltinAlgebra& b : builtin_algebras()) {
    auto alg = load_algebra(b.text);
    std::string s = alg->serialize();
    auto re = Algebra::parse(s);
    CHECK(re->serialize() == s);
    CHECK(re->dim() == alg->dim());
    CHECK(re->hash() == alg->hash());
  }
}

TEST_CASE("opposite algebra round-trips") {
  auto alg = testing::builtin("ex-9.4");
  const Algebra& op = alg->op();
  CHECK(op.dim() == alg->dim());
  CHECK(&op.op() == alg.get());
}
