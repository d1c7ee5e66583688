#include "tauexc/builtins.hpp"

namespace tauexc {

const std::vector<BuiltinAlgebra>& builtin_algebras() {
  static const std::vector<BuiltinAlgebra> regs = {
      {"a2",
       "vertices = 1 2\n"
       "arrow a 1 2\n"},
      {"a3",
       "vertices = 1 2 3\n"
       "arrow a 1 2\n"
       "arrow b 2 3\n"},
      {"kronecker",
       "vertices = 1 2\n"
       "arrow a 1 2\n"
       "arrow b 1 2\n"},
      {"ex-9.1",
       "# two vertices, two arrows each way, all 2-cycles zero\n"
       "vertices = 1 2\n"
       "arrow a1 1 2\n"
       "arrow a2 1 2\n"
       "arrow b1 2 1\n"
       "arrow b2 2 1\n"
       "rel a1.b1\n"
       "rel a1.b2\n"
       "rel a2.b1\n"
       "rel a2.b2\n"
       "rel b1.a1\n"
       "rel b1.a2\n"
       "rel b2.a1\n"
       "rel b2.a2\n"},
      {"ex-9.2",
       "vertices = 1 2 3\n"
       "arrow a 1 2\n"
       "arrow b 1 2\n"
       "arrow c 2 3\n"
       "rel a.c\n"},
      {"ex-9.3",
       "vertices = 1 2 3\n"
       "arrow a 1 2\n"
       "arrow b 2 3\n"
       "rel a.b\n"},
      {"ex-9.4",
       "# doubled A3 with all 2-cycles zero\n"
       "vertices = 1 2 3\n"
       "arrow a 1 2\n"
       "arrow b 2 1\n"
       "arrow c 2 3\n"
       "arrow d 3 2\n"
       "rel a.b\n"
       "rel b.a\n"
       "rel c.d\n"
       "rel d.c\n"},
  };
  return regs;
}

std::optional<std::string> builtin_algebra_text(const std::string& name) {
  for (const BuiltinAlgebra& b : builtin_algebras())
    if (b.name == name) return b.text;
  return std::nullopt;
}

std::shared_ptr<const Algebra> load_algebra(const std::string& text, std::optional<uint32_t> char_override) {
  auto alg = Algebra::parse(text);
  if (char_override && *char_override != alg->p())
    return Algebra::make(alg->quiver(), alg->relations(), *char_override);
  return alg;
}

}  // namespace tauexc
