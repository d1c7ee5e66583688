#pragma once

#include <vector>

#include "tauexc/module.hpp"

namespace tauexc {

struct StringLetter {
  int arrow = 0;
  bool inverse = false;
  bool operator==(const StringLetter& o) const { return arrow == o.arrow && inverse == o.inverse; }
  bool operator<(const StringLetter& o) const {
    return arrow != o.arrow ? arrow < o.arrow : inverse < o.inverse;
  }
};

// A reduced walk avoiding relations in both reading directions. The trivial
// word at a vertex has no letters.
struct StringWord {
  int base_vertex = 0;  // source of the walk
  std::vector<StringLetter> letters;

  int length() const { return int(letters.size()); }
  bool trivial() const { return letters.empty(); }
};

int letter_source(const Algebra& alg, const StringLetter& l);
int letter_target(const Algebra& alg, const StringLetter& l);
std::vector<int> walk_vertices(const Algebra& alg, const StringWord& w);

StringWord inverse_word(const Algebra& alg, const StringWord& w);
bool word_leq(const StringWord& a, const StringWord& b);
StringWord canonical_word(const Algebra& alg, const StringWord& w);
bool is_canonical(const Algebra& alg, const StringWord& w);

bool is_valid_string(const Algebra& alg, const StringWord& w);

// All canonical string words of length <= max_len, plus the trivial words.
std::vector<StringWord> enumerate_strings(const Algebra& alg, int max_len);

Module string_to_module(const Algebra& alg, const StringWord& w);

// Primitive cyclic reduced relation-free words with letters of both kinds,
// up to rotation and inversion, of length <= max_len.
std::vector<StringWord> detect_bands(const Algebra& alg, int max_len);

// Combinatorial dimension of Hom between string modules (graph maps).
int string_hom_dim(const Algebra& alg, const StringWord& w, const StringWord& v);

}  // namespace tauexc
