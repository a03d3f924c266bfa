#include <random>
#include <stdexcept>

#include "builders.hpp"
#include "doctest.h"
#include "realmod/surface.hpp"
#include "realmod/theta.hpp"
#include "realmod/words.hpp"

using namespace realmod;

namespace {

Vec basis(int dim, int idx) {
  Vec v(dim, Int(0));
  v[idx] = 1;
  return v;
}

}  // namespace

TEST_CASE("table builds for every type without violating its invariants") {
  // The constructor asserts: every relator folds to zero from both cosets,
  // the transversal conjugation identity holds, and the designated preimage
  // words hit their basis vectors.
  for (int g = 1; g <= 6; ++g)
    for (const TopologicalType& t : enumerate_types(g))
      CHECK_NOTHROW(ThetaTable::build(t));
}

TEST_CASE("designated preimages hit the basis vectors") {
  for (int g = 1; g <= 5; ++g)
    for (const TopologicalType& t : enumerate_types(g)) {
      ThetaTable table = ThetaTable::build(t);
      for (int i = 0; i < 2 * g; ++i)
        CHECK(table.word_value(table.basis_preimage(i)) == basis(2 * g, i));
    }
}

TEST_CASE("frozen values: crosscap squares and the long boundary product") {
  // Non-separating: X_i = value(d_i d_i) above the oval range, and
  // value(d_{g+1}^2) = -sum of all X_i.
  TopologicalType t = TopologicalType::parse("g=3,type=-1");
  ThetaTable table = ThetaTable::build(t);
  const int g = 3;
  for (int i = 2; i <= g; ++i) {
    Word w;
    w.append(sym_d(i), 1);
    w.append(sym_d(i), 1);
    CHECK(table.word_value(w) == basis(2 * g, i - 1));
  }
  Word last;
  last.append(sym_d(g + 1), 1);
  last.append(sym_d(g + 1), 1);
  Vec expect(2 * g, Int(0));
  for (int i = 0; i < g; ++i) expect[i] = -1;
  CHECK(table.word_value(last) == expect);
  // e_i hits X_i directly in the oval range.
  Word e1;
  e1.append(sym_e(1), 1);
  CHECK(table.word_value(e1) == basis(2 * g, 0));
}

TEST_CASE("frozen values: separating boundary classes") {
  // value(e_i) = X_i for i < k, and value(e_k) = -sum of those X_i.
  TopologicalType t = TopologicalType::parse("g=4,type=+3");
  ThetaTable table = ThetaTable::build(t);
  const int g = 4, k = 3;
  for (int i = 1; i < k; ++i) {
    Word w;
    w.append(sym_e(i), 1);
    CHECK(table.word_value(w) == basis(2 * g, i - 1));
  }
  Word ek;
  ek.append(sym_e(k), 1);
  Vec expect(2 * g, Int(0));
  for (int i = 0; i < k - 1; ++i) expect[i] = -1;
  CHECK(table.word_value(ek) == expect);
}

TEST_CASE("empty word folds to zero") {
  ThetaTable table = ThetaTable::build(TopologicalType::parse("g=2,type=-1"));
  CHECK(vec_is_zero(table.word_value(Word{})));
}

TEST_CASE("words outside the orientation-preserving subgroup are rejected") {
  ThetaTable table = ThetaTable::build(TopologicalType::parse("g=2,type=-1"));
  Word odd;
  odd.append(sym_d(3), 1);
  CHECK_THROWS_AS(table.word_value(odd), std::invalid_argument);
}

TEST_CASE("fold is a homomorphism on even words") {
  std::mt19937_64 rng(11);
  for (int g = 1; g <= 4; ++g)
    for (const TopologicalType& t : enumerate_types(g)) {
      ThetaTable table = ThetaTable::build(t);
      const DeltaPresentation& pres = table.presentation();
      GeneratorSymbol tr = transversal_symbol(t);
      for (int trial = 0; trial < 25; ++trial) {
        Word u = builders::random_plus_word(pres, tr, rng, 12);
        Word v = builders::random_plus_word(pres, tr, rng, 12);
        CHECK(table.word_value(u * v) ==
              vec_add(table.word_value(u), table.word_value(v)));
        CHECK(table.word_value(u.inverse()) ==
              vec_neg(table.word_value(u)));
      }
    }
}

TEST_CASE("transversal conjugation acts as the involution matrix") {
  std::mt19937_64 rng(12);
  for (int g = 1; g <= 4; ++g)
    for (const TopologicalType& t : enumerate_types(g)) {
      ThetaTable table = ThetaTable::build(t);
      ExactMatrix sigma = sigma_matrix(t);
      const DeltaPresentation& pres = table.presentation();
      GeneratorSymbol tr = transversal_symbol(t);
      for (int trial = 0; trial < 25; ++trial) {
        Word w = builders::random_plus_word(pres, tr, rng, 12);
        Word conj;
        conj.append(tr, 1);
        conj.append(w);
        conj.append(tr, -1);
        CHECK(table.word_value(conj) == sigma.apply(table.word_value(w)));
      }
    }
}

TEST_CASE("relators vanish from both cosets after catalog substitution") {
  for (int g = 1; g <= 4; ++g)
    for (const TopologicalType& t : enumerate_types(g)) {
      ThetaTable table = ThetaTable::build(t);
      for (const DeltaAutomorphism& phi : automorphism_catalog(t))
        for (const Word& r : table.presentation().relators)
          for (int state = 0; state < 2; ++state) {
            int end = -1;
            Vec v = table.run(phi.apply(r), state, &end);
            CHECK(vec_is_zero(v));
            CHECK(end == state);
          }
    }
}
