#ifndef REALMOD_THETA_HPP
#define REALMOD_THETA_HPP

#include <vector>

#include "realmod/words.hpp"

namespace realmod {

// Abelianized coset-rewriting table for the index-2 orientation-preserving
// subgroup.  A word is folded letter by letter while tracking the coset
// state r in {0, 1} (0 = trivial coset): a positive letter x contributes
// +theta(r, x) and advances r by the orientation character of x; a negative
// letter x^-1 first advances r, then contributes -theta(new r, x).
//
// build() derives the full table for the type, then asserts, throwing
// std::logic_error on any failure:
//   - every relator folds to the zero vector from both coset states;
//   - sigma * theta(0, x) = theta(1, x) - chi(x) * theta(1, t) for every
//     generator x (t the transversal letter) — this identity makes the
//     conjugation rule value(t w t^-1) = sigma * value(w) hold for every
//     subgroup word;
//   - each designated basis-preimage word folds to its basis vector.
class ThetaTable {
 public:
  static ThetaTable build(const TopologicalType& t);

  const TopologicalType& type() const { return type_; }
  const DeltaPresentation& presentation() const { return presentation_; }
  const GeneratorSymbol& transversal() const { return transversal_; }

  // theta of the coset-pair generator (state, s).
  const Vec& value(int state, const GeneratorSymbol& s) const;

  // Fold w from coset `start_state`; the final coset (start XOR character
  // of w) is stored through end_state when non-null.
  Vec run(const Word& w, int start_state, int* end_state = nullptr) const;

  // Value of a word of the orientation-preserving subgroup (folded from the
  // trivial coset).  Throws std::invalid_argument on odd character: the
  // word is not in the subgroup.
  Vec word_value(const Word& w) const;

  // Subgroup word whose value is the basis vector with this 0-based index
  // (order X_1..X_g, Y_1..Y_g).
  const Word& basis_preimage(std::size_t idx) const;

 private:
  ThetaTable() = default;

  TopologicalType type_;
  DeltaPresentation presentation_;
  GeneratorSymbol transversal_;
  // values_[state] maps generator -> vector
  std::map<GeneratorSymbol, Vec> values_[2];
  std::vector<Word> preimages_;
};

}  // namespace realmod

#endif  // REALMOD_THETA_HPP
