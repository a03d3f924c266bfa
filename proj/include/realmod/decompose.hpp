#ifndef REALMOD_DECOMPOSE_HPP
#define REALMOD_DECOMPOSE_HPP

// Constructive machinery: decomposition of unimodular matrices on the
// invariant sublattice into named generator words, and normalization of
// members to a standard form by catalog moves.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "realmod/matrix.hpp"
#include "realmod/surface.hpp"

namespace realmod {

struct GenLetter {
  std::string name;
  int exp = 1;  // +1 or -1

  bool operator==(const GenLetter& o) const {
    return name == o.name && exp == o.exp;
  }
};

// Word over named matrix generators.  Serializes as space-separated names
// with a trailing ' for an inverse, e.g. "A_1 G_1' G_3 A_2'".  Parsing
// matches full names first, so a name that itself ends in ' (like "G_1'")
// wins over the inverse reading; only then is one trailing ' stripped.
class GeneratorWord {
 public:
  GeneratorWord() = default;

  static GeneratorWord parse(const std::string& text,
                             const std::vector<std::string>& known_names);
  std::string to_string() const;

  const std::vector<GenLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void append(const std::string& name, int exp = 1);
  void append(const GenLetter& l) { append(l.name, l.exp); }
  void append(const GeneratorWord& w);

  GeneratorWord inverse() const;

  bool operator==(const GeneratorWord& o) const {
    return letters_ == o.letters_;
  }

 private:
  std::vector<GenLetter> letters_;
};

// Ordered name -> matrix dictionary.
using MatrixDictionary = std::vector<std::pair<std::string, ExactMatrix>>;

// Generators of the unimodular group on the invariant sublattice, as g x g
// matrices in the X-basis:
//   A_1..A_{g-1}  adjacent coordinate swaps
//   B             X_1 -> sum of all X_i, X_j -> -X_{g-j+2} (j >= 2)
//   C             X_1 -> -X_2, X_2 -> X_1 + 2 X_2
//   B'            X_1 -> sum of all X_i, X_j -> -X_j (j >= 2)
//   G_1           the product C * A_1 * B'
//   G_2           [[1,1],[0,1]] + (-identity) on the remaining coordinates
//   G_3           diag(1,-1,1,...,1)
//   G_1'          elementary transvection, X_1 -> X_1 + X_2
//   G_2'          elementary transvection, X_2 -> X_2 + X_1
// For g = 1 the dictionary is the single matrix G_3 = [-1].
MatrixDictionary gl_generator_matrices(int g);

// Matrix of a named generator; throws std::invalid_argument for an unknown
// name.
const ExactMatrix& dictionary_matrix(const MatrixDictionary& dict,
                                     const std::string& name);

// Left-to-right product of the word's letters (inverse letters via exact
// unimodular inversion); the empty word gives the identity of the
// dictionary's dimension.
ExactMatrix evaluate_word(const GeneratorWord& word,
                          const MatrixDictionary& dict);

// Write a unimodular g x g matrix as a word over {A_i, G_1', G_2', G_3}
// whose left-to-right product equals the input exactly (self-checked).
// Integer row elimination: Euclid on each column by transvection powers,
// transpositions to place pivots, sign fixes by conjugated G_3.
// Throws std::invalid_argument("not unimodular") when det is not +1/-1.
GeneratorWord decompose_gl(const ExactMatrix& M);

// Raised when normalization cannot finish: either the letter budget is
// exhausted or the available moves provably cannot reach the normal form.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hard cap on the number of letters a normalization may emit.
inline constexpr std::size_t kNormalizationLetterBudget = 200000;

struct NormalizationResult {
  GeneratorWord word;      // over the type's catalog names
  ExactMatrix residual;    // product(word) * M
};

// Left-multiply M by catalog moves until every oval vector is fixed and the
// span of the remaining X-classes is preserved:
//   residual * X_i = X_i for i = 1..k, and
//   residual(span X_{k+1}..X_g) inside span X_{k+1}..X_g.
// Word over {D, R_i, M_i}.  Throws std::invalid_argument("not a member")
// when the membership predicate rejects M, NormalizationError on budget
// exhaustion or an unreachable sign/shear state.
NormalizationResult normalize_nonseparating(const ExactMatrix& M,
                                            const TopologicalType& t);

// Separating counterpart: word over {Z, T, N_i, M, R_i, U}, U first when
// the membership sign is -1.  Afterwards every oval class is fixed and each
// handle block maps into itself literally:
//   residual * X_i = X_i for i <= k-1 (hence the dependent class too), and
//   residual(H_i) inside H_i for i = 1, 2.
NormalizationResult normalize_separating(const ExactMatrix& M,
                                         const TopologicalType& t);

// Dispatch on the species (empty type: empty word, residual = M).
NormalizationResult normalize_member(const ExactMatrix& M,
                                     const TopologicalType& t);

}  // namespace realmod

#endif  // REALMOD_DECOMPOSE_HPP
