#ifndef REALMOD_WORDS_HPP
#define REALMOD_WORDS_HPP

#include <map>
#include <string>
#include <vector>

#include "realmod/surface.hpp"

namespace realmod {

// Families of canonical generators of the quotient-orbifold group:
// e (boundary-adjacent handles), c (reflections), d (crosscap letters),
// a/b (orientable handle pairs).
enum class GenKind { E, C, D, A, B };

struct GeneratorSymbol {
  GenKind kind = GenKind::E;
  int index = 1;  // 1-based

  std::string label() const;  // "e1", "c2", "d3", "a1", "b1"

  // 0 when the generator preserves orientation (e, a, b), 1 when it
  // reverses it (c, d).
  int orientation_character() const;

  bool operator==(const GeneratorSymbol& o) const {
    return kind == o.kind && index == o.index;
  }
  bool operator!=(const GeneratorSymbol& o) const { return !(*this == o); }
  bool operator<(const GeneratorSymbol& o) const {
    if (kind != o.kind) return kind < o.kind;
    return index < o.index;
  }
};

GeneratorSymbol sym_e(int i);
GeneratorSymbol sym_c(int i);
GeneratorSymbol sym_d(int i);
GeneratorSymbol sym_a(int i);
GeneratorSymbol sym_b(int i);

struct Letter {
  GeneratorSymbol sym;
  int exp = 1;  // +1 or -1

  bool operator==(const Letter& o) const {
    return sym == o.sym && exp == o.exp;
  }
};

// Word over the canonical generators.  Kept freely reduced at all times:
// append cancels a trailing inverse pair immediately.
class Word {
 public:
  Word() = default;

  // "e1 c2 d3'" — whitespace-separated symbols, one trailing ' = inverse.
  static Word parse(const std::string& text);
  std::string to_string() const;

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  void append(const GeneratorSymbol& s, int exp);
  void append(const Letter& l) { append(l.sym, l.exp); }
  void append(const Word& w);

  Word inverse() const;
  Word operator*(const Word& rhs) const;  // concatenation (stays reduced)

  // Sum of the letters' orientation characters mod 2; 0 means the word lies
  // in the orientation-preserving subgroup.
  int orientation_character() const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }

 private:
  std::vector<Letter> letters_;
};

// Convenience: parse a word literal.
Word operator""_w(const char* text, std::size_t len);

struct DeltaPresentation {
  TopologicalType type;
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;

  bool has_symbol(const GeneratorSymbol& s) const;
};

// Canonical presentation of the quotient-orbifold group:
//   non-separating, k >= 1:  e_1..e_k, c_1..c_k, d_{k+1}..d_{g+1};
//     relators c_i^2, e_i c_i e_i^-1 c_i^-1, e_1..e_k d_{k+1}^2..d_{g+1}^2
//   non-separating, k = 0:   d_1..d_{g+1}; relator d_1^2..d_{g+1}^2
//   separating:              e_1..e_k, c_1..c_k, a_1..a_m, b_1..b_m;
//     relators c_i^2, e_i c_i e_i^-1 c_i^-1,
//              e_1..e_k [a_1,b_1]..[a_m,b_m]
DeltaPresentation canonical_presentation(const TopologicalType& t);

// Coset representative of the orientation-reversing coset: d_{g+1} for
// non-separating types, c_k for separating ones.
GeneratorSymbol transversal_symbol(const TopologicalType& t);

// Automorphism of the presentation group given by a generator-to-word
// substitution table; unmapped generators go to themselves.
class DeltaAutomorphism {
 public:
  DeltaAutomorphism(std::string name, const TopologicalType& type,
                    std::map<GeneratorSymbol, Word> images);

  const std::string& name() const { return name_; }
  const TopologicalType& type() const { return type_; }
  const std::map<GeneratorSymbol, Word>& images() const { return images_; }

  Word image_of(const GeneratorSymbol& s) const;
  Word apply(const Word& w) const;

 private:
  std::string name_;
  TopologicalType type_;
  std::map<GeneratorSymbol, Word> images_;
};

// Validating constructor: every mapped symbol and every symbol occurring in
// an image must belong to the canonical presentation of t, and each image
// must preserve the orientation character of its generator.  Throws
// std::invalid_argument otherwise.
DeltaAutomorphism make_automorphism(const std::string& name,
                                    const TopologicalType& t,
                                    const std::map<GeneratorSymbol, Word>& images);

DeltaAutomorphism identity_automorphism(const TopologicalType& t);

// Composition first∘second: generator g maps to first.apply(second(g)).
DeltaAutomorphism compose(const DeltaAutomorphism& first,
                          const DeltaAutomorphism& second);

// The named generating automorphisms for the type:
//   non-separating k = 0: A_1..A_g, B, C
//   non-separating k >= 1: D, R_1..R_{k-1}, M_{k+1}..M_{g-1}
//   separating: Z, T, N_1..N_{m-1}, M, R_1..R_{k-1}
// (The separating block-swap U exists only as a matrix; see the induced
// module.)
std::vector<DeltaAutomorphism> automorphism_catalog(const TopologicalType& t);

}  // namespace realmod

#endif  // REALMOD_WORDS_HPP
