#ifndef REALMOD_MEMBERSHIP_HPP
#define REALMOD_MEMBERSHIP_HPP

// Membership predicates for the image of the equivariant mapping classes
// inside the symplectic group of the double cover.
//
// A 2g x 2g integer matrix M belongs to the image exactly when the numbered
// conditions of its species hold:
//   empty (k = 0):      1. symplectic  2. commutes with the deck involution
//   non-separating k>0: 1-2 as above
//                       3. M permutes the oval classes X_1..X_k up to
//                          individual signs: M*X_i = s_i * X_{pi(i)}
//                       4. for i > k: (M*X_i, X_j) = 0 for all j and
//                          (M*X_i, Y_j) is even for j <= k
//   separating:         1-2 as above
//                       3. some global sign eps maps the oval-class multiset
//                          onto eps times itself, and the two handle blocks
//                          H_1, H_2 are preserved (eps=+1) or swapped
//                          (eps=-1) modulo the span W of X_1..X_{k-1}
// Condition 3 (separating) tries eps=+1 first; for one or two ovals both
// signs give the same class multiset and the block condition decides.

#include <string>
#include <vector>

#include "realmod/matrix.hpp"
#include "realmod/surface.hpp"

namespace realmod {

struct ConditionResult {
  int id = 0;
  bool passed = false;
  // On failure, pins the violating index/value (e.g. "(h(X_2),Y_1)=1 odd");
  // on pass, may carry the recorded data (permutation, signs, eps).
  std::string witness;
};

struct MembershipReport {
  TopologicalType type;
  std::vector<ConditionResult> conditions;
  bool member = false;

  // Filled when condition 3 passes.
  //   non-separating: M*X_i = signs[i-1] * X_{permutation[i-1]}
  //   separating:     M*O_i = epsilon * O_{permutation[i-1]} over the oval
  //                   classes O_1..O_k, all with the same sign epsilon
  int epsilon = 0;               // +1 / -1 when determined, else 0
  std::vector<int> permutation;  // 1-based images
  std::vector<int> signs;        // per-oval signs, non-separating only

  // One line per condition, "COND<n> PASS|FAIL <witness>", then a final
  // "VERDICT yes|no" line.
  std::string to_text() const;
};

// `symbol` is the name used for the matrix inside witness strings.
// All checks throw std::invalid_argument unless M is 2g x 2g.
MembershipReport check_empty(const ExactMatrix& M, const TopologicalType& t,
                             const std::string& symbol = "h");
MembershipReport check_nonseparating(const ExactMatrix& M,
                                     const TopologicalType& t,
                                     const std::string& symbol = "h");
MembershipReport check_separating(const ExactMatrix& M,
                                  const TopologicalType& t,
                                  const std::string& symbol = "h");

// Dispatches to the species-appropriate predicate.
MembershipReport check_membership(const ExactMatrix& M,
                                  const TopologicalType& t,
                                  const std::string& symbol = "h");

// Genus-2, one-oval matrix that is symplectic, commutes with the deck
// involution and fixes the oval class, yet fails the evenness condition 4
// with witness (h(X_2),Y_1)=1 — the standard demonstration that conditions
// 1-3 alone do not characterize the image.
ExactMatrix counterexample_matrix();
TopologicalType counterexample_type();

}  // namespace realmod

#endif  // REALMOD_MEMBERSHIP_HPP
