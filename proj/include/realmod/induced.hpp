#ifndef REALMOD_INDUCED_HPP
#define REALMOD_INDUCED_HPP

// Matrices induced on double-cover homology by presentation automorphisms.
//
// An automorphism phi of the canonical presentation acts on the homology
// lattice Z^(2g) of the orientation double cover through the coset table:
// column i of the induced matrix is the table value of phi applied to the
// stored preimage word of basis vector i.  Before returning, the builder
// verifies that every relator image still folds to zero from both cosets,
// that the matrix preserves the symplectic form, and that it commutes with
// the deck involution; any failure throws std::logic_error.

#include <string>
#include <vector>

#include "realmod/matrix.hpp"
#include "realmod/surface.hpp"
#include "realmod/theta.hpp"
#include "realmod/words.hpp"

namespace realmod {

// 2g x 2g matrix of the action of phi on the double-cover homology lattice.
ExactMatrix induced_matrix(const DeltaAutomorphism& phi,
                           const ThetaTable& table);

// Top-left g x g block of a 2g x 2g matrix that preserves the sublattice
// spanned by X_1..X_g (non-separating types only).  Throws std::logic_error
// if any Y-row has a nonzero entry in an X-column, i.e. if the sublattice is
// not actually preserved.
ExactMatrix v0_restriction(const ExactMatrix& full, const TopologicalType& t);

// Extra involution for separating types: negates the pairs (X_i, Y_i) for
// i < k and swaps the two handle blocks with positive signs.  It commutes
// with the deck involution and squares to the identity but does not come
// from a presentation automorphism.  Throws std::invalid_argument for
// non-separating types.
ExactMatrix swap_involution_matrix(const TopologicalType& t);

struct CatalogEntry {
  std::string name;
  bool matrix_only = false;  // true for the swap involution
  DeltaAutomorphism phi;     // identity placeholder when matrix_only
  ExactMatrix matrix{0, 0};
};

// Automorphism catalog of the type together with induced matrices, plus the
// swap involution for separating types.
std::vector<CatalogEntry> catalog_with_matrices(const TopologicalType& t);

}  // namespace realmod

#endif  // REALMOD_INDUCED_HPP
