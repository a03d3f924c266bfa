#ifndef REALMOD_SURFACE_HPP
#define REALMOD_SURFACE_HPP

#include <string>
#include <vector>

#include "realmod/matrix.hpp"

namespace realmod {

// Species of the fixed-point set of the involution: a non-separating fixed
// set leaves the complement connected (non-orientable quotient); a separating
// one cuts the surface into two halves (orientable quotient).
enum class SpeciesKind { NonSeparating, Separating };

// Topological type of an orientation-reversing involution: genus of the
// surface plus the number of ovals (fixed circles) and whether they separate.
struct TopologicalType {
  int genus = 0;
  SpeciesKind species = SpeciesKind::NonSeparating;
  int ovals = 0;

  bool separating() const { return species == SpeciesKind::Separating; }

  // Number of handle pairs swapped by the involution in the separating case:
  // m = (g - k + 1) / 2.
  int half_blocks() const;

  // Throws std::invalid_argument when the (g, k) combination violates the
  // oval-count bounds (0 <= k <= g non-separating; 0 < k <= g+1 and
  // k = g+1 mod 2 separating).
  void validate() const;

  // "-k" or "+k"
  std::string type_token() const;
  // "g=<g>,type=-<k>" / "g=<g>,type=+<k>"
  std::string to_string() const;
  static TopologicalType parse(const std::string& text);

  bool operator==(const TopologicalType& o) const {
    return genus == o.genus && species == o.species && ovals == o.ovals;
  }
};

// All valid types for a genus, non-separating first, oval count increasing.
std::vector<TopologicalType> enumerate_types(int genus);

// The 2g x 2g matrix J of the intersection form in basis order
// (X_1..X_g, Y_1..Y_g): (X_i, X_j) = (Y_i, Y_j) = 0, (X_i, Y_j) = delta_ij.
ExactMatrix symplectic_form(int genus);

// Intersection number u^T J v.
Int intersection(const Vec& u, const Vec& v, const ExactMatrix& form);

// Matrix of the induced involution on first homology.  Asserts that the
// result squares to the identity and reverses the intersection form
// (sigma^T J sigma = -J).
ExactMatrix sigma_matrix(const TopologicalType& t);

// Homology classes of the ovals, one per oval.  Non-separating: X_1..X_k.
// Separating: X_1..X_{k-1} plus the dependent class -(X_1+...+X_{k-1}) of the
// last oval; the k classes sum to zero, matching the boundary of either half.
// For one separating oval the single class is the zero vector.
std::vector<Vec> oval_classes(const TopologicalType& t);

// Basis of the sublattice of classes fixed by the involution, as far as it is
// spanned by X-classes: X_1..X_g (non-separating) or X_1..X_{k-1} together
// with X_i + X_{i+m} for the m swapped pairs (separating).
std::vector<Vec> fixed_sublattice(const TopologicalType& t);

}  // namespace realmod

#endif  // REALMOD_SURFACE_HPP
