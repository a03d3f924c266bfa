#include "realmod/induced.hpp"

#include <stdexcept>

namespace realmod {

ExactMatrix induced_matrix(const DeltaAutomorphism& phi,
                           const ThetaTable& table) {
  if (!(phi.type() == table.type()))
    throw std::invalid_argument("automorphism and coset table type mismatch");
  const TopologicalType& t = table.type();
  const int dim = 2 * t.genus;

  for (const Word& r : table.presentation().relators) {
    Word image = phi.apply(r);
    for (int state = 0; state < 2; ++state) {
      int end = -1;
      Vec v = table.run(image, state, &end);
      if (!vec_is_zero(v) || end != state)
        throw std::logic_error("automorphism " + phi.name() +
                               " does not act on double-cover homology: "
                               "relator image " +
                               image.to_string() + " does not vanish");
    }
  }

  ExactMatrix result(dim, dim);
  for (int i = 0; i < dim; ++i) {
    Vec col = table.word_value(phi.apply(table.basis_preimage(i)));
    for (int r = 0; r < dim; ++r) result.at(r, i) = col[r];
  }

  // A quotient automorphism has two lifts to the double cover, differing by
  // the deck involution; the induced map is taken from the
  // orientation-preserving lift.  The raw column fold computes one of the
  // two, so when it reverses the intersection form, compose with the deck
  // involution to switch to the other.
  ExactMatrix J = symplectic_form(t.genus);
  ExactMatrix sigma = sigma_matrix(t);
  if (result.transpose() * J * result == -J) result = sigma * result;
  if (result.transpose() * J * result != J)
    throw std::logic_error("automorphism " + phi.name() +
                           " is not well-defined on homology: the induced "
                           "matrix does not preserve the intersection form");
  if (result * sigma != sigma * result)
    throw std::logic_error("automorphism " + phi.name() +
                           " is not well-defined on homology: the induced "
                           "matrix does not commute with the deck involution");
  return result;
}

ExactMatrix v0_restriction(const ExactMatrix& full, const TopologicalType& t) {
  t.validate();
  if (t.separating())
    throw std::invalid_argument(
        "invariant-sublattice restriction applies to non-separating types");
  const int g = t.genus;
  if (full.rows() != 2 * g || full.cols() != 2 * g)
    throw std::invalid_argument("matrix size does not match the type");
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c)
      if (full.at(g + r, c) != 0)
        throw std::logic_error(
            "matrix does not preserve the invariant sublattice");
  ExactMatrix top(g, g);
  for (int r = 0; r < g; ++r)
    for (int c = 0; c < g; ++c) top.at(r, c) = full.at(r, c);
  return top;
}

ExactMatrix swap_involution_matrix(const TopologicalType& t) {
  t.validate();
  if (!t.separating())
    throw std::invalid_argument(
        "swap involution exists only for separating types");
  const int g = t.genus;
  const int k = t.ovals;
  const int m = t.half_blocks();
  ExactMatrix u(2 * g, 2 * g);
  for (int i = 0; i < k - 1; ++i) {
    u.at(i, i) = -1;
    u.at(g + i, g + i) = -1;
  }
  for (int j = 0; j < m; ++j) {
    const int lo = k - 1 + j;  // 0-based X-coordinate in the lower block
    const int hi = lo + m;
    u.at(hi, lo) = 1;
    u.at(lo, hi) = 1;
    u.at(g + hi, g + lo) = 1;
    u.at(g + lo, g + hi) = 1;
  }
  return u;
}

std::vector<CatalogEntry> catalog_with_matrices(const TopologicalType& t) {
  ThetaTable table = ThetaTable::build(t);
  std::vector<CatalogEntry> entries;
  for (const DeltaAutomorphism& phi : automorphism_catalog(t))
    entries.push_back(
        CatalogEntry{phi.name(), false, phi, induced_matrix(phi, table)});
  if (t.separating())
    entries.push_back(CatalogEntry{"U", true, identity_automorphism(t),
                                   swap_involution_matrix(t)});
  return entries;
}

}  // namespace realmod
