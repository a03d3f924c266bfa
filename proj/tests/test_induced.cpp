#include <random>
#include <stdexcept>

#include "builders.hpp"
#include "doctest.h"
#include "realmod/induced.hpp"
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

const ExactMatrix& entry(const std::vector<CatalogEntry>& cat,
                         const std::string& name) {
  for (const CatalogEntry& e : cat)
    if (e.name == name) return e.matrix;
  throw std::runtime_error("missing catalog entry " + name);
}

// 0-based coordinate helpers for a separating type.
int xlo(const TopologicalType& t, int j) { return t.ovals - 1 + (j - 1); }
int xhi(const TopologicalType& t, int j) {
  return t.ovals - 1 + t.half_blocks() + (j - 1);
}

}  // namespace

TEST_CASE("identity automorphism induces the identity matrix") {
  for (int g = 1; g <= 4; ++g)
    for (const TopologicalType& t : enumerate_types(g)) {
      ThetaTable table = ThetaTable::build(t);
      CHECK(induced_matrix(identity_automorphism(t), table).is_identity());
    }
}

TEST_CASE("type mismatch is rejected") {
  ThetaTable table = ThetaTable::build(TopologicalType::parse("g=3,type=-1"));
  TopologicalType other = TopologicalType::parse("g=3,type=-2");
  CHECK_THROWS_AS(induced_matrix(identity_automorphism(other), table),
                  std::invalid_argument);
}

TEST_CASE("every catalog matrix is symplectic and equivariant") {
  for (int g = 1; g <= 5; ++g)
    for (const TopologicalType& t : enumerate_types(g)) {
      ExactMatrix j = symplectic_form(g);
      ExactMatrix sigma = sigma_matrix(t);
      for (const CatalogEntry& e : catalog_with_matrices(t)) {
        CHECK(e.matrix.transpose() * j * e.matrix == j);
        CHECK(e.matrix * sigma == sigma * e.matrix);
      }
    }
}

TEST_CASE("oval-free catalog restricts to the printed coordinate matrices") {
  for (int g = 3; g <= 5; ++g) {
    TopologicalType t = TopologicalType::parse("g=" + std::to_string(g) +
                                               ",type=-0");
    std::vector<CatalogEntry> cat = catalog_with_matrices(t);

    // A_i, i < g: pure swap of X_i and X_{i+1}.
    for (int i = 1; i < g; ++i) {
      ExactMatrix a =
          v0_restriction(entry(cat, "A_" + std::to_string(i)), t);
      ExactMatrix expect = ExactMatrix::identity(g);
      expect.swap_rows(i - 1, i);
      CHECK(a == expect);
    }
    // A_g swaps X_g with the dependent class -sum X_i.
    ExactMatrix ag = v0_restriction(entry(cat, "A_" + std::to_string(g)), t);
    for (int c = 0; c < g - 1; ++c) CHECK(ag.column(c) == basis(g, c));
    for (int r = 0; r < g; ++r) CHECK(ag.at(r, g - 1) == -1);

    // B: X_1 -> sum, X_j -> -X_{g-j+2}.
    ExactMatrix b = v0_restriction(entry(cat, "B"), t);
    for (int r = 0; r < g; ++r) CHECK(b.at(r, 0) == 1);
    for (int j = 2; j <= g; ++j) {
      Vec expect(g, Int(0));
      expect[g - j + 2 - 1] = -1;
      CHECK(b.column(j - 1) == expect);
    }

    // C: X_1 -> -X_2, X_2 -> X_1 + 2 X_2, rest fixed.
    ExactMatrix c = v0_restriction(entry(cat, "C"), t);
    ExactMatrix expect_c = ExactMatrix::identity(g);
    expect_c.at(0, 0) = 0;
    expect_c.at(1, 0) = -1;
    expect_c.at(0, 1) = 1;
    expect_c.at(1, 1) = 2;
    CHECK(c == expect_c);
  }
}

TEST_CASE("non-separating catalog: printed coordinate actions") {
  for (const std::string& token :
       {std::string("g=3,type=-1"), std::string("g=4,type=-2"),
        std::string("g=5,type=-3"), std::string("g=5,type=-5")}) {
    TopologicalType t = TopologicalType::parse(token);
    const int g = t.genus, k = t.ovals;
    std::vector<CatalogEntry> cat = catalog_with_matrices(t);

    // D: X_k -> -X_k, X_{k+1} -> X_{k+1} + 2 X_k, other X fixed.
    const ExactMatrix& d = entry(cat, "D");
    Vec dk(2 * g, Int(0));
    dk[k - 1] = -1;
    CHECK(d.column(k - 1) == dk);
    if (k < g) {
      Vec dk1(2 * g, Int(0));
      dk1[k] = 1;
      dk1[k - 1] = 2;
      CHECK(d.column(k) == dk1);
    }
    for (int l = 1; l <= g; ++l)
      if (l != k && l != k + 1) CHECK(d.column(l - 1) == basis(2 * g, l - 1));

    // R_i: swaps the pairs (X_i, X_{i+1}) and (Y_i, Y_{i+1}).
    for (int i = 1; i <= k - 1; ++i) {
      const ExactMatrix& r = entry(cat, "R_" + std::to_string(i));
      ExactMatrix expect = ExactMatrix::identity(2 * g);
      expect.swap_rows(i - 1, i);
      expect.swap_rows(g + i - 1, g + i);
      CHECK(r == expect);
    }

    // M_j: same shape above the oval range.
    for (int j = k + 1; j <= g - 1; ++j) {
      const ExactMatrix& mj = entry(cat, "M_" + std::to_string(j));
      ExactMatrix expect = ExactMatrix::identity(2 * g);
      expect.swap_rows(j - 1, j);
      expect.swap_rows(g + j - 1, g + j);
      CHECK(mj == expect);
    }
  }
}

TEST_CASE("separating catalog: printed coordinate actions") {
  for (const std::string& token :
       {std::string("g=5,type=+2"), std::string("g=4,type=+3"),
        std::string("g=2,type=+1")}) {
    TopologicalType t = TopologicalType::parse(token);
    const int g = t.genus, k = t.ovals, m = t.half_blocks();
    if (m < 1) continue;
    std::vector<CatalogEntry> cat = catalog_with_matrices(t);
    const int lo = xlo(t, 1), hi = xhi(t, 1);

    // Z: X at the first lower slot gains +Y, at the first upper slot -Y.
    const ExactMatrix& z = entry(cat, "Z");
    ExactMatrix expect_z = ExactMatrix::identity(2 * g);
    expect_z.at(g + lo, lo) = 1;
    expect_z.at(g + hi, hi) = -1;
    CHECK(z == expect_z);

    // T: adds to Z the rotations Y_lo -> -X_lo, Y_hi -> +X_hi.
    const ExactMatrix& tt = entry(cat, "T");
    ExactMatrix expect_t = ExactMatrix::identity(2 * g);
    expect_t.at(g + lo, lo) = 1;
    expect_t.at(g + hi, hi) = -1;
    expect_t.at(g + lo, g + lo) = 0;
    expect_t.at(lo, g + lo) = -1;
    expect_t.at(g + hi, g + hi) = 0;
    expect_t.at(hi, g + hi) = 1;
    CHECK(tt == expect_t);

    // N_i: swaps adjacent handle pairs inside both blocks.
    for (int i = 1; i <= m - 1; ++i) {
      const ExactMatrix& n = entry(cat, "N_" + std::to_string(i));
      ExactMatrix expect = ExactMatrix::identity(2 * g);
      expect.swap_rows(xlo(t, i), xlo(t, i + 1));
      expect.swap_rows(xhi(t, i), xhi(t, i + 1));
      expect.swap_rows(g + xlo(t, i), g + xlo(t, i + 1));
      expect.swap_rows(g + xhi(t, i), g + xhi(t, i + 1));
      CHECK(n == expect);
    }

    // M: shears the short Y-images by the boundary classes.
    const ExactMatrix& mu = entry(cat, "M");
    ExactMatrix expect_m = ExactMatrix::identity(2 * g);
    for (int i = 1; i <= k - 1; ++i) {
      expect_m.at(lo, g + i - 1) = -1;
      expect_m.at(hi, g + i - 1) = 1;
    }
    for (int i = 1; i <= k - 1; ++i) {
      expect_m.at(i - 1, g + lo) = -1;  // Y_lo gains -sum of short X
      expect_m.at(i - 1, g + hi) = 1;   // Y_hi gains +sum of short X
    }
    CHECK(mu == expect_m);
  }
}

TEST_CASE("separating catalog: the long oval swap") {
  TopologicalType t = TopologicalType::parse("g=4,type=+3");
  const int g = 4, k = 3;
  std::vector<CatalogEntry> cat = catalog_with_matrices(t);
  // R_1 (i <= k-2) is a clean pair swap.
  ExactMatrix expect_r1 = ExactMatrix::identity(2 * g);
  expect_r1.swap_rows(0, 1);
  expect_r1.swap_rows(g, g + 1);
  CHECK(entry(cat, "R_1") == expect_r1);
  // R_{k-1}: X_{k-1} -> -sum short X, Y_{k-1} -> -Y_{k-1},
  //          Y_i -> Y_i - Y_{k-1} for i <= k-2.
  const ExactMatrix& r2 = entry(cat, "R_2");
  Vec cx(2 * g, Int(0));
  for (int i = 0; i < k - 1; ++i) cx[i] = -1;
  CHECK(r2.column(k - 2) == cx);
  Vec cy(2 * g, Int(0));
  cy[g + k - 2] = -1;
  CHECK(r2.column(g + k - 2) == cy);
  for (int i = 1; i <= k - 2; ++i) {
    Vec ci(2 * g, Int(0));
    ci[g + i - 1] = 1;
    ci[g + k - 2] = -1;
    CHECK(r2.column(g + i - 1) == ci);
  }
  CHECK((r2 * r2).is_identity());
}

TEST_CASE("swap involution matrix") {
  for (const std::string& token :
       {std::string("g=3,type=+2"), std::string("g=5,type=+2"),
        std::string("g=4,type=+5"), std::string("g=2,type=+1")}) {
    TopologicalType t = TopologicalType::parse(token);
    const int g = t.genus, k = t.ovals, m = t.half_blocks();
    ExactMatrix u = swap_involution_matrix(t);
    CHECK((u * u).is_identity());
    ExactMatrix j = symplectic_form(g);
    CHECK(u.transpose() * j * u == j);
    ExactMatrix sigma = sigma_matrix(t);
    CHECK(u * sigma == sigma * u);
    for (int i = 1; i <= k - 1; ++i) {
      CHECK(u.at(i - 1, i - 1) == -1);
      CHECK(u.at(g + i - 1, g + i - 1) == -1);
    }
    for (int jj = 1; jj <= m; ++jj) {
      CHECK(u.column(xlo(t, jj)) == basis(2 * g, xhi(t, jj)));
      CHECK(u.column(xhi(t, jj)) == basis(2 * g, xlo(t, jj)));
      CHECK(u.column(g + xlo(t, jj)) == basis(2 * g, g + xhi(t, jj)));
      CHECK(u.column(g + xhi(t, jj)) == basis(2 * g, g + xlo(t, jj)));
    }
  }
  // Maximal oval count: no blocks left, pure negation.
  TopologicalType tmax = TopologicalType::parse("g=3,type=+4");
  CHECK(swap_involution_matrix(tmax) ==
        -ExactMatrix::identity(6));
  CHECK_THROWS_AS(swap_involution_matrix(TopologicalType::parse("g=3,type=-1")),
                  std::invalid_argument);
}

TEST_CASE("functoriality on catalog pairs") {
  for (const std::string& token :
       {std::string("g=3,type=-0"), std::string("g=3,type=-2"),
        std::string("g=4,type=+3")}) {
    TopologicalType t = TopologicalType::parse(token);
    ThetaTable table = ThetaTable::build(t);
    std::vector<DeltaAutomorphism> cat = automorphism_catalog(t);
    for (const DeltaAutomorphism& f : cat)
      for (const DeltaAutomorphism& h : cat)
        CHECK(induced_matrix(compose(f, h), table) ==
              induced_matrix(f, table) * induced_matrix(h, table));
  }
}

TEST_CASE("restriction is injective on sampled products") {
  TopologicalType t = TopologicalType::parse("g=4,type=-0");
  std::vector<CatalogEntry> cat = catalog_with_matrices(t);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> pick(0, (int)cat.size() - 1), len(0, 8);
  std::vector<ExactMatrix> fulls;
  for (int trial = 0; trial < 60; ++trial) {
    ExactMatrix m = ExactMatrix::identity(8);
    int n = len(rng);
    for (int i = 0; i < n; ++i) m = m * cat[pick(rng)].matrix;
    fulls.push_back(m);
  }
  for (std::size_t a = 0; a < fulls.size(); ++a)
    for (std::size_t b = a + 1; b < fulls.size(); ++b) {
      bool same_v0 = v0_restriction(fulls[a], t) == v0_restriction(fulls[b], t);
      bool same_full = fulls[a] == fulls[b];
      CHECK(same_v0 == same_full);
    }
}

TEST_CASE("injectivity forces the inversion to be an involution") {
  // Its restriction squares to the identity, so the full matrix must too.
  for (int g = 2; g <= 5; ++g) {
    TopologicalType t = TopologicalType::parse("g=" + std::to_string(g) +
                                               ",type=-0");
    ExactMatrix b = entry(catalog_with_matrices(t), "B");
    CHECK((b * b).is_identity());
  }
}

TEST_CASE("restriction rejects matrices that move the invariant sublattice") {
  TopologicalType t = TopologicalType::parse("g=2,type=-0");
  ExactMatrix j = symplectic_form(2);
  CHECK_THROWS_AS(v0_restriction(j, t), std::logic_error);
  CHECK_THROWS_AS(v0_restriction(ExactMatrix::identity(4),
                                 TopologicalType::parse("g=3,type=+2")),
                  std::invalid_argument);
}
