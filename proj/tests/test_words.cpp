#include <stdexcept>

#include "doctest.h"
#include "realmod/words.hpp"

using namespace realmod;

TEST_CASE("word parsing, printing, and free reduction") {
  Word w = Word::parse("e1 c2 d3'");
  CHECK(w.size() == 3);
  CHECK(w.to_string() == "e1 c2 d3'");
  CHECK("e1 c2 d3'"_w == w);

  // Appending an inverse pair cancels immediately.
  Word r = Word::parse("e1 e1'");
  CHECK(r.empty());
  CHECK(Word::parse("e1 c1 c1' e1'").empty());
  Word partial = Word::parse("e1 c1 c1' e2");
  CHECK(partial.to_string() == "e1 e2");

  CHECK(Word::parse("").empty());
  CHECK_THROWS_AS(Word::parse("q7"), std::invalid_argument);
}

TEST_CASE("word inverse and concatenation") {
  Word w = Word::parse("a1 b2' c1");
  CHECK(w.inverse().to_string() == "c1' b2 a1'");
  CHECK((w * w.inverse()).empty());
  CHECK((w.inverse() * w).empty());
  Word u = Word::parse("c1' d2");
  CHECK((w * u).to_string() == "a1 b2' d2");  // c1 c1' cancels at the seam
}

TEST_CASE("orientation character") {
  CHECK(Word::parse("e1 a1 b1").orientation_character() == 0);
  CHECK(Word::parse("c1").orientation_character() == 1);
  CHECK(Word::parse("d1 d2").orientation_character() == 0);
  CHECK(Word::parse("d1 c1 e1").orientation_character() == 0);
  CHECK(Word::parse("d1'").orientation_character() == 1);
}

TEST_CASE("canonical presentations by species") {
  // non-separating k >= 1: e_1..e_k, c_1..c_k, d_{k+1}..d_{g+1};
  // relators: c_i^2, [e_i, c_i], e_1..e_k d_{k+1}^2..d_{g+1}^2
  TopologicalType t = TopologicalType::parse("g=3,type=-2");
  DeltaPresentation p = canonical_presentation(t);
  CHECK(p.generators.size() == 2 + 2 + 2);
  CHECK(p.relators.size() == 2 + 2 + 1);
  CHECK(p.has_symbol(sym_e(1)));
  CHECK(p.has_symbol(sym_c(2)));
  CHECK(p.has_symbol(sym_d(3)));
  CHECK(p.has_symbol(sym_d(4)));
  CHECK(!p.has_symbol(sym_d(2)));
  CHECK(!p.has_symbol(sym_a(1)));

  // k = 0: d_1..d_{g+1}, single relator d_1^2..d_{g+1}^2
  TopologicalType t0 = TopologicalType::parse("g=3,type=-0");
  DeltaPresentation p0 = canonical_presentation(t0);
  CHECK(p0.generators.size() == 4);
  REQUIRE(p0.relators.size() == 1);
  CHECK(p0.relators[0].to_string() == "d1 d1 d2 d2 d3 d3 d4 d4");

  // separating: e_1..e_k, c_1..c_k, a_1..a_m, b_1..b_m
  TopologicalType ts = TopologicalType::parse("g=5,type=+2");
  DeltaPresentation ps = canonical_presentation(ts);
  CHECK(ps.generators.size() == 2 + 2 + 2 + 2);  // k=2, m=2
  CHECK(ps.relators.size() == 2 + 2 + 1);
  CHECK(ps.has_symbol(sym_a(2)));
  CHECK(ps.has_symbol(sym_b(2)));
  CHECK(!ps.has_symbol(sym_d(1)));
}

TEST_CASE("every relator is orientation-preserving") {
  for (int g = 1; g <= 6; ++g)
    for (const TopologicalType& t : enumerate_types(g))
      for (const Word& r : canonical_presentation(t).relators)
        CHECK(r.orientation_character() == 0);
}

TEST_CASE("transversal symbol reverses orientation") {
  for (int g = 1; g <= 6; ++g)
    for (const TopologicalType& t : enumerate_types(g)) {
      GeneratorSymbol s = transversal_symbol(t);
      CHECK(s.orientation_character() == 1);
      CHECK(canonical_presentation(t).has_symbol(s));
      if (t.separating())
        CHECK(s == sym_c(t.ovals));
      else
        CHECK(s == sym_d(t.genus + 1));
    }
}

TEST_CASE("automorphism apply substitutes and reduces") {
  TopologicalType t = TopologicalType::parse("g=3,type=-0");
  std::map<GeneratorSymbol, Word> images;
  images[sym_d(1)] = Word::parse("d1 d2' d1'");
  images[sym_d(2)] = Word::parse("d1 d2 d2");
  DeltaAutomorphism gamma = make_automorphism("gamma", t, images);
  CHECK(gamma.image_of(sym_d(3)) == Word::parse("d3"));
  CHECK(gamma.apply(Word::parse("d1 d2")) == Word::parse("d1 d2' d2 d2"));
  // The image of the inverse is the inverse of the image.
  Word w = Word::parse("d2 d1'");
  CHECK(gamma.apply(w.inverse()) == gamma.apply(w).inverse());
}

TEST_CASE("automorphism validation rejects bad data") {
  TopologicalType t = TopologicalType::parse("g=3,type=-0");
  // Unknown target symbol in an image.
  std::map<GeneratorSymbol, Word> bad1;
  bad1[sym_d(1)] = Word::parse("e1");
  CHECK_THROWS_AS(make_automorphism("x", t, bad1), std::invalid_argument);
  // Unknown mapped symbol.
  std::map<GeneratorSymbol, Word> bad2;
  bad2[sym_e(1)] = Word::parse("d1");
  CHECK_THROWS_AS(make_automorphism("x", t, bad2), std::invalid_argument);
  // Orientation character flips: d1 must map to an odd word.
  std::map<GeneratorSymbol, Word> bad3;
  bad3[sym_d(1)] = Word::parse("d1 d2");
  CHECK_THROWS_AS(make_automorphism("x", t, bad3), std::invalid_argument);
}

TEST_CASE("identity automorphism and composition") {
  TopologicalType t = TopologicalType::parse("g=4,type=-2");
  DeltaAutomorphism id = identity_automorphism(t);
  Word w = Word::parse("e1 c2 d3 d5'");
  CHECK(id.apply(w) == w);
  std::vector<DeltaAutomorphism> cat = automorphism_catalog(t);
  REQUIRE(!cat.empty());
  for (const DeltaAutomorphism& phi : cat) {
    CHECK(compose(phi, id).apply(w) == phi.apply(w));
    CHECK(compose(id, phi).apply(w) == phi.apply(w));
  }
  // compose(f, g) applies g first.
  DeltaAutomorphism fg = compose(cat[0], cat.back());
  CHECK(fg.apply(w) == cat[0].apply(cat.back().apply(w)));
}

TEST_CASE("catalog names per species") {
  auto names = [](const std::string& token) {
    std::string out;
    for (const DeltaAutomorphism& a :
         automorphism_catalog(TopologicalType::parse(token))) {
      if (!out.empty()) out += " ";
      out += a.name();
    }
    return out;
  };
  CHECK(names("g=3,type=-0") == "A_1 A_2 A_3 B C");
  CHECK(names("g=3,type=-1") == "D M_2");
  CHECK(names("g=3,type=-3") == "D R_1 R_2");
  CHECK(names("g=4,type=-2") == "D R_1 M_3");
  CHECK(names("g=2,type=+1") == "Z T M");
  CHECK(names("g=5,type=+2") == "Z T N_1 M R_1");
  CHECK(names("g=3,type=+4") == "R_1 R_2 R_3");
  CHECK(names("g=1,type=+2") == "R_1");
}

TEST_CASE("catalog automorphisms preserve each relator's character") {
  for (int g = 1; g <= 5; ++g)
    for (const TopologicalType& t : enumerate_types(g)) {
      DeltaPresentation p = canonical_presentation(t);
      for (const DeltaAutomorphism& phi : automorphism_catalog(t))
        for (const Word& r : p.relators)
          CHECK(phi.apply(r).orientation_character() == 0);
    }
}
