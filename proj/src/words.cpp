#include "realmod/words.hpp"

#include <sstream>
#include <stdexcept>

namespace realmod {

namespace {

char kind_char(GenKind k) {
  switch (k) {
    case GenKind::E: return 'e';
    case GenKind::C: return 'c';
    case GenKind::D: return 'd';
    case GenKind::A: return 'a';
    case GenKind::B: return 'b';
  }
  throw std::logic_error("unreachable generator kind");
}

}  // namespace

std::string GeneratorSymbol::label() const {
  return kind_char(kind) + std::to_string(index);
}

int GeneratorSymbol::orientation_character() const {
  switch (kind) {
    case GenKind::E:
    case GenKind::A:
    case GenKind::B:
      return 0;
    case GenKind::C:
    case GenKind::D:
      return 1;
  }
  throw std::logic_error("unreachable generator kind");
}

GeneratorSymbol sym_e(int i) { return {GenKind::E, i}; }
GeneratorSymbol sym_c(int i) { return {GenKind::C, i}; }
GeneratorSymbol sym_d(int i) { return {GenKind::D, i}; }
GeneratorSymbol sym_a(int i) { return {GenKind::A, i}; }
GeneratorSymbol sym_b(int i) { return {GenKind::B, i}; }

Word Word::parse(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int exp = 1;
    if (token.size() > 1 && token.back() == '\'') {
      exp = -1;
      token.pop_back();
    }
    if (token.size() < 2)
      throw std::invalid_argument("word syntax: bad symbol \"" + token + "\"");
    GenKind kind;
    switch (token[0]) {
      case 'e': kind = GenKind::E; break;
      case 'c': kind = GenKind::C; break;
      case 'd': kind = GenKind::D; break;
      case 'a': kind = GenKind::A; break;
      case 'b': kind = GenKind::B; break;
      default:
        throw std::invalid_argument("word syntax: unknown generator family in \"" +
                                    token + "\"");
    }
    std::size_t used = 0;
    int index = 0;
    try {
      index = std::stoi(token.substr(1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("word syntax: bad index in \"" + token + "\"");
    }
    if (used != token.size() - 1 || index < 1)
      throw std::invalid_argument("word syntax: bad index in \"" + token + "\"");
    w.append({kind, index}, exp);
  }
  return w;
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i].sym.label();
    if (letters_[i].exp < 0) os << '\'';
  }
  return os.str();
}

void Word::append(const GeneratorSymbol& s, int exp) {
  if (exp != 1 && exp != -1)
    throw std::invalid_argument("word letters carry exponent +1 or -1");
  if (!letters_.empty() && letters_.back().sym == s &&
      letters_.back().exp == -exp) {
    letters_.pop_back();
    return;
  }
  letters_.push_back({s, exp});
}

void Word::append(const Word& w) {
  for (const Letter& l : w.letters_) append(l);
}

Word Word::inverse() const {
  Word out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.append(it->sym, -it->exp);
  return out;
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out.append(rhs);
  return out;
}

int Word::orientation_character() const {
  int chi = 0;
  for (const Letter& l : letters_) chi ^= l.sym.orientation_character();
  return chi;
}

Word operator""_w(const char* text, std::size_t) { return Word::parse(text); }

bool DeltaPresentation::has_symbol(const GeneratorSymbol& s) const {
  for (const GeneratorSymbol& g : generators)
    if (g == s) return true;
  return false;
}

DeltaPresentation canonical_presentation(const TopologicalType& t) {
  t.validate();
  const int g = t.genus;
  const int k = t.ovals;
  DeltaPresentation p;
  p.type = t;
  Word long_relator;
  if (!t.separating()) {
    for (int i = 1; i <= k; ++i) p.generators.push_back(sym_e(i));
    for (int i = 1; i <= k; ++i) p.generators.push_back(sym_c(i));
    for (int j = k + 1; j <= g + 1; ++j) p.generators.push_back(sym_d(j));
    for (int i = 1; i <= k; ++i) long_relator.append(sym_e(i), 1);
    for (int j = k + 1; j <= g + 1; ++j) {
      long_relator.append(sym_d(j), 1);
      long_relator.append(sym_d(j), 1);
    }
  } else {
    const int m = t.half_blocks();
    for (int i = 1; i <= k; ++i) p.generators.push_back(sym_e(i));
    for (int i = 1; i <= k; ++i) p.generators.push_back(sym_c(i));
    for (int j = 1; j <= m; ++j) {
      p.generators.push_back(sym_a(j));
      p.generators.push_back(sym_b(j));
    }
    for (int i = 1; i <= k; ++i) long_relator.append(sym_e(i), 1);
    for (int j = 1; j <= m; ++j) {
      long_relator.append(sym_a(j), 1);
      long_relator.append(sym_b(j), 1);
      long_relator.append(sym_a(j), -1);
      long_relator.append(sym_b(j), -1);
    }
  }
  for (int i = 1; i <= k; ++i) {
    Word sq;
    sq.append(sym_c(i), 1);
    sq.append(sym_c(i), 1);
    p.relators.push_back(sq);
    Word comm;
    comm.append(sym_e(i), 1);
    comm.append(sym_c(i), 1);
    comm.append(sym_e(i), -1);
    comm.append(sym_c(i), -1);
    p.relators.push_back(comm);
  }
  p.relators.push_back(long_relator);
  return p;
}

GeneratorSymbol transversal_symbol(const TopologicalType& t) {
  t.validate();
  return t.separating() ? sym_c(t.ovals) : sym_d(t.genus + 1);
}

DeltaAutomorphism::DeltaAutomorphism(std::string name,
                                     const TopologicalType& type,
                                     std::map<GeneratorSymbol, Word> images)
    : name_(std::move(name)), type_(type), images_(std::move(images)) {}

Word DeltaAutomorphism::image_of(const GeneratorSymbol& s) const {
  auto it = images_.find(s);
  if (it != images_.end()) return it->second;
  Word w;
  w.append(s, 1);
  return w;
}

Word DeltaAutomorphism::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    Word img = image_of(l.sym);
    out.append(l.exp > 0 ? img : img.inverse());
  }
  return out;
}

DeltaAutomorphism make_automorphism(
    const std::string& name, const TopologicalType& t,
    const std::map<GeneratorSymbol, Word>& images) {
  DeltaPresentation p = canonical_presentation(t);
  for (const auto& [sym, img] : images) {
    if (!p.has_symbol(sym))
      throw std::invalid_argument("automorphism " + name + ": symbol " +
                                  sym.label() + " not in the presentation");
    int chi = 0;
    for (const Letter& l : img.letters()) {
      if (!p.has_symbol(l.sym))
        throw std::invalid_argument("automorphism " + name + ": image of " +
                                    sym.label() + " uses foreign symbol " +
                                    l.sym.label());
      chi ^= l.sym.orientation_character();
    }
    if (chi != sym.orientation_character())
      throw std::invalid_argument("automorphism " + name + ": image of " +
                                  sym.label() +
                                  " changes the orientation character");
  }
  return DeltaAutomorphism(name, t, images);
}

DeltaAutomorphism identity_automorphism(const TopologicalType& t) {
  return DeltaAutomorphism("id", t, {});
}

DeltaAutomorphism compose(const DeltaAutomorphism& first,
                          const DeltaAutomorphism& second) {
  if (!(first.type() == second.type()))
    throw std::invalid_argument("compose: presentation mismatch");
  std::map<GeneratorSymbol, Word> images;
  for (const GeneratorSymbol& g :
       canonical_presentation(first.type()).generators) {
    images[g] = first.apply(second.image_of(g));
  }
  return DeltaAutomorphism(first.name() + "*" + second.name(), first.type(),
                           images);
}

namespace {

// x -> w means images[x] = parse(w)
void set_image(std::map<GeneratorSymbol, Word>& images,
               const GeneratorSymbol& s, const Word& w) {
  images[s] = w;
}

Word letters(std::initializer_list<Letter> ls) {
  Word w;
  for (const Letter& l : ls) w.append(l);
  return w;
}

}  // namespace

std::vector<DeltaAutomorphism> automorphism_catalog(const TopologicalType& t) {
  t.validate();
  const int g = t.genus;
  const int k = t.ovals;
  std::vector<DeltaAutomorphism> out;

  if (!t.separating() && k == 0) {
    // A_i: adjacent crosscap swap; B: order-reversing inversion; C: shear.
    for (int i = 1; i <= g; ++i) {
      std::map<GeneratorSymbol, Word> im;
      set_image(im, sym_d(i),
                letters({{sym_d(i), 1},
                         {sym_d(i), 1},
                         {sym_d(i + 1), 1},
                         {sym_d(i), -1},
                         {sym_d(i), -1}}));
      set_image(im, sym_d(i + 1), letters({{sym_d(i), 1}}));
      out.push_back(make_automorphism("A_" + std::to_string(i), t, im));
    }
    {
      std::map<GeneratorSymbol, Word> im;
      for (int j = 1; j <= g + 1; ++j)
        set_image(im, sym_d(j), letters({{sym_d(g - j + 2), -1}}));
      out.push_back(make_automorphism("B", t, im));
    }
    {
      std::map<GeneratorSymbol, Word> im;
      set_image(im, sym_d(1),
                letters({{sym_d(1), 1}, {sym_d(2), -1}, {sym_d(1), -1}}));
      set_image(im, sym_d(2),
                letters({{sym_d(1), 1}, {sym_d(2), 1}, {sym_d(2), 1}}));
      out.push_back(make_automorphism("C", t, im));
    }
    return out;
  }

  if (!t.separating()) {
    // D: boundary shear on (e_k, d_{k+1}); R_i: adjacent oval swap;
    // M_j: adjacent crosscap swap inside the d-range.
    {
      std::map<GeneratorSymbol, Word> im;
      set_image(im, sym_e(k),
                letters({{sym_e(k), 1},
                         {sym_d(k + 1), 1},
                         {sym_e(k), -1},
                         {sym_d(k + 1), -1},
                         {sym_e(k), -1}}));
      set_image(im, sym_d(k + 1), letters({{sym_e(k), 1}, {sym_d(k + 1), 1}}));
      set_image(im, sym_c(k),
                letters({{sym_e(k), 1},
                         {sym_d(k + 1), 1},
                         {sym_c(k), 1},
                         {sym_d(k + 1), -1},
                         {sym_e(k), -1}}));
      out.push_back(make_automorphism("D", t, im));
    }
    for (int i = 1; i <= k - 1; ++i) {
      std::map<GeneratorSymbol, Word> im;
      set_image(im, sym_e(i),
                letters({{sym_e(i), 1}, {sym_e(i + 1), 1}, {sym_e(i), -1}}));
      set_image(im, sym_e(i + 1), letters({{sym_e(i), 1}}));
      set_image(im, sym_c(i),
                letters({{sym_e(i), 1}, {sym_c(i + 1), 1}, {sym_e(i), -1}}));
      set_image(im, sym_c(i + 1), letters({{sym_c(i), 1}}));
      out.push_back(make_automorphism("R_" + std::to_string(i), t, im));
    }
    for (int j = k + 1; j <= g - 1; ++j) {
      std::map<GeneratorSymbol, Word> im;
      set_image(im, sym_d(j),
                letters({{sym_d(j), 1},
                         {sym_d(j), 1},
                         {sym_d(j + 1), 1},
                         {sym_d(j), -1},
                         {sym_d(j), -1}}));
      set_image(im, sym_d(j + 1), letters({{sym_d(j), 1}}));
      out.push_back(make_automorphism("M_" + std::to_string(j), t, im));
    }
    return out;
  }

  // Separating case.
  const int m = t.half_blocks();
  if (m >= 1) {
    {
      std::map<GeneratorSymbol, Word> im;
      set_image(im, sym_a(1), letters({{sym_a(1), 1}, {sym_b(1), 1}}));
      out.push_back(make_automorphism("Z", t, im));
    }
    {
      std::map<GeneratorSymbol, Word> im;
      set_image(im, sym_a(1), letters({{sym_a(1), 1}, {sym_b(1), 1}}));
      set_image(im, sym_b(1), letters({{sym_a(1), -1}}));
      out.push_back(make_automorphism("T", t, im));
    }
    for (int i = 1; i <= m - 1; ++i) {
      std::map<GeneratorSymbol, Word> im;
      Word w = letters({{sym_a(i + 1), 1},
                        {sym_b(i + 1), 1},
                        {sym_a(i + 1), -1},
                        {sym_b(i + 1), -1}});
      set_image(im, sym_a(i), letters({{sym_a(i + 1), 1}}));
      set_image(im, sym_b(i), letters({{sym_b(i + 1), 1}}));
      Word ai;
      ai.append(w.inverse());
      ai.append(sym_a(i), 1);
      ai.append(w);
      set_image(im, sym_a(i + 1), ai);
      Word bi;
      bi.append(w.inverse());
      bi.append(sym_b(i), 1);
      bi.append(w);
      set_image(im, sym_b(i + 1), bi);
      out.push_back(make_automorphism("N_" + std::to_string(i), t, im));
    }
    {
      // Boundary-handle shear; conjugates the short e/c generators so that
      // every defining relator is carried to a conjugate of a relator.
      std::map<GeneratorSymbol, Word> im;
      set_image(im, sym_e(k),
                letters({{sym_a(1), -1}, {sym_e(k), 1}, {sym_a(1), 1}}));
      set_image(im, sym_a(1),
                letters({{sym_a(1), -1},
                         {sym_e(k), -1},
                         {sym_a(1), 1},
                         {sym_e(k), 1},
                         {sym_a(1), 1}}));
      set_image(im, sym_b(1),
                letters({{sym_b(1), 1},
                         {sym_a(1), -1},
                         {sym_e(k), 1},
                         {sym_a(1), 1}}));
      for (int i = 1; i <= k - 1; ++i) {
        set_image(im, sym_e(i),
                  letters({{sym_a(1), 1}, {sym_e(i), 1}, {sym_a(1), -1}}));
        set_image(im, sym_c(i),
                  letters({{sym_a(1), 1}, {sym_c(i), 1}, {sym_a(1), -1}}));
      }
      out.push_back(make_automorphism("M", t, im));
    }
  }
  for (int i = 1; i <= k - 1; ++i) {
    std::map<GeneratorSymbol, Word> im;
    set_image(im, sym_e(i),
              letters({{sym_e(i), 1}, {sym_e(i + 1), 1}, {sym_e(i), -1}}));
    set_image(im, sym_e(i + 1), letters({{sym_e(i), 1}}));
    set_image(im, sym_c(i),
              letters({{sym_e(i), 1}, {sym_c(i + 1), 1}, {sym_e(i), -1}}));
    set_image(im, sym_c(i + 1), letters({{sym_c(i), 1}}));
    out.push_back(make_automorphism("R_" + std::to_string(i), t, im));
  }
  return out;
}

}  // namespace realmod
