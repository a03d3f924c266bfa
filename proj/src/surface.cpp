#include "realmod/surface.hpp"

#include <sstream>
#include <stdexcept>

namespace realmod {

namespace {

[[noreturn]] void bad_type(const std::string& why) {
  throw std::invalid_argument("invalid topological type: " + why);
}

}  // namespace

int TopologicalType::half_blocks() const {
  if (!separating()) return 0;
  return (genus - ovals + 1) / 2;
}

void TopologicalType::validate() const {
  if (genus < 1) bad_type("genus must be at least 1");
  if (species == SpeciesKind::NonSeparating) {
    if (ovals < 0 || ovals > genus)
      bad_type("non-separating oval count must satisfy 0 <= k <= g");
  } else {
    if (ovals < 1 || ovals > genus + 1)
      bad_type("separating oval count must satisfy 0 < k <= g+1");
    if ((ovals - (genus + 1)) % 2 != 0)
      bad_type("separating oval count must have the parity of g+1");
  }
}

std::string TopologicalType::type_token() const {
  std::ostringstream os;
  os << (separating() ? '+' : '-') << ovals;
  return os.str();
}

std::string TopologicalType::to_string() const {
  std::ostringstream os;
  os << "g=" << genus << ",type=" << type_token();
  return os.str();
}

TopologicalType TopologicalType::parse(const std::string& text) {
  const std::string g_prefix = "g=";
  const std::string t_prefix = ",type=";
  if (text.compare(0, g_prefix.size(), g_prefix) != 0)
    bad_type("expected \"g=<genus>,type=<sign><ovals>\", got \"" + text + "\"");
  std::size_t tpos = text.find(t_prefix);
  if (tpos == std::string::npos)
    bad_type("expected \"g=<genus>,type=<sign><ovals>\", got \"" + text + "\"");
  std::string g_text = text.substr(g_prefix.size(), tpos - g_prefix.size());
  std::string k_text = text.substr(tpos + t_prefix.size());
  if (k_text.size() < 2 || (k_text[0] != '-' && k_text[0] != '+'))
    bad_type("type token must look like -1 or +2, got \"" + k_text + "\"");
  TopologicalType t;
  t.species = k_text[0] == '+' ? SpeciesKind::Separating
                               : SpeciesKind::NonSeparating;
  try {
    std::size_t used = 0;
    t.genus = std::stoi(g_text, &used);
    if (used != g_text.size()) throw std::invalid_argument(g_text);
    t.ovals = std::stoi(k_text.substr(1), &used);
    if (used != k_text.size() - 1) throw std::invalid_argument(k_text);
  } catch (const std::exception&) {
    bad_type("could not parse numbers in \"" + text + "\"");
  }
  if (t.ovals < 0) bad_type("oval count must be non-negative");
  t.validate();
  return t;
}

std::vector<TopologicalType> enumerate_types(int genus) {
  if (genus < 1)
    throw std::invalid_argument("genus must be at least 1");
  std::vector<TopologicalType> out;
  for (int k = 0; k <= genus; ++k)
    out.push_back({genus, SpeciesKind::NonSeparating, k});
  for (int k = (genus % 2 == 0) ? 1 : 2; k <= genus + 1; k += 2)
    out.push_back({genus, SpeciesKind::Separating, k});
  for (const TopologicalType& t : out) t.validate();
  return out;
}

ExactMatrix symplectic_form(int genus) {
  ExactMatrix j(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    j.at(i, genus + i) = 1;
    j.at(genus + i, i) = -1;
  }
  return j;
}

Int intersection(const Vec& u, const Vec& v, const ExactMatrix& form) {
  return dot(u, form.apply(v));
}

ExactMatrix sigma_matrix(const TopologicalType& t) {
  t.validate();
  const int g = t.genus;
  const int k = t.ovals;
  ExactMatrix s(2 * g, 2 * g);
  if (!t.separating()) {
    // X_i -> X_i; Y_i -> -Y_i - sum_j X_j, with an extra -X_i for i > k.
    for (int i = 0; i < g; ++i) {
      s.at(i, i) = 1;
      s.at(g + i, g + i) = -1;
      for (int j = 0; j < g; ++j) s.at(j, g + i) -= 1;
      if (i >= k) s.at(i, g + i) -= 1;
    }
  } else {
    const int m = t.half_blocks();
    // Oval-adjacent part: X_i fixed, Y_i negated (i < k).  Swapped handles:
    // X offset by +-m with sign +1, Y with sign -1.
    for (int i = 0; i < k - 1; ++i) {
      s.at(i, i) = 1;
      s.at(g + i, g + i) = -1;
    }
    for (int j = 0; j < m; ++j) {
      int lo = k - 1 + j;       // 0-based index of X_{k+j-1+1}
      int hi = k - 1 + m + j;
      s.at(hi, lo) = 1;
      s.at(lo, hi) = 1;
      s.at(g + hi, g + lo) = -1;
      s.at(g + lo, g + hi) = -1;
    }
  }
  // The defining properties of an orientation-reversing involution on
  // homology; construction errors here would poison everything downstream.
  if (s * s != ExactMatrix::identity(2 * g))
    throw std::logic_error("involution matrix does not square to identity");
  ExactMatrix j = symplectic_form(g);
  if (s.transpose() * j * s != -j)
    throw std::logic_error("involution matrix does not reverse the form");
  return s;
}

std::vector<Vec> oval_classes(const TopologicalType& t) {
  t.validate();
  const int g = t.genus;
  const int k = t.ovals;
  std::vector<Vec> out;
  if (!t.separating()) {
    for (int i = 0; i < k; ++i) {
      Vec v(2 * g, Int(0));
      v[i] = 1;
      out.push_back(v);
    }
  } else {
    Vec last(2 * g, Int(0));
    for (int i = 0; i < k - 1; ++i) {
      Vec v(2 * g, Int(0));
      v[i] = 1;
      out.push_back(v);
      last[i] = -1;
    }
    out.push_back(last);
  }
  return out;
}

std::vector<Vec> fixed_sublattice(const TopologicalType& t) {
  t.validate();
  const int g = t.genus;
  const int k = t.ovals;
  std::vector<Vec> out;
  if (!t.separating()) {
    for (int i = 0; i < g; ++i) {
      Vec v(2 * g, Int(0));
      v[i] = 1;
      out.push_back(v);
    }
  } else {
    const int m = t.half_blocks();
    for (int i = 0; i < k - 1; ++i) {
      Vec v(2 * g, Int(0));
      v[i] = 1;
      out.push_back(v);
    }
    for (int j = 0; j < m; ++j) {
      Vec v(2 * g, Int(0));
      v[k - 1 + j] = 1;
      v[k - 1 + m + j] = 1;
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace realmod
