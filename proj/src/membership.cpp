#include "realmod/membership.hpp"

#include <sstream>
#include <stdexcept>

namespace realmod {

namespace {

std::string coord_name(int idx, int g) {
  if (idx < g) return "X_" + std::to_string(idx + 1);
  return "Y_" + std::to_string(idx - g + 1);
}

void require_dims(const ExactMatrix& M, const TopologicalType& t) {
  t.validate();
  const std::size_t n = 2 * static_cast<std::size_t>(t.genus);
  if (M.rows() != n || M.cols() != n)
    throw std::invalid_argument("matrix size does not match the type");
}

// (v, X_j) = -v[Y_j-coordinate], (v, Y_j) = v[X_j-coordinate]; j 1-based.
Int pair_with_x(const Vec& v, int j, int g) { return -v[g + j - 1]; }
Int pair_with_y(const Vec& v, int j, int g) { return v[j - 1]; }

ConditionResult cond_symplectic(const ExactMatrix& M, const TopologicalType& t,
                                const std::string& sym) {
  ConditionResult r;
  r.id = 1;
  r.passed = true;
  const int g = t.genus;
  ExactMatrix J = symplectic_form(g);
  ExactMatrix P = M.transpose() * J * M;
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j)
      if (P.at(i, j) != J.at(i, j)) {
        r.passed = false;
        std::ostringstream os;
        os << "(" << sym << "(" << coord_name(i, g) << ")," << sym << "("
           << coord_name(j, g) << "))=" << P.at(i, j).get_str()
           << " expected " << J.at(i, j).get_str();
        r.witness = os.str();
        return r;
      }
  return r;
}

ConditionResult cond_commutes(const ExactMatrix& M, const TopologicalType& t,
                              const std::string& sym) {
  ConditionResult r;
  r.id = 2;
  r.passed = true;
  const int g = t.genus;
  ExactMatrix sigma = sigma_matrix(t);
  ExactMatrix D = M * sigma - sigma * M;
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j)
      if (D.at(i, j) != 0) {
        r.passed = false;
        std::ostringstream os;
        os << "(" << sym << "*sigma-sigma*" << sym << ")[" << coord_name(i, g)
           << "][" << coord_name(j, g) << "]=" << D.at(i, j).get_str();
        r.witness = os.str();
        return r;
      }
  return r;
}

std::string perm_text(const std::vector<int>& pi) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) os << " ";
    os << pi[i];
  }
  os << "]";
  return os.str();
}

std::string signs_text(const std::vector<int>& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << " ";
    os << (s[i] > 0 ? "+1" : "-1");
  }
  os << "]";
  return os.str();
}

// Non-separating condition 3: every oval vector X_i (i <= k) maps to a
// signed oval vector, without collisions.
ConditionResult cond_oval_perm(const ExactMatrix& M, const TopologicalType& t,
                               const std::string& sym, std::vector<int>* pi,
                               std::vector<int>* signs) {
  ConditionResult r;
  r.id = 3;
  r.passed = true;
  const int g = t.genus;
  const int k = t.ovals;
  pi->assign(k, 0);
  signs->assign(k, 0);
  std::vector<int> owner(k + 1, 0);  // owner[j] = source index mapped to X_j
  for (int i = 1; i <= k; ++i) {
    Vec col = M.column(i - 1);
    int target = 0, sign = 0;
    bool simple = true;
    for (int idx = 0; idx < 2 * g; ++idx) {
      if (col[idx] == 0) continue;
      if (target != 0 || idx >= k || (col[idx] != 1 && col[idx] != -1)) {
        simple = false;
        break;
      }
      target = idx + 1;
      sign = (col[idx] == 1) ? 1 : -1;
    }
    if (!simple || target == 0) {
      r.passed = false;
      r.witness = sym + "(X_" + std::to_string(i) +
                  ") is not a signed oval vector X_j, j<=" + std::to_string(k);
      return r;
    }
    if (owner[target] != 0) {
      r.passed = false;
      r.witness = sym + "(X_" + std::to_string(owner[target]) + ") and " +
                  sym + "(X_" + std::to_string(i) + ") both hit X_" +
                  std::to_string(target);
      return r;
    }
    owner[target] = i;
    (*pi)[i - 1] = target;
    (*signs)[i - 1] = sign;
  }
  r.witness = "pi=" + perm_text(*pi) + " signs=" + signs_text(*signs);
  return r;
}

// Non-separating condition 4: images of the non-oval X_i pair to zero with
// every X_j and evenly with the oval Y_j.
ConditionResult cond_evenness(const ExactMatrix& M, const TopologicalType& t,
                              const std::string& sym) {
  ConditionResult r;
  r.id = 4;
  r.passed = true;
  const int g = t.genus;
  const int k = t.ovals;
  for (int i = k + 1; i <= g; ++i) {
    Vec v = M.column(i - 1);
    for (int j = 1; j <= g; ++j) {
      Int p = pair_with_x(v, j, g);
      if (p != 0) {
        r.passed = false;
        r.witness = "(" + sym + "(X_" + std::to_string(i) + "),X_" +
                    std::to_string(j) + ")=" + p.get_str() + " nonzero";
        return r;
      }
    }
    for (int j = 1; j <= k; ++j) {
      Int p = pair_with_y(v, j, g);
      if (p % 2 != 0) {
        r.passed = false;
        r.witness = "(" + sym + "(X_" + std::to_string(i) + "),Y_" +
                    std::to_string(j) + ")=" + p.get_str() + " odd";
        return r;
      }
    }
  }
  return r;
}

// Separating condition 3: a common sign eps permutes the oval classes, and
// the handle blocks are preserved (eps=+1) or swapped (eps=-1) modulo the
// span W of X_1..X_{k-1}.
ConditionResult cond_separating_classes(const ExactMatrix& M,
                                        const TopologicalType& t,
                                        const std::string& sym, int* eps_out,
                                        std::vector<int>* pi_out) {
  ConditionResult r;
  r.id = 3;
  const int g = t.genus;
  const int k = t.ovals;
  const int m = t.half_blocks();

  std::vector<Vec> classes = oval_classes(t);
  std::vector<Vec> images;
  images.reserve(classes.size());
  for (const Vec& c : classes) images.push_back(M.apply(c));

  auto match_classes = [&](int eps, std::vector<int>* pi) -> int {
    // Returns -1 on success, else the first unmatched 1-based class index.
    std::vector<char> used(classes.size(), 0);
    pi->assign(classes.size(), 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      bool found = false;
      for (std::size_t j = 0; j < classes.size(); ++j) {
        if (used[j]) continue;
        Vec want = (eps == 1) ? classes[j] : vec_neg(classes[j]);
        if (images[i] == want) {
          used[j] = 1;
          (*pi)[i] = static_cast<int>(j) + 1;
          found = true;
          break;
        }
      }
      if (!found) return static_cast<int>(i) + 1;
    }
    return -1;
  };

  // 0-based coordinates of the block basis vectors.
  auto block_coords = [&](int block) {
    std::vector<int> coords;
    for (int j = 0; j < m; ++j) {
      const int x = (k - 1) + (block == 2 ? m : 0) + j;
      coords.push_back(x);
      coords.push_back(g + x);
    }
    return coords;
  };

  auto blocks_witness = [&](int eps) -> std::string {
    // Empty string when both blocks land where eps sends them, modulo W.
    for (int src = 1; src <= 2; ++src) {
      const int dst = (eps == 1) ? src : 3 - src;
      std::vector<char> allowed(2 * g, 0);
      for (int i = 0; i < k - 1; ++i) allowed[i] = 1;  // W
      for (int c : block_coords(dst)) allowed[c] = 1;
      for (int s : block_coords(src)) {
        Vec col = M.column(s);
        for (int idx = 0; idx < 2 * g; ++idx)
          if (col[idx] != 0 && !allowed[idx])
            return sym + "(" + coord_name(s, g) + ") leaves H_" +
                   std::to_string(dst) + "+W (eps=" +
                   (eps == 1 ? "+1" : "-1") + ")";
      }
    }
    return "";
  };

  std::vector<int> pi_plus, pi_minus;
  const int miss_plus = match_classes(+1, &pi_plus);
  const int miss_minus = match_classes(-1, &pi_minus);
  if (miss_plus != -1 && miss_minus != -1) {
    r.passed = false;
    r.witness = sym + "(O_" + std::to_string(miss_plus) +
                ") matches no oval class up to sign";
    return r;
  }
  std::string first_block_witness;
  for (int eps : {+1, -1}) {
    if ((eps == 1 ? miss_plus : miss_minus) != -1) continue;
    std::string w = blocks_witness(eps);
    if (w.empty()) {
      r.passed = true;
      *eps_out = eps;
      *pi_out = (eps == 1) ? pi_plus : pi_minus;
      r.witness = std::string("eps=") + (eps == 1 ? "+1" : "-1") +
                  " pi=" + perm_text(*pi_out);
      return r;
    }
    if (first_block_witness.empty()) first_block_witness = w;
  }
  r.passed = false;
  r.witness = first_block_witness;
  return r;
}

}  // namespace

std::string MembershipReport::to_text() const {
  std::ostringstream os;
  for (const ConditionResult& c : conditions) {
    os << "COND" << c.id << " " << (c.passed ? "PASS" : "FAIL");
    if (!c.witness.empty()) os << " " << c.witness;
    os << "\n";
  }
  os << "VERDICT " << (member ? "yes" : "no") << "\n";
  return os.str();
}

MembershipReport check_empty(const ExactMatrix& M, const TopologicalType& t,
                             const std::string& symbol) {
  require_dims(M, t);
  MembershipReport rep;
  rep.type = t;
  rep.conditions.push_back(cond_symplectic(M, t, symbol));
  rep.conditions.push_back(cond_commutes(M, t, symbol));
  rep.member = rep.conditions[0].passed && rep.conditions[1].passed;
  return rep;
}

MembershipReport check_nonseparating(const ExactMatrix& M,
                                     const TopologicalType& t,
                                     const std::string& symbol) {
  require_dims(M, t);
  if (t.separating())
    throw std::invalid_argument("type is separating");
  MembershipReport rep;
  rep.type = t;
  rep.conditions.push_back(cond_symplectic(M, t, symbol));
  rep.conditions.push_back(cond_commutes(M, t, symbol));
  std::vector<int> pi, signs;
  rep.conditions.push_back(cond_oval_perm(M, t, symbol, &pi, &signs));
  if (rep.conditions.back().passed) {
    rep.permutation = pi;
    rep.signs = signs;
  }
  rep.conditions.push_back(cond_evenness(M, t, symbol));
  rep.member = true;
  for (const ConditionResult& c : rep.conditions) rep.member &= c.passed;
  return rep;
}

MembershipReport check_separating(const ExactMatrix& M,
                                  const TopologicalType& t,
                                  const std::string& symbol) {
  require_dims(M, t);
  if (!t.separating())
    throw std::invalid_argument("type is not separating");
  MembershipReport rep;
  rep.type = t;
  rep.conditions.push_back(cond_symplectic(M, t, symbol));
  rep.conditions.push_back(cond_commutes(M, t, symbol));
  int eps = 0;
  std::vector<int> pi;
  rep.conditions.push_back(cond_separating_classes(M, t, symbol, &eps, &pi));
  if (rep.conditions.back().passed) {
    rep.epsilon = eps;
    rep.permutation = pi;
  }
  rep.member = true;
  for (const ConditionResult& c : rep.conditions) rep.member &= c.passed;
  return rep;
}

MembershipReport check_membership(const ExactMatrix& M,
                                  const TopologicalType& t,
                                  const std::string& symbol) {
  t.validate();
  if (t.separating()) return check_separating(M, t, symbol);
  if (t.ovals == 0) return check_empty(M, t, symbol);
  return check_nonseparating(M, t, symbol);
}

ExactMatrix counterexample_matrix() {
  const int vals[4][4] = {
      {1, 1, -1, -1}, {0, 1, -1, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}};
  ExactMatrix h(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) h.at(r, c) = vals[r][c];
  return h;
}

TopologicalType counterexample_type() {
  TopologicalType t;
  t.genus = 2;
  t.species = SpeciesKind::NonSeparating;
  t.ovals = 1;
  return t;
}

}  // namespace realmod
