#include "realmod/decompose.hpp"

#include <sstream>
#include <stdexcept>

#include "realmod/induced.hpp"
#include "realmod/membership.hpp"

namespace realmod {

// ---------------------------------------------------------------------------
// GeneratorWord

GeneratorWord GeneratorWord::parse(const std::string& text,
                                   const std::vector<std::string>& known) {
  GeneratorWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool matched = false;
    for (const std::string& name : known)
      if (tok == name) {
        w.append(name, 1);
        matched = true;
        break;
      }
    if (matched) continue;
    if (!tok.empty() && tok.back() == '\'') {
      std::string base = tok.substr(0, tok.size() - 1);
      for (const std::string& name : known)
        if (base == name) {
          w.append(name, -1);
          matched = true;
          break;
        }
    }
    if (!matched)
      throw std::invalid_argument("unknown generator name: " + tok);
  }
  return w;
}

std::string GeneratorWord::to_string() const {
  std::string out;
  for (const GenLetter& l : letters_) {
    if (!out.empty()) out += " ";
    out += l.name;
    if (l.exp < 0) out += "'";
  }
  return out;
}

void GeneratorWord::append(const std::string& name, int exp) {
  if (exp != 1 && exp != -1)
    throw std::invalid_argument("letter exponent must be +1 or -1");
  letters_.push_back({name, exp});
}

void GeneratorWord::append(const GeneratorWord& w) {
  for (const GenLetter& l : w.letters_) letters_.push_back(l);
}

GeneratorWord GeneratorWord::inverse() const {
  GeneratorWord inv;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.letters_.push_back({it->name, -it->exp});
  return inv;
}

// ---------------------------------------------------------------------------
// Dictionary

MatrixDictionary gl_generator_matrices(int g) {
  if (g < 1) throw std::invalid_argument("genus must be positive");
  MatrixDictionary dict;
  if (g == 1) {
    ExactMatrix g3(1, 1);
    g3.at(0, 0) = -1;
    dict.emplace_back("G_3", g3);
    return dict;
  }
  const std::size_t n = static_cast<std::size_t>(g);
  for (int i = 1; i <= g - 1; ++i) {
    ExactMatrix a = ExactMatrix::identity(n);
    a.swap_rows(i - 1, i);
    dict.emplace_back("A_" + std::to_string(i), a);
  }
  {
    ExactMatrix b(n, n);
    for (int r = 0; r < g; ++r) b.at(r, 0) = 1;
    for (int j = 2; j <= g; ++j) b.at(g - j + 1, j - 1) = -1;
    dict.emplace_back("B", b);
  }
  {
    ExactMatrix c = ExactMatrix::identity(n);
    c.at(0, 0) = 0;
    c.at(1, 0) = -1;
    c.at(0, 1) = 1;
    c.at(1, 1) = 2;
    dict.emplace_back("C", c);
  }
  {
    ExactMatrix bp(n, n);
    for (int r = 0; r < g; ++r) bp.at(r, 0) = 1;
    for (int j = 1; j < g; ++j) bp.at(j, j) = -1;
    dict.emplace_back("B'", bp);
  }
  {
    ExactMatrix g1(n, n);
    for (int r = 0; r < g; ++r) g1.at(r, 0) = 1;
    g1.at(1, 1) = 1;
    for (int j = 2; j < g; ++j) g1.at(j, j) = -1;
    dict.emplace_back("G_1", g1);
  }
  {
    ExactMatrix g2(n, n);
    g2.at(0, 0) = 1;
    g2.at(0, 1) = 1;
    g2.at(1, 1) = 1;
    for (int j = 2; j < g; ++j) g2.at(j, j) = -1;
    dict.emplace_back("G_2", g2);
  }
  {
    ExactMatrix g3 = ExactMatrix::identity(n);
    g3.at(1, 1) = -1;
    dict.emplace_back("G_3", g3);
  }
  {
    ExactMatrix t = ExactMatrix::identity(n);
    t.at(1, 0) = 1;
    dict.emplace_back("G_1'", t);
  }
  {
    ExactMatrix t = ExactMatrix::identity(n);
    t.at(0, 1) = 1;
    dict.emplace_back("G_2'", t);
  }
  return dict;
}

const ExactMatrix& dictionary_matrix(const MatrixDictionary& dict,
                                     const std::string& name) {
  for (const auto& entry : dict)
    if (entry.first == name) return entry.second;
  throw std::invalid_argument("unknown generator name: " + name);
}

ExactMatrix evaluate_word(const GeneratorWord& word,
                          const MatrixDictionary& dict) {
  if (dict.empty()) throw std::invalid_argument("empty generator dictionary");
  ExactMatrix result = ExactMatrix::identity(dict.front().second.rows());
  for (const GenLetter& l : word.letters()) {
    const ExactMatrix& base = dictionary_matrix(dict, l.name);
    result = result * (l.exp == 1 ? base : inverse_unimodular(base));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Unimodular decomposition

namespace {

// Row-elimination engine: applies each emitted generator to the working
// matrix as its left-multiplication row action and records the letter.
struct Eliminator {
  ExactMatrix w;
  std::vector<GenLetter> ops;
  int g;

  explicit Eliminator(const ExactMatrix& m)
      : w(m), g(static_cast<int>(m.rows())) {}

  void emit(const std::string& name, int exp) {
    if (name == "G_1'") {
      w.add_row_multiple(1, 0, Int(exp));
    } else if (name == "G_2'") {
      w.add_row_multiple(0, 1, Int(exp));
    } else if (name == "G_3") {
      w.negate_row(g == 1 ? 0 : 1);
    } else {  // "A_<i>"
      int i = std::stoi(name.substr(2));
      w.swap_rows(i - 1, i);
    }
    ops.push_back({name, exp});
  }

  void emit_swap(int i) { emit("A_" + std::to_string(i), 1); }

  // row r += c * row s (1-based), realized through the two elementary
  // transvections and conjugating swaps.
  void transvection(int r, int s, const Int& c) {
    if (c == 0) return;
    const int step = (c > 0) ? 1 : -1;
    Int reps = abs(c);
    if (r == 2 && s == 1) {
      for (Int t = 0; t < reps; ++t) emit("G_1'", step);
      return;
    }
    if (r == 1 && s == 2) {
      for (Int t = 0; t < reps; ++t) emit("G_2'", step);
      return;
    }
    std::vector<int> conj;
    for (int t = s - 1; t >= 1; --t) conj.push_back(t);  // bring s to row 1
    const int r_shifted = (r < s) ? r + 1 : r;
    for (int t = r_shifted - 1; t >= 2; --t) conj.push_back(t);  // r to row 2
    for (int t : conj) emit_swap(t);
    for (Int t = 0; t < reps; ++t) emit("G_1'", step);
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) emit_swap(*it);
  }

  // Negate row j (1-based) with the diag(1,-1,1,...,1) generator moved into
  // place by conjugating swaps.
  void negate(int j) {
    if (g == 1) {
      emit("G_3", 1);
      return;
    }
    if (j == 2) {
      emit("G_3", 1);
      return;
    }
    std::vector<int> conj;
    if (j == 1) {
      conj.push_back(1);
    } else {
      for (int t = j - 1; t >= 2; --t) conj.push_back(t);
    }
    for (int t : conj) emit_swap(t);
    emit("G_3", 1);
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) emit_swap(*it);
  }
};

}  // namespace

GeneratorWord decompose_gl(const ExactMatrix& M) {
  if (!M.is_square() || M.rows() == 0)
    throw std::invalid_argument("matrix must be square and nonempty");
  Int det = determinant(M);
  if (det != 1 && det != -1) throw std::invalid_argument("not unimodular");
  const int g = static_cast<int>(M.rows());
  MatrixDictionary dict = gl_generator_matrices(g);

  Eliminator e(M);
  for (int j = 1; j <= g; ++j) {
    // Reduce column j on rows j..g to a single unit entry.
    while (true) {
      int pivot = 0, count = 0;
      for (int r = j; r <= g; ++r) {
        if (e.w.at(r - 1, j - 1) == 0) continue;
        ++count;
        if (pivot == 0 ||
            mpz_cmpabs(e.w.at(r - 1, j - 1).get_mpz_t(),
                       e.w.at(pivot - 1, j - 1).get_mpz_t()) < 0)
          pivot = r;
      }
      if (count == 0)
        throw std::logic_error("unimodular matrix lost its pivot column");
      if (count == 1) {
        // Bubble the survivor to the diagonal and fix its sign.
        for (int t = pivot - 1; t >= j; --t) e.emit_swap(t);
        if (e.w.at(j - 1, j - 1) == -1) e.negate(j);
        if (e.w.at(j - 1, j - 1) != 1)
          throw std::logic_error("column gcd is not 1 in a unimodular matrix");
        break;
      }
      for (int r = j; r <= g; ++r) {
        if (r == pivot || e.w.at(r - 1, j - 1) == 0) continue;
        Int q = e.w.at(r - 1, j - 1) / e.w.at(pivot - 1, j - 1);
        e.transvection(r, pivot, -q);
      }
    }
  }
  for (int j = g; j >= 2; --j)
    for (int i = 1; i < j; ++i)
      e.transvection(i, j, -e.w.at(i - 1, j - 1));
  if (!e.w.is_identity())
    throw std::logic_error("elimination did not reach the identity");

  // The ops reduce M to I from the left, so M is the product of their
  // inverses in the same order.
  GeneratorWord word;
  for (const GenLetter& l : e.ops) {
    if (l.name == "G_3" || l.name[0] == 'A')
      word.append(l.name, 1);  // involutions
    else
      word.append(l.name, -l.exp);
  }
  if (evaluate_word(word, dict) != M)
    throw std::logic_error("decomposition self-check failed");
  return word;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

// Shared state for the two normalizers: a working matrix, the catalog
// dictionary, and the op trail (letters applied as left multiplications, in
// application order).
struct Normalizer {
  MatrixDictionary dict;
  ExactMatrix cur;
  std::vector<GenLetter> ops;

  Normalizer(const ExactMatrix& m, const TopologicalType& t) : cur(m) {
    for (const CatalogEntry& e : catalog_with_matrices(t))
      dict.emplace_back(e.name, e.matrix);
  }

  void apply(const std::string& name, int exp = 1) {
    if (ops.size() >= kNormalizationLetterBudget)
      throw NormalizationError("normalization budget exceeded");
    const ExactMatrix& base = dictionary_matrix(dict, name);
    cur = (exp == 1 ? base : inverse_unimodular(base)) * cur;
    ops.push_back({name, exp});
  }

  // Letters listed in matrix-product order; applying them right-to-left
  // left-multiplies the working matrix by exactly that product.
  void apply_product(const std::vector<GenLetter>& product) {
    for (auto it = product.rbegin(); it != product.rend(); ++it)
      apply(it->name, it->exp);
  }

  NormalizationResult finish(const ExactMatrix& original) {
    GeneratorWord word;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
      word.append(it->name, it->exp);
    if (!word.empty() && evaluate_word(word, dict) * original != cur)
      throw std::logic_error("normalization self-check failed");
    return {word, cur};
  }
};

std::string rname(int i) { return "R_" + std::to_string(i); }
std::string mname(int i) { return "M_" + std::to_string(i); }
std::string nname(int i) { return "N_" + std::to_string(i); }

}  // namespace

NormalizationResult normalize_nonseparating(const ExactMatrix& M,
                                            const TopologicalType& t) {
  t.validate();
  if (t.separating())
    throw std::invalid_argument("type is separating");
  MembershipReport rep = check_nonseparating(M, t);
  if (!rep.member) throw std::invalid_argument("not a member");
  const int g = t.genus;
  const int k = t.ovals;
  if (k == 0) return {GeneratorWord{}, M};

  Normalizer nz(M, t);

  // Stage 1: align the oval permutation with adjacent transpositions.
  auto read_perm = [&]() {
    std::vector<int> pi(k, 0);
    for (int i = 0; i < k; ++i) {
      Vec col = nz.cur.column(i);
      for (int j = 0; j < k; ++j)
        if (col[j] != 0) {
          pi[i] = j + 1;
          break;
        }
    }
    return pi;
  };
  while (true) {
    std::vector<int> pi = read_perm();
    int i = 0;
    while (i < k && pi[i] == i + 1) ++i;
    if (i == k) break;
    for (int r = pi[i] - 1; r >= i + 1; --r) nz.apply(rname(r));
  }

  // Stage 2: clear signs and the even shear-components of the oval rows.
  if (k == g) {
    // The sign move is a bare flip of the last oval; conjugate it to each
    // oval that needs one.
    for (int j = 1; j <= g; ++j) {
      if (nz.cur.at(j - 1, j - 1) == 1) continue;
      for (int r = j; r <= g - 1; ++r) nz.apply(rname(r));
      nz.apply("D");
      for (int r = g - 1; r >= j; --r) nz.apply(rname(r));
    }
  } else {
    // The block of the non-oval X-rows over the non-oval X-columns is fixed
    // by every move used below, so its inverse is computed once.
    const int n = g - k;
    ExactMatrix lambda(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) lambda.at(r, c) = nz.cur.at(k + r, k + c);
    ExactMatrix lambda_inv = inverse_unimodular(lambda);

    for (int j = 1; j <= k; ++j) {
      Int eps = nz.cur.at(j - 1, j - 1);
      Vec cvec(n, Int(0));
      for (int c = 0; c < n; ++c) {
        Int s = 0;
        for (int l = 0; l < n; ++l) {
          Int v = nz.cur.at(j - 1, k + l);
          if (v % 2 != 0)
            throw std::logic_error("member oval row has an odd shear entry");
          s += (v / 2) * lambda_inv.at(l, c);
        }
        cvec[c] = s;
      }
      Int csum(0);
      for (const Int& v : cvec) csum += v;

      // Each available move toggles the sign and replaces the shear
      // coordinate vector c by e_l - c, so the target (sign +1, c = 0) is
      // reachable exactly from (+1, sum 0) and (-1, sum 1).
      const bool reachable =
          (eps == 1 && csum == 0) || (eps == -1 && csum == 1);
      if (!reachable)
        throw NormalizationError(
            "normalization budget exceeded: oval " + std::to_string(j) +
            " has sign " + eps.get_str() + " with shear sum " +
            csum.get_str() + ", outside the reachable set");

      std::vector<int> seq;  // 1-based indices into the non-oval rows
      Vec rem = cvec;
      auto take = [&](int sign) {
        for (int idx = 0; idx < n; ++idx)
          if ((sign > 0 && rem[idx] > 0) || (sign < 0 && rem[idx] < 0)) {
            rem[idx] -= sign;
            return idx + 1;
          }
        throw std::logic_error("shear decomposition ran out of entries");
      };
      if (eps == -1) seq.push_back(take(+1));
      while (!vec_is_zero(rem)) {
        // Positive entries go to odd positions, negative to even ones.
        if (seq.size() % 2 == 0)
          seq.push_back(take(+1));
        else
          seq.push_back(take(-1));
      }

      for (int l : seq) {
        for (int r = j; r <= k - 1; ++r) nz.apply(rname(r));
        for (int r = k + l - 1; r >= k + 1; --r) nz.apply(mname(r));
        nz.apply("D");
        for (int r = k + 1; r <= k + l - 1; ++r) nz.apply(mname(r));
        for (int r = k - 1; r >= j; --r) nz.apply(rname(r));
      }
      if (nz.cur.at(j - 1, j - 1) != 1)
        throw std::logic_error("oval sign not fixed by the emitted moves");
      for (int c = k; c < g; ++c)
        if (nz.cur.at(j - 1, c) != 0)
          throw std::logic_error("oval row not cleared by the emitted moves");
    }
  }

  // Postconditions: every oval vector fixed, the non-oval X-span preserved.
  for (int i = 0; i < k; ++i) {
    Vec col = nz.cur.column(i);
    for (int r = 0; r < 2 * g; ++r)
      if (col[r] != (r == i ? 1 : 0))
        throw std::logic_error("normal form does not fix an oval vector");
  }
  for (int c = k; c < g; ++c) {
    Vec col = nz.cur.column(c);
    for (int r = 0; r < 2 * g; ++r)
      if (col[r] != 0 && (r < k || r >= g))
        throw std::logic_error("normal form does not preserve the X-span");
  }
  return nz.finish(M);
}

NormalizationResult normalize_separating(const ExactMatrix& M,
                                         const TopologicalType& t) {
  t.validate();
  if (!t.separating())
    throw std::invalid_argument("type is not separating");
  MembershipReport rep = check_separating(M, t);
  if (!rep.member) throw std::invalid_argument("not a member");
  const int g = t.genus;
  const int k = t.ovals;
  const int m = t.half_blocks();

  Normalizer nz(M, t);
  if (rep.epsilon == -1) nz.apply("U");

  // Stage 1: align the oval-class permutation.
  std::vector<Vec> classes = oval_classes(t);
  auto read_perm = [&]() {
    std::vector<int> pi(k, 0);
    for (int i = 0; i < k; ++i) {
      Vec img = nz.cur.apply(classes[i]);
      for (int j = 0; j < k; ++j)
        if (img == classes[j]) {
          pi[i] = j + 1;
          break;
        }
      if (pi[i] == 0)
        throw std::logic_error("oval class image is not a class");
    }
    return pi;
  };
  while (true) {
    std::vector<int> pi = read_perm();
    int i = 0;
    while (i < k && pi[i] == i + 1) ++i;
    if (i == k) break;
    for (int r = pi[i] - 1; r >= i + 1; --r) nz.apply(rname(r));
  }

  // Stage 2: clear the anti-invariant block parts of the short Y-images.
  // cur * Y_i = Y_i + b with b spanned by the patterns
  //   X-pat_j = X at lower slot j minus X at upper slot j,
  //   Y-pat_j = Y at lower slot j plus Y at upper slot j.
  auto xlo = [&](int j) { return (k - 1) + (j - 1); };  // 0-based, j 1-based
  auto xhi = [&](int j) { return (k - 1) + m + (j - 1); };

  // Letters in matrix-product order for the uniform shift of all short
  // Y-images by the given pattern component of pair 1.
  auto core_xpat = [&](int sign) {
    std::vector<GenLetter> p;
    p.push_back({"M", sign > 0 ? -1 : 1});
    return p;
  };
  auto core_ypat = [&](int sign) {
    std::vector<GenLetter> p;
    if (sign > 0)
      p = {{"M", 1}, {"Z", 1}, {"M", -1}, {"Z", -1}};
    else
      p = {{"Z", 1}, {"M", 1}, {"Z", -1}, {"M", -1}};
    return p;
  };

  for (int label = 1; label <= k - 1; ++label) {
    Vec b = nz.cur.column(g + label - 1);
    b[g + label - 1] -= 1;
    if (vec_is_zero(b)) continue;

    // Read off the pattern coordinates, validating the support.
    std::vector<Int> xs(m + 1, Int(0)), ys(m + 1, Int(0));
    for (int j = 1; j <= m; ++j) {
      xs[j] = b[xlo(j)];
      ys[j] = b[g + xlo(j)];
      if (b[xhi(j)] != -xs[j] || b[g + xhi(j)] != ys[j])
        throw std::logic_error("short Y-image is not pattern-supported");
      b[xlo(j)] = 0;
      b[xhi(j)] = 0;
      b[g + xlo(j)] = 0;
      b[g + xhi(j)] = 0;
    }
    if (!vec_is_zero(b))
      throw std::logic_error("short Y-image has support outside the blocks");

    // Uniform shifter by the full pattern vector, in matrix-product order.
    std::vector<GenLetter> shifter;
    for (int j = 1; j <= m; ++j) {
      if (xs[j] == 0 && ys[j] == 0) continue;
      std::vector<GenLetter> core;
      for (Int c = 0; c < abs(xs[j]); ++c)
        for (const GenLetter& l : core_xpat(sgn(xs[j]))) core.push_back(l);
      for (Int c = 0; c < abs(ys[j]); ++c)
        for (const GenLetter& l : core_ypat(sgn(ys[j]))) core.push_back(l);
      // Conjugate the pair-1 core into pair j.
      for (int r = j - 1; r >= 1; --r) shifter.push_back({nname(r), 1});
      for (const GenLetter& l : core) shifter.push_back(l);
      for (int r = 1; r <= j - 1; ++r) shifter.push_back({nname(r), 1});
    }

    // Select the label, then sandwich the shifter in the long swap, which
    // turns the uniform shift into a shift of this label only.
    for (int r = label; r <= k - 2; ++r) nz.apply(rname(r));
    nz.apply(rname(k - 1));
    nz.apply_product(shifter);
    nz.apply(rname(k - 1));
    for (int r = k - 2; r >= label; --r) nz.apply(rname(r));
  }

  // Postconditions: classes fixed, short Y-images restored, blocks literal.
  for (int i = 0; i < k; ++i)
    if (nz.cur.apply(classes[i]) != classes[i])
      throw std::logic_error("normal form does not fix an oval class");
  for (int i = 1; i <= k - 1; ++i) {
    Vec col = nz.cur.column(g + i - 1);
    for (int r = 0; r < 2 * g; ++r)
      if (col[r] != (r == g + i - 1 ? 1 : 0))
        throw std::logic_error("normal form does not fix a short Y-vector");
  }
  for (int block = 1; block <= 2; ++block) {
    std::vector<int> coords;
    for (int j = 1; j <= m; ++j) {
      int x = (block == 1) ? xlo(j) : xhi(j);
      coords.push_back(x);
      coords.push_back(g + x);
    }
    std::vector<char> allowed(2 * g, 0);
    for (int c : coords) allowed[c] = 1;
    for (int s : coords) {
      Vec col = nz.cur.column(s);
      for (int r = 0; r < 2 * g; ++r)
        if (col[r] != 0 && !allowed[r])
          throw std::logic_error("normal form does not preserve a block");
    }
  }
  return nz.finish(M);
}

NormalizationResult normalize_member(const ExactMatrix& M,
                                     const TopologicalType& t) {
  t.validate();
  if (t.separating()) return normalize_separating(M, t);
  return normalize_nonseparating(M, t);
}

}  // namespace realmod
