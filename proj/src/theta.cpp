#include "realmod/theta.hpp"

#include <stdexcept>

namespace realmod {

namespace {

Vec basis_vec(int dim, int idx, int coeff = 1) {
  Vec v(dim, Int(0));
  v[idx] = coeff;
  return v;
}

Word word_of(std::initializer_list<Letter> ls) {
  Word w;
  for (const Letter& l : ls) w.append(l);
  return w;
}

}  // namespace

ThetaTable ThetaTable::build(const TopologicalType& t) {
  t.validate();
  ThetaTable table;
  table.type_ = t;
  table.presentation_ = canonical_presentation(t);
  table.transversal_ = transversal_symbol(t);

  const int g = t.genus;
  const int k = t.ovals;
  const int dim = 2 * g;

  if (!t.separating()) {
    for (int i = 1; i <= k; ++i) {
      table.values_[0][sym_e(i)] = basis_vec(dim, i - 1);
      table.values_[1][sym_e(i)] = basis_vec(dim, i - 1);
      table.values_[0][sym_c(i)] = basis_vec(dim, g + i - 1, -1);
      table.values_[1][sym_c(i)] = basis_vec(dim, g + i - 1, +1);
    }
    for (int j = k + 1; j <= g; ++j) {
      table.values_[0][sym_d(j)] = basis_vec(dim, g + j - 1, -1);
      Vec v(dim, Int(0));
      v[j - 1] = 1;
      v[g + j - 1] = 1;
      table.values_[1][sym_d(j)] = v;
    }
    table.values_[0][sym_d(g + 1)] = Vec(dim, Int(0));
    Vec minus_sum(dim, Int(0));
    for (int i = 0; i < g; ++i) minus_sum[i] = -1;
    table.values_[1][sym_d(g + 1)] = minus_sum;

    // X_i from e_i (oval range) or d_i^2; Y_i from d_{g+1} c_i (oval range)
    // or d_{g+1} d_i^-1.
    for (int i = 1; i <= g; ++i) {
      if (i <= k)
        table.preimages_.push_back(word_of({{sym_e(i), 1}}));
      else
        table.preimages_.push_back(word_of({{sym_d(i), 1}, {sym_d(i), 1}}));
    }
    for (int i = 1; i <= g; ++i) {
      if (i <= k)
        table.preimages_.push_back(
            word_of({{sym_d(g + 1), 1}, {sym_c(i), 1}}));
      else
        table.preimages_.push_back(
            word_of({{sym_d(g + 1), 1}, {sym_d(i), -1}}));
    }
  } else {
    const int m = t.half_blocks();
    // 0-based coordinate of X at 1-based basis position p is p-1; blocks
    // occupy positions k..k+m-1 (lower) and k+m..g (upper).
    for (int i = 1; i <= k - 1; ++i) {
      table.values_[0][sym_e(i)] = basis_vec(dim, i - 1);
      table.values_[1][sym_e(i)] = basis_vec(dim, i - 1);
      table.values_[0][sym_c(i)] = basis_vec(dim, g + i - 1, -1);
      table.values_[1][sym_c(i)] = basis_vec(dim, g + i - 1, +1);
    }
    Vec boundary(dim, Int(0));
    for (int i = 0; i < k - 1; ++i) boundary[i] = -1;
    table.values_[0][sym_e(k)] = boundary;
    table.values_[1][sym_e(k)] = boundary;
    table.values_[0][sym_c(k)] = Vec(dim, Int(0));
    table.values_[1][sym_c(k)] = Vec(dim, Int(0));
    for (int j = 1; j <= m; ++j) {
      const int lo = k + j - 1;      // 1-based lower-block position
      const int hi = k + m + j - 1;  // matching upper-block position
      table.values_[0][sym_a(j)] = basis_vec(dim, lo - 1);
      table.values_[1][sym_a(j)] = basis_vec(dim, hi - 1);
      table.values_[0][sym_b(j)] = basis_vec(dim, g + lo - 1);
      table.values_[1][sym_b(j)] = basis_vec(dim, g + hi - 1, -1);
    }

    // X_i from e_i, Y_i from c_k c_i (short range); lower block from a_j,
    // b_j; upper block from their c_k-conjugates.
    std::vector<Word> xs(g), ys(g);
    for (int i = 1; i <= k - 1; ++i) {
      xs[i - 1] = word_of({{sym_e(i), 1}});
      ys[i - 1] = word_of({{sym_c(k), 1}, {sym_c(i), 1}});
    }
    for (int j = 1; j <= m; ++j) {
      const int lo = k + j - 1;
      const int hi = k + m + j - 1;
      xs[lo - 1] = word_of({{sym_a(j), 1}});
      ys[lo - 1] = word_of({{sym_b(j), 1}});
      xs[hi - 1] = word_of({{sym_c(k), 1}, {sym_a(j), 1}, {sym_c(k), 1}});
      ys[hi - 1] = word_of({{sym_c(k), 1}, {sym_b(j), -1}, {sym_c(k), 1}});
    }
    for (int i = 0; i < g; ++i) table.preimages_.push_back(xs[i]);
    for (int i = 0; i < g; ++i) table.preimages_.push_back(ys[i]);
  }

  // --- build-time verification ---
  for (const Word& r : table.presentation_.relators) {
    for (int state = 0; state < 2; ++state) {
      int end = -1;
      Vec v = table.run(r, state, &end);
      if (!vec_is_zero(v) || end != state)
        throw std::logic_error("coset table: relator " + r.to_string() +
                               " does not vanish from coset " +
                               std::to_string(state));
    }
  }
  {
    ExactMatrix sigma = sigma_matrix(t);
    const Vec& t1 = table.values_[1].at(table.transversal_);
    for (const GeneratorSymbol& s : table.presentation_.generators) {
      Vec lhs = sigma.apply(table.values_[0].at(s));
      Vec rhs = table.values_[1].at(s);
      if (s.orientation_character() == 1) rhs = vec_sub(rhs, t1);
      if (lhs != rhs)
        throw std::logic_error(
            "coset table: conjugation identity fails at generator " +
            s.label());
    }
  }
  for (std::size_t i = 0; i < table.preimages_.size(); ++i) {
    Vec v = table.word_value(table.preimages_[i]);
    if (v != basis_vec(dim, static_cast<int>(i)))
      throw std::logic_error("coset table: preimage word " +
                             table.preimages_[i].to_string() +
                             " misses its basis vector");
  }
  return table;
}

const Vec& ThetaTable::value(int state, const GeneratorSymbol& s) const {
  if (state != 0 && state != 1)
    throw std::invalid_argument("coset state must be 0 or 1");
  auto it = values_[state].find(s);
  if (it == values_[state].end())
    throw std::invalid_argument("no table value for generator " + s.label());
  return it->second;
}

Vec ThetaTable::run(const Word& w, int start_state, int* end_state) const {
  if (start_state != 0 && start_state != 1)
    throw std::invalid_argument("coset state must be 0 or 1");
  Vec acc(2 * static_cast<std::size_t>(type_.genus), Int(0));
  int r = start_state;
  for (const Letter& l : w.letters()) {
    const int chi = l.sym.orientation_character();
    if (l.exp > 0) {
      acc = vec_add(acc, value(r, l.sym));
      r ^= chi;
    } else {
      r ^= chi;
      acc = vec_sub(acc, value(r, l.sym));
    }
  }
  if (end_state) *end_state = r;
  return acc;
}

Vec ThetaTable::word_value(const Word& w) const {
  if (w.orientation_character() != 0)
    throw std::invalid_argument("word not in the orientation-preserving subgroup: " +
                                w.to_string());
  return run(w, 0);
}

const Word& ThetaTable::basis_preimage(std::size_t idx) const {
  if (idx >= preimages_.size())
    throw std::out_of_range("basis index out of range");
  return preimages_[idx];
}

}  // namespace realmod
