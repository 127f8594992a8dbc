#pragma once

// Explicit matrices of an irreducible highest-weight module, built from a
// canonical generating set x_i, y_i, h_i, and the invariant antisymmetric
// form on it.
//
// Construction: level k of the module is spanned by the vectors y_i b with b
// running over the basis of level k-1. Linear dependence among these
// candidates is decided with the contravariant form
//   <y_i b, y_j b'> = <b, x_i y_j b'>,   x_i y_j b' = y_j x_i b' + delta_ij b'(h_i) b'
// which is nondegenerate on every weight space of the irreducible quotient.
// Everything is exact over Q.

#include "liebranch/core.hpp"
#include "liebranch/linalg.hpp"
#include "liebranch/root_system.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace liebranch {

/// Matrices of x_i, y_i, h_i on a weight basis. Column b of a matrix holds the
/// image of basis vector b.
struct RepMatrices {
  AlgebraType type;
  Weight highest_weight;
  std::vector<Weight> basis_weights;
  std::vector<std::vector<std::size_t>> basis_words;  ///< lowering word that produced each vector
  std::vector<SparseMatrix> x, y, h;

  std::size_t dimension() const { return basis_weights.size(); }
  std::size_t rank() const { return x.size(); }
};

struct RelationCheck {
  std::string relation;  ///< "[h_i,h_j]=0", "[x_i,y_j]=d_ij h_i", "[h_j,x_i]=C(i,j)x_i", "[h_j,y_i]=-C(i,j)y_i"
  std::size_t i = 0;
  std::size_t j = 0;
  bool ok = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return !checks.empty();
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.ok ? 0 : 1;
    return n;
  }
};

/// Invariant antisymmetric form, normalized to primitive integer entries with
/// the first nonzero entry (row-major) positive.
struct BilinearForm {
  std::vector<std::vector<BigInt>> matrix;
  std::size_t solution_dimension = 0;  ///< dimension of the space of invariant antisymmetric forms
  std::size_t rank = 0;

  SparseMatrix to_sparse() const {
    const std::size_t n = matrix.size();
    SparseMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (matrix[r][c] != 0) m.set(r, c, Rational(matrix[r][c]));
    return m;
  }
};

namespace detail {

using SparseVec = std::map<std::size_t, Rational>;

inline void axpy(SparseVec& acc, const Rational& k, const SparseVec& v) {
  if (k == 0) return;
  for (const auto& [i, a] : v) {
    auto [it, inserted] = acc.try_emplace(i, 0);
    it->second += k * a;
    if (it->second == 0) acc.erase(it);
  }
}

// Solves cols * c = target over Q for a small dense system; returns false if
// target is not in the column span.
inline bool solve_in_span(const std::vector<std::vector<Rational>>& cols,
                          const std::vector<Rational>& target, std::vector<Rational>& coeffs) {
  const std::size_t m = target.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = cols[c][r];
    a[r][k] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t cc = c; cc <= k; ++cc) a[r][cc] -= f * a[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (a[r][k] != 0) return false;
  coeffs.assign(k, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) coeffs[pivot_col[r]] = a[r][k];
  return true;
}

}  // namespace detail

/// Builds the irreducible module V(hw) by lowering words and the contravariant
/// form. Throws ConsistencyError if the module exceeds max_dimension or an
/// internal check fails.
inline RepMatrices construct_irreducible_module(const RootSystem& rs, const Weight& hw,
                                                std::size_t max_dimension = 4096) {
  using detail::SparseVec;
  rs.check_rank(hw);
  if (!hw.is_dominant())
    throw InputError("highest weight " + to_run_length(hw) + " is not dominant");
  const std::size_t r = rs.rank();

  std::vector<Weight> weights{hw};
  std::vector<std::vector<std::size_t>> words{{}};
  std::vector<std::vector<SparseVec>> x_action{std::vector<SparseVec>(r)};  // [b][j] = x_j b
  std::vector<std::vector<SparseVec>> y_action;                             // [b][i] = y_i b
  std::map<std::pair<std::size_t, std::size_t>, Rational> gram{{{0, 0}, Rational(1)}};

  auto gram_at = [&](std::size_t a, std::size_t b) -> Rational {
    auto it = gram.find({a, b});
    return it == gram.end() ? Rational(0) : it->second;
  };

  std::vector<std::size_t> previous{0};
  while (!previous.empty()) {
    struct Candidate {
      std::size_t parent;
      std::size_t node;
      Weight weight;
      std::vector<SparseVec> raised;  // x_j (y_node parent), over the previous level
    };
    std::vector<Candidate> candidates;
    for (std::size_t b : previous) {
      for (std::size_t i = 0; i < r; ++i) {
        Candidate cand{b, i, weights[b] - rs.simple_root(i), std::vector<SparseVec>(r)};
        for (std::size_t j = 0; j < r; ++j) {
          SparseVec v;
          for (const auto& [c, coef] : x_action[b][j]) detail::axpy(v, coef, y_action[c][i]);
          if (i == j && weights[b][i] != 0) detail::axpy(v, Rational(weights[b][i]), {{b, Rational(1)}});
          cand.raised[j] = std::move(v);
        }
        candidates.push_back(std::move(cand));
      }
    }
    y_action.resize(weights.size(), std::vector<SparseVec>(r));

    std::map<Weight, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < candidates.size(); ++k) groups[candidates[k].weight].push_back(k);

    std::vector<std::size_t> current;
    std::vector<long> new_index(candidates.size(), -1);
    std::vector<std::vector<Rational>> expression(candidates.size());
    std::vector<std::vector<std::size_t>> span_of(candidates.size());
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> new_gram;  // candidate ids

    for (const auto& [wt, members] : groups) {
      const std::size_t m = members.size();
      // g[p][q] = <y b_p, y b_q> = <b_p, x_{node_p} y b_q>
      std::vector<std::vector<Rational>> g(m, std::vector<Rational>(m));
      for (std::size_t p = 0; p < m; ++p) {
        const Candidate& cp = candidates[members[p]];
        for (std::size_t q = 0; q < m; ++q) {
          const Candidate& cq = candidates[members[q]];
          Rational s = 0;
          for (const auto& [e, coef] : cq.raised[cp.node]) s += coef * gram_at(cp.parent, e);
          g[p][q] = s;
        }
      }
      std::vector<std::size_t> selected;
      std::vector<std::vector<Rational>> selected_cols;
      for (std::size_t q = 0; q < m; ++q) {
        std::vector<Rational> col(m);
        for (std::size_t p = 0; p < m; ++p) col[p] = g[p][q];
        std::vector<Rational> coeffs;
        if (detail::solve_in_span(selected_cols, col, coeffs)) {
          expression[members[q]] = std::move(coeffs);
          span_of[members[q]] = selected;
          continue;
        }
        selected.push_back(q);
        selected_cols.push_back(std::move(col));
        new_index[members[q]] = 0;
      }
      for (std::size_t a : selected)
        for (std::size_t b : selected)
          if (g[a][b] != 0) new_gram.emplace_back(members[a], members[b], g[a][b]);
    }

    // Global indices in candidate (word) order.
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (new_index[k] < 0) continue;
      new_index[k] = static_cast<long>(weights.size());
      weights.push_back(candidates[k].weight);
      auto word = words[candidates[k].parent];
      word.push_back(candidates[k].node);
      words.push_back(std::move(word));
      x_action.push_back(candidates[k].raised);
      current.push_back(static_cast<std::size_t>(new_index[k]));
      if (weights.size() > max_dimension)
        throw ConsistencyError("module exceeds maximum dimension " + std::to_string(max_dimension));
    }
    for (auto& [a, b, v] : new_gram)
      gram.emplace(std::make_pair(static_cast<std::size_t>(new_index[a]),
                                  static_cast<std::size_t>(new_index[b])),
                   std::move(v));

    // y_i on the previous level.
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Candidate& c = candidates[k];
      SparseVec image;
      if (new_index[k] >= 0) {
        image[static_cast<std::size_t>(new_index[k])] = 1;
      } else {
        const auto& members = groups.at(c.weight);
        for (std::size_t s = 0; s < span_of[k].size(); ++s) {
          const std::size_t cand_id = members[span_of[k][s]];
          if (expression[k][s] != 0)
            image[static_cast<std::size_t>(new_index[cand_id])] = expression[k][s];
        }
      }
      y_action[c.parent][c.node] = std::move(image);
    }
    previous = std::move(current);
  }
  y_action.resize(weights.size(), std::vector<SparseVec>(r));

  const std::size_t n = weights.size();
  RepMatrices rep;
  rep.type = rs.type();
  rep.highest_weight = hw;
  rep.basis_weights = weights;
  rep.basis_words = words;
  rep.x.assign(r, SparseMatrix(n, n));
  rep.y.assign(r, SparseMatrix(n, n));
  rep.h.assign(r, SparseMatrix(n, n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < r; ++i) {
      for (const auto& [e, v] : x_action[b][i]) rep.x[i].set(e, b, v);
      for (const auto& [e, v] : y_action[b][i]) rep.y[i].set(e, b, v);
      rep.h[i].set(b, b, weights[b][i]);
    }
  return rep;
}

/// The 56-dimensional minuscule module of E7, highest weight [0^6,1].
inline RepMatrices construct_56_rep() {
  const RootSystem& e7 = root_system(AlgebraType{Family::E, 7});
  RepMatrices rep = construct_irreducible_module(e7, Weight{0, 0, 0, 0, 0, 0, 1}, 56);
  if (rep.dimension() != 56)
    throw ConsistencyError("E7 minuscule module has dimension " + std::to_string(rep.dimension()));
  return rep;
}

/// Checks the four relation families of a canonical generating set exactly.
inline RelationReport verify_canonical_relations(const RepMatrices& rep,
                                                 const std::vector<std::vector<int>>& cartan) {
  RelationReport report;
  const std::size_t r = rep.rank();
  if (cartan.size() != r || rep.y.size() != r || rep.h.size() != r)
    throw InputError("generator count does not match the Cartan matrix");
  const std::size_t n = rep.dimension();
  const SparseMatrix zero(n, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      report.checks.push_back({"[h_i,h_j]=0", i, j, commutator(rep.h[i], rep.h[j]) == zero});
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const SparseMatrix expected = i == j ? rep.h[i] : zero;
      report.checks.push_back({"[x_i,y_j]=d_ij h_i", i, j, commutator(rep.x[i], rep.y[j]) == expected});
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational c = cartan[i][j];
      report.checks.push_back(
          {"[h_j,x_i]=C(i,j)x_i", i, j, commutator(rep.h[j], rep.x[i]) == c * rep.x[i]});
      report.checks.push_back(
          {"[h_j,y_i]=-C(i,j)y_i", i, j, commutator(rep.h[j], rep.y[i]) == (-c) * rep.y[i]});
    }
  return report;
}

/// Residual X^T M + M X for one generator; zero iff M is X-invariant.
inline SparseMatrix invariance_residual(const SparseMatrix& generator, const SparseMatrix& form) {
  return generator.transpose() * form + form * generator;
}

/// Solves M^T = -M, X^T M = -M X over the generators x_i, y_i (the h_i
/// conditions follow). Requires a one-dimensional solution space and a
/// nondegenerate solution; anything else is a ConsistencyError.
inline BilinearForm invariant_antisymmetric_form(const RepMatrices& rep) {
  const std::size_t n = rep.dimension();
  const std::size_t unknowns = n * (n - 1) / 2;
  auto index = [n](std::size_t a, std::size_t b) { return a * n - a * (a + 1) / 2 + (b - a - 1); };
  // M[p][q] as (unknown, sign); sign 0 on the diagonal.
  auto entry = [&](std::size_t p, std::size_t q) -> std::pair<std::size_t, int> {
    if (p == q) return {0, 0};
    return p < q ? std::make_pair(index(p, q), 1) : std::make_pair(index(q, p), -1);
  };

  SparseRowEchelon system(unknowns);
  std::vector<const SparseMatrix*> generators;
  for (const auto& m : rep.x) generators.push_back(&m);
  for (const auto& m : rep.y) generators.push_back(&m);
  for (const SparseMatrix* g : generators) {
    const SparseMatrix& X = *g;
    const SparseMatrix Xt = X.transpose();  // row a of Xt = column a of X
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        // (X^T M + M X)[a][b] = sum_k X[k][a] M[k][b] + sum_k M[a][k] X[k][b]
        SparseRow row;
        for (const auto& [k, v] : Xt.row(a)) {
          const auto [u, s] = entry(k, b);
          if (s != 0) row.emplace_back(u, s * v);
        }
        for (const auto& [k, v] : Xt.row(b)) {
          const auto [u, s] = entry(a, k);
          if (s != 0) row.emplace_back(u, s * v);
        }
        if (!row.empty()) system.add_row(std::move(row));
      }
  }

  BilinearForm form;
  form.solution_dimension = system.nullity();
  if (form.solution_dimension != 1)
    throw ConsistencyError("space of invariant antisymmetric forms has dimension " +
                           std::to_string(form.solution_dimension) + ", expected 1");
  const std::vector<Rational> sol = system.nullspace().front();

  BigInt common = 1;
  for (const Rational& v : sol)
    if (v != 0) common = detail::lcm(common, denominator(v));
  BigInt g = 0;
  std::vector<BigInt> ints(sol.size());
  for (std::size_t k = 0; k < sol.size(); ++k) {
    ints[k] = numerator(sol[k]) * (common / denominator(sol[k]));
    g = gcd(g, ints[k]);
  }
  form.matrix.assign(n, std::vector<BigInt>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const BigInt v = ints[index(a, b)] / g;
      form.matrix[a][b] = v;
      form.matrix[b][a] = -v;
    }
  // First nonzero entry in row-major order positive.
  int flip = 0;
  for (std::size_t a = 0; a < n && flip == 0; ++a)
    for (std::size_t b = 0; b < n && flip == 0; ++b)
      if (form.matrix[a][b] != 0) flip = form.matrix[a][b] > 0 ? 1 : -1;
  if (flip < 0)
    for (auto& row : form.matrix)
      for (auto& v : row) v = -v;

  form.rank = bareiss_rank(form.matrix);
  if (form.rank != n)
    throw ConsistencyError("invariant form is degenerate: rank " + std::to_string(form.rank));
  return form;
}

/// Writes every generator matrix and the form in the write_sparse format,
/// preceded by the basis weights as "weight <index> <labels>" lines.
inline void write_rep_dump(std::ostream& os, const RepMatrices& rep, const BilinearForm* form) {
  os << "# " << rep.type.name() << " module with highest weight " << to_run_length(rep.highest_weight)
     << ", dimension " << rep.dimension() << '\n';
  for (std::size_t b = 0; b < rep.dimension(); ++b)
    os << "weight " << b << ' ' << to_run_length(rep.basis_weights[b]) << '\n';
  for (std::size_t i = 0; i < rep.rank(); ++i) {
    write_sparse(os, "x" + std::to_string(i + 1), rep.x[i]);
    write_sparse(os, "y" + std::to_string(i + 1), rep.y[i]);
    write_sparse(os, "h" + std::to_string(i + 1), rep.h[i]);
  }
  if (form != nullptr) write_sparse(os, "M0", form->to_sparse());
}

}  // namespace liebranch
