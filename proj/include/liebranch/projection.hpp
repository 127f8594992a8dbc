#pragma once

// Projection matrices for a subalgebra embedding: A maps Dynkin labels of the
// big algebra to Dynkin labels of the subalgebra, (A lambda)_i = sum_j a_ij lambda_j.

#include "liebranch/core.hpp"
#include "liebranch/root_system.hpp"
#include "liebranch/weight_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#ifndef LIEBRANCH_DATA_DIR
#define LIEBRANCH_DATA_DIR "data"
#endif

namespace liebranch {

class ProjectionMatrix {
 public:
  ProjectionMatrix() = default;
  explicit ProjectionMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty() || rows_.front().empty()) throw InputError("empty projection matrix");
    for (const auto& r : rows_)
      if (r.size() != rows_.front().size()) throw InputError("projection matrix rows differ in length");
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return rows_.empty() ? 0 : rows_.front().size(); }
  int at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  const std::vector<std::vector<int>>& data() const { return rows_; }

  Weight column(std::size_t j) const {
    std::vector<int> c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c[i] = rows_[i].at(j);
    return Weight(std::move(c));
  }

  Weight apply(const Weight& w) const {
    if (w.rank() != cols())
      throw InputError("projection expects " + std::to_string(cols()) + " labels, got " +
                       std::to_string(w.rank()));
    std::vector<int> out(rows(), 0);
    for (std::size_t i = 0; i < rows(); ++i) {
      const auto& r = rows_[i];
      int s = 0;
      for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * w[j];
      out[i] = s;
    }
    return Weight(std::move(out));
  }

  ProjectionMatrix with_column_negated(std::size_t j) const {
    ProjectionMatrix m = *this;
    for (auto& r : m.rows_) r.at(j) = -r.at(j);
    return m;
  }

  friend bool operator==(const ProjectionMatrix&, const ProjectionMatrix&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Rows of whitespace-separated integers; blank lines and '#' comments skipped.
inline ProjectionMatrix parse_projection_matrix(std::istream& is) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw InputError("bad projection matrix entry '" + tok + "'");
      }
      if (pos != tok.size()) throw InputError("bad projection matrix entry '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return ProjectionMatrix(std::move(rows));
}

inline void write_projection_matrix(std::ostream& os, const ProjectionMatrix& a) {
  for (const auto& r : a.data()) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << '\n';
  }
}

/// Directory holding the fixture files; LIEBRANCH_DATA_DIR in the environment
/// overrides the build-time default.
inline std::string default_data_dir() {
  if (const char* env = std::getenv("LIEBRANCH_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return LIEBRANCH_DATA_DIR;
}

inline ProjectionMatrix load_projection_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open projection matrix file '" + path + "'");
  return parse_projection_matrix(in);
}

/// The reference 7x28 matrix for E7 in C28, stored verbatim in
/// <data_dir>/projection_e7_c28.txt.
inline ProjectionMatrix reference_projection_fixture(const std::string& data_dir = default_data_dir()) {
  ProjectionMatrix a = load_projection_matrix(data_dir + "/projection_e7_c28.txt");
  if (a.rows() != 7 || a.cols() != 28) throw InputError("projection fixture is not 7x28");
  return a;
}

/// True iff A maps the weight multiset of V(big_hw) onto that of V(sub_hw)
/// and A(-nu) = -A(nu) holds on it.
inline bool maps_weights_onto(const ProjectionMatrix& a, const RootSystem& big, const Weight& big_hw,
                              const RootSystem& sub, const Weight& sub_hw) {
  if (a.cols() != big.rank() || a.rows() != sub.rank()) return false;
  const WeightSystem source = full_weight_system(big, big_hw);
  const WeightSystem target = full_weight_system(sub, sub_hw);
  WeightSystem image(sub.type());
  for (const auto& [nu, m] : source) {
    const Weight img = a.apply(nu);
    if (a.apply(-nu) != -img) return false;
    image.add(img, m);
  }
  return image == target;
}

enum class TieBreak { lex_descending, lex_ascending };

/// Projection into C_n for a self-dual module V(sub_hw) of dimension 2n with
/// no zero weight: one weight per +- pair (positive rho^vee pairing), ordered
/// by decreasing pairing, is matched with epsilon_1..epsilon_n. Since
/// epsilon_k = omega_k - omega_{k-1}, column k of A is mu_1 + ... + mu_k.
inline ProjectionMatrix derive_symplectic_projection(const RootSystem& sub, const Weight& sub_hw,
                                                     TieBreak tie = TieBreak::lex_descending) {
  const WeightSystem weights = full_weight_system(sub, sub_hw);
  std::vector<Weight> chosen;
  for (const auto& [mu, m] : weights) {
    if (m != 1) throw ConsistencyError("module has a weight of multiplicity > 1");
    const long long p = sub.scaled_rho_check_pairing(mu);
    if (p == 0) throw ConsistencyError("module has a weight with zero rho^vee pairing");
    if (p > 0) chosen.push_back(mu);
  }
  const std::size_t n = chosen.size();
  if (2 * n != weights.size()) throw ConsistencyError("module is not self-dual");
  std::sort(chosen.begin(), chosen.end(), [&](const Weight& a, const Weight& b) {
    const long long pa = sub.scaled_rho_check_pairing(a);
    const long long pb = sub.scaled_rho_check_pairing(b);
    if (pa != pb) return pa > pb;
    return tie == TieBreak::lex_descending ? a > b : a < b;
  });

  std::vector<std::vector<int>> rows(sub.rank(), std::vector<int>(n, 0));
  Weight partial = Weight::zero(sub.rank());
  for (std::size_t k = 0; k < n; ++k) {
    partial += chosen[k];
    for (std::size_t i = 0; i < sub.rank(); ++i) rows[i][k] = partial[i];
  }
  ProjectionMatrix a(std::move(rows));

  // Check every equation A eps_k = mu_k and A(-eps_k) = -mu_k.
  for (std::size_t k = 0; k < n; ++k) {
    Weight eps = Weight::unit(n, k);
    if (k > 0) eps[k - 1] = -1;
    if (a.apply(eps) != chosen[k] || a.apply(-eps) != -chosen[k])
      throw ConsistencyError(
          "projection equations inconsistent for the chosen weight order");
  }
  return a;
}

/// E7 in C28 through the 56-dimensional module [0^6,1]. The requested
/// tie-break is tried first, then the other one.
inline ProjectionMatrix derive_projection_by_weight_matching(TieBreak tie = TieBreak::lex_descending) {
  const RootSystem& e7 = root_system(AlgebraType{Family::E, 7});
  const RootSystem& c28 = root_system(AlgebraType{Family::C, 28});
  const Weight hw{0, 0, 0, 0, 0, 0, 1};
  const TieBreak other = tie == TieBreak::lex_descending ? TieBreak::lex_ascending : TieBreak::lex_descending;
  std::string last_error;
  for (TieBreak t : {tie, other}) {
    try {
      ProjectionMatrix a = derive_symplectic_projection(e7, hw, t);
      if (maps_weights_onto(a, c28, Weight::unit(28, 0), e7, hw)) return a;
      last_error = "derived projection does not map the 56 weights onto the E7 module";
    } catch (const ConsistencyError& e) {
      last_error = e.what();
    }
  }
  throw ConsistencyError(last_error);
}

}  // namespace liebranch
