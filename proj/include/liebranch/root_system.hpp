#pragma once

// Root systems of simple Lie algebras, Weyl-group action on Dynkin labels and
// the invariant form.
//
// Cartan convention: C(i,j) = alpha_i(h_j), so that [h_j, x_i] = C(i,j) x_i.
// The Dynkin labels of the simple root alpha_i are therefore row i of C, and
// s_i(w) = w - w_i * row_i(C).
//
// Node numbering (0-based index k is Dynkin node k+1):
//   A_n, B_n, C_n, D_n : Bourbaki chains; for B_n node n is short, for C_n
//                        node n is long (double edge between n-1 and n).
//   E_6, E_7, E_8      : node 2 attached to node 4, chain 1-3-4-5-...
//   F_4                : nodes 1,2 long, 3,4 short
//   G_2                : node 1 short, node 2 long

#include "liebranch/core.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

namespace liebranch {

enum class Family { A, B, C, D, E, F, G };

struct AlgebraType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const {
    static constexpr char letters[] = "ABCDEFG";
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
  }

  bool is_supported() const {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B: return rank >= 2;
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 4;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  /// Parses names like "E7", "C28", "a2" (case-insensitive letter).
  static AlgebraType parse(const std::string& text) {
    if (text.size() < 2) throw InputError("unsupported algebra type '" + text + "'");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (letter < 'A' || letter > 'G') throw InputError("unsupported algebra type '" + text + "'");
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("unsupported algebra type '" + text + "'");
      rank = rank * 10 + (text[i] - '0');
      if (rank > 1000) throw InputError("unsupported algebra type '" + text + "'");
    }
    AlgebraType t{static_cast<Family>(letter - 'A'), rank};
    if (!t.is_supported()) throw InputError("unsupported algebra type '" + text + "'");
    return t;
  }

  friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
  friend auto operator<=>(const AlgebraType&, const AlgebraType&) = default;
};

/// Positive root with its simple-root expansion and Dynkin-label form.
struct Root {
  std::vector<int> coefficients;
  Weight labels;
  int height = 0;
};

struct SignedWeight {
  Weight weight;
  int sign = 1;
};

/// What to_dominant_signed reports for a result lying on a chamber wall.
enum class WallPolicy {
  keep,            ///< plain straightening: sign is always +-1
  vanish_on_wall,  ///< sign 0 if the dominant result has a zero label (rho-shifted use)
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(AlgebraType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) {  // 1-based simple edge
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_{n-1}(h_n), alpha_n short
      c[n - 1][n - 2] = -1;
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -1;  // alpha_{n-1}(h_n), alpha_n long
      c[n - 1][n - 2] = -2;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(1, 2);
      link(3, 4);
      c[1][2] = -2;  // alpha_2 long, alpha_3 short
      c[2][1] = -1;
      break;
    case Family::G:
      c[0][1] = -1;  // alpha_1 short
      c[1][0] = -3;
      break;
  }
  return c;
}

inline std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw ConsistencyError("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = col; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) { return a / gcd(a, b) * b; }

}  // namespace detail

class RootSystem {
 public:
  explicit RootSystem(AlgebraType type) : type_(type) {
    if (!type.is_supported()) throw InputError("unsupported algebra type " + type.name());
    cartan_ = detail::cartan_matrix(type);
    const std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && ((cartan_[i][j] == 0) != (cartan_[j][i] == 0)))
          throw ConsistencyError("Cartan matrix is not symmetrizable");
    neighbors_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (cartan_[i][j] != 0) neighbors_[i].push_back(j);
    build_symmetrizer();
    build_forms();
    build_positive_roots();
  }

  const AlgebraType& type() const { return type_; }
  std::size_t rank() const { return cartan_.size(); }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  std::size_t dimension() const { return rank() + 2 * positive_roots_.size(); }

  Weight simple_root(std::size_t i) const { return Weight(cartan_.at(i)); }
  Weight fundamental_weight(std::size_t i) const { return Weight::unit(rank(), i); }
  Weight weyl_vector() const { return Weight(std::vector<int>(rank(), 1)); }

  /// Coordinates of omega_i in the simple-root basis (row i of C^{-1}).
  const std::vector<Rational>& fundamental_weight_in_roots(std::size_t i) const {
    return inverse_cartan_.at(i);
  }

  /// Squared length of alpha_i with long roots normalized to 2.
  Rational simple_root_length2(std::size_t i) const { return 2 * root_scale_[i]; }

  void check_rank(const Weight& w) const {
    if (w.rank() != rank())
      throw InputError("weight " + to_run_length(w) + " has " + std::to_string(w.rank()) +
                       " labels, " + type_.name() + " needs " + std::to_string(rank()));
  }

  /// s_i(w) = w - w_i alpha_i.
  Weight reflect(Weight w, std::size_t i) const {
    check_rank(w);
    if (i >= rank()) throw InputError("node index out of range");
    reflect_in_place(w, i);
    return w;
  }

  void reflect_in_place(Weight& w, std::size_t i) const {
    const int wi = w[i];
    if (wi == 0) return;
    for (std::size_t j : neighbors_[i]) w[j] -= wi * cartan_[i][j];
  }

  /// Dominant representative of the Weyl orbit of w and the sign (-1)^l of
  /// the straightening word. No rho shift is applied here.
  SignedWeight to_dominant_signed(Weight w, WallPolicy policy = WallPolicy::keep) const {
    check_rank(w);
    int sign = 1;
    for (;;) {
      std::size_t i = 0;
      while (i < w.rank() && w[i] >= 0) ++i;
      if (i == w.rank()) break;
      reflect_in_place(w, i);
      sign = -sign;
    }
    if (policy == WallPolicy::vanish_on_wall)
      for (int v : w.labels())
        if (v == 0) return {std::move(w), 0};
    return {std::move(w), sign};
  }

  Weight to_dominant(Weight w) const { return to_dominant_signed(std::move(w)).weight; }

  /// W-invariant symmetric form, long roots of squared length 2.
  Rational inner_product(const Weight& a, const Weight& b) const {
    return ratio(scaled_inner_product(a, b), form_denominator_);
  }

  /// <a,b> multiplied by form_denominator(); exact integer.
  long long scaled_inner_product(const Weight& a, const Weight& b) const {
    check_rank(a);
    check_rank(b);
    long long s = 0;
    const std::size_t n = rank();
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      long long row = 0;
      for (std::size_t j = 0; j < n; ++j) row += form_[i][j] * b[j];
      s += a[i] * row;
    }
    return s;
  }
  long long form_denominator() const { return form_denominator_; }

  /// <w, rho^vee> times rho_check_denominator(); orders weights by height.
  long long scaled_rho_check_pairing(const Weight& w) const {
    check_rank(w);
    long long s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += rho_check_[i] * w[i];
    return s;
  }
  long long rho_check_denominator() const { return rho_check_denominator_; }

  Rational rho_check_pairing(const Weight& w) const {
    return ratio(scaled_rho_check_pairing(w), rho_check_denominator_);
  }

  /// <w, alpha^vee> = 2<w,alpha>/<alpha,alpha> for a root given in labels.
  Rational coroot_pairing(const Weight& w, const Weight& root) const {
    return ratio(2 * scaled_inner_product(w, root), scaled_inner_product(root, root));
  }

  /// Simple-root expansion of a weight lying in the root lattice span.
  std::vector<Rational> root_coordinates(const Weight& w) const {
    check_rank(w);
    std::vector<Rational> c(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) c[j] += w[i] * inverse_cartan_[i][j];
    return c;
  }

  /// Integer symmetrizer d_i proportional to |alpha_i|^2, shortest root = 1.
  int length_class(std::size_t i) const { return length_class_[i]; }

 private:
  void build_symmetrizer() {
    // d_j / d_i = C(j,i) / C(i,j) along edges, propagated over the connected diagram.
    const std::size_t n = rank();
    std::vector<Rational> d(n, 0);
    d[0] = 1;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j : neighbors_[i]) {
        if (j == i || d[j] != 0) continue;
        d[j] = d[i] * ratio(cartan_[j][i], cartan_[i][j]);
        stack.push_back(j);
      }
    }
    const Rational longest = *std::max_element(d.begin(), d.end());
    const Rational shortest = *std::min_element(d.begin(), d.end());
    root_scale_.resize(n);
    length_class_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      root_scale_[i] = d[i] / longest;
      const Rational cls = d[i] / shortest;
      if (denominator(cls) != 1) throw ConsistencyError("non-integral length ratio");
      length_class_[i] = static_cast<int>(numerator(cls));
    }
  }

  void build_forms() {
    const std::size_t n = rank();
    inverse_cartan_ = detail::invert(cartan_);
    // <a,b> = a C^{-1} D b^T with D = diag(|alpha_i|^2 / 2).
    std::vector<std::vector<Rational>> f(n, std::vector<Rational>(n));
    BigInt den = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        f[i][j] = inverse_cartan_[i][j] * root_scale_[j];
        den = detail::lcm(den, denominator(f[i][j]));
      }
    form_denominator_ = static_cast<long long>(den);
    form_.assign(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational scaled = f[i][j] * den;
        form_[i][j] = static_cast<long long>(numerator(scaled));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (form_[i][j] != form_[j][i]) throw ConsistencyError("invariant form is not symmetric");

    std::vector<Rational> r(n);
    BigInt rden = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) r[i] += inverse_cartan_[i][j];
      rden = detail::lcm(rden, denominator(r[i]));
    }
    rho_check_denominator_ = static_cast<long long>(rden);
    rho_check_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      rho_check_[i] = static_cast<long long>(numerator(Rational(r[i] * rden)));
  }

  // Closure from the simple roots: for root beta and node i, the alpha_i-string
  // through beta is beta - p alpha_i, ..., beta + q alpha_i with
  // p - q = <beta, alpha_i^vee>; beta + alpha_i is a root iff q > 0.
  void build_positive_roots() {
    const std::size_t n = rank();
    std::map<std::vector<int>, std::size_t> index;
    std::vector<std::vector<int>> level;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> c(n, 0);
      c[i] = 1;
      index.emplace(c, 0);
      level.push_back(c);
    }
    std::vector<std::vector<int>> all = level;
    while (!level.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& beta : level) {
        for (std::size_t i = 0; i < n; ++i) {
          int pairing = 0;
          for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan_[j][i];
          int p = 0;
          std::vector<int> down = beta;
          for (;;) {
            --down[i];
            if (down[i] < 0 || !index.count(down)) break;
            ++p;
          }
          if (p - pairing <= 0) continue;
          std::vector<int> up = beta;
          ++up[i];
          if (index.emplace(up, 0).second) next.push_back(up);
        }
      }
      std::sort(next.begin(), next.end());
      all.insert(all.end(), next.begin(), next.end());
      level = std::move(next);
    }
    positive_roots_.reserve(all.size());
    for (auto& c : all) {
      Root r;
      r.height = std::accumulate(c.begin(), c.end(), 0);
      std::vector<int> labels(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) labels[j] += c[i] * cartan_[i][j];
      r.labels = Weight(std::move(labels));
      r.coefficients = std::move(c);
      positive_roots_.push_back(std::move(r));
    }
  }

  AlgebraType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<Rational> root_scale_;
  std::vector<int> length_class_;
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<std::vector<long long>> form_;
  long long form_denominator_ = 1;
  std::vector<long long> rho_check_;
  long long rho_check_denominator_ = 1;
  std::vector<Root> positive_roots_;
};

inline RootSystem build_root_system(AlgebraType type) { return RootSystem(type); }

/// Process-wide registry; each type is built once and shared read-only.
inline const RootSystem& root_system(AlgebraType type) {
  static std::mutex mutex;
  static std::map<AlgebraType, std::unique_ptr<const RootSystem>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(type);
  if (it == registry.end())
    it = registry.emplace(type, std::make_unique<const RootSystem>(type)).first;
  return *it->second;
}

inline const RootSystem& root_system(const std::string& name) {
  return root_system(AlgebraType::parse(name));
}

}  // namespace liebranch
