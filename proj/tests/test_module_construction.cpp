#include "liebranch/linalg.hpp"
#include "liebranch/module_construction.hpp"
#include "liebranch/weight_system.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace liebranch;

namespace {

const RepMatrices& rep56() {
  static const RepMatrices rep = construct_56_rep();
  return rep;
}

const BilinearForm& form56() {
  static const BilinearForm form = invariant_antisymmetric_form(rep56());
  return form;
}

}  // namespace

TEST(Module56, DimensionAndTraces) {
  const RepMatrices& rep = rep56();
  ASSERT_EQ(rep.dimension(), 56u);
  ASSERT_EQ(rep.rank(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(rep.h[i].trace(), 0);
    EXPECT_EQ(rep.x[i].trace(), 0);
    EXPECT_EQ(rep.y[i].trace(), 0);
  }
}

TEST(Module56, CartanDiagonalsReproduceTheWeightSystem) {
  const RepMatrices& rep = rep56();
  const RootSystem& e7 = root_system("E7");
  WeightSystem diagonal(e7.type());
  for (std::size_t b = 0; b < rep.dimension(); ++b) {
    std::vector<int> l(7);
    for (std::size_t i = 0; i < 7; ++i) {
      const Rational v = rep.h[i].get(b, b);
      ASSERT_EQ(denominator(v), 1);
      l[i] = static_cast<int>(numerator(v));
      for (const auto& [c, w] : rep.h[i].row(b)) EXPECT_EQ(c, b) << "h is not diagonal";
    }
    EXPECT_EQ(Weight(l), rep.basis_weights[b]);
    diagonal.add(Weight(l), 1);
  }
  EXPECT_EQ(diagonal, full_weight_system(e7, Weight{0, 0, 0, 0, 0, 0, 1}));
  // eigenvalues of h_7 are the seventh labels, which lie in {-1, 0, 1}
  std::map<int, int> spectrum;
  for (const Weight& w : rep.basis_weights) ++spectrum[w[6]];
  EXPECT_EQ(spectrum[1] + spectrum[0] + spectrum[-1], 56);
  EXPECT_EQ(spectrum[1], spectrum[-1]);
}

TEST(Module56, CanonicalRelationsHold) {
  const RelationReport report = verify_canonical_relations(rep56(), root_system("E7").cartan_matrix());
  EXPECT_EQ(report.checks.size(), 196u);
  EXPECT_TRUE(report.all_passed());
  std::size_t hx = 0;
  for (const auto& c : report.checks) hx += c.relation == "[h_j,x_i]=C(i,j)x_i";
  EXPECT_EQ(hx, 49u);
}

TEST(Module56, BrokenGeneratorIsDetected) {
  RepMatrices broken = rep56();
  broken.x[0] = SparseMatrix(56, 56);
  const RelationReport report = verify_canonical_relations(broken, root_system("E7").cartan_matrix());
  EXPECT_FALSE(report.all_passed());
  EXPECT_GT(report.failures(), 0u);
  bool found = false;
  for (const auto& c : report.checks)
    if (!c.ok && c.relation == "[x_i,y_j]=d_ij h_i" && c.i == 0 && c.j == 0) found = true;
  EXPECT_TRUE(found);
}

TEST(Module56, RaisingEntriesAreUnits) {
  for (const SparseMatrix& x : rep56().x)
    for (std::size_t r = 0; r < 56; ++r)
      for (const auto& [c, v] : x.row(r)) EXPECT_TRUE(v == 1 || v == -1);
}

TEST(InvariantForm, UniqueAntisymmetricNondegenerate) {
  const BilinearForm& f = form56();
  EXPECT_EQ(f.solution_dimension, 1u);
  EXPECT_EQ(f.rank, 56u);
  const SparseMatrix m = f.to_sparse();
  EXPECT_EQ(m.transpose(), Rational(-1) * m);
  EXPECT_NE(bareiss_determinant(f.matrix), 0);
}

TEST(InvariantForm, KilledByEveryGenerator) {
  const SparseMatrix m = form56().to_sparse();
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_TRUE(invariance_residual(rep56().x[i], m).is_zero()) << i;
    EXPECT_TRUE(invariance_residual(rep56().y[i], m).is_zero()) << i;
    EXPECT_TRUE(invariance_residual(rep56().h[i], m).is_zero()) << i;
  }
}

TEST(InvariantForm, PairsOppositeWeights) {
  const RepMatrices& rep = rep56();
  const auto& m = form56().matrix;
  for (std::size_t a = 0; a < 56; ++a)
    for (std::size_t b = 0; b < 56; ++b)
      if (m[a][b] != 0) EXPECT_EQ(rep.basis_weights[a], -rep.basis_weights[b]);
}

TEST(InvariantForm, Deterministic) {
  const RepMatrices again = construct_56_rep();
  EXPECT_EQ(again.basis_weights, rep56().basis_weights);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(again.x[i], rep56().x[i]);
  EXPECT_EQ(invariant_antisymmetric_form(again).matrix, form56().matrix);
}

TEST(InvariantForm, SymmetricModuleHasNoAntisymmetricForm) {
  // The adjoint of A2 carries a symmetric invariant form, not an antisymmetric one.
  const RepMatrices adj = construct_irreducible_module(root_system("A2"), Weight{1, 1});
  EXPECT_THROW(invariant_antisymmetric_form(adj), ConsistencyError);
  // The defining module of C3 is symplectic.
  const RepMatrices c3 = construct_irreducible_module(root_system("C3"), Weight{1, 0, 0});
  const BilinearForm f = invariant_antisymmetric_form(c3);
  EXPECT_EQ(f.rank, 6u);
}

TEST(ModuleConstruction, SmallModulesSatisfyRelations) {
  struct Case {
    const char* name;
    Weight hw;
    std::size_t dim;
  };
  for (const auto& c : std::vector<Case>{{"A1", Weight{3}, 4},
                                         {"A2", Weight{1, 1}, 8},
                                         {"B2", Weight{1, 1}, 16},
                                         {"G2", Weight{1, 0}, 7},
                                         {"C3", Weight{0, 1, 0}, 14},
                                         {"E7", Weight{1, 0, 0, 0, 0, 0, 0}, 133}}) {
    const RootSystem& rs = root_system(c.name);
    const RepMatrices m = construct_irreducible_module(rs, c.hw);
    EXPECT_EQ(m.dimension(), c.dim) << c.name;
    EXPECT_EQ(BigInt(m.dimension()), weyl_dimension(rs, c.hw)) << c.name;
    EXPECT_TRUE(verify_canonical_relations(m, rs.cartan_matrix()).all_passed()) << c.name;
  }
}

TEST(ModuleConstruction, RespectsDimensionCap) {
  EXPECT_THROW(construct_irreducible_module(root_system("E7"), Weight{1, 0, 0, 0, 0, 0, 0}, 100), ConsistencyError);
}

TEST(SparseDump, RoundTrip) {
  std::ostringstream os;
  write_rep_dump(os, rep56(), &form56());
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line.front(), '#');
  std::size_t weights = 0;
  while (is.peek() == 'w' && std::getline(is, line)) ++weights;
  EXPECT_EQ(weights, 56u);
  std::map<std::string, SparseMatrix> read;
  std::string name;
  SparseMatrix m;
  while (read_sparse(is, name, m)) read[name] = m;
  ASSERT_EQ(read.size(), 22u);
  EXPECT_EQ(read.at("x1"), rep56().x[0]);
  EXPECT_EQ(read.at("y7"), rep56().y[6]);
  EXPECT_EQ(read.at("h4"), rep56().h[3]);
  EXPECT_EQ(read.at("M0"), form56().to_sparse());
}

TEST(SparseRowEchelon, RankAndNullspace) {
  SparseRowEchelon e(4);
  EXPECT_TRUE(e.add_row({{0, 1}, {1, 2}}));
  EXPECT_TRUE(e.add_row({{1, 1}, {2, 1}}));
  EXPECT_FALSE(e.add_row({{0, 2}, {1, 5}, {2, 1}}));  // 2*r0 + r1
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.nullity(), 2u);
  for (const auto& v : e.nullspace()) {
    EXPECT_EQ(v[0] + 2 * v[1], 0);
    EXPECT_EQ(v[1] + v[2], 0);
  }
}

TEST(Bareiss, RankAndDeterminant) {
  using M = std::vector<std::vector<BigInt>>;
  EXPECT_EQ(bareiss_rank(M{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(bareiss_rank(M{{0, 1}, {1, 0}}), 2u);
  EXPECT_EQ(bareiss_determinant(M{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(bareiss_determinant(M{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
  EXPECT_EQ(bareiss_rank(M{}), 0u);
}
