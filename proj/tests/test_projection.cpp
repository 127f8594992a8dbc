#include "liebranch/module_construction.hpp"
#include "liebranch/projection.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace liebranch;

namespace {

const Weight kE7Minuscule{0, 0, 0, 0, 0, 0, 1};

// Labels of +-epsilon_k in C28: epsilon_k = omega_k - omega_{k-1}.
std::vector<Weight> c28_defining_weights() {
  std::vector<Weight> out;
  for (std::size_t k = 0; k < 28; ++k) {
    Weight e = Weight::unit(28, k);
    if (k > 0) e[k - 1] = -1;
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

// E7 weights of the 56 read off the explicitly constructed module.
std::multiset<Weight> constructed_56_weights() {
  const RepMatrices rep = construct_56_rep();
  return {rep.basis_weights.begin(), rep.basis_weights.end()};
}

}  // namespace

TEST(ProjectionFixture, ShapeAndKnownEntries) {
  const ProjectionMatrix a = reference_projection_fixture();
  ASSERT_EQ(a.rows(), 7u);
  ASSERT_EQ(a.cols(), 28u);
  EXPECT_EQ(a.at(6, 24), 1);
  EXPECT_EQ(a.at(6, 25), 2);
  EXPECT_EQ(a.at(6, 26), 3);
  EXPECT_EQ(a.at(6, 27), 2);
  std::size_t nonzero = 0;
  for (int v : a.data()[0]) {
    if (v != 0) {
      ++nonzero;
      EXPECT_EQ(v, 1);
    }
  }
  EXPECT_EQ(nonzero, 10u);
}

TEST(ProjectionFixture, MapsDefiningWeightsOntoThe56) {
  const ProjectionMatrix a = reference_projection_fixture();
  std::multiset<Weight> image;
  for (const Weight& e : c28_defining_weights()) image.insert(a.apply(e));
  EXPECT_EQ(image, constructed_56_weights());
  EXPECT_TRUE(maps_weights_onto(a, root_system("C28"), Weight::unit(28, 0), root_system("E7"), kE7Minuscule));
}

TEST(ProjectionFixture, NegatedColumnBreaksTheBijection) {
  const ProjectionMatrix a = reference_projection_fixture();
  for (std::size_t j : {0u, 13u, 27u})
    EXPECT_FALSE(maps_weights_onto(a.with_column_negated(j), root_system("C28"), Weight::unit(28, 0),
                                   root_system("E7"), kE7Minuscule))
        << j;
}

TEST(DerivedProjection, MapsDefiningWeightsOntoThe56) {
  const ProjectionMatrix a = derive_projection_by_weight_matching();
  ASSERT_EQ(a.rows(), 7u);
  ASSERT_EQ(a.cols(), 28u);
  std::multiset<Weight> image;
  for (const Weight& e : c28_defining_weights()) image.insert(a.apply(e));
  EXPECT_EQ(image, constructed_56_weights());
}

TEST(DerivedProjection, FirstColumnIsTheHighestWeight) {
  const ProjectionMatrix a = derive_projection_by_weight_matching();
  EXPECT_EQ(a.column(0), kE7Minuscule);
  // A(-eps_1) = -mu_1
  EXPECT_EQ(a.apply(-Weight::unit(28, 0)), -kE7Minuscule);
}

TEST(DerivedProjection, ColumnsArePartialSumsOfDecreasingWeights) {
  const RootSystem& e7 = root_system("E7");
  const ProjectionMatrix a = derive_projection_by_weight_matching();
  long long previous = std::numeric_limits<long long>::max();
  for (std::size_t k = 0; k < 28; ++k) {
    const Weight mu = k == 0 ? a.column(0) : a.column(k) - a.column(k - 1);
    const long long p = e7.scaled_rho_check_pairing(mu);
    EXPECT_GT(p, 0);
    EXPECT_LE(p, previous);
    previous = p;
  }
}

TEST(DerivedProjection, AlternativeTieBreakIsAlsoValid) {
  const ProjectionMatrix a = derive_projection_by_weight_matching(TieBreak::lex_descending);
  const ProjectionMatrix b = derive_projection_by_weight_matching(TieBreak::lex_ascending);
  EXPECT_TRUE(maps_weights_onto(b, root_system("C28"), Weight::unit(28, 0), root_system("E7"), kE7Minuscule));
  EXPECT_EQ(a.column(0), b.column(0));
}

TEST(DerivedProjection, Deterministic) {
  EXPECT_EQ(derive_projection_by_weight_matching(), derive_projection_by_weight_matching());
}

TEST(DerivedProjection, SmallSymplecticCase) {
  // C3 in C3 through its own defining module recovers a matrix that maps
  // the six weights onto themselves.
  const RootSystem& c3 = root_system("C3");
  const ProjectionMatrix a = derive_symplectic_projection(c3, Weight{1, 0, 0});
  EXPECT_TRUE(maps_weights_onto(a, c3, Weight{1, 0, 0}, c3, Weight{1, 0, 0}));
  // G2 [1,0] has a zero weight, so it does not embed this way.
  EXPECT_THROW(derive_symplectic_projection(root_system("G2"), Weight{1, 0}), ConsistencyError);
}

TEST(ProjectionIO, RoundTripAndErrors) {
  const ProjectionMatrix a = reference_projection_fixture();
  std::stringstream ss;
  write_projection_matrix(ss, a);
  EXPECT_EQ(parse_projection_matrix(ss), a);
  std::istringstream ragged("1 2 3\n4 5\n");
  EXPECT_THROW(parse_projection_matrix(ragged), InputError);
  std::istringstream junk("1 x 3\n");
  EXPECT_THROW(parse_projection_matrix(junk), InputError);
  EXPECT_THROW(load_projection_matrix("/nonexistent/matrix.txt"), InputError);
}
