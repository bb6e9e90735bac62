#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rigidkit/constructions.hpp"
#include "rigidkit/enumeration.hpp"
#include "rigidkit/error.hpp"
#include "rigidkit/numeric.hpp"

using namespace rigidkit;
using namespace rigidkit::numeric;

namespace {

RealConfiguration real(int d, std::vector<std::vector<double>> rows) {
  RealConfiguration c;
  c.dim = d;
  c.points.resize(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c.ids.push_back(static_cast<VertexId>(i + 1));
    for (int k = 0; k < d; ++k) c.points(static_cast<Eigen::Index>(i), k) = rows[i][k];
  }
  return c;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected rigidkit::Error";
  return ErrorCode::InvalidArgument;
}

Graph cycle(VertexId n) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (VertexId v = 1; v <= n; ++v) {
    vs.push_back(v);
    es.emplace_back(v, v % n + 1);
  }
  return Graph(vs, es);
}

const Graph kTriangle = Graph::complete({1, 2, 3});

}  // namespace

TEST(RigidityMatrix, SingleBarOnALine) {
  const Graph g({1, 2}, {Edge(1, 2)});
  const Eigen::MatrixXd r = rigidity_matrix(g, real(1, {{0}, {1}}));
  ASSERT_EQ(r.rows(), 1);
  ASSERT_EQ(r.cols(), 2);
  EXPECT_DOUBLE_EQ(r(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(r(0, 1), 1.0);
}

TEST(RigidityMatrix, TriangleHasFullRank) {
  const auto c = real(2, {{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(numeric_rank(rigidity_matrix(kTriangle, c)), 3U);
}

TEST(RigidityMatrix, PlanarFamilyRankMatchesExactOracle) {
  const FamilyInstance fi = family_instance(2);
  const Framework f(fi.full, paper_configuration(2, PaperConfig::P));
  const Eigen::MatrixXd r = rigidity_matrix(f.graph(), to_real(f.config()));
  EXPECT_EQ(r.rows(), 8);
  EXPECT_EQ(r.cols(), 10);
  EXPECT_EQ(numeric_rank(r), 7U);
  EXPECT_EQ(oracle::exact_rank(oracle::exact_rigidity_matrix(f)), 7U);
}

TEST(RigidityMatrix, RankAgreesWithExactOracleOnRandomFrameworks) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const auto n = static_cast<VertexId>(2 + rng() % 6);
    const Framework f(oracle::random_graph(rng, n), oracle::random_configuration(rng, d, n));
    EXPECT_EQ(numeric_rank(rigidity_matrix(f.graph(), to_real(f.config()))),
              oracle::exact_rank(oracle::exact_rigidity_matrix(f)))
        << "trial " << trial;
  }
}

TEST(RigidityMatrix, RowsAreHalfTheDerivativeOfSquaredLengths) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const Graph g = oracle::random_graph(rng, 6, 0.6);
    RealConfiguration c = random_configuration(g.vertices(), d, rng());
    const Eigen::MatrixXd r = rigidity_matrix(g, c);
    const RealConfiguration v = random_configuration(g.vertices(), d, rng());
    const double h = 1e-6;
    RealConfiguration plus = c;
    RealConfiguration minus = c;
    plus.points += h * v.points;
    minus.points -= h * v.points;
    const auto lp = squared_lengths(g, plus);
    const auto lm = squared_lengths(g, minus);
    Eigen::VectorXd vel(v.points.size());
    for (Eigen::Index i = 0; i < v.points.rows(); ++i) vel.segment(i * d, d) = v.points.row(i).transpose();
    const Eigen::VectorXd rv = r * vel;
    Eigen::Index k = 0;
    for (const Edge& e : g.edges()) {
      EXPECT_NEAR(rv[k], (lp.at(e) - lm.at(e)) / (4 * h), 1e-6);
      ++k;
    }
  }
}

TEST(InfinitesimalRigidity, Examples) {
  EXPECT_TRUE(is_infinitesimally_rigid(kTriangle, real(2, {{0, 0}, {1, 0}, {0, 1}})));
  EXPECT_FALSE(is_infinitesimally_rigid(cycle(4), real(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
  EXPECT_EQ(code_of([] { is_infinitesimally_rigid(kTriangle, real(2, {{0, 0}, {1, 0}, {2, 0}})); }),
            ErrorCode::DegenerateSpan);
  EXPECT_EQ(code_of([] { is_infinitesimally_rigid(Graph({1, 2}, {Edge(1, 2)}), real(2, {{0, 0}, {1, 0}})); }),
            ErrorCode::DegenerateSpan);
}

TEST(InfinitesimalRigidity, PlanarCounterexampleIsInfinitesimallyRigid) {
  const FamilyInstance fi = family_instance(2);
  EXPECT_TRUE(is_infinitesimally_rigid(fi.full, to_real(paper_configuration(2, PaperConfig::P))));
}

TEST(StressBasis, DimensionsAndEquilibrium) {
  EXPECT_TRUE(equilibrium_stress_basis(kTriangle, real(2, {{0, 0}, {1, 0}, {0, 1}})).empty());
  EXPECT_EQ(equilibrium_stress_basis(kTriangle, real(2, {{0, 0}, {1, 0}, {3, 0}})).size(), 1U);

  const Graph k4 = Graph::complete({1, 2, 3, 4});
  const RealConfiguration c = real(2, {{0, 0}, {2, 0}, {0, 3}, {1, 1}});
  const auto basis = equilibrium_stress_basis(k4, c);
  ASSERT_EQ(basis.size(), 1U);
  const Eigen::MatrixXd r = rigidity_matrix(k4, c);
  EXPECT_LE((r.transpose() * basis[0]).norm(), 1e-9);

  const Eigen::MatrixXd omega = stress_matrix(k4, c.ids, basis[0]);
  EXPECT_LE((omega * Eigen::VectorXd::Ones(4)).norm(), 1e-9);
  EXPECT_LE((omega * c.points).norm(), 1e-9);
  EXPECT_EQ(numeric_rank(omega), 1U);  // n - d - 1
}

TEST(StressBasis, RandomFrameworksSatisfyEquilibrium) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const Graph g = oracle::random_graph(rng, 7, 0.7);
    const RealConfiguration c = random_configuration(g.vertices(), d, rng());
    const Eigen::MatrixXd r = rigidity_matrix(g, c);
    const auto basis = equilibrium_stress_basis(g, c);
    EXPECT_EQ(basis.size() + numeric_rank(r), g.edge_count());
    for (const auto& w : basis) {
      EXPECT_LE((r.transpose() * w).norm(), 1e-9);
      const Eigen::MatrixXd omega = stress_matrix(g, c.ids, w);
      EXPECT_LE((omega * c.points).norm(), 1e-8);
      EXPECT_LE((omega * Eigen::VectorXd::Ones(omega.rows())).norm(), 1e-9);
    }
  }
}

TEST(GenericGlobalRigidity, Examples) {
  const FamilyInstance fi = family_instance(2);
  const auto g2 = generic_global_rigidity(fi.full, 2, 32, 20190309);
  EXPECT_TRUE(g2.certified);
  EXPECT_EQ(g2.caveat, "certified");

  const auto c4 = generic_global_rigidity(cycle(4), 2, 32, 1);
  EXPECT_FALSE(c4.certified);
  EXPECT_EQ(c4.trials_run, 32);
  EXPECT_EQ(c4.caveat, "not observed in 32 trials");

  EXPECT_TRUE(generic_global_rigidity(Graph::complete({1, 2, 3, 4, 5}), 2, 8, 3).certified);
  EXPECT_EQ(code_of([] { generic_global_rigidity(kTriangle, 2, 4, 1); }), ErrorCode::TooFewVertices);
}

TEST(GenericGlobalRigidity, PlanarCrossCheckWithRedundantRigidityAndConnectivity) {
  // In the plane generic global rigidity is 3-connectivity plus redundant
  // rigidity; check both independently for G_2.
  const FamilyInstance fi = family_instance(2);
  EXPECT_TRUE(oracle::is_k_connected(fi.full, 3));
  const RealConfiguration c = random_configuration(fi.full.vertices(), 2, 99);
  for (const Edge& e : fi.full.edges()) {
    const Graph minus = fi.full.without_edges({e});
    EXPECT_TRUE(is_infinitesimally_rigid(minus, c)) << e.str();
  }
}

TEST(GenericGlobalRigidity, DeterministicForFixedSeed) {
  const Graph g = family_instance(3).full;
  const auto a = generic_global_rigidity(g, 3, 16, 42);
  const auto b = generic_global_rigidity(g, 3, 16, 42);
  EXPECT_EQ(a.certified, b.certified);
  EXPECT_EQ(a.trials_run, b.trials_run);
  EXPECT_EQ(a.caveat, b.caveat);
}

TEST(GenericGlobalRigidity, FamilyIsGenericallyGloballyRigid) {
  for (int d = 2; d <= 5; ++d) {
    EXPECT_TRUE(generic_global_rigidity(family_instance(d).full, d, 32, 20190309).certified) << d;
  }
}

TEST(RandomConfiguration, DeterministicAndDyadic) {
  const auto a = random_configuration({3, 1, 2}, 3, 8, 2.0);
  const auto b = random_configuration({1, 2, 3}, 3, 8, 2.0);
  EXPECT_EQ(a.ids, (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(a.points, b.points);
  for (Eigen::Index i = 0; i < a.points.size(); ++i) {
    const double x = a.points.data()[i];
    EXPECT_GE(x, -2.0);
    EXPECT_LT(x, 2.0);
    EXPECT_EQ(x * (1 << 19), std::floor(x * (1 << 19)));
  }
}

TEST(Solver, ConvergesOnAFeasibleTriangle) {
  const RealLengthProfile target{{Edge(1, 2), 9.0}, {Edge(1, 3), 16.0}, {Edge(2, 3), 25.0}};
  SolverParams params;
  params.seed = 1;
  const auto results = solve_multi_start(kTriangle, target, 2, 4, 3.0, params);
  ASSERT_EQ(results.size(), 4U);
  for (const SolveResult& r : results) {
    EXPECT_TRUE(r.converged);
    EXPECT_LE(r.residual, 1e-10);
    const auto got = squared_lengths(kTriangle, r.config);
    for (const auto& [e, l] : target) EXPECT_NEAR(got.at(e), l, 1e-8);
  }
}

TEST(Solver, DoesNotConvergeOnAnInfeasibleTriangle) {
  const RealLengthProfile target{{Edge(1, 2), 1.0}, {Edge(1, 3), 1.0}, {Edge(2, 3), 9.0}};
  SolverParams params;
  params.seed = 2;
  for (const SolveResult& r : solve_multi_start(kTriangle, target, 2, 4, 2.0, params)) {
    EXPECT_FALSE(r.converged);
    EXPECT_GT(r.residual, 1e-3);
  }
}

TEST(Solver, AcceptedResidualsAreMonotone) {
  const FamilyInstance fi = family_instance(2);
  const auto target = to_real(edge_length_profile(Framework(fi.full, paper_configuration(2, PaperConfig::P))));
  SolverParams params;
  params.seed = 3;
  for (const SolveResult& r : solve_multi_start(fi.full, target, 2, 8, 2.0, params)) {
    ASSERT_FALSE(r.accepted_residuals.empty());
    for (std::size_t i = 1; i < r.accepted_residuals.size(); ++i) {
      EXPECT_LE(r.accepted_residuals[i], r.accepted_residuals[i - 1]);
    }
    EXPECT_DOUBLE_EQ(r.accepted_residuals.back(), r.residual);
  }
}

TEST(Solver, MultiStartIsDeterministic) {
  const RealLengthProfile target{{Edge(1, 2), 9.0}, {Edge(1, 3), 16.0}, {Edge(2, 3), 25.0}};
  SolverParams params;
  params.seed = 77;
  const auto a = solve_multi_start(kTriangle, target, 2, 6, 3.0, params);
  const auto b = solve_multi_start(kTriangle, target, 2, 6, 3.0, params);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].config.points, b[i].config.points);
}

TEST(Solver, RejectsBadTargets) {
  const RealLengthProfile partial{{Edge(1, 2), 1.0}};
  SolverParams params;
  EXPECT_EQ(code_of([&] { solve_multi_start(kTriangle, partial, 2, 3, 1.0, params); }), ErrorCode::GraphMismatch);
  EXPECT_EQ(code_of([&] { solve_multi_start(kTriangle, partial, 2, -1, 1.0, params); }), ErrorCode::InvalidArgument);
}

TEST(Procrustes, InvariantUnderRigidMotionsAndReflections) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const RealConfiguration a = random_configuration({1, 2, 3, 4, 5, 6}, d, rng());
    const Eigen::MatrixXd m = Eigen::MatrixXd::Random(d, d);
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
    RealConfiguration b = a;
    b.points = (a.points * q).rowwise() + Eigen::RowVectorXd::Random(d);
    EXPECT_LE(best_isometry_distance(a, b), 1e-12);
  }
}

TEST(Procrustes, DetectsNonCongruentShapes) {
  const auto a = real(2, {{0, 0}, {1, 0}, {0, 1}});
  const auto b = real(2, {{0, 0}, {2, 0}, {0, 1}});
  EXPECT_GT(best_isometry_distance(a, b), 0.1);
  const auto line = real(3, {{0, 0, 0}, {1, 0, 0}});
  EXPECT_EQ(code_of([&] { best_isometry_distance(a, line); }), ErrorCode::DimensionMismatch);
}

TEST(Conversion, ExactToReal) {
  const Configuration c = paper_configuration(2, PaperConfig::P);
  const RealConfiguration r = to_real(c);
  EXPECT_EQ(r.ids, (std::vector<VertexId>{1, 2, 3, 4, 5}));
  EXPECT_DOUBLE_EQ(r.points(r.index_of(3), 0), 1.05);
  const auto lengths = to_real(edge_length_profile(Framework(family_instance(2).full, c)));
  EXPECT_DOUBLE_EQ(lengths.at(Edge(2, 3)), 1.85);
  EXPECT_EQ(affine_span_dimension(r), 2);
}
