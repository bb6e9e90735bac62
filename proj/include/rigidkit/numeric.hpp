#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rigidkit/geometry.hpp"

namespace rigidkit::numeric {

/// Singular values below this fraction of the largest one count as zero.
inline constexpr double kRankThreshold = 1e-9;

/// Double-precision configuration; row i of `points` belongs to ids[i].
struct RealConfiguration {
  int dim = 0;
  std::vector<VertexId> ids;  // sorted
  Eigen::MatrixXd points;     // ids.size() x dim

  std::size_t index_of(VertexId v) const;
};

/// Squared target length per edge.
using RealLengthProfile = std::map<Edge, double>;

RealConfiguration to_real(const Configuration& c);
RealLengthProfile to_real(const EdgeLengthProfile& p);
RealLengthProfile squared_lengths(const Graph& g, const RealConfiguration& c);

/// |E| x d*n; rows follow sorted edge order, columns are vertex-major.
Eigen::MatrixXd rigidity_matrix(const Graph& g, const RealConfiguration& c);

std::size_t numeric_rank(const Eigen::MatrixXd& m, double rel_threshold = kRankThreshold);

/// rank == d*n - d(d+1)/2. Throws DegenerateSpan when the joints do not
/// affinely span R^d (including n < d+1).
bool is_infinitesimally_rigid(const Graph& g, const RealConfiguration& c);

/// Orthonormal basis of the left null space of the rigidity matrix.
std::vector<Eigen::VectorXd> equilibrium_stress_basis(const Graph& g, const RealConfiguration& c);

/// n x n: -w_ij on edges, diagonal makes every row sum to zero.
Eigen::MatrixXd stress_matrix(const Graph& g, const std::vector<VertexId>& ids, const Eigen::VectorXd& stress);

struct GenericRigidityResult {
  bool certified = false;  // a stress matrix of rank n-d-1 was observed
  int trials_run = 0;
  std::uint64_t seed = 0;
  std::string caveat;  // "certified" or "not observed in N trials"
};

/// Randomised stress-matrix rank test. Only a positive answer is a
/// certificate; a negative one is probabilistic.
GenericRigidityResult generic_global_rigidity(const Graph& g, int d, int trials, std::uint64_t seed);

/// Seeded dyadic coordinates k / 2^20 in [-scale, scale).
RealConfiguration random_configuration(const std::vector<VertexId>& ids, int d, std::uint64_t seed,
                                       double scale = 1.0);

struct SolverParams {
  int max_iterations = 500;
  double residual_tolerance = 1e-10;
  double damping_initial = 1e-3;
  std::uint64_t seed = 0;
};

struct SolveResult {
  RealConfiguration config;
  double residual = 0;  // sqrt(sum_e (|pi-pj|^2 - l_e^2)^2)
  int iterations = 0;
  bool converged = false;
  std::vector<double> accepted_residuals;  // one entry per accepted step, starting with the initial value
};

/// Damped Gauss-Newton (Levenberg) on squared-length residuals.
SolveResult solve_realization(const Graph& g, const RealLengthProfile& target, const RealConfiguration& init,
                              const SolverParams& params);

/// Runs `starts` solves from random inits in [-box, box]^d. Start i uses a
/// stream derived from (params.seed, i); results are ordered by start index.
std::vector<SolveResult> solve_multi_start(const Graph& g, const RealLengthProfile& target, int d, int starts,
                                           double box, const SolverParams& params);

/// RMS point distance after optimal orthogonal alignment (reflections
/// allowed) and translation.
double best_isometry_distance(const RealConfiguration& a, const RealConfiguration& b);

/// Affine dimension of the joints, numerically.
int affine_span_dimension(const RealConfiguration& c, double rel_threshold = kRankThreshold);

}  // namespace rigidkit::numeric
