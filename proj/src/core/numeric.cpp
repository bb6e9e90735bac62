#include "rigidkit/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <exception>
#include <thread>

#include "rigidkit/error.hpp"

namespace rigidkit::numeric {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

// Uniform on {k / 2^20 : -2^20 <= k < 2^20}; uses raw engine output only so
// the stream is identical on every standard library.
double dyadic(std::mt19937_64& rng) {
  const auto k = static_cast<std::int64_t>(rng() >> 43) - (std::int64_t{1} << 20);
  return std::ldexp(static_cast<double>(k), -20);
}

Eigen::VectorXd flatten(const RealConfiguration& c) {
  Eigen::VectorXd x(c.points.size());
  for (Eigen::Index i = 0; i < c.points.rows(); ++i) x.segment(i * c.dim, c.dim) = c.points.row(i).transpose();
  return x;
}

void unflatten(const Eigen::VectorXd& x, RealConfiguration& c) {
  for (Eigen::Index i = 0; i < c.points.rows(); ++i) c.points.row(i) = x.segment(i * c.dim, c.dim).transpose();
}

struct IndexedEdge {
  Eigen::Index i;
  Eigen::Index j;
  double target;
};

std::vector<IndexedEdge> index_edges(const Graph& g, const RealConfiguration& c, const RealLengthProfile* target) {
  std::vector<IndexedEdge> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    double t = 0;
    if (target) {
      const auto it = target->find(e);
      if (it == target->end()) throw Error(ErrorCode::GraphMismatch, "target has no length for edge " + e.str());
      t = it->second;
    }
    out.push_back({static_cast<Eigen::Index>(c.index_of(e.u)), static_cast<Eigen::Index>(c.index_of(e.v)), t});
  }
  return out;
}

Eigen::VectorXd residuals(const std::vector<IndexedEdge>& edges, const Eigen::VectorXd& x, int d) {
  Eigen::VectorXd r(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    r[k] = (x.segment(edges[k].i * d, d) - x.segment(edges[k].j * d, d)).squaredNorm() - edges[k].target;
  }
  return r;
}

void require_graph_matches(const Graph& g, const RealConfiguration& c) {
  if (g.vertices() != c.ids) throw Error(ErrorCode::GraphMismatch, "configuration does not match the graph");
}

}  // namespace

std::size_t RealConfiguration::index_of(VertexId v) const {
  const auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) throw Error(ErrorCode::InvalidArgument, "no point for vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - ids.begin());
}

RealConfiguration to_real(const Configuration& c) {
  RealConfiguration out;
  out.dim = c.dim();
  out.ids = c.vertex_ids();
  out.points.resize(static_cast<Eigen::Index>(out.ids.size()), c.dim());
  Eigen::Index row = 0;
  for (const auto& [id, p] : c.points()) {
    for (int k = 0; k < c.dim(); ++k) out.points(row, k) = p[k].to_double();
    ++row;
  }
  return out;
}

RealLengthProfile to_real(const EdgeLengthProfile& p) {
  RealLengthProfile out;
  for (const auto& [e, len] : p.lengths) out.emplace(e, len.to_double());
  return out;
}

RealLengthProfile squared_lengths(const Graph& g, const RealConfiguration& c) {
  RealLengthProfile out;
  for (const Edge& e : g.edges()) {
    out.emplace(e, (c.points.row(c.index_of(e.u)) - c.points.row(c.index_of(e.v))).squaredNorm());
  }
  return out;
}

Eigen::MatrixXd rigidity_matrix(const Graph& g, const RealConfiguration& c) {
  require_graph_matches(g, c);
  const int d = c.dim;
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.edge_count()), c.points.size());
  Eigen::Index row = 0;
  for (const Edge& e : g.edges()) {
    const auto i = static_cast<Eigen::Index>(c.index_of(e.u));
    const auto j = static_cast<Eigen::Index>(c.index_of(e.v));
    const Eigen::RowVectorXd diff = c.points.row(i) - c.points.row(j);
    r.block(row, i * d, 1, d) = diff;
    r.block(row, j * d, 1, d) = -diff;
    ++row;
  }
  return r;
}

std::size_t numeric_rank(const Eigen::MatrixXd& m, double rel_threshold) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(m).singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  return static_cast<std::size_t>((sv.array() > rel_threshold * sv[0]).count());
}

int affine_span_dimension(const RealConfiguration& c, double rel_threshold) {
  if (c.points.rows() == 0) return -1;
  const Eigen::MatrixXd centered = c.points.rowwise() - c.points.colwise().mean();
  return static_cast<int>(numeric_rank(centered, rel_threshold));
}

bool is_infinitesimally_rigid(const Graph& g, const RealConfiguration& c) {
  const auto n = static_cast<long>(c.ids.size());
  const long d = c.dim;
  if (n < d + 1 || affine_span_dimension(c) < d) {
    throw Error(ErrorCode::DegenerateSpan, "joints do not affinely span R^" + std::to_string(d));
  }
  const auto rank = static_cast<long>(numeric_rank(rigidity_matrix(g, c)));
  return rank == d * n - d * (d + 1) / 2;
}

std::vector<Eigen::VectorXd> equilibrium_stress_basis(const Graph& g, const RealConfiguration& c) {
  const Eigen::MatrixXd r = rigidity_matrix(g, c);
  std::vector<Eigen::VectorXd> basis;
  if (r.rows() == 0) return basis;
  if (r.cols() == 0) {
    for (Eigen::Index k = 0; k < r.rows(); ++k) basis.push_back(Eigen::VectorXd::Unit(r.rows(), k));
    return basis;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullU);
  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv.size() > 0 && sv[0] > 0.0) rank = (sv.array() > kRankThreshold * sv[0]).count();
  for (Eigen::Index k = rank; k < r.rows(); ++k) basis.push_back(svd.matrixU().col(k));
  return basis;
}

Eigen::MatrixXd stress_matrix(const Graph& g, const std::vector<VertexId>& ids, const Eigen::VectorXd& stress) {
  if (stress.size() != static_cast<Eigen::Index>(g.edge_count())) {
    throw Error(ErrorCode::DimensionMismatch, "stress has wrong length");
  }
  RealConfiguration lookup;
  lookup.ids = ids;
  const auto n = static_cast<Eigen::Index>(ids.size());
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index k = 0;
  for (const Edge& e : g.edges()) {
    const auto i = static_cast<Eigen::Index>(lookup.index_of(e.u));
    const auto j = static_cast<Eigen::Index>(lookup.index_of(e.v));
    omega(i, j) -= stress[k];
    omega(j, i) -= stress[k];
    omega(i, i) += stress[k];
    omega(j, j) += stress[k];
    ++k;
  }
  return omega;
}

RealConfiguration random_configuration(const std::vector<VertexId>& ids, int d, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  RealConfiguration c;
  c.dim = d;
  c.ids = ids;
  std::sort(c.ids.begin(), c.ids.end());
  c.points.resize(static_cast<Eigen::Index>(c.ids.size()), d);
  for (Eigen::Index i = 0; i < c.points.rows(); ++i) {
    for (int k = 0; k < d; ++k) c.points(i, k) = scale * dyadic(rng);
  }
  return c;
}

GenericRigidityResult generic_global_rigidity(const Graph& g, int d, int trials, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  const auto n = static_cast<long>(g.vertex_count());
  if (n < d + 2) {
    throw Error(ErrorCode::TooFewVertices, "need at least d+2 = " + std::to_string(d + 2) + " vertices");
  }

  GenericRigidityResult result;
  result.seed = seed;
  for (int t = 0; t < trials; ++t) {
    result.trials_run = t + 1;
    const RealConfiguration c = random_configuration(g.vertices(), d, derive_seed(seed, 2 * std::uint64_t(t)));
    const Eigen::MatrixXd r = rigidity_matrix(g, c);
    if (r.rows() == 0) continue;

    // Random element of the left null space: project a random vector off the
    // column space of R.
    std::mt19937_64 rng(derive_seed(seed, 2 * std::uint64_t(t) + 1));
    Eigen::VectorXd z(r.rows());
    for (Eigen::Index k = 0; k < z.size(); ++k) z[k] = dyadic(rng);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeThinU);
    const Eigen::VectorXd& sv = svd.singularValues();
    const Eigen::Index rank = sv[0] > 0.0 ? (sv.array() > kRankThreshold * sv[0]).count() : 0;
    const Eigen::MatrixXd u = svd.matrixU().leftCols(rank);
    Eigen::VectorXd stress = z - u * (u.transpose() * z);
    const double norm = stress.norm();
    if (norm <= kRankThreshold * z.norm()) continue;  // no self-stress
    stress /= norm;

    const std::size_t rank_omega = numeric_rank(stress_matrix(g, c.ids, stress));
    if (static_cast<long>(rank_omega) == n - d - 1) {
      result.certified = true;
      result.caveat = "certified";
      return result;
    }
  }
  result.caveat = "not observed in " + std::to_string(trials) + " trials";
  return result;
}

SolveResult solve_realization(const Graph& g, const RealLengthProfile& target, const RealConfiguration& init,
                              const SolverParams& params) {
  if (params.max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
  if (!(params.residual_tolerance > 0)) throw Error(ErrorCode::InvalidArgument, "residual_tolerance must be > 0");
  require_graph_matches(g, init);
  if (target.size() != g.edge_count()) throw Error(ErrorCode::GraphMismatch, "target must cover exactly the edges");

  const int d = init.dim;
  const auto edges = index_edges(g, init, &target);
  SolveResult out;
  out.config = init;
  Eigen::VectorXd x = flatten(init);
  Eigen::VectorXd r = residuals(edges, x, d);
  double cost = r.norm();
  out.accepted_residuals.push_back(cost);
  double lambda = params.damping_initial;

  const auto m = static_cast<Eigen::Index>(edges.size());
  Eigen::MatrixXd jac(m, x.size());
  int it = 0;
  for (; it < params.max_iterations && cost > params.residual_tolerance; ++it) {
    jac.setZero();
    for (Eigen::Index k = 0; k < m; ++k) {
      const Eigen::VectorXd diff = 2.0 * (x.segment(edges[k].i * d, d) - x.segment(edges[k].j * d, d));
      jac.block(k, edges[k].i * d, 1, d) = diff.transpose();
      jac.block(k, edges[k].j * d, 1, d) = -diff.transpose();
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;

    bool accepted = false;
    while (lambda < 1e12) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += lambda;
      const Eigen::VectorXd step = damped.ldlt().solve(-grad);
      const Eigen::VectorXd x_new = x + step;
      const Eigen::VectorXd r_new = residuals(edges, x_new, d);
      const double cost_new = r_new.norm();
      if (cost_new < cost) {
        x = x_new;
        r = r_new;
        cost = cost_new;
        lambda = std::max(lambda / 3.0, 1e-15);
        accepted = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!accepted) break;  // stalled at a local minimum
    out.accepted_residuals.push_back(cost);
  }

  unflatten(x, out.config);
  out.residual = cost;
  out.iterations = it;
  out.converged = cost <= params.residual_tolerance;
  return out;
}

std::vector<SolveResult> solve_multi_start(const Graph& g, const RealLengthProfile& target, int d, int starts,
                                           double box, const SolverParams& params) {
  if (starts < 0) throw Error(ErrorCode::InvalidArgument, "starts must be >= 0");
  std::vector<SolveResult> results(static_cast<std::size_t>(starts));
  const unsigned workers = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), 16U));
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < results.size(); i += workers) {
        SolverParams p = params;
        p.seed = derive_seed(params.seed, i);
        const RealConfiguration init = random_configuration(g.vertices(), d, p.seed, box);
        results[i] = solve_realization(g, target, init, p);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

double best_isometry_distance(const RealConfiguration& a, const RealConfiguration& b) {
  if (a.dim != b.dim) throw Error(ErrorCode::DimensionMismatch, "configurations have different dimensions");
  if (a.ids != b.ids) throw Error(ErrorCode::GraphMismatch, "configurations have different vertex sets");
  if (a.points.rows() == 0) return 0.0;
  const Eigen::MatrixXd ca = a.points.rowwise() - a.points.colwise().mean();
  const Eigen::MatrixXd cb = b.points.rowwise() - b.points.colwise().mean();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(ca.transpose() * cb, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd rotation = svd.matrixU() * svd.matrixV().transpose();
  return std::sqrt((ca * rotation - cb).squaredNorm() / static_cast<double>(a.points.rows()));
}

}  // namespace rigidkit::numeric
